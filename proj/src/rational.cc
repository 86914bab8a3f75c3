/*
 * Copyright 2026 The lbowkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "lbow/rational.h"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace lbow {

namespace mp = boost::multiprecision;

Rational toRational(double value) {
  if (!std::isfinite(value)) {
    throw std::domain_error("cannot convert a non-finite double to a rational");
  }
  if (value == 0.0) {
    return Rational(0);
  }
  int exponent = 0;
  const double mantissa = std::frexp(value, &exponent);
  // mantissa * 2^53 is an integer of at most 53 bits.
  const auto scaled = static_cast<int64_t>(std::ldexp(mantissa, 53));
  exponent -= 53;
  BigInt num(scaled);
  if (exponent >= 0) {
    return Rational(num << exponent);
  }
  BigInt den(1);
  den <<= -exponent;
  return Rational(num, den);
}

std::string toString(const Rational& value) {
  const BigInt num = mp::numerator(value);
  const BigInt den = mp::denominator(value);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

IntVector canonicalize(IntVector v) {
  BigInt g(0);
  for (const auto& x : v) {
    g = mp::gcd(g, mp::abs(x));
  }
  if (g == 0) {
    return v;
  }
  bool negate = false;
  for (const auto& x : v) {
    if (x != 0) {
      negate = x < 0;
      break;
    }
  }
  for (auto& x : v) {
    x /= g;
    if (negate) {
      x = -x;
    }
  }
  return v;
}

std::vector<IntVector> integerNullspace(
    const std::vector<RationalVector>& equations,
    std::size_t numUnknowns) {
  // Clear denominators per equation; scaling an equation keeps its
  // solution set.
  std::vector<IntVector> a;
  a.reserve(equations.size());
  for (const auto& eq : equations) {
    if (eq.size() != numUnknowns) {
      throw std::invalid_argument("equation width differs from unknown count");
    }
    BigInt l(1);
    for (const auto& c : eq) {
      l = mp::lcm(l, mp::denominator(c));
    }
    IntVector row(numUnknowns);
    for (std::size_t j = 0; j < numUnknowns; j++) {
      row[j] = mp::numerator(eq[j]) * (l / mp::denominator(eq[j]));
    }
    a.push_back(std::move(row));
  }

  // Bareiss elimination to row echelon form.
  std::vector<std::size_t> pivotCols;
  std::size_t r = 0;
  BigInt prev(1);
  for (std::size_t col = 0; col < numUnknowns && r < a.size(); col++) {
    std::size_t p = r;
    while (p < a.size() && a[p][col] == 0) {
      p++;
    }
    if (p == a.size()) {
      continue;
    }
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); i++) {
      for (std::size_t j = col + 1; j < numUnknowns; j++) {
        BigInt num = a[r][col] * a[i][j] - a[i][col] * a[r][j];
        BigInt q, rem;
        mp::divide_qr(num, prev, q, rem);
        if (rem != 0) {
          throw std::logic_error("inexact Bareiss division");
        }
        a[i][j] = std::move(q);
      }
      a[i][col] = 0;
    }
    prev = a[r][col];
    pivotCols.push_back(col);
    r++;
  }

  std::vector<bool> isPivot(numUnknowns, false);
  for (auto c : pivotCols) {
    isPivot[c] = true;
  }

  std::vector<IntVector> basis;
  for (std::size_t free = 0; free < numUnknowns; free++) {
    if (isPivot[free]) {
      continue;
    }
    RationalVector x(numUnknowns, Rational(0));
    x[free] = 1;
    for (std::size_t k = pivotCols.size(); k-- > 0;) {
      const std::size_t pc = pivotCols[k];
      Rational acc(0);
      for (std::size_t j = pc + 1; j < numUnknowns; j++) {
        if (x[j] != 0 && a[k][j] != 0) {
          acc += Rational(a[k][j]) * x[j];
        }
      }
      x[pc] = -acc / Rational(a[k][pc]);
    }
    BigInt l(1);
    for (const auto& v : x) {
      l = mp::lcm(l, mp::denominator(v));
    }
    IntVector iv(numUnknowns);
    for (std::size_t j = 0; j < numUnknowns; j++) {
      iv[j] = mp::numerator(x[j]) * (l / mp::denominator(x[j]));
    }
    basis.push_back(canonicalize(std::move(iv)));
  }
  return basis;
}

} // namespace lbow
