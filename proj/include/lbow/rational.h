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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace lbow {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RationalVector = std::vector<Rational>;
using IntVector = std::vector<BigInt>;

/// Exact value of a finite double (every finite double is a dyadic
/// rational). Throws std::domain_error for NaN or infinity.
Rational toRational(double value);

/// "p/q", or "p" when q == 1.
std::string toString(const Rational& value);

/// Divides by the gcd of the entries and makes the first nonzero entry
/// positive. The zero vector is returned unchanged.
IntVector canonicalize(IntVector v);

/// Integer basis of the right nullspace of `equations` (each inner vector
/// is one linear equation over the same unknowns). One basis vector per
/// free column, in ascending free-column order, each in canonical form.
/// Fraction-free (Bareiss) elimination on the denominator-cleared system,
/// exact back substitution in rationals, then denominators cleared by their
/// lcm.
std::vector<IntVector> integerNullspace(
    const std::vector<RationalVector>& equations,
    std::size_t numUnknowns);

} // namespace lbow
