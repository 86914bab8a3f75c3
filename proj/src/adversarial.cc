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

#include "lbow/adversarial.h"

#include "lbow/error.h"
#include "lbow/rng.h"

#include <algorithm>
#include <cmath>

namespace lbow {

namespace mp = boost::multiprecision;

namespace {

bool isAllOnes(const IntVector& a) {
  return std::all_of(a.begin(), a.end(), [](const BigInt& v) { return v == 1; });
}

RationalVector sumOf(const Document& doc, const std::vector<RationalVector>& rows) {
  std::vector<int64_t> counts(rows.size(), 0);
  for (int32_t w : doc.words) {
    counts.at(w)++;
  }
  RationalVector s(rows.empty() ? 0 : rows.front().size(), Rational(0));
  for (std::size_t i = 0; i < rows.size(); i++) {
    if (counts[i] == 0) {
      continue;
    }
    const Rational c(counts[i]);
    for (std::size_t j = 0; j < s.size(); j++) {
      s[j] += c * rows[i][j];
    }
  }
  return s;
}

void append(Document& doc, int32_t word, int64_t times) {
  doc.words.insert(doc.words.end(), static_cast<std::size_t>(times), word);
}

int64_t toCount(const BigInt& v) {
  if (mp::abs(v) > kMaxCounterexampleWords) {
    throw Error(
        ErrorCode::CounterexampleTooLarge,
        "certificate coefficient " + v.str() + " exceeds the document budget");
  }
  return static_cast<int64_t>(mp::abs(v));
}

SignCase classify(const IntVector& a) {
  bool pos = false;
  bool neg = false;
  for (const auto& v : a) {
    pos = pos || v > 0;
    neg = neg || v < 0;
  }
  return pos && neg ? SignCase::MixedSigns : SignCase::AllSameSign;
}

} // namespace

std::vector<std::string> MfwProblem::words() const {
  std::vector<std::string> out;
  for (int32_t i = 0; i < m; i++) {
    out.push_back("w" + std::to_string(i));
  }
  return out;
}

std::vector<std::string> MfwProblem::labels() const {
  return words();
}

int32_t mfwLabel(const Document& doc, int32_t m) {
  if (doc.words.empty()) {
    throw Error(ErrorCode::EmptyDocument, "document has no words");
  }
  std::vector<int64_t> counts(m, 0);
  for (int32_t w : doc.words) {
    if (w < 0 || w >= m) {
      throw Error(ErrorCode::DimensionMismatch, "word index outside the problem");
    }
    counts[w]++;
  }
  return static_cast<int32_t>(
      std::max_element(counts.begin(), counts.end()) - counts.begin());
}

LBoWModel exactClassifier(int32_t m) {
  if (m < 2) {
    throw Error(ErrorCode::InvalidModel, "m must be >= 2");
  }
  const MfwProblem problem{m};
  return LBoWModel(
      Matrix::identity(m),
      std::nullopt,
      problem.words(),
      problem.labels(),
      SoftmaxVariant::Full);
}

std::string_view signCaseName(SignCase c) {
  return c == SignCase::AllSameSign ? "AllSameSign" : "MixedSigns";
}

std::vector<RationalVector> embeddingRows(const LBoWModel& model) {
  const Matrix& x = model.embeddings();
  std::vector<RationalVector> rows(x.rows());
  for (std::size_t i = 0; i < x.rows(); i++) {
    rows[i].reserve(x.cols());
    for (double v : x.row(i)) {
      rows[i].push_back(toRational(v));
    }
  }
  return rows;
}

DependenceCertificate findIntegerDependence(
    const std::vector<RationalVector>& rows) {
  const std::size_t m = rows.size();
  const std::size_t q = m == 0 ? 0 : rows.front().size();
  if (m == 0 || q >= m) {
    throw Error(
        ErrorCode::WrongDimensionality,
        "a dependence is only guaranteed for fewer coordinates than vectors");
  }
  // Coordinate c gives the equation sum_i a_i rows[i][c] = 0.
  std::vector<RationalVector> equations(q, RationalVector(m));
  for (std::size_t i = 0; i < m; i++) {
    if (rows[i].size() != q) {
      throw Error(ErrorCode::DimensionMismatch, "ragged embedding rows");
    }
    for (std::size_t c = 0; c < q; c++) {
      equations[c][i] = rows[i][c];
    }
  }
  const std::vector<IntVector> basis = integerNullspace(equations, m);
  // nullity >= m - q >= 1
  auto chosen = std::find_if(basis.begin(), basis.end(), [](const IntVector& v) {
    return !isAllOnes(v);
  });
  DependenceCertificate cert;
  cert.coefficients = chosen == basis.end() ? basis.front() : *chosen;
  cert.signCase = classify(cert.coefficients);
  cert.nonzeroCount = static_cast<std::size_t>(std::count_if(
      cert.coefficients.begin(), cert.coefficients.end(), [](const BigInt& v) {
        return v != 0;
      }));
  cert.rows = rows;
  if (!verifyCertificate(cert)) {
    throw std::logic_error("nullspace vector failed exact verification");
  }
  return cert;
}

bool verifyCertificate(const DependenceCertificate& cert) {
  const auto& a = cert.coefficients;
  if (a.size() != cert.rows.size() || a.empty()) {
    return false;
  }
  if (canonicalize(a) != a) {
    return false;
  }
  const std::size_t nonzero = static_cast<std::size_t>(
      std::count_if(a.begin(), a.end(), [](const BigInt& v) { return v != 0; }));
  if (nonzero == 0 || nonzero != cert.nonzeroCount) {
    return false;
  }
  if (classify(a) != cert.signCase) {
    return false;
  }
  const std::size_t q = cert.rows.front().size();
  RationalVector s(q, Rational(0));
  for (std::size_t i = 0; i < a.size(); i++) {
    if (cert.rows[i].size() != q) {
      return false;
    }
    if (a[i] == 0) {
      continue;
    }
    const Rational coef(a[i]);
    for (std::size_t c = 0; c < q; c++) {
      s[c] += coef * cert.rows[i][c];
    }
  }
  return std::all_of(s.begin(), s.end(), [](const Rational& v) { return v == 0; });
}

Counterexample constructCounterexample(
    const DependenceCertificate& cert,
    const MfwProblem& problem) {
  if (!verifyCertificate(cert)) {
    throw Error(
        ErrorCode::InvalidCertificate,
        "coefficients do not combine the word vectors to zero");
  }
  if (cert.coefficients.size() != static_cast<std::size_t>(problem.m)) {
    throw Error(
        ErrorCode::InvalidCertificate,
        "certificate covers " + std::to_string(cert.coefficients.size()) +
            " words, problem has " + std::to_string(problem.m));
  }
  const auto& a = cert.coefficients;
  const int32_t m = problem.m;
  Counterexample cx;
  cx.signCase = cert.signCase;

  int64_t budget = 0;
  for (const auto& v : a) {
    budget += toCount(v);
  }
  if (budget > kMaxCounterexampleWords) {
    throw Error(
        ErrorCode::CounterexampleTooLarge,
        "certificate needs " + std::to_string(budget) + " word occurrences");
  }

  if (cert.signCase == SignCase::MixedSigns) {
    for (int32_t i = 0; i < m; i++) {
      if (a[i] > 0) {
        append(cx.left, i, toCount(a[i]));
      } else if (a[i] < 0) {
        append(cx.right, i, toCount(a[i]));
      }
    }
  } else {
    // Canonical form makes every nonzero coefficient positive.
    const auto top = std::max_element(a.begin(), a.end());
    int32_t w = -1;
    for (int32_t i = 0; i < m; i++) {
      if (a[i] < *top) {
        w = i;
        break;
      }
    }
    if (w < 0) {
      throw Error(
          ErrorCode::DegenerateCertificate,
          "all coefficients are equal: appending the zero-sum document never "
          "changes the most frequent word");
    }
    // After k copies: count(t) = k*a_t, count(w) = 1 + k*a_w, so t strictly
    // beats w once k*(a_t - a_w) > 1. Words tied with t come after it.
    const int64_t gap = toCount(*top - a[w]);
    const int64_t k = 1 / gap + 1;
    if (k * budget + 1 > kMaxCounterexampleWords) {
      throw Error(
          ErrorCode::CounterexampleTooLarge, "repeated document exceeds budget");
    }
    cx.repetitions = k;
    cx.left.words.push_back(w);
    cx.right.words.push_back(w);
    for (int64_t rep = 0; rep < k; rep++) {
      for (int32_t i = 0; i < m; i++) {
        if (a[i] != 0) {
          append(cx.right, i, toCount(a[i]));
        }
      }
    }
  }

  cx.trueLabelLeft = mfwLabel(cx.left, m);
  cx.trueLabelRight = mfwLabel(cx.right, m);
  if (cx.trueLabelLeft == cx.trueLabelRight) {
    throw Error(
        ErrorCode::DegenerateCertificate,
        "constructed documents share their most frequent word");
  }
  cx.sharedDirection = sumOf(cx.left, cert.rows);
  if (sumOf(cx.right, cert.rows) != cx.sharedDirection) {
    throw std::logic_error("counterexample sums differ");
  }
  return cx;
}

FailureReport demonstrateFailure(const LBoWModel& model, const Counterexample& cx) {
  if (model.dim() >= model.numLabels()) {
    throw Error(
        ErrorCode::WrongDimensionality,
        "word vectors must have fewer coordinates than there are classes");
  }
  const auto rows = embeddingRows(model);
  for (const Document* doc : {&cx.left, &cx.right}) {
    for (int32_t w : doc->words) {
      if (w < 0 || static_cast<std::size_t>(w) >= rows.size()) {
        throw Error(ErrorCode::InvalidCounterexample, "word outside the model");
      }
    }
    if (sumOf(*doc, rows) != cx.sharedDirection) {
      throw Error(
          ErrorCode::InvalidCounterexample,
          "document does not sum to the shared direction under this model");
    }
  }
  FailureReport report;
  report.predictedLeft = predict(model, cx.left);
  report.predictedRight = predict(model, cx.right);
  report.trueLabelLeft = cx.trueLabelLeft;
  report.trueLabelRight = cx.trueLabelRight;
  if (report.predictedLeft != report.predictedRight) {
    throw Error(
        ErrorCode::InvalidCounterexample,
        "documents with proportional vectors received different classes");
  }
  if (report.trueLabelLeft == report.trueLabelRight) {
    throw Error(ErrorCode::InvalidCounterexample, "true labels coincide");
  }
  return report;
}

AdversarialOutcome runAdversarial(const LBoWModel& model) {
  if (model.dim() >= model.numLabels()) {
    throw Error(
        ErrorCode::WrongDimensionality,
        "word vectors must have fewer coordinates than there are classes");
  }
  AdversarialOutcome out;
  out.certificate = findIntegerDependence(embeddingRows(model));
  const MfwProblem problem{static_cast<int32_t>(model.vocabSize())};
  out.counterexample = constructCounterexample(out.certificate, problem);
  out.report = demonstrateFailure(model, out.counterexample);
  return out;
}

int64_t gridRadius(int32_t q) {
  // Hadamard: a q x q minor of integers bounded by r is at most
  // (r * sqrt(q))^q. Keep it under 1e5.
  const double r = std::pow(1e5, 1.0 / q) / std::sqrt(static_cast<double>(q));
  return std::clamp<int64_t>(static_cast<int64_t>(r), 1, 1024);
}

LBoWModel randomUnderDimensionedModel(
    int32_t m,
    int32_t q,
    uint64_t seed,
    bool reduced) {
  if (m < 2 || q < 1 || q >= m) {
    throw Error(ErrorCode::WrongDimensionality, "need 1 <= q < m");
  }
  if (reduced && q != m - 1) {
    throw Error(ErrorCode::WrongDimensionality, "reduced models need q = m - 1");
  }
  Rng rng(seed);
  const int64_t radius = gridRadius(q);
  Matrix x(m, q);
  for (double& v : x.data()) {
    v = static_cast<double>(rng.between(-radius, radius)) / 8.0;
  }
  std::optional<Matrix> b;
  if (!reduced) {
    b.emplace(m, q);
    for (double& v : b->data()) {
      v = rng.uniform(-1.0, 1.0);
    }
  }
  const MfwProblem problem{m};
  return LBoWModel(
      std::move(x),
      std::move(b),
      problem.words(),
      problem.labels(),
      reduced ? SoftmaxVariant::Reduced : SoftmaxVariant::Full);
}

Document repeatDocument(const Document& doc, int64_t k) {
  Document out;
  out.label = doc.label;
  out.words.reserve(doc.words.size() * static_cast<std::size_t>(k));
  for (int64_t i = 0; i < k; i++) {
    out.words.insert(out.words.end(), doc.words.begin(), doc.words.end());
  }
  return out;
}

} // namespace lbow
