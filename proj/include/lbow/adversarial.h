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

// The most-frequent-word (MFW) problem and the machinery that shows a
// classifier with fewer word-vector coordinates than classes gets some MFW
// document wrong: find an exact integer dependence sum a_i x_i = 0 among
// its word vectors, turn it into two documents with different MFW labels
// whose summed word vectors are equal, and observe that the classifier
// gives both the same class.

#include "lbow/corpus.h"
#include "lbow/model.h"
#include "lbow/rational.h"

#include <cstdint>
#include <string>
#include <vector>

namespace lbow {

/// m synthetic words w0..w{m-1}; class i is "w_i is the most frequent
/// word", ties going to the lowest index.
struct MfwProblem {
  int32_t m = 2;

  std::vector<std::string> words() const;
  std::vector<std::string> labels() const;
};

/// Throws EmptyDocument, or DimensionMismatch for an index >= m.
int32_t mfwLabel(const Document& doc, int32_t m);

/// One-hot word vectors, no hidden layer: document vectors are word
/// frequencies, so argmax with lowest-index ties is exactly mfwLabel.
LBoWModel exactClassifier(int32_t m);

enum class SignCase { AllSameSign, MixedSigns };

std::string_view signCaseName(SignCase c);

struct DependenceCertificate {
  IntVector coefficients;
  SignCase signCase = SignCase::MixedSigns;
  std::size_t nonzeroCount = 0;
  /// The word vectors the certificate was computed over.
  std::vector<RationalVector> rows;
};

/// Exact word vectors of a model (dyadic expansion of every double).
std::vector<RationalVector> embeddingRows(const LBoWModel& model);

/// Integer a != 0 with sum a_i rows_i = 0, canonical (gcd 1, first nonzero
/// positive). Among the nullspace basis vectors the first one that admits
/// a counterexample is preferred. Throws WrongDimensionality unless there
/// are more rows than coordinates.
DependenceCertificate findIntegerDependence(
    const std::vector<RationalVector>& rows);

/// Exact zero-sum, canonical-form and sign-case checks.
bool verifyCertificate(const DependenceCertificate& cert);

struct Counterexample {
  Document left;
  Document right;
  int32_t trueLabelLeft = 0;
  int32_t trueLabelRight = 0;
  /// Summed word vector of `left`; `right` sums to the same vector.
  RationalVector sharedDirection;
  SignCase signCase = SignCase::MixedSigns;
  /// Copies of the zero-sum document appended to `right` (AllSameSign).
  int64_t repetitions = 0;
};

/// Upper bound on the occurrences in a constructed document.
inline constexpr int64_t kMaxCounterexampleWords = int64_t{1} << 22;

/// MixedSigns: positive coefficients become `left`, negative ones `right`.
/// AllSameSign: `left` is one word w whose coefficient is below the top
/// one, `right` is w followed by k copies of the zero-sum document, k
/// minimal.
///
/// Throws InvalidCertificate when the certificate fails verification or
/// does not match the problem size, DegenerateCertificate when no pair with
/// different labels exists (all coefficients equal), and
/// CounterexampleTooLarge past kMaxCounterexampleWords.
Counterexample constructCounterexample(
    const DependenceCertificate& cert,
    const MfwProblem& problem);

struct FailureReport {
  int32_t predictedLeft = 0;
  int32_t predictedRight = 0;
  int32_t trueLabelLeft = 0;
  int32_t trueLabelRight = 0;

  /// Same prediction, different truths: at least one document is wrong.
  bool forcedError() const {
    return predictedLeft == predictedRight && trueLabelLeft != trueLabelRight;
  }
};

/// Runs the model on both documents. Throws WrongDimensionality when the
/// model's word vectors are not shorter than m, and InvalidCounterexample
/// when the documents do not sum to the shared direction under this
/// model's word vectors or the predictions differ.
FailureReport demonstrateFailure(const LBoWModel& model, const Counterexample& cx);

struct AdversarialOutcome {
  DependenceCertificate certificate;
  Counterexample counterexample;
  FailureReport report;
};

/// certificate -> counterexample -> failure report for one model.
AdversarialOutcome runAdversarial(const LBoWModel& model);

/// Numerator bound r of the random embedding grid k/8, |k| <= r, chosen so
/// that every q x q minor, and with it every certificate coefficient, stays
/// below 1e5.
int64_t gridRadius(int32_t q);

/// Random MFW-problem model with q-dimensional word vectors on the dyadic
/// grid k/8, |k| <= gridRadius(q), exact in binary. With `reduced` (needs
/// q == m-1) there is no hidden layer; otherwise B is uniform in [-1, 1].
LBoWModel randomUnderDimensionedModel(
    int32_t m,
    int32_t q,
    uint64_t seed,
    bool reduced = false);

/// `doc` concatenated k times.
Document repeatDocument(const Document& doc, int64_t k);

} // namespace lbow
