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

#include "lbow/transforms.h"

#include "lbow/error.h"

#include <algorithm>
#include <cmath>

namespace lbow {

LBoWModel foldHiddenLayer(const LBoWModel& model) {
  if (!model.hasHidden()) {
    throw Error(ErrorCode::NoHiddenLayer, "model has no hidden layer to fold");
  }
  const Matrix& x = model.embeddings();
  const Matrix& b = *model.hidden();
  Matrix folded(x.rows(), b.rows());
  for (std::size_t i = 0; i < x.rows(); i++) {
    const Vector xi(x.row(i).begin(), x.row(i).end());
    const Vector zi = classificationVector(xi, b);
    std::copy(zi.begin(), zi.end(), folded.row(i).begin());
  }
  return LBoWModel(
      std::move(folded),
      std::nullopt,
      model.words(),
      model.labels(),
      SoftmaxVariant::Full);
}

LBoWModel shiftReduce(const LBoWModel& model) {
  if (model.hasHidden()) {
    throw Error(
        ErrorCode::HasHiddenLayer, "fold the hidden layer before reducing");
  }
  const std::size_t m = model.numLabels();
  if (model.dim() != m || model.variant() != SoftmaxVariant::Full) {
    throw Error(
        ErrorCode::WrongDimensionality,
        "shift reduction needs m-dimensional word vectors, got n=" +
            std::to_string(model.dim()) + ", m=" + std::to_string(m));
  }
  const Matrix& x = model.embeddings();
  Matrix reduced(x.rows(), m - 1);
  for (std::size_t i = 0; i < x.rows(); i++) {
    const double last = x(i, m - 1);
    for (std::size_t j = 0; j + 1 < m; j++) {
      reduced(i, j) = x(i, j) - last;
    }
  }
  return LBoWModel(
      std::move(reduced),
      std::nullopt,
      model.words(),
      model.labels(),
      SoftmaxVariant::Reduced);
}

LBoWModel compress(const LBoWModel& model) {
  if (model.variant() == SoftmaxVariant::Reduced) {
    return model;
  }
  if (model.hasHidden()) {
    return shiftReduce(foldHiddenLayer(model));
  }
  return shiftReduce(model);
}

EquivalenceReport verifyEquivalence(
    const LBoWModel& a,
    const LBoWModel& b,
    const std::vector<Document>& docs,
    double tol) {
  if (a.numLabels() != b.numLabels()) {
    throw Error(
        ErrorCode::LabelCountMismatch,
        "models have " + std::to_string(a.numLabels()) + " and " +
            std::to_string(b.numLabels()) + " labels");
  }
  if (a.vocabSize() != b.vocabSize()) {
    throw Error(
        ErrorCode::DimensionMismatch, "models have different vocabularies");
  }
  EquivalenceReport report;
  report.numDocuments = docs.size();
  for (const auto& doc : docs) {
    const Vector pa = probabilities(doc, a);
    const Vector pb = probabilities(doc, b);
    for (std::size_t j = 0; j < pa.size(); j++) {
      report.maxAbsProbDiff =
          std::max(report.maxAbsProbDiff, std::abs(pa[j] - pb[j]));
    }
    if (predict(a, doc) != predict(b, doc)) {
      report.labelDisagreements++;
    }
  }
  report.plain = report.labelDisagreements == 0;
  report.strict = report.plain && report.maxAbsProbDiff <= tol;
  return report;
}

} // namespace lbow
