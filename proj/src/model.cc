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

#include "lbow/model.h"

#include "lbow/error.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>
#include <unordered_set>

namespace lbow {

namespace {

bool sameBits(std::span<const double> a, std::span<const double> b) {
  return a.size() == b.size() &&
      (a.empty() || std::memcmp(a.data(), b.data(), a.size_bytes()) == 0);
}

void requireNonEmpty(const Document& doc) {
  if (doc.words.empty()) {
    throw Error(ErrorCode::EmptyDocument, "document has no words");
  }
}

} // namespace

LBoWModel::LBoWModel(
    Matrix embeddings,
    std::optional<Matrix> hidden,
    std::vector<std::string> words,
    std::vector<std::string> labels,
    SoftmaxVariant variant)
    : embeddings_(std::move(embeddings)),
      hidden_(std::move(hidden)),
      words_(std::move(words)),
      labels_(std::move(labels)),
      variant_(variant) {
  const std::size_t m = labels_.size();
  const std::size_t n = embeddings_.cols();
  if (m < 2) {
    throw Error(ErrorCode::InvalidModel, "a model needs at least two labels");
  }
  if (n == 0 || embeddings_.rows() == 0) {
    throw Error(ErrorCode::InvalidModel, "empty embedding matrix");
  }
  if (words_.size() != embeddings_.rows()) {
    throw Error(
        ErrorCode::DimensionMismatch,
        "word list size does not match embedding rows");
  }
  if (std::unordered_set<std::string>(words_.begin(), words_.end()).size() !=
      words_.size()) {
    throw Error(ErrorCode::InvalidModel, "duplicate vocabulary words");
  }
  if (std::unordered_set<std::string>(labels_.begin(), labels_.end()).size() !=
      m) {
    throw Error(ErrorCode::InvalidModel, "duplicate label names");
  }
  if (hidden_) {
    if (variant_ != SoftmaxVariant::Full) {
      throw Error(
          ErrorCode::InvalidModel, "reduced softmax excludes a hidden layer");
    }
    if (hidden_->rows() != m || hidden_->cols() != n) {
      throw Error(
          ErrorCode::DimensionMismatch, "hidden layer must be m x n");
    }
    if (!hidden_->allFinite()) {
      throw Error(ErrorCode::InvalidModel, "non-finite hidden-layer entry");
    }
  } else if (variant_ == SoftmaxVariant::Full && n != m) {
    throw Error(
        ErrorCode::DimensionMismatch,
        "without a hidden layer the word-vector dimension must equal m");
  } else if (variant_ == SoftmaxVariant::Reduced && n + 1 != m) {
    throw Error(
        ErrorCode::DimensionMismatch,
        "reduced softmax needs word-vector dimension m - 1");
  }
  if (!embeddings_.allFinite()) {
    throw Error(ErrorCode::InvalidModel, "non-finite embedding entry");
  }
}

bool bitwiseEqual(const LBoWModel& a, const LBoWModel& b) {
  if (a.variant() != b.variant() || a.words() != b.words() ||
      a.labels() != b.labels() || a.hasHidden() != b.hasHidden()) {
    return false;
  }
  if (a.embeddings().rows() != b.embeddings().rows() ||
      !sameBits(a.embeddings().data(), b.embeddings().data())) {
    return false;
  }
  if (a.hasHidden() &&
      (a.hidden()->rows() != b.hidden()->rows() ||
       !sameBits(a.hidden()->data(), b.hidden()->data()))) {
    return false;
  }
  return true;
}

WordHistogram histogram(const Document& doc) {
  std::vector<int32_t> sorted = doc.words;
  std::sort(sorted.begin(), sorted.end());
  WordHistogram h;
  for (int32_t w : sorted) {
    if (!h.counts.empty() && h.counts.back().first == w) {
      h.counts.back().second++;
    } else {
      h.counts.emplace_back(w, 1);
    }
  }
  int64_t g = 0;
  for (const auto& [w, c] : h.counts) {
    g = std::gcd(g, c);
  }
  for (auto& [w, c] : h.counts) {
    c /= g;
    h.total += c;
  }
  return h;
}

Vector documentVector(const Document& doc, const LBoWModel& model) {
  requireNonEmpty(doc);
  const Matrix& x = model.embeddings();
  const WordHistogram h = histogram(doc);
  Vector y(model.dim(), 0.0);
  for (const auto& [w, c] : h.counts) {
    if (w < 0 || static_cast<std::size_t>(w) >= x.rows()) {
      throw Error(ErrorCode::DimensionMismatch, "word index out of range");
    }
    const auto row = x.row(w);
    const double weight = static_cast<double>(c);
    for (std::size_t j = 0; j < y.size(); j++) {
      y[j] += weight * row[j];
    }
  }
  const double total = static_cast<double>(h.total);
  for (double& v : y) {
    v /= total;
  }
  return y;
}

Vector classificationVector(const Vector& y, const Matrix& hidden) {
  if (hidden.cols() != y.size()) {
    throw Error(
        ErrorCode::DimensionMismatch,
        "hidden layer has " + std::to_string(hidden.cols()) +
            " columns, document vector has " + std::to_string(y.size()));
  }
  Vector z(hidden.rows(), 0.0);
  for (std::size_t i = 0; i < hidden.rows(); i++) {
    const auto row = hidden.row(i);
    double acc = 0.0;
    for (std::size_t j = 0; j < y.size(); j++) {
      acc += row[j] * y[j];
    }
    z[i] = acc;
  }
  return z;
}

Vector softmax(const Vector& z) {
  Vector p(z.size());
  if (z.empty()) {
    return p;
  }
  const double zmax = *std::max_element(z.begin(), z.end());
  double sum = 0.0;
  for (std::size_t i = 0; i < z.size(); i++) {
    p[i] = std::exp(z[i] - zmax);
    sum += p[i];
  }
  for (double& v : p) {
    v /= sum;
  }
  return p;
}

Vector reducedSoftmax(const Vector& y) {
  // All classes share the denominator 1 + sum exp(y_k); the implicit last
  // logit 0 takes part in the max subtraction.
  const double ymax =
      std::max(0.0, y.empty() ? 0.0 : *std::max_element(y.begin(), y.end()));
  Vector p(y.size() + 1);
  double sum = std::exp(-ymax);
  for (std::size_t i = 0; i < y.size(); i++) {
    p[i] = std::exp(y[i] - ymax);
    sum += p[i];
  }
  p.back() = std::exp(-ymax);
  for (double& v : p) {
    v /= sum;
  }
  return p;
}

Vector logits(const Document& doc, const LBoWModel& model) {
  Vector y = documentVector(doc, model);
  if (model.hasHidden()) {
    return classificationVector(y, *model.hidden());
  }
  if (model.variant() == SoftmaxVariant::Reduced) {
    y.push_back(0.0);
  }
  return y;
}

Vector probabilities(const Document& doc, const LBoWModel& model) {
  Vector y = documentVector(doc, model);
  if (model.hasHidden()) {
    return softmax(classificationVector(y, *model.hidden()));
  }
  if (model.variant() == SoftmaxVariant::Reduced) {
    return reducedSoftmax(y);
  }
  return softmax(y);
}

int32_t argmax(const Vector& scores) {
  int32_t best = 0;
  for (std::size_t i = 1; i < scores.size(); i++) {
    if (scores[i] > scores[best]) {
      best = static_cast<int32_t>(i);
    }
  }
  return best;
}

int32_t predict(const LBoWModel& model, const Document& doc) {
  return argmax(logits(doc, model));
}

Vector streamingLogits(
    const LBoWModel& model,
    const Document& doc,
    uint64_t& multiplies) {
  requireNonEmpty(doc);
  const Matrix& x = model.embeddings();
  const std::size_t n = model.dim();
  const double scale = 1.0 / static_cast<double>(doc.words.size());
  Vector y(n, 0.0);
  for (int32_t w : doc.words) {
    const auto row = x.row(w);
    for (std::size_t j = 0; j < n; j++) {
      y[j] += scale * row[j];
    }
    multiplies += n;
  }
  if (model.hasHidden()) {
    multiplies += model.hidden()->rows() * n;
    return classificationVector(y, *model.hidden());
  }
  if (model.variant() == SoftmaxVariant::Reduced) {
    y.push_back(0.0);
  }
  return y;
}

} // namespace lbow
