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

#include "lbow/corpus.h"
#include "lbow/matrix.h"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lbow {

enum class SoftmaxVariant : uint8_t {
  // p = softmax(z), z = B*y or z = y when there is no hidden layer.
  Full,
  // p = softmax((y, 0)): the last class has an implicit zero logit.
  Reduced,
};

/// A linear bag-of-words classifier: word vectors X (|D| x n), an optional
/// hidden layer B (m x n), class names and the softmax flavour.
///
/// Shape rules, checked on construction:
///   hidden present         => B.cols == n, variant Full
///   no hidden, Full        => n == m
///   Reduced                => no hidden, n == m - 1
class LBoWModel {
 public:
  LBoWModel(
      Matrix embeddings,
      std::optional<Matrix> hidden,
      std::vector<std::string> words,
      std::vector<std::string> labels,
      SoftmaxVariant variant);

  const Matrix& embeddings() const noexcept {
    return embeddings_;
  }
  const std::optional<Matrix>& hidden() const noexcept {
    return hidden_;
  }
  bool hasHidden() const noexcept {
    return hidden_.has_value();
  }
  const std::vector<std::string>& words() const noexcept {
    return words_;
  }
  const std::vector<std::string>& labels() const noexcept {
    return labels_;
  }
  SoftmaxVariant variant() const noexcept {
    return variant_;
  }

  std::size_t vocabSize() const noexcept {
    return embeddings_.rows();
  }
  /// Word-vector dimension n.
  std::size_t dim() const noexcept {
    return embeddings_.cols();
  }
  /// Number of classes m.
  std::size_t numLabels() const noexcept {
    return labels_.size();
  }

  Vocabulary vocabulary() const {
    return Vocabulary::fromWords(words_);
  }

  // Mutable access for the trainer. Shapes are fixed at construction.
  Matrix& mutableEmbeddings() noexcept {
    return embeddings_;
  }
  Matrix& mutableHidden() {
    return hidden_.value();
  }

 private:
  Matrix embeddings_;
  std::optional<Matrix> hidden_;
  std::vector<std::string> words_;
  std::vector<std::string> labels_;
  SoftmaxVariant variant_;
};

/// Bit-for-bit equality of every matrix entry, names and flags.
bool bitwiseEqual(const LBoWModel& a, const LBoWModel& b);

/// Word index -> occurrence count, ascending by index, with the counts
/// divided by their gcd. A document and any repetition of it produce the
/// same histogram, which makes the document vector invariant under
/// concatenation bit for bit.
struct WordHistogram {
  std::vector<std::pair<int32_t, int64_t>> counts;
  int64_t total = 0;
};
WordHistogram histogram(const Document& doc);

/// y = (1/N) sum_i x_i over word occurrences.
Vector documentVector(const Document& doc, const LBoWModel& model);

/// z = B*y.
Vector classificationVector(const Vector& y, const Matrix& hidden);

/// Max-subtracted softmax.
Vector softmax(const Vector& z);

/// m-class distribution from an (m-1)-vector; class m has logit 0.
Vector reducedSoftmax(const Vector& y);

/// The scores compared for classification: B*y, y, or (y, 0).
Vector logits(const Document& doc, const LBoWModel& model);

/// Class distribution for the model's softmax variant.
Vector probabilities(const Document& doc, const LBoWModel& model);

/// First index of the maximum; NaN-free input assumed.
int32_t argmax(const Vector& scores);

int32_t predict(const LBoWModel& model, const Document& doc);

/// Occurrence-at-a-time forward pass that counts floating-point
/// multiplications: y += (1/N) * x_i per occurrence (N*n), then z = B*y
/// (m*n). Used by the benchmark; numerically it agrees with `logits` up
/// to summation order.
Vector streamingLogits(
    const LBoWModel& model,
    const Document& doc,
    uint64_t& multiplies);

} // namespace lbow
