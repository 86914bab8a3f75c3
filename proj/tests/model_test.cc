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
#include "lbow/rng.h"
#include "error_util.h"
#include "test_util.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

namespace lbow {
namespace {

using testing::codeOf;
using testing::maxAbsDiff;
using testing::names;

LBoWModel twoWordModel() {
  Matrix x(2, 2);
  x(0, 0) = 3.0;
  x(0, 1) = 0.0;
  x(1, 0) = 0.0;
  x(1, 1) = 3.0;
  return LBoWModel(x, std::nullopt, {"a", "b"}, {"p", "q"}, SoftmaxVariant::Full);
}

TEST(ModelTest, DocumentVectorExample) {
  const LBoWModel model = twoWordModel();
  const Vector y = documentVector(Document{{0, 0, 1}, std::nullopt}, model);
  ASSERT_EQ(y.size(), 2u);
  EXPECT_NEAR(y[0], 2.0, 1e-15);
  EXPECT_NEAR(y[1], 1.0, 1e-15);
}

TEST(ModelTest, ClassificationVectorExample) {
  Matrix b(2, 2);
  b(0, 0) = 2.0;
  b(1, 0) = 1.0;
  b(1, 1) = 3.0;
  const Vector z = classificationVector({1.0, 1.0}, b);
  EXPECT_EQ(z, (Vector{2.0, 4.0}));
  EXPECT_EQ(
      codeOf([&] { classificationVector({1.0, 1.0, 1.0}, b); }),
      ErrorCode::DimensionMismatch);
}

TEST(ModelTest, SoftmaxExamples) {
  const Vector p = softmax({std::log(1.0), std::log(3.0)});
  EXPECT_NEAR(p[0], 0.25, 1e-15);
  EXPECT_NEAR(p[1], 0.75, 1e-15);

  const Vector r = reducedSoftmax({std::log(3.0)});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r[0], 0.75, 1e-15);
  EXPECT_NEAR(r[1], 0.25, 1e-15);

  // Large logits stay finite.
  const Vector big = softmax({1000.0, 1000.0});
  EXPECT_NEAR(big[0], 0.5, 1e-15);
}

TEST(ModelTest, ArgmaxFirstMaxWins) {
  EXPECT_EQ(argmax({1.0, 3.0, 3.0}), 1);
  EXPECT_EQ(argmax({0.5, 0.5}), 0);
  EXPECT_EQ(argmax({-1.0, -2.0, -0.5}), 2);
}

TEST(ModelTest, SoftmaxProperties) {
  Rng rng(3);
  for (int trial = 0; trial < 200; trial++) {
    Vector z(static_cast<std::size_t>(rng.between(2, 8)));
    for (double& v : z) {
      v = rng.uniform(-20.0, 20.0);
    }
    const Vector p = softmax(z);
    EXPECT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-12);
    for (double v : p) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
    // Shift invariance.
    Vector shifted = z;
    const double c = rng.uniform(-50.0, 50.0);
    for (double& v : shifted) {
      v += c;
    }
    EXPECT_LE(maxAbsDiff(softmax(shifted), p), 1e-12);
    // Positive scaling keeps the argmax.
    Vector scaled = z;
    const double s = rng.uniform(0.1, 10.0);
    for (double& v : scaled) {
      v *= s;
    }
    EXPECT_EQ(argmax(softmax(scaled)), argmax(z));

    // The reduced softmax is the full one on (y, 0).
    Vector y(z.begin(), z.end() - 1);
    Vector padded = y;
    padded.push_back(0.0);
    EXPECT_LE(maxAbsDiff(reducedSoftmax(y), softmax(padded)), 1e-12);
  }
}

TEST(ModelTest, OrderAndRepetitionInvariance) {
  Rng rng(17);
  for (int trial = 0; trial < 50; trial++) {
    const LBoWModel model = testing::randomModel(rng, 4, 6, 12, true);
    Document doc = testing::randomDocument(rng, 12, 1, 30);
    const Vector base = probabilities(doc, model);
    Document shuffled = doc;
    rng.shuffle(shuffled.words);
    EXPECT_EQ(probabilities(shuffled, model), base);

    Document repeated = doc;
    const auto k = rng.between(2, 5);
    for (int64_t i = 1; i < k; i++) {
      repeated.words.insert(repeated.words.end(), doc.words.begin(), doc.words.end());
    }
    // Reduced counts make the repetition bitwise identical.
    EXPECT_EQ(documentVector(repeated, model), documentVector(doc, model));
    EXPECT_EQ(predict(model, repeated), predict(model, doc));
  }
}

TEST(ModelTest, HistogramReducesCounts) {
  const WordHistogram h = histogram(Document{{2, 0, 2, 0, 2, 2}, std::nullopt});
  ASSERT_EQ(h.counts.size(), 2u);
  EXPECT_EQ(h.counts[0], (std::pair<int32_t, int64_t>{0, 1}));
  EXPECT_EQ(h.counts[1], (std::pair<int32_t, int64_t>{2, 2}));
  EXPECT_EQ(h.total, 3);
}

TEST(ModelTest, StreamingAgreesWithHistogram) {
  Rng rng(29);
  for (int trial = 0; trial < 50; trial++) {
    const bool hidden = trial % 2 == 0;
    const LBoWModel model = testing::randomModel(rng, 5, 7, 20, hidden);
    const Document doc = testing::randomDocument(rng, 20, 1, 40);
    uint64_t mults = 0;
    const Vector streamed = streamingLogits(model, doc, mults);
    EXPECT_LE(maxAbsDiff(streamed, logits(doc, model)), 1e-12);
    const uint64_t nOcc = doc.words.size();
    const uint64_t expected = hidden ? nOcc * 7 + 5 * 7 : nOcc * 5;
    EXPECT_EQ(mults, expected);
  }
}

TEST(ModelTest, ValidationErrors) {
  const Matrix x22(2, 2, 0.1);
  const auto w2 = names("w", 2);
  EXPECT_EQ(
      codeOf([&] { LBoWModel(x22, std::nullopt, w2, {"only"}, SoftmaxVariant::Full); }),
      ErrorCode::InvalidModel);
  EXPECT_EQ(
      codeOf([&] {
        LBoWModel(x22, std::nullopt, names("w", 3), {"a", "b"}, SoftmaxVariant::Full);
      }),
      ErrorCode::DimensionMismatch);
  EXPECT_EQ(
      codeOf([&] { LBoWModel(x22, std::nullopt, {"w", "w"}, {"a", "b"}, SoftmaxVariant::Full); }),
      ErrorCode::InvalidModel);
  EXPECT_EQ(
      codeOf([&] {
        LBoWModel(Matrix(2, 3), std::nullopt, w2, {"a", "b"}, SoftmaxVariant::Full);
      }),
      ErrorCode::DimensionMismatch);
  EXPECT_EQ(
      codeOf([&] {
        LBoWModel(x22, Matrix(3, 2), w2, {"a", "b"}, SoftmaxVariant::Full);
      }),
      ErrorCode::DimensionMismatch);
  EXPECT_EQ(
      codeOf([&] {
        LBoWModel(x22, std::nullopt, w2, {"a", "b"}, SoftmaxVariant::Reduced);
      }),
      ErrorCode::DimensionMismatch);
  Matrix bad = x22;
  bad(1, 1) = std::nan("");
  EXPECT_EQ(
      codeOf([&] { LBoWModel(bad, std::nullopt, w2, {"a", "b"}, SoftmaxVariant::Full); }),
      ErrorCode::InvalidModel);

  const LBoWModel model = twoWordModel();
  EXPECT_EQ(
      codeOf([&] { documentVector(Document{}, model); }), ErrorCode::EmptyDocument);
  EXPECT_EQ(
      codeOf([&] { documentVector(Document{{5}, std::nullopt}, model); }),
      ErrorCode::DimensionMismatch);
}

TEST(ModelTest, ReducedModelPredictions) {
  Matrix x(2, 1);
  x(0, 0) = 1.0;
  x(1, 0) = -1.0;
  const LBoWModel model(x, std::nullopt, {"up", "down"}, {"a", "b"}, SoftmaxVariant::Reduced);
  EXPECT_EQ(predict(model, Document{{0}, std::nullopt}), 0);
  EXPECT_EQ(predict(model, Document{{1}, std::nullopt}), 1);
  // y = 0 ties both classes; the lower index wins.
  EXPECT_EQ(predict(model, Document{{0, 1}, std::nullopt}), 0);
}

} // namespace
} // namespace lbow
