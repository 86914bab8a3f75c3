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

#include "lbow/train.h"

#include "lbow/error.h"
#include "lbow/rng.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lbow {

namespace {

int32_t goldLabel(const LBoWModel& model, const Document& doc) {
  if (doc.words.empty()) {
    throw Error(ErrorCode::EmptyDocument, "document has no words");
  }
  if (!doc.label) {
    throw Error(ErrorCode::MissingLabel, "document has no gold label");
  }
  if (*doc.label < 0 ||
      static_cast<std::size_t>(*doc.label) >= model.numLabels()) {
    throw Error(ErrorCode::UnknownLabel, "gold label out of range");
  }
  return *doc.label;
}

double logSumExp(const Vector& z) {
  const double zmax = *std::max_element(z.begin(), z.end());
  double sum = 0.0;
  for (double v : z) {
    sum += std::exp(v - zmax);
  }
  return zmax + std::log(sum);
}

} // namespace

void validate(const TrainConfig& cfg) {
  if (cfg.epochs < 1) {
    throw Error(ErrorCode::InvalidConfig, "epochs must be >= 1");
  }
  if (cfg.dim < 1) {
    throw Error(ErrorCode::InvalidConfig, "dim must be >= 1");
  }
  if (cfg.minCount < 1) {
    throw Error(ErrorCode::InvalidConfig, "min_count must be >= 1");
  }
  if (!(cfg.learningRate > 0.0) || !std::isfinite(cfg.learningRate)) {
    throw Error(ErrorCode::InvalidConfig, "learning rate must be positive");
  }
}

LBoWModel initModel(
    const Vocabulary& vocab,
    const LabelSet& labels,
    const TrainConfig& cfg) {
  validate(cfg);
  const std::size_t m = labels.size();
  if (m < 2) {
    throw Error(ErrorCode::InvalidDataset, "need at least two labels");
  }
  const std::size_t n = cfg.useHidden ? static_cast<std::size_t>(cfg.dim) : m;
  Rng rng(cfg.seed);
  const double bound = 1.0 / (2.0 * static_cast<double>(n));
  Matrix x(vocab.size(), n);
  for (double& v : x.data()) {
    v = rng.uniform(-bound, bound);
  }
  std::optional<Matrix> b;
  if (cfg.useHidden) {
    b.emplace(m, n, 0.0);
  }
  return LBoWModel(
      std::move(x),
      std::move(b),
      vocab.words(),
      labels.names(),
      SoftmaxVariant::Full);
}

double loss(const LBoWModel& model, const Document& doc) {
  const int32_t gold = goldLabel(model, doc);
  const Vector z = logits(doc, model);
  return logSumExp(z) - z[gold];
}

Gradient gradient(const LBoWModel& model, const Document& doc) {
  const int32_t gold = goldLabel(model, doc);
  const Vector y = documentVector(doc, model);
  Vector z;
  if (model.hasHidden()) {
    z = classificationVector(y, *model.hidden());
  } else {
    z = y;
    if (model.variant() == SoftmaxVariant::Reduced) {
      z.push_back(0.0);
    }
  }
  // dL/dz = p - onehot(gold)
  Vector dz = softmax(z);
  dz[gold] -= 1.0;

  Gradient g;
  const std::size_t n = model.dim();
  Vector dy(n, 0.0);
  if (model.hasHidden()) {
    const Matrix& b = *model.hidden();
    g.hidden.emplace(b.rows(), n);
    for (std::size_t i = 0; i < b.rows(); i++) {
      for (std::size_t j = 0; j < n; j++) {
        dy[j] += b(i, j) * dz[i];
        (*g.hidden)(i, j) = dz[i] * y[j];
      }
    }
  } else {
    // Reduced: the implicit last logit is constant, so its component drops.
    std::copy_n(dz.begin(), n, dy.begin());
  }

  const WordHistogram h = histogram(doc);
  g.rows.reserve(h.counts.size());
  for (const auto& [w, c] : h.counts) {
    const double share = static_cast<double>(c) / static_cast<double>(h.total);
    Vector row(n);
    for (std::size_t j = 0; j < n; j++) {
      row[j] = share * dy[j];
    }
    g.rows.emplace_back(w, std::move(row));
  }
  return g;
}

double sgdStep(LBoWModel& model, const Document& doc, double learningRate) {
  const double before = loss(model, doc);
  const Gradient g = gradient(model, doc);
  Matrix& x = model.mutableEmbeddings();
  for (const auto& [w, row] : g.rows) {
    auto dst = x.row(w);
    for (std::size_t j = 0; j < row.size(); j++) {
      dst[j] -= learningRate * row[j];
    }
  }
  if (g.hidden) {
    auto dst = model.mutableHidden().data();
    const auto src = g.hidden->data();
    for (std::size_t k = 0; k < dst.size(); k++) {
      dst[k] -= learningRate * src[k];
    }
  }
  return before;
}

double accuracy(const LBoWModel& model, const std::vector<Document>& docs) {
  if (docs.empty()) {
    return 0.0;
  }
  std::size_t correct = 0;
  for (const auto& doc : docs) {
    if (doc.label && predict(model, doc) == *doc.label) {
      correct++;
    }
  }
  return static_cast<double>(correct) / static_cast<double>(docs.size());
}

TrainResult train(const Dataset& dataset, const TrainConfig& cfg) {
  validate(cfg);
  if (dataset.documents.empty()) {
    throw Error(ErrorCode::InvalidDataset, "empty training set");
  }
  TrainResult result{initModel(dataset.vocabulary, dataset.labels, cfg), {}, 0};
  LBoWModel& model = result.model;
  for (const auto& doc : dataset.documents) {
    goldLabel(model, doc);
  }

  // The shuffle stream is separate from the initialisation stream.
  Rng rng(cfg.seed ^ 0x9E3779B97F4A7C15ULL);
  std::vector<std::size_t> order(dataset.documents.size());
  std::iota(order.begin(), order.end(), 0);
  const double totalSteps =
      static_cast<double>(cfg.epochs) * static_cast<double>(order.size());
  uint64_t step = 0;
  for (int64_t epoch = 0; epoch < cfg.epochs; epoch++) {
    rng.shuffle(order);
    double sum = 0.0;
    for (std::size_t idx : order) {
      const double lr =
          cfg.learningRate * (1.0 - static_cast<double>(step) / totalSteps);
      sum += sgdStep(model, dataset.documents[idx], lr);
      step++;
    }
    result.epochLoss.push_back(sum / static_cast<double>(order.size()));
  }
  result.trainAccuracy = accuracy(model, dataset.documents);
  return result;
}

} // namespace lbow
