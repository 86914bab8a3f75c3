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
#include "lbow/model.h"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace lbow {

struct TrainConfig {
  int64_t dim = 10;
  bool useHidden = false;
  double learningRate = 0.1;
  int64_t epochs = 5;
  int64_t minCount = 1;
  uint64_t seed = 0;
  bool lowercase = false;
};

/// Throws InvalidConfig for epochs < 1, dim < 1, min_count < 1 or a
/// non-positive learning rate.
void validate(const TrainConfig& cfg);

/// X ~ U[-1/(2n), 1/(2n)], B = 0. Without a hidden layer n is forced to m.
LBoWModel initModel(
    const Vocabulary& vocab,
    const LabelSet& labels,
    const TrainConfig& cfg);

/// Negative log-likelihood of the gold label.
double loss(const LBoWModel& model, const Document& doc);

/// Gradient of `loss` with respect to the embedding rows the document
/// touches (ascending word index) and the whole hidden layer, if any.
struct Gradient {
  std::vector<std::pair<int32_t, Vector>> rows;
  std::optional<Matrix> hidden;
};

Gradient gradient(const LBoWModel& model, const Document& doc);

/// One SGD update on `doc`; returns the loss before the update.
double sgdStep(LBoWModel& model, const Document& doc, double learningRate);

struct TrainResult {
  LBoWModel model;
  std::vector<double> epochLoss;  // mean loss over each epoch
  double trainAccuracy = 0.0;
};

TrainResult train(const Dataset& dataset, const TrainConfig& cfg);

double accuracy(const LBoWModel& model, const std::vector<Document>& docs);

} // namespace lbow
