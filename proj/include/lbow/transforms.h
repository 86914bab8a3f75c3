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
#include <vector>

namespace lbow {

/// Replaces (X, B) by word vectors B*x_i and drops the hidden layer. The
/// result computes the same classification vector for every document.
/// Throws NoHiddenLayer.
LBoWModel foldHiddenLayer(const LBoWModel& model);

/// Subtracts each word vector's last coordinate from all of its
/// coordinates and discards the resulting zero; the result classifies with
/// the reduced softmax. Requires no hidden layer and n == m.
/// Throws HasHiddenLayer or WrongDimensionality.
LBoWModel shiftReduce(const LBoWModel& model);

/// fold (if needed) then shiftReduce. Reduced models are returned as is.
LBoWModel compress(const LBoWModel& model);

inline constexpr double kDefaultTolerance = 1e-9;

struct EquivalenceReport {
  std::size_t numDocuments = 0;
  double maxAbsProbDiff = 0.0;
  std::size_t labelDisagreements = 0;
  bool strict = false;  // probabilities within tol and classes agree
  bool plain = false;   // classes agree on every document
};

/// Compares class distributions and predictions document by document.
/// `strict` additionally requires `plain`, so strict implies plain even
/// when a near-tie flips an argmax inside the tolerance.
/// Throws LabelCountMismatch, DimensionMismatch (vocabulary sizes) and
/// EmptyDocument.
EquivalenceReport verifyEquivalence(
    const LBoWModel& a,
    const LBoWModel& b,
    const std::vector<Document>& docs,
    double tol = kDefaultTolerance);

} // namespace lbow
