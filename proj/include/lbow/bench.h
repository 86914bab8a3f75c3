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
#include <ostream>
#include <string>
#include <vector>

namespace lbow {

/// Multiplications of streamingLogits for a document of N occurrences:
/// N*n + m*n with a hidden layer, N*n otherwise (n = m, or m-1 reduced).
uint64_t expectedMultiplies(const LBoWModel& model, uint64_t numOccurrences);

struct BenchEntry {
  std::string name;
  std::size_t dim = 0;
  bool hidden = false;
  double docsPerSecond = 0.0;
  uint64_t multiplies = 0;          // counted over one pass
  uint64_t expectedMultiplies = 0;  // closed form over one pass
};

struct BenchReport {
  std::size_t documents = 0;
  uint64_t occurrences = 0;
  int64_t repeat = 0;
  /// original, folded (hidden-layer models only), compressed
  std::vector<BenchEntry> entries;

  bool countsMatch() const;
  /// original multiplies / last entry's multiplies
  double multiplyRatio() const;
};

/// Times `repeat` passes over `docs` for the model and its transformed
/// forms. Throws InvalidConfig for repeat < 1 or no documents.
BenchReport runBench(
    const LBoWModel& model,
    const std::vector<Document>& docs,
    int64_t repeat);

void printBenchReport(std::ostream& out, const BenchReport& report);

} // namespace lbow
