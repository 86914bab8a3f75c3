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

#include "lbow/bench.h"

#include "lbow/error.h"
#include "lbow/transforms.h"

#include <chrono>
#include <cstdio>

namespace lbow {

namespace {

BenchEntry measure(
    const std::string& name,
    const LBoWModel& model,
    const std::vector<Document>& docs,
    int64_t repeat) {
  BenchEntry e;
  e.name = name;
  e.dim = model.dim();
  e.hidden = model.hasHidden();
  for (const auto& doc : docs) {
    streamingLogits(model, doc, e.multiplies);
    e.expectedMultiplies += expectedMultiplies(model, doc.words.size());
  }
  uint64_t sink = 0;
  volatile int32_t last = 0;
  const auto start = std::chrono::steady_clock::now();
  for (int64_t r = 0; r < repeat; r++) {
    for (const auto& doc : docs) {
      last = argmax(streamingLogits(model, doc, sink));
    }
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  (void)last;
  const double total = static_cast<double>(docs.size()) * static_cast<double>(repeat);
  e.docsPerSecond = elapsed.count() > 0 ? total / elapsed.count() : 0.0;
  return e;
}

} // namespace

uint64_t expectedMultiplies(const LBoWModel& model, uint64_t numOccurrences) {
  const uint64_t n = model.dim();
  uint64_t count = numOccurrences * n;
  if (model.hasHidden()) {
    count += static_cast<uint64_t>(model.numLabels()) * n;
  }
  return count;
}

bool BenchReport::countsMatch() const {
  for (const auto& e : entries) {
    if (e.multiplies != e.expectedMultiplies) {
      return false;
    }
  }
  return !entries.empty();
}

double BenchReport::multiplyRatio() const {
  if (entries.size() < 2 || entries.back().multiplies == 0) {
    return 0.0;
  }
  return static_cast<double>(entries.front().multiplies) /
      static_cast<double>(entries.back().multiplies);
}

BenchReport runBench(
    const LBoWModel& model,
    const std::vector<Document>& docs,
    int64_t repeat) {
  if (repeat < 1) {
    throw Error(ErrorCode::InvalidConfig, "repeat must be >= 1");
  }
  if (docs.empty()) {
    throw Error(ErrorCode::InvalidConfig, "no documents to benchmark");
  }
  BenchReport report;
  report.documents = docs.size();
  report.repeat = repeat;
  for (const auto& d : docs) {
    report.occurrences += d.words.size();
  }
  report.entries.push_back(measure("original", model, docs, repeat));
  if (model.hasHidden()) {
    report.entries.push_back(
        measure("folded", foldHiddenLayer(model), docs, repeat));
  }
  if (model.variant() != SoftmaxVariant::Reduced) {
    report.entries.push_back(measure("compressed", compress(model), docs, repeat));
  }
  return report;
}

void printBenchReport(std::ostream& out, const BenchReport& report) {
  char line[256];
  std::snprintf(
      line,
      sizeof(line),
      "documents %zu occurrences %llu repeat %lld\n",
      report.documents,
      static_cast<unsigned long long>(report.occurrences),
      static_cast<long long>(report.repeat));
  out << line;
  for (const auto& e : report.entries) {
    std::snprintf(
        line,
        sizeof(line),
        "%-10s dim %zu hidden %d docs/s %.1f multiplies %llu expected %llu "
        "per-doc %.2f\n",
        e.name.c_str(),
        e.dim,
        e.hidden ? 1 : 0,
        e.docsPerSecond,
        static_cast<unsigned long long>(e.multiplies),
        static_cast<unsigned long long>(e.expectedMultiplies),
        static_cast<double>(e.multiplies) / static_cast<double>(report.documents));
    out << line;
  }
  std::snprintf(
      line,
      sizeof(line),
      "multiply-ratio %.4f counts-match %s speedup %.3f\n",
      report.multiplyRatio(),
      report.countsMatch() ? "yes" : "no",
      report.entries.size() > 1 && report.entries.front().docsPerSecond > 0
          ? report.entries.back().docsPerSecond / report.entries.front().docsPerSecond
          : 0.0);
  out << line;
}

} // namespace lbow
