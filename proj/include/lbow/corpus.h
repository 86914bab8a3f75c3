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

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lbow {

using Tokens = std::vector<std::string>;

/// Splits on Unicode whitespace (UTF-8 input). Lowercasing is ASCII-only.
Tokens tokenize(std::string_view text, bool lowercase = false);

class Vocabulary {
 public:
  Vocabulary() = default;

  /// Builds a vocabulary from an ordered word list. Counts are not part
  /// of the model file, so a restored vocabulary reports count 1 per word.
  static Vocabulary fromWords(std::vector<std::string> words);

  std::size_t size() const noexcept {
    return words_.size();
  }
  const std::vector<std::string>& words() const noexcept {
    return words_;
  }
  const std::string& word(std::size_t index) const {
    return words_.at(index);
  }
  std::optional<int32_t> indexOf(std::string_view word) const;
  int64_t countOf(std::string_view word) const;
  int64_t count(std::size_t index) const {
    return counts_.at(index);
  }

 private:
  friend Vocabulary buildVocabulary(const std::vector<Tokens>&, int64_t);

  std::vector<std::string> words_;
  std::vector<int64_t> counts_;
  std::unordered_map<std::string, int32_t> index_;
};

struct Document {
  std::vector<int32_t> words;
  std::optional<int32_t> label;

  std::size_t length() const noexcept {
    return words.size();
  }
};

/// Retains tokens whose total count is at least min_count. Indices follow
/// first appearance in the corpus.
Vocabulary buildVocabulary(const std::vector<Tokens>& corpus, int64_t minCount);

/// Ordered list of class names with lookup.
class LabelSet {
 public:
  LabelSet() = default;
  explicit LabelSet(std::vector<std::string> names);

  std::size_t size() const noexcept {
    return names_.size();
  }
  const std::vector<std::string>& names() const noexcept {
    return names_;
  }
  const std::string& name(std::size_t index) const {
    return names_.at(index);
  }
  std::optional<int32_t> indexOf(std::string_view name) const;
  /// Appends name if absent; returns its index.
  int32_t intern(const std::string& name);

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int32_t> index_;
};

struct EncodeStats {
  int64_t tokens = 0;
  int64_t outOfVocabulary = 0;
};

/// Drops out-of-vocabulary tokens. Throws EmptyDocument when nothing
/// survives and UnknownLabel when the label is not in `labels`.
Document encodeDocument(
    const Tokens& tokens,
    const Vocabulary& vocab,
    const std::optional<std::string>& label,
    const LabelSet& labels,
    EncodeStats* stats = nullptr);

/// One line of the labeled-text format: `__label__<name>` tokens are
/// pulled out, the rest is text.
struct LabeledLine {
  std::optional<std::string> label;
  Tokens tokens;
};

inline constexpr std::string_view kLabelPrefix = "__label__";

/// The first `__label__` token names the label and later distinct ones are
/// dropped. Throws DuplicateLabel when a label token repeats.
LabeledLine parseLabeledLine(std::string_view line, bool lowercase);

struct Dataset {
  Vocabulary vocabulary;
  std::vector<Document> documents;
  LabelSet labels;
};

/// Reads a training file. Every line needs a label; lines left empty by
/// vocabulary filtering are rejected. Labels are ordered by first use.
Dataset readDataset(std::istream& in, int64_t minCount, bool lowercase);

/// Builds a dataset from in-memory labeled lines, same rules as readDataset.
Dataset makeDataset(const std::vector<LabeledLine>& lines, int64_t minCount);

} // namespace lbow
