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

#include "lbow/corpus.h"

#include "lbow/error.h"

#include <algorithm>
#include <string>

namespace lbow {

namespace {

bool isUnicodeSpace(char32_t c) {
  switch (c) {
    case 0x09:
    case 0x0A:
    case 0x0B:
    case 0x0C:
    case 0x0D:
    case 0x20:
    case 0x85:
    case 0xA0:
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

// Decodes one UTF-8 code point starting at pos and returns its byte length.
// Malformed sequences decode as a single opaque byte.
std::size_t decodeUtf8(std::string_view s, std::size_t pos, char32_t& out) {
  const auto b0 = static_cast<unsigned char>(s[pos]);
  std::size_t len = 1;
  char32_t cp = b0;
  if (b0 >= 0xC0 && b0 < 0xE0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if (b0 >= 0xE0 && b0 < 0xF0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if (b0 >= 0xF0 && b0 < 0xF8) {
    len = 4;
    cp = b0 & 0x07;
  }
  if (len == 1 || pos + len > s.size()) {
    out = b0 < 0x80 ? b0 : 0xFFFD;
    return 1;
  }
  for (std::size_t k = 1; k < len; k++) {
    const auto b = static_cast<unsigned char>(s[pos + k]);
    if ((b & 0xC0) != 0x80) {
      out = 0xFFFD;
      return 1;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  out = cp;
  return len;
}

void asciiLower(std::string& s) {
  for (char& c : s) {
    if (c >= 'A' && c <= 'Z') {
      c = static_cast<char>(c - 'A' + 'a');
    }
  }
}

} // namespace

Tokens tokenize(std::string_view text, bool lowercase) {
  Tokens tokens;
  std::string current;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char32_t cp;
    const std::size_t len = decodeUtf8(text, pos, cp);
    if (isUnicodeSpace(cp)) {
      if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
    } else {
      current.append(text.substr(pos, len));
    }
    pos += len;
  }
  if (!current.empty()) {
    tokens.push_back(std::move(current));
  }
  if (lowercase) {
    for (auto& t : tokens) {
      asciiLower(t);
    }
  }
  return tokens;
}

Vocabulary Vocabulary::fromWords(std::vector<std::string> words) {
  Vocabulary vocab;
  for (auto& w : words) {
    if (vocab.index_.count(w)) {
      throw Error(ErrorCode::InvalidModel, "duplicate vocabulary word: " + w);
    }
    vocab.index_.emplace(w, static_cast<int32_t>(vocab.words_.size()));
    vocab.words_.push_back(std::move(w));
    vocab.counts_.push_back(1);
  }
  return vocab;
}

std::optional<int32_t> Vocabulary::indexOf(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

int64_t Vocabulary::countOf(std::string_view word) const {
  auto idx = indexOf(word);
  return idx ? counts_[*idx] : 0;
}

Vocabulary buildVocabulary(const std::vector<Tokens>& corpus, int64_t minCount) {
  if (minCount < 1) {
    throw Error(ErrorCode::InvalidConfig, "min_count must be >= 1");
  }
  std::vector<std::string> order;
  std::unordered_map<std::string, int64_t> counts;
  for (const auto& doc : corpus) {
    for (const auto& tok : doc) {
      auto [it, inserted] = counts.try_emplace(tok, 0);
      if (inserted) {
        order.push_back(tok);
      }
      it->second++;
    }
  }
  Vocabulary vocab;
  for (const auto& w : order) {
    const int64_t c = counts[w];
    if (c >= minCount) {
      vocab.index_.emplace(w, static_cast<int32_t>(vocab.words_.size()));
      vocab.words_.push_back(w);
      vocab.counts_.push_back(c);
    }
  }
  if (vocab.words_.empty()) {
    throw Error(
        ErrorCode::EmptyVocabulary,
        "no token reaches min_count=" + std::to_string(minCount));
  }
  return vocab;
}

LabelSet::LabelSet(std::vector<std::string> names) {
  for (auto& n : names) {
    if (index_.count(n)) {
      throw Error(ErrorCode::InvalidModel, "duplicate label name: " + n);
    }
    intern(n);
  }
}

std::optional<int32_t> LabelSet::indexOf(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

int32_t LabelSet::intern(const std::string& name) {
  auto [it, inserted] =
      index_.try_emplace(name, static_cast<int32_t>(names_.size()));
  if (inserted) {
    names_.push_back(name);
  }
  return it->second;
}

Document encodeDocument(
    const Tokens& tokens,
    const Vocabulary& vocab,
    const std::optional<std::string>& label,
    const LabelSet& labels,
    EncodeStats* stats) {
  Document doc;
  if (label) {
    auto idx = labels.indexOf(*label);
    if (!idx) {
      throw Error(ErrorCode::UnknownLabel, "unknown label: " + *label);
    }
    doc.label = *idx;
  }
  doc.words.reserve(tokens.size());
  for (const auto& tok : tokens) {
    if (auto idx = vocab.indexOf(tok)) {
      doc.words.push_back(*idx);
    }
  }
  if (stats) {
    stats->tokens += static_cast<int64_t>(tokens.size());
    stats->outOfVocabulary +=
        static_cast<int64_t>(tokens.size() - doc.words.size());
  }
  if (doc.words.empty()) {
    throw Error(ErrorCode::EmptyDocument, "document has no vocabulary word");
  }
  return doc;
}

LabeledLine parseLabeledLine(std::string_view line, bool lowercase) {
  LabeledLine out;
  std::vector<std::string> seen;
  for (auto& tok : tokenize(line, false)) {
    if (tok.size() > kLabelPrefix.size() && tok.starts_with(kLabelPrefix)) {
      std::string name = tok.substr(kLabelPrefix.size());
      if (std::find(seen.begin(), seen.end(), name) != seen.end()) {
        throw Error(ErrorCode::DuplicateLabel, "label repeated on one line: " + name);
      }
      if (!out.label) {
        out.label = name;
      }
      seen.push_back(std::move(name));
    } else {
      if (lowercase) {
        asciiLower(tok);
      }
      out.tokens.push_back(std::move(tok));
    }
  }
  return out;
}

Dataset makeDataset(const std::vector<LabeledLine>& lines, int64_t minCount) {
  Dataset ds;
  std::vector<Tokens> corpus;
  corpus.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); i++) {
    if (!lines[i].label) {
      throw Error(
          ErrorCode::MissingLabel,
          "training line " + std::to_string(i + 1) + " has no label");
    }
    ds.labels.intern(*lines[i].label);
    corpus.push_back(lines[i].tokens);
  }
  if (ds.labels.size() < 2) {
    throw Error(ErrorCode::InvalidDataset, "need at least two labels");
  }
  ds.vocabulary = buildVocabulary(corpus, minCount);
  ds.documents.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); i++) {
    try {
      ds.documents.push_back(encodeDocument(
          lines[i].tokens, ds.vocabulary, lines[i].label, ds.labels));
    } catch (const Error& e) {
      throw Error(
          e.code(), "training line " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return ds;
}

Dataset readDataset(std::istream& in, int64_t minCount, bool lowercase) {
  std::vector<LabeledLine> lines;
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    lineNo++;
    try {
      lines.push_back(parseLabeledLine(line, lowercase));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(lineNo) + ": " + e.what());
    }
  }
  return makeDataset(lines, minCount);
}

} // namespace lbow
