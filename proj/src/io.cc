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

#include "lbow/io.h"

#include "lbow/error.h"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

namespace lbow {

namespace {

class Writer {
 public:
  void bytes(const void* p, std::size_t n) {
    out_.append(static_cast<const char*>(p), n);
  }
  void u32(uint32_t v) {
    for (int i = 0; i < 4; i++) {
      out_.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
    }
  }
  void f64(double d) {
    const auto v = std::bit_cast<uint64_t>(d);
    for (int i = 0; i < 8; i++) {
      out_.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
    }
  }
  void str(const std::string& s) {
    u32(static_cast<uint32_t>(s.size()));
    bytes(s.data(), s.size());
  }
  std::string take() {
    return std::move(out_);
  }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}

  std::size_t remaining() const {
    return in_.size() - pos_;
  }
  void need(std::size_t n, const char* what) const {
    if (remaining() < n) {
      throw Error(
          ErrorCode::TruncatedFile,
          std::string("model file ends inside the ") + what);
    }
  }
  uint32_t u32(const char* what) {
    need(4, what);
    uint32_t v = 0;
    for (int i = 0; i < 4; i++) {
      v |= static_cast<uint32_t>(static_cast<unsigned char>(in_[pos_ + i]))
          << (8 * i);
    }
    pos_ += 4;
    return v;
  }
  double f64() {
    uint64_t v = 0;
    for (int i = 0; i < 8; i++) {
      v |= static_cast<uint64_t>(static_cast<unsigned char>(in_[pos_ + i]))
          << (8 * i);
    }
    pos_ += 8;
    return std::bit_cast<double>(v);
  }
  std::string str(const char* what) {
    const uint32_t len = u32(what);
    need(len, what);
    std::string s(in_.substr(pos_, len));
    pos_ += len;
    return s;
  }

 private:
  std::string_view in_;
  std::size_t pos_ = 0;
};

Error corrupt(const std::string& what) {
  return Error(ErrorCode::CorruptDimensions, what);
}

} // namespace

std::string serializeModel(const LBoWModel& model) {
  Writer w;
  w.bytes(kModelMagic, sizeof(kModelMagic));
  w.u32(kModelFormatVersion);
  w.u32(static_cast<uint32_t>(model.numLabels()));
  w.u32(static_cast<uint32_t>(model.dim()));
  w.u32(static_cast<uint32_t>(model.vocabSize()));
  uint32_t flags = 0;
  if (model.hasHidden()) {
    flags |= kFlagHasHidden;
  }
  if (model.variant() == SoftmaxVariant::Reduced) {
    flags |= kFlagReducedSoftmax;
  }
  w.u32(flags);
  for (const auto& l : model.labels()) {
    w.str(l);
  }
  for (const auto& word : model.words()) {
    w.str(word);
  }
  for (double v : model.embeddings().data()) {
    w.f64(v);
  }
  if (model.hasHidden()) {
    for (double v : model.hidden()->data()) {
      w.f64(v);
    }
  }
  return w.take();
}

LBoWModel deserializeModel(std::string_view bytes) {
  const std::size_t magicLen = sizeof(kModelMagic);
  const std::size_t probe = std::min(bytes.size(), magicLen);
  if (std::memcmp(bytes.data(), kModelMagic, probe) != 0) {
    throw Error(ErrorCode::BadMagic, "not an lbowkit model file");
  }
  if (bytes.size() < magicLen) {
    throw Error(ErrorCode::TruncatedFile, "model file ends inside the magic");
  }
  Reader r(bytes.substr(magicLen));
  const uint32_t version = r.u32("version");
  if (version != kModelFormatVersion) {
    throw Error(
        ErrorCode::UnsupportedVersion,
        "model format version " + std::to_string(version) + " (expected " +
            std::to_string(kModelFormatVersion) + ")");
  }
  const uint32_t m = r.u32("header");
  const uint32_t n = r.u32("header");
  const uint32_t vocab = r.u32("header");
  const uint32_t flags = r.u32("header");

  if (flags & ~(kFlagHasHidden | kFlagReducedSoftmax)) {
    throw corrupt("unknown flag bits set");
  }
  const bool hasHidden = flags & kFlagHasHidden;
  const bool reduced = flags & kFlagReducedSoftmax;
  if (hasHidden && reduced) {
    throw corrupt("has_hidden and reduced_softmax are mutually exclusive");
  }
  if (m < 2 || n < 1 || vocab < 1) {
    throw corrupt("degenerate shape");
  }
  if (reduced && n + 1 != m) {
    throw corrupt("reduced softmax needs n = m - 1");
  }
  if (!hasHidden && !reduced && n != m) {
    throw corrupt("a model without hidden layer needs n = m");
  }

  std::vector<std::string> labels;
  for (uint32_t i = 0; i < m; i++) {
    labels.push_back(r.str("label block"));
  }
  std::vector<std::string> words;
  for (uint32_t i = 0; i < vocab; i++) {
    words.push_back(r.str("vocabulary block"));
  }

  const uint64_t xCount = static_cast<uint64_t>(vocab) * n;
  const uint64_t bCount = hasHidden ? static_cast<uint64_t>(m) * n : 0;
  const uint64_t expected = 8 * (xCount + bCount);
  if (r.remaining() < expected) {
    throw Error(
        ErrorCode::TruncatedFile,
        "model file ends inside the matrix blocks (" +
            std::to_string(r.remaining()) + " of " +
            std::to_string(expected) + " bytes)");
  }
  if (r.remaining() > expected) {
    throw corrupt("trailing bytes after the matrix blocks");
  }

  Matrix x(vocab, n);
  for (double& v : x.data()) {
    v = r.f64();
  }
  std::optional<Matrix> b;
  if (hasHidden) {
    b.emplace(m, n);
    for (double& v : b->data()) {
      v = r.f64();
    }
  }
  try {
    return LBoWModel(
        std::move(x),
        std::move(b),
        std::move(words),
        std::move(labels),
        reduced ? SoftmaxVariant::Reduced : SoftmaxVariant::Full);
  } catch (const Error& e) {
    throw corrupt(std::string("invalid model contents: ") + e.what());
  }
}

void saveModel(const LBoWModel& model, const std::string& path) {
  const std::string bytes = serializeModel(model);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::IoError, path + " cannot be opened for writing");
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw Error(ErrorCode::IoError, "failed writing " + path);
  }
}

LBoWModel loadModel(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, path + " cannot be opened for reading");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return deserializeModel(buf.str());
}

} // namespace lbow
