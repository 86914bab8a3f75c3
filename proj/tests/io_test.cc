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
#include "lbow/rng.h"
#include "lbow/transforms.h"
#include "error_util.h"
#include "test_util.h"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <limits>

namespace lbow {
namespace {

using testing::codeOf;

void putU32(std::string& bytes, std::size_t offset, uint32_t v) {
  for (int i = 0; i < 4; i++) {
    bytes[offset + i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  }
}

TEST(SerializeTest, HeaderLayout) {
  Matrix x(1, 2);
  x(0, 0) = 1.5;
  const LBoWModel model(x, std::nullopt, {"w"}, {"a", "b"}, SoftmaxVariant::Full);
  const std::string bytes = serializeModel(model);
  ASSERT_GE(bytes.size(), 28u);
  EXPECT_EQ(bytes.substr(0, 8), std::string("LBOWKIT\0", 8));
  EXPECT_EQ(bytes[8], 1);  // version, little endian
  EXPECT_EQ(bytes[12], 2);  // m
  EXPECT_EQ(bytes[16], 2);  // n
  EXPECT_EQ(bytes[20], 1);  // vocabulary size
  EXPECT_EQ(bytes[24], 0);  // flags
  // Labels and words as length-prefixed strings, then 2 doubles.
  EXPECT_EQ(bytes.size(), 28u + (4 + 1) * 3 + 2 * 8);
}

TEST(SerializeTest, RoundTripIsBitwise) {
  Rng rng(1);
  for (int trial = 0; trial < 30; trial++) {
    const auto m = static_cast<std::size_t>(rng.between(2, 6));
    LBoWModel model = testing::randomModel(
        rng, m, static_cast<std::size_t>(rng.between(1, 8)), 12, trial % 3 != 2);
    if (trial % 3 == 1) {
      model = compress(model);
    }
    const std::string bytes = serializeModel(model);
    const LBoWModel back = deserializeModel(bytes);
    EXPECT_TRUE(bitwiseEqual(back, model));
    EXPECT_EQ(serializeModel(back), bytes);
  }
}

TEST(SerializeTest, SpecialValuesSurvive) {
  Matrix x(2, 2);
  x(0, 0) = -0.0;
  x(0, 1) = std::numeric_limits<double>::denorm_min();
  x(1, 0) = 1e308;
  x(1, 1) = 0.1;
  const LBoWModel model(x, std::nullopt, {"caf\xC3\xA9", ""}, {"x y", "z"}, SoftmaxVariant::Full);
  EXPECT_TRUE(bitwiseEqual(deserializeModel(serializeModel(model)), model));
}

class CorruptionTest : public ::testing::Test {
 protected:
  void SetUp() override {
    Rng rng(5);
    bytes_ = serializeModel(testing::randomModel(rng, 3, 4, 6, true));
  }
  std::string bytes_;
};

TEST_F(CorruptionTest, BadMagic) {
  bytes_[0] = 'X';
  EXPECT_EQ(codeOf([&] { deserializeModel(bytes_); }), ErrorCode::BadMagic);
  EXPECT_EQ(codeOf([] { deserializeModel("hello, world, this is text"); }), ErrorCode::BadMagic);
}

TEST_F(CorruptionTest, UnsupportedVersion) {
  putU32(bytes_, 8, 2);
  EXPECT_EQ(codeOf([&] { deserializeModel(bytes_); }), ErrorCode::UnsupportedVersion);
}

TEST_F(CorruptionTest, CorruptDimensions) {
  std::string flags = bytes_;
  putU32(flags, 24, 4);
  EXPECT_EQ(codeOf([&] { deserializeModel(flags); }), ErrorCode::CorruptDimensions);
  std::string both = bytes_;
  putU32(both, 24, 3);
  EXPECT_EQ(codeOf([&] { deserializeModel(both); }), ErrorCode::CorruptDimensions);
  std::string noHidden = bytes_;
  putU32(noHidden, 24, 0);  // n = 4 != m = 3 without a hidden layer
  EXPECT_EQ(codeOf([&] { deserializeModel(noHidden); }), ErrorCode::CorruptDimensions);
  std::string zero = bytes_;
  putU32(zero, 12, 0);
  EXPECT_EQ(codeOf([&] { deserializeModel(zero); }), ErrorCode::CorruptDimensions);
  std::string huge = bytes_;
  putU32(huge, 20, 0xFFFFFFFFu);
  EXPECT_EQ(codeOf([&] { deserializeModel(huge); }), ErrorCode::TruncatedFile);
  EXPECT_EQ(codeOf([&] { deserializeModel(bytes_ + "x"); }), ErrorCode::CorruptDimensions);
}

TEST_F(CorruptionTest, EveryTruncationIsRejected) {
  for (std::size_t len = 0; len < bytes_.size(); len++) {
    const ErrorCode code = codeOf([&] { deserializeModel(std::string_view(bytes_).substr(0, len)); });
    EXPECT_EQ(code, ErrorCode::TruncatedFile) << "length " << len;
  }
}

TEST(FileTest, SaveAndLoad) {
  Rng rng(9);
  const LBoWModel model = testing::randomModel(rng, 4, 6, 8, true);
  const auto path =
      (std::filesystem::temp_directory_path() / "lbowkit_io_test.bin").string();
  saveModel(model, path);
  EXPECT_TRUE(bitwiseEqual(loadModel(path), model));
  std::remove(path.c_str());
  EXPECT_EQ(codeOf([&] { loadModel(path); }), ErrorCode::IoError);
  EXPECT_EQ(codeOf([&] { saveModel(model, "/nonexistent-dir/x.bin"); }), ErrorCode::IoError);
}

} // namespace
} // namespace lbow
