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

#include "lbow/model.h"

#include <cstdint>
#include <string>
#include <string_view>

namespace lbow {

// Model file layout, all integers unsigned 32-bit little-endian:
//
//   magic    8 bytes  "LBOWKIT\0"
//   version  u32      1
//   m, n, D  u32 x 3  classes, word-vector dimension, vocabulary size
//   flags    u32      bit 0 has_hidden, bit 1 reduced_softmax
//   labels   m x (u32 byte length, UTF-8 bytes)
//   words    D x (u32 byte length, UTF-8 bytes), index order
//   X        D*n IEEE-754 binary64 little-endian, row-major
//   B        m*n binary64 little-endian, row-major, iff has_hidden

inline constexpr char kModelMagic[8] = {'L', 'B', 'O', 'W', 'K', 'I', 'T', '\0'};
inline constexpr uint32_t kModelFormatVersion = 1;
inline constexpr uint32_t kFlagHasHidden = 1u << 0;
inline constexpr uint32_t kFlagReducedSoftmax = 1u << 1;

std::string serializeModel(const LBoWModel& model);

/// Throws BadMagic, UnsupportedVersion, CorruptDimensions (bad flags,
/// inconsistent shapes, trailing bytes, invalid contents) or
/// TruncatedFile. Header and shapes are validated before any matrix is
/// allocated.
LBoWModel deserializeModel(std::string_view bytes);

/// Throws IoError when the file cannot be written.
void saveModel(const LBoWModel& model, const std::string& path);

/// Throws IoError when the file cannot be read, plus deserializeModel's
/// errors.
LBoWModel loadModel(const std::string& path);

} // namespace lbow
