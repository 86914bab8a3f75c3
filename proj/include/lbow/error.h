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

#include <stdexcept>
#include <string>
#include <string_view>

namespace lbow {

enum class ErrorCode {
  // corpus
  EmptyVocabulary,
  EmptyDocument,
  UnknownLabel,
  MissingLabel,
  DuplicateLabel,
  InvalidDataset,
  // model
  DimensionMismatch,
  InvalidModel,
  // train
  InvalidConfig,
  // transforms
  NoHiddenLayer,
  HasHiddenLayer,
  WrongDimensionality,
  LabelCountMismatch,
  // adversarial
  InvalidCertificate,
  DegenerateCertificate,
  InvalidCounterexample,
  CounterexampleTooLarge,
  // persistence
  BadMagic,
  UnsupportedVersion,
  CorruptDimensions,
  TruncatedFile,
  IoError,
};

/// Stable identifier used on the CLI diagnostic stream, e.g. "EmptyDocument".
std::string_view errorName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept {
    return code_;
  }

 private:
  ErrorCode code_;
};

} // namespace lbow
