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

#include "lbow/error.h"

namespace lbow {

std::string_view errorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyVocabulary:
      return "EmptyVocabulary";
    case ErrorCode::EmptyDocument:
      return "EmptyDocument";
    case ErrorCode::UnknownLabel:
      return "UnknownLabel";
    case ErrorCode::MissingLabel:
      return "MissingLabel";
    case ErrorCode::DuplicateLabel:
      return "DuplicateLabel";
    case ErrorCode::InvalidDataset:
      return "InvalidDataset";
    case ErrorCode::DimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::InvalidModel:
      return "InvalidModel";
    case ErrorCode::InvalidConfig:
      return "InvalidConfig";
    case ErrorCode::NoHiddenLayer:
      return "NoHiddenLayer";
    case ErrorCode::HasHiddenLayer:
      return "HasHiddenLayer";
    case ErrorCode::WrongDimensionality:
      return "WrongDimensionality";
    case ErrorCode::LabelCountMismatch:
      return "LabelCountMismatch";
    case ErrorCode::InvalidCertificate:
      return "InvalidCertificate";
    case ErrorCode::DegenerateCertificate:
      return "DegenerateCertificate";
    case ErrorCode::InvalidCounterexample:
      return "InvalidCounterexample";
    case ErrorCode::CounterexampleTooLarge:
      return "CounterexampleTooLarge";
    case ErrorCode::BadMagic:
      return "BadMagic";
    case ErrorCode::UnsupportedVersion:
      return "UnsupportedVersion";
    case ErrorCode::CorruptDimensions:
      return "CorruptDimensions";
    case ErrorCode::TruncatedFile:
      return "TruncatedFile";
    case ErrorCode::IoError:
      return "IoError";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(what), code_(code) {}

} // namespace lbow
