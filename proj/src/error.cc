// Copyright 2026 The evtrig Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "evtrig/error.h"

namespace evtrig {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOffsetMismatch: return "OffsetMismatch";
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kInvalidRate: return "InvalidRate";
    case ErrorCode::kNotScalarLoss: return "NotScalarLoss";
    case ErrorCode::kLossNotOnTape: return "LossNotOnTape";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kEmptySequence: return "EmptySequence";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kMalformedEntry: return "MalformedEntry";
    case ErrorCode::kNonFiniteGradient: return "NonFiniteGradient";
    case ErrorCode::kEmptyTrainSet: return "EmptyTrainSet";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kUnmappedLabel: return "UnmappedLabel";
    case ErrorCode::kVocabularyMismatch: return "VocabularyMismatch";
    case ErrorCode::kBadCheckpoint: return "BadCheckpoint";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace evtrig
