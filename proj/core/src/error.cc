/*
 * Copyright 2026 The KeyXtract Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "keyxtract/error.h"

namespace keyxtract {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo: return "IO_ERROR";
    case ErrorCode::kEmptyCorpus: return "EMPTY_CORPUS";
    case ErrorCode::kCorpusConflict: return "CORPUS_CONFLICT";
    case ErrorCode::kGazetteerConflict: return "GAZETTEER_CONFLICT";
    case ErrorCode::kMalformedLine: return "MALFORMED_LINE";
    case ErrorCode::kLengthMismatch: return "LENGTH_MISMATCH";
    case ErrorCode::kSurfaceMismatch: return "SURFACE_MISMATCH";
    case ErrorCode::kEmptyInput: return "EMPTY_INPUT";
    case ErrorCode::kMalformedDataset: return "MALFORMED_DATASET";
    case ErrorCode::kSessionOpen: return "SESSION_OPEN";
    case ErrorCode::kUnknownSession: return "UNKNOWN_SESSION";
    case ErrorCode::kJudgmentConflict: return "JUDGMENT_CONFLICT";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message, int line)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message +
                         (line > 0 ? " (line " + std::to_string(line) + ")"
                                   : std::string())),
      code_(code),
      line_(line) {}

}  // namespace keyxtract
