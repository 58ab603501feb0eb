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

#ifndef KEYXTRACT_ERROR_H_
#define KEYXTRACT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace keyxtract {

enum class ErrorCode {
  kIo,
  kEmptyCorpus,
  kCorpusConflict,
  kGazetteerConflict,
  kMalformedLine,
  kLengthMismatch,
  kSurfaceMismatch,
  kEmptyInput,
  kMalformedDataset,
  kSessionOpen,
  kUnknownSession,
  kJudgmentConflict,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library. `line` is set for file-format
// errors and is 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int line = 0);

  ErrorCode code() const { return code_; }
  int line() const { return line_; }

 private:
  ErrorCode code_;
  int line_;
};

}  // namespace keyxtract

#endif  // KEYXTRACT_ERROR_H_
