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

// JSON wire formats shared by the CLI and the service.

#ifndef KEYXTRACT_SERIALIZE_H_
#define KEYXTRACT_SERIALIZE_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "keyxtract/eval.h"
#include "keyxtract/pipeline.h"

namespace keyxtract {

// {"tweet", "mode", "keywords": [{"text", "tag", "source"}], "trace"?} on a
// single line, keys in that order.
std::string ExtractionToJson(const Extraction& extraction);

// One row of an evaluation dataset.
struct DatasetItem {
  std::string tweet;
  std::vector<std::string> human;
  std::optional<std::vector<std::string>> human2;
  // Precomputed machine keywords; computed by the pipeline when absent.
  std::optional<std::vector<std::string>> machine;
};

// Parses a JSON array of {"tweet", "human", "human2"?, "machine"?}. Throws
// Error(kMalformedDataset) on bad JSON, a missing field, or an empty array.
std::vector<DatasetItem> ParseDataset(std::string_view json_text);
std::vector<DatasetItem> LoadDataset(const std::filesystem::path& path);

}  // namespace keyxtract

#endif  // KEYXTRACT_SERIALIZE_H_
