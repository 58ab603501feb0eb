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

#include "keyxtract/serialize.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "keyxtract/error.h"

namespace keyxtract {
namespace {

using ojson = nlohmann::ordered_json;

std::vector<std::string> StringList(const ojson& v, const char* field,
                                    size_t row) {
  if (!v.is_array()) {
    throw Error(ErrorCode::kMalformedDataset,
                "row " + std::to_string(row) + ": '" + field +
                    "' must be an array of strings");
  }
  std::vector<std::string> out;
  for (const auto& s : v) {
    if (!s.is_string()) {
      throw Error(ErrorCode::kMalformedDataset,
                  "row " + std::to_string(row) + ": '" + field +
                      "' must be an array of strings");
    }
    out.push_back(s.get<std::string>());
  }
  return out;
}

}  // namespace

std::string ExtractionToJson(const Extraction& extraction) {
  const KeywordList& kl = extraction.keywords;
  ojson out;
  out["tweet"] = kl.tweet;
  out["mode"] = ModeName(kl.mode);
  out["keywords"] = ojson::array();
  for (const Keyword& k : kl.keywords) {
    out["keywords"].push_back({{"text", k.text},
                               {"tag", TagCode(k.tag)},
                               {"source", SourceName(k.source)}});
  }
  if (extraction.trace) {
    out["trace"] = ojson::array();
    for (const StageSnapshot& s : extraction.trace->stages) {
      ojson stage;
      stage["stage"] = s.stage;
      stage["tokens"] = ojson::array();
      for (const TraceEntry& e : s.entries) {
        stage["tokens"].push_back({{"text", e.text},
                                   {"tag", TagCode(e.tag)},
                                   {"action", TraceActionName(e.action)}});
      }
      out["trace"].push_back(std::move(stage));
    }
  }
  // Invalid UTF-8 in a tweet is replaced rather than aborting the line.
  return out.dump(-1, ' ', false, ojson::error_handler_t::replace);
}

std::vector<DatasetItem> ParseDataset(std::string_view json_text) {
  ojson doc;
  try {
    doc = ojson::parse(json_text);
  } catch (const ojson::parse_error& e) {
    throw Error(ErrorCode::kMalformedDataset, e.what());
  }
  if (!doc.is_array()) {
    throw Error(ErrorCode::kMalformedDataset, "dataset must be a JSON array");
  }
  if (doc.empty()) {
    throw Error(ErrorCode::kMalformedDataset, "dataset is empty");
  }
  std::vector<DatasetItem> items;
  for (size_t i = 0; i < doc.size(); ++i) {
    const ojson& row = doc[i];
    if (!row.is_object() || !row.contains("tweet") ||
        !row["tweet"].is_string() || !row.contains("human")) {
      throw Error(ErrorCode::kMalformedDataset,
                  "row " + std::to_string(i) +
                      " needs a string 'tweet' and a 'human' list");
    }
    DatasetItem item;
    item.tweet = row["tweet"].get<std::string>();
    item.human = StringList(row["human"], "human", i);
    if (row.contains("human2")) {
      item.human2 = StringList(row["human2"], "human2", i);
    }
    if (row.contains("machine")) {
      item.machine = StringList(row["machine"], "machine", i);
    }
    items.push_back(std::move(item));
  }
  return items;
}

std::vector<DatasetItem> LoadDataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseDataset(buf.str());
}

}  // namespace keyxtract
