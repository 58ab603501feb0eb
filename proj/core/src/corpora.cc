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

#include "keyxtract/corpora.h"

#include <algorithm>
#include <iterator>

#include "keyxtract/error.h"
#include "keyxtract/text.h"

namespace keyxtract {

std::string NormalizeTerm(std::string_view term) {
  std::vector<std::string> parts;
  for (std::string_view w : text::SplitWhitespace(term)) {
    parts.push_back(text::FoldCase(w));
  }
  return text::Join(parts, " ");
}

CorpusLoad ParseCorpus(std::span<const std::string> lines, CorpusKind kind,
                       std::string name) {
  CorpusLoad out;
  TermSet terms;
  int line_no = 0;
  for (const std::string& raw : lines) {
    ++line_no;
    const std::string_view line = text::Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::string term = NormalizeTerm(line);
    if (!terms.insert(term).second) {
      out.warnings.push_back("line " + std::to_string(line_no) +
                             ": duplicate term '" + term + "'");
    }
  }
  if (terms.empty()) {
    throw Error(ErrorCode::kEmptyCorpus,
                std::string(CorpusKindName(kind)) + " corpus '" + name +
                    "' has no terms");
  }
  out.corpus = Corpus(std::move(name), kind, std::move(terms));
  return out;
}

CorpusLoad LoadCorpus(const std::filesystem::path& path, CorpusKind kind) {
  const auto lines = text::ReadLines(path);
  return ParseCorpus(lines, kind, path.stem().string());
}

const Corpus& Auxiliaries() {
  static const Corpus kAux(
      "auxiliaries", CorpusKind::kReject,
      TermSet{"be", "have", "do", "can", "could", "will", "would", "shall",
              "should", "may", "might", "must"});
  return kAux;
}

CorpusStore::CorpusStore()
    : dsk_("dsk", CorpusKind::kDsk, {}),
      reject_("reject", CorpusKind::kReject, {}) {}

CorpusStore::CorpusStore(Corpus dsk, Corpus reject)
    : dsk_(std::move(dsk)), reject_(std::move(reject)) {
  std::vector<std::string> shared;
  std::set_intersection(dsk_.terms().begin(), dsk_.terms().end(),
                        reject_.terms().begin(), reject_.terms().end(),
                        std::back_inserter(shared));
  if (!shared.empty()) {
    throw Error(ErrorCode::kCorpusConflict,
                "terms in both dsk and reject corpora: " +
                    text::Join(shared, ", "));
  }
}

}  // namespace keyxtract
