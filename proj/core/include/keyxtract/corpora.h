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

#ifndef KEYXTRACT_CORPORA_H_
#define KEYXTRACT_CORPORA_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "keyxtract/model.h"

namespace keyxtract {

// Case-folds, trims and collapses inner whitespace runs to one space.
std::string NormalizeTerm(std::string_view term);

struct CorpusLoad {
  Corpus corpus;
  std::vector<std::string> warnings;  // one per collapsed duplicate
};

// One term per line; '#' comments and blank lines ignored. Throws
// Error(kEmptyCorpus) when no term remains.
CorpusLoad ParseCorpus(std::span<const std::string> lines, CorpusKind kind,
                       std::string name);

// As ParseCorpus; the corpus is named after the file stem. Throws
// Error(kIo) when the file cannot be read.
CorpusLoad LoadCorpus(const std::filesystem::path& path, CorpusKind kind);

// Closed list of auxiliary and modal verb lemmas.
const Corpus& Auxiliaries();

// The accept list, the reject list and the built-in auxiliaries.
class CorpusStore {
 public:
  CorpusStore();  // both corpora empty

  // Throws Error(kCorpusConflict) naming the shared terms when the two
  // corpora intersect.
  CorpusStore(Corpus dsk, Corpus reject);

  const Corpus& dsk() const { return dsk_; }
  const Corpus& reject() const { return reject_; }
  const Corpus& auxiliaries() const { return Auxiliaries(); }

  bool IsNoise(std::string_view norm) const { return reject_.Contains(norm); }
  bool IsAuxiliary(std::string_view lemma) const {
    return Auxiliaries().Contains(lemma);
  }

 private:
  Corpus dsk_;
  Corpus reject_;
};

}  // namespace keyxtract

#endif  // KEYXTRACT_CORPORA_H_
