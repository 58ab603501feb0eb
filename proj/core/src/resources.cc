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

#include "keyxtract/resources.h"

#include <cstdlib>

namespace keyxtract {

std::filesystem::path DefaultDataDir() {
  if (const char* env = std::getenv("KEYXTRACT_DATA_DIR"); env && *env) {
    return env;
  }
  std::error_code ec;
  if (std::filesystem::is_directory(KEYXTRACT_SOURCE_DATA_DIR, ec)) {
    return KEYXTRACT_SOURCE_DATA_DIR;
  }
  return KEYXTRACT_INSTALL_DATA_DIR;
}

ResourcePaths ResourcePaths::Bundled(const std::filesystem::path& dir) {
  return {dir / "lexicon.tsv", dir / "lemma.rules", dir / "gazetteer.tsv",
          dir / "dsk.txt", dir / "reject.txt"};
}

std::shared_ptr<const PipelineResources> LoadResources(
    const ResourcePaths& paths, std::vector<std::string>* warnings) {
  std::vector<std::string> local;
  auto* w = warnings ? warnings : &local;
  auto dsk = LoadCorpus(paths.dsk, CorpusKind::kDsk);
  auto reject = LoadCorpus(paths.reject, CorpusKind::kReject);
  w->insert(w->end(), dsk.warnings.begin(), dsk.warnings.end());
  w->insert(w->end(), reject.warnings.begin(), reject.warnings.end());
  return std::make_shared<const PipelineResources>(PipelineResources{
      TagLexicon::Load(paths.lexicon, w),
      LemmaRules::Load(paths.lemma),
      Gazetteer::Load(paths.gazetteer, w),
      CorpusStore(std::move(dsk.corpus), std::move(reject.corpus)),
  });
}

std::shared_ptr<const PipelineResources> BundledResources() {
  static const auto kResources = LoadResources(ResourcePaths::Bundled());
  return kResources;
}

}  // namespace keyxtract
