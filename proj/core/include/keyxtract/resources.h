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

#ifndef KEYXTRACT_RESOURCES_H_
#define KEYXTRACT_RESOURCES_H_

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "keyxtract/pipeline.h"

namespace keyxtract {

// $KEYXTRACT_DATA_DIR when set, else the source tree's data directory when
// it exists, else the installed share directory.
std::filesystem::path DefaultDataDir();

struct ResourcePaths {
  std::filesystem::path lexicon;
  std::filesystem::path lemma;
  std::filesystem::path gazetteer;
  std::filesystem::path dsk;
  std::filesystem::path reject;

  static ResourcePaths Bundled(
      const std::filesystem::path& dir = DefaultDataDir());
};

// Loads and validates every resource. Load warnings (duplicate terms,
// unknown tags) are appended to `warnings` when given.
std::shared_ptr<const PipelineResources> LoadResources(
    const ResourcePaths& paths, std::vector<std::string>* warnings = nullptr);

// The bundled resources, loaded once per process.
std::shared_ptr<const PipelineResources> BundledResources();

}  // namespace keyxtract

#endif  // KEYXTRACT_RESOURCES_H_
