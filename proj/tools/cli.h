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

#ifndef KEYXTRACT_TOOLS_CLI_H_
#define KEYXTRACT_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace keyxtract::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitResource = 2;

// Runs one invocation. `args` excludes the program name. Reads tweets from
// `in` when no input file is given.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace keyxtract::cli

#endif  // KEYXTRACT_TOOLS_CLI_H_
