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

// HTTP host for Turing-test supervisor sessions.
//
//   POST /sessions                   {criterion, pairs | dataset_id, seed?}
//   GET  /sessions/{id}/next         current pair, no provenance
//   POST /sessions/{id}/judgments    {pair_index, chosen: "left"|"right"}
//   GET  /sessions/{id}/result       tally once complete, else 409
//   GET  /datasets                   server-side datasets
//   GET  /healthz
//   GET  /...                        static UI assets

#ifndef KEYXTRACT_SERVICE_H_
#define KEYXTRACT_SERVICE_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "keyxtract/pipeline.h"
#include "keyxtract/session.h"

namespace keyxtract {

struct ServiceOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  // Session persistence; in-memory only when unset.
  std::optional<std::filesystem::path> session_dir;
  // Holds `<dataset_id>.json` files in the evaluation dataset format.
  std::optional<std::filesystem::path> dataset_dir;
  std::optional<std::filesystem::path> static_dir;
  // Computes machine keywords for pairs that do not carry them. STAGE2.
  std::shared_ptr<const PipelineResources> resources;
};

class Service {
 public:
  explicit Service(ServiceOptions options);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Binds the listening socket and returns the bound port. Throws
  // Error(kIo) when the port cannot be bound.
  int Bind();
  // Serves until Stop(). Binds first when Bind() was not called.
  void Listen();
  void Stop();
  // Blocks until the server accepts connections.
  void WaitUntilReady() const;

  SessionStore& sessions();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace keyxtract

#endif  // KEYXTRACT_SERVICE_H_
