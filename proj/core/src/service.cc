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

#include "keyxtract/service.h"

#include <algorithm>
#include <functional>
#include <limits>

#include "httplib.h"
#include "json.hpp"
#include "keyxtract/error.h"
#include "keyxtract/resources.h"
#include "keyxtract/serialize.h"
#include "keyxtract/text.h"

namespace keyxtract {
namespace {

using ojson = nlohmann::ordered_json;

int HttpStatus(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownSession:
      return 404;
    case ErrorCode::kJudgmentConflict:
    case ErrorCode::kSessionOpen:
      return 409;
    case ErrorCode::kEmptyInput:
    case ErrorCode::kMalformedDataset:
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kMalformedLine:
      return 400;
    default:
      return 500;
  }
}

void Reply(httplib::Response& res, int status, const ojson& body) {
  res.status = status;
  res.set_content(body.dump(-1, ' ', false, ojson::error_handler_t::replace),
                  "application/json");
}

void ReplyError(httplib::Response& res, int status, std::string_view code,
                const std::string& message) {
  Reply(res, status,
        {{"error", {{"code", code}, {"message", message}}}});
}

using Handler = std::function<void(const httplib::Request&, httplib::Response&)>;

// Maps library errors and JSON errors to HTTP statuses.
httplib::Server::Handler Guard(Handler h) {
  return [h = std::move(h)](const httplib::Request& req,
                            httplib::Response& res) {
    try {
      h(req, res);
    } catch (const Error& e) {
      ReplyError(res, HttpStatus(e.code()), ErrorCodeName(e.code()), e.what());
    } catch (const ojson::exception& e) {
      ReplyError(res, 400, "BAD_REQUEST", e.what());
    } catch (const std::exception& e) {
      ReplyError(res, 500, "INTERNAL", e.what());
    }
  };
}

ojson ParseBody(const httplib::Request& req) {
  try {
    ojson body = ojson::parse(req.body);
    if (!body.is_object()) {
      throw Error(ErrorCode::kInvalidArgument, "body must be a JSON object");
    }
    return body;
  } catch (const ojson::parse_error& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("malformed JSON: ") + e.what());
  }
}

std::vector<std::string> Strings(const ojson& v, const std::string& what) {
  if (!v.is_array()) {
    throw Error(ErrorCode::kMalformedDataset, what + " must be a list");
  }
  std::vector<std::string> out;
  for (const auto& s : v) {
    if (!s.is_string()) {
      throw Error(ErrorCode::kMalformedDataset, what + " must hold strings");
    }
    out.push_back(s.get<std::string>());
  }
  return out;
}

bool SafeName(std::string_view id) {
  return !id.empty() && id.size() <= 64 &&
         std::all_of(id.begin(), id.end(), [](char c) {
           return std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
                  c == '_';
         });
}

}  // namespace

struct Service::Impl {
  ServiceOptions options;
  SessionStore store;
  std::optional<Pipeline> pipeline;
  httplib::Server server;
  int bound_port = -1;

  explicit Impl(ServiceOptions opts)
      : options(std::move(opts)), store(options.session_dir) {
    if (options.resources) {
      pipeline.emplace(PipelineConfig{Mode::kStage2, options.resources, {}, false});
    }
    // No SO_REUSEPORT: a second service on a busy port must fail to bind.
    server.set_socket_options([](socket_t sock) {
      int yes = 1;
      setsockopt(sock, SOL_SOCKET, SO_REUSEADDR,
                 reinterpret_cast<const void*>(&yes), sizeof(yes));
    });
    Routes();
  }

  std::vector<std::string> Machine(const std::string& tweet) {
    if (!pipeline) pipeline.emplace(PipelineConfig{Mode::kStage2, BundledResources(), {}, false});
    return pipeline->Keywords(tweet).Texts();
  }

  std::vector<PairInput> PairsFromDataset(const std::string& id) {
    if (!SafeName(id)) {
      throw Error(ErrorCode::kInvalidArgument, "bad dataset_id");
    }
    if (!options.dataset_dir) {
      throw Error(ErrorCode::kInvalidArgument, "no server-side datasets");
    }
    const auto path = *options.dataset_dir / (id + ".json");
    if (!std::filesystem::exists(path)) {
      throw Error(ErrorCode::kInvalidArgument, "unknown dataset '" + id + "'");
    }
    std::vector<PairInput> pairs;
    for (auto& item : LoadDataset(path)) {
      auto machine = item.machine ? std::move(*item.machine) : Machine(item.tweet);
      pairs.push_back({std::move(item.tweet), std::move(item.human),
                       std::move(machine)});
    }
    return pairs;
  }

  std::vector<PairInput> PairsFromBody(const ojson& list) {
    if (!list.is_array() || list.empty()) {
      throw Error(ErrorCode::kEmptyInput, "pairs must be a nonempty list");
    }
    std::vector<PairInput> pairs;
    for (size_t i = 0; i < list.size(); ++i) {
      const ojson& p = list[i];
      const std::string where = "pairs[" + std::to_string(i) + "]";
      if (!p.is_object() || !p.contains("tweet") || !p["tweet"].is_string() ||
          !p.contains("human")) {
        throw Error(ErrorCode::kMalformedDataset,
                    where + " needs 'tweet' and 'human'");
      }
      PairInput in;
      in.tweet = p["tweet"].get<std::string>();
      in.human = Strings(p["human"], where + ".human");
      in.machine = p.contains("machine") ? Strings(p["machine"], where + ".machine")
                                         : Machine(in.tweet);
      pairs.push_back(std::move(in));
    }
    return pairs;
  }

  void CreateSession(const httplib::Request& req, httplib::Response& res) {
    const ojson body = ParseBody(req);
    std::string criterion = "unspecified";
    if (body.contains("criterion")) {
      if (!body["criterion"].is_string()) {
        throw Error(ErrorCode::kInvalidArgument, "criterion must be a string");
      }
      criterion = body["criterion"].get<std::string>();
    }
    std::optional<std::uint64_t> seed;
    if (body.contains("seed") && !body["seed"].is_null()) {
      if (!body["seed"].is_number_unsigned()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "seed must be a non-negative integer");
      }
      seed = body["seed"].get<std::uint64_t>();
    }
    std::vector<PairInput> pairs;
    if (body.contains("pairs")) {
      pairs = PairsFromBody(body["pairs"]);
    } else if (body.contains("dataset_id") && body["dataset_id"].is_string()) {
      pairs = PairsFromDataset(body["dataset_id"].get<std::string>());
    } else {
      throw Error(ErrorCode::kInvalidArgument,
                  "request needs 'pairs' or 'dataset_id'");
    }
    const std::string id = store.Create(criterion, std::move(pairs), seed);
    Reply(res, 201,
          {{"session_id", id},
           {"pair_count", store.PairCount(id)},
           {"status", StatusName(SessionStatus::kOpen)}});
  }

  void NextPair(const httplib::Request& req, httplib::Response& res) {
    const std::string id = req.path_params.at("id");
    const auto view = store.Next(id);
    if (!view) {
      Reply(res, 200,
            {{"session_id", id},
             {"status", StatusName(SessionStatus::kComplete)},
             {"pair_count", store.PairCount(id)}});
      return;
    }
    Reply(res, 200,
          {{"session_id", id},
           {"status", StatusName(SessionStatus::kOpen)},
           {"pair_index", view->pair_index},
           {"pair_count", view->pair_count},
           {"tweet", view->tweet},
           {"left", view->left},
           {"right", view->right}});
  }

  void SubmitJudgment(const httplib::Request& req, httplib::Response& res) {
    const std::string id = req.path_params.at("id");
    const int pair_count = store.PairCount(id);  // 404 before body checks
    const ojson body = ParseBody(req);
    if (!body.contains("pair_index") || !body["pair_index"].is_number_integer()) {
      throw Error(ErrorCode::kInvalidArgument, "pair_index must be an integer");
    }
    const auto index = body["pair_index"].get<long long>();
    if (index < 0 || index > std::numeric_limits<int>::max()) {
      throw Error(ErrorCode::kInvalidArgument, "pair_index out of range");
    }
    const auto side = body.contains("chosen") && body["chosen"].is_string()
                          ? ParseSide(body["chosen"].get<std::string>())
                          : std::nullopt;
    if (!side) {
      throw Error(ErrorCode::kInvalidArgument,
                  "chosen must be \"left\" or \"right\"");
    }
    const int judged = store.Judge(id, static_cast<int>(index), *side);
    const bool complete = judged == pair_count;
    Reply(res, 200,
          {{"session_id", id},
           {"accepted", true},
           {"judged", judged},
           {"pair_count", pair_count},
           {"status", StatusName(complete ? SessionStatus::kComplete
                                          : SessionStatus::kOpen)}});
  }

  void Result(const httplib::Request& req, httplib::Response& res) {
    const std::string id = req.path_params.at("id");
    const SessionResult r = store.Result(id);
    ojson pairs = ojson::array();
    for (size_t i = 0; i < r.pairs.size(); ++i) {
      const SessionPair& p = r.pairs[i];
      pairs.push_back(
          {{"pair_index", i},
           {"tweet", p.input.tweet},
           {"human", p.input.human},
           {"machine", p.input.machine},
           {"machine_side", SideName(p.machine_on_left ? Side::kLeft
                                                       : Side::kRight)},
           {"chosen", SideName(r.judgments[i])},
           {"outcome", OutcomeName(r.outcomes[i])}});
    }
    const TuringTally& t = r.tally;
    Reply(res, 200,
          {{"session_id", id},
           {"criterion", r.criterion},
           {"status", StatusName(SessionStatus::kComplete)},
           {"x", t.x},
           {"y", t.y},
           {"z", t.z},
           {"n", t.n},
           {"t", t.t},
           {"t_display", text::Format2(t.t)},
           {"pass", t.passed()},
           {"pairs", std::move(pairs)}});
  }

  void Datasets(const httplib::Request&, httplib::Response& res) {
    ojson list = ojson::array();
    if (options.dataset_dir && std::filesystem::is_directory(*options.dataset_dir)) {
      std::vector<std::filesystem::path> files;
      for (const auto& f : std::filesystem::directory_iterator(*options.dataset_dir)) {
        if (f.path().extension() == ".json") files.push_back(f.path());
      }
      std::sort(files.begin(), files.end());
      for (const auto& f : files) {
        if (!SafeName(f.stem().string())) continue;
        try {
          list.push_back({{"dataset_id", f.stem().string()},
                          {"pair_count", LoadDataset(f).size()}});
        } catch (const Error&) {
          // Unreadable datasets are not offered.
        }
      }
    }
    Reply(res, 200, {{"datasets", std::move(list)}});
  }

  void Routes() {
    server.Post("/sessions", Guard([this](const auto& q, auto& r) {
                  CreateSession(q, r);
                }));
    server.Get("/sessions/:id/next",
               Guard([this](const auto& q, auto& r) { NextPair(q, r); }));
    server.Post("/sessions/:id/judgments", Guard([this](const auto& q, auto& r) {
                  SubmitJudgment(q, r);
                }));
    server.Get("/sessions/:id/result",
               Guard([this](const auto& q, auto& r) { Result(q, r); }));
    server.Get("/datasets",
               Guard([this](const auto& q, auto& r) { Datasets(q, r); }));
    server.Get("/healthz", [](const httplib::Request&, httplib::Response& r) {
      Reply(r, 200, {{"status", "ok"}});
    });
    const auto dir = options.static_dir ? *options.static_dir
                                        : DefaultDataDir() / "www";
    if (std::filesystem::is_directory(dir)) {
      server.set_mount_point("/", dir.string());
    }
  }
};

Service::Service(ServiceOptions options)
    : impl_(std::make_unique<Impl>(std::move(options))) {}

Service::~Service() { Stop(); }

int Service::Bind() {
  if (impl_->bound_port >= 0) return impl_->bound_port;
  const auto& o = impl_->options;
  if (o.port == 0) {
    impl_->bound_port = impl_->server.bind_to_any_port(o.host);
  } else if (impl_->server.bind_to_port(o.host, o.port)) {
    impl_->bound_port = o.port;
  }
  if (impl_->bound_port < 0) {
    throw Error(ErrorCode::kIo, "cannot bind " + o.host + ":" +
                                    std::to_string(o.port));
  }
  return impl_->bound_port;
}

void Service::Listen() {
  Bind();
  impl_->server.listen_after_bind();
}

void Service::Stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

void Service::WaitUntilReady() const { impl_->server.wait_until_ready(); }

SessionStore& Service::sessions() { return impl_->store; }

}  // namespace keyxtract
