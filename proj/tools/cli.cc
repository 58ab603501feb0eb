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

#include "cli.h"

#include <cstdio>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "keyxtract/corpora.h"
#include "keyxtract/error.h"
#include "keyxtract/eval.h"
#include "keyxtract/pipeline.h"
#include "keyxtract/resources.h"
#include "keyxtract/serialize.h"
#include "keyxtract/service.h"
#include "keyxtract/tagger.h"
#include "keyxtract/text.h"
#include "keyxtract/tokenizer.h"

namespace keyxtract::cli {
namespace {

using ojson = nlohmann::ordered_json;

struct Options {
  std::string mode = "stage2";
  std::string format;
  std::string lexicon, lemma, gazetteer, dsk, reject;
  std::string input;
  bool trace = false;
  int jobs = 1;
  // corpus check
  std::string corpus_path;
  std::string corpus_kind = "dsk";
  // eval
  std::string dataset;
  // serve
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string session_dir, dataset_dir, static_dir;
};

// One tweet per line; whitespace-only lines are skipped.
std::vector<std::string> ReadInput(const std::string& path, std::istream& in) {
  std::vector<std::string> raw;
  if (!path.empty() && path != "-") {
    raw = text::ReadLines(path);
  } else {
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      raw.push_back(std::move(line));
    }
  }
  std::vector<std::string> lines;
  for (auto& l : raw) {
    if (!text::Trim(l).empty()) lines.push_back(std::move(l));
  }
  return lines;
}

std::shared_ptr<const PipelineResources> Resources(const Options& o,
                                                   std::ostream& err) {
  ResourcePaths p = ResourcePaths::Bundled();
  if (!o.lexicon.empty()) p.lexicon = o.lexicon;
  if (!o.lemma.empty()) p.lemma = o.lemma;
  if (!o.gazetteer.empty()) p.gazetteer = o.gazetteer;
  if (!o.dsk.empty()) p.dsk = o.dsk;
  if (!o.reject.empty()) p.reject = o.reject;
  std::vector<std::string> warnings;
  auto res = LoadResources(p, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  return res;
}

Pipeline MakePipeline(const Options& o, std::ostream& err) {
  PipelineConfig config;
  config.mode = *ParseMode(o.mode);
  config.resources = Resources(o, err);
  config.keep_trace = o.trace;
  return Pipeline(std::move(config));
}

int RunTokenize(const Options& o, std::istream& in, std::ostream& out) {
  const Tokenizer tokenizer;
  bool first = true;
  for (const auto& line : ReadInput(o.input, in)) {
    if (!first) out << '\n';
    first = false;
    for (const Token& t : tokenizer.Tokenize(line)) out << t.surface << '\n';
  }
  return kExitOk;
}

int RunTag(const Options& o, std::istream& in, std::ostream& out,
           std::ostream& err) {
  const auto res = Resources(o, err);
  const Tokenizer tokenizer;
  bool first = true;
  for (const auto& line : ReadInput(o.input, in)) {
    if (!first) out << '\n';
    first = false;
    const auto tagged = Tag(tokenizer.Tokenize(line), res->lexicon);
    const std::string rendered = RenderTagged(tagged);
    out << rendered;
    if (!rendered.empty() && rendered.back() != '\n') out << '\n';
  }
  return kExitOk;
}

std::string RenderTable(const Extraction& e) {
  std::string s = "# " + e.keywords.tweet + '\n';
  for (const Keyword& k : e.keywords.keywords) {
    s += k.text + '\t' + std::string(TagCode(k.tag)) + '\t' +
         std::string(SourceName(k.source)) + '\n';
  }
  return s;
}

int RunExtract(const Options& o, std::istream& in, std::ostream& out,
               std::ostream& err) {
  const Pipeline pipeline = MakePipeline(o, err);
  const auto lines = ReadInput(o.input, in);
  const bool table = o.format == "table";
  std::vector<std::string> rendered(lines.size());
  auto work = [&](size_t start, size_t step) {
    for (size_t i = start; i < lines.size(); i += step) {
      const Extraction e = pipeline.Extract(lines[i]);
      rendered[i] = table ? RenderTable(e) : ExtractionToJson(e) + '\n';
    }
  };
  const size_t jobs = std::clamp<size_t>(o.jobs, 1, std::max<size_t>(lines.size(), 1));
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (size_t j = 0; j < jobs; ++j) pool.emplace_back(work, j, jobs);
    for (auto& t : pool) t.join();
  }
  for (size_t i = 0; i < rendered.size(); ++i) {
    if (table && i > 0) out << '\n';
    out << rendered[i];
  }
  return kExitOk;
}

int RunCorpusCheck(const Options& o, std::ostream& out, std::ostream& err) {
  const CorpusKind kind =
      o.corpus_kind == "reject" ? CorpusKind::kReject : CorpusKind::kDsk;
  const CorpusLoad load = LoadCorpus(o.corpus_path, kind);
  for (const auto& w : load.warnings) err << "warning: " << w << '\n';
  out << load.corpus.size() << " terms, " << load.warnings.size()
      << " warnings\n";
  return kExitOk;
}

struct ScoredRow {
  int number;
  EvalScores scores;
};

struct ScoredSet {
  std::string name;
  std::vector<ScoredRow> rows;
  AverageScores average;
};

std::string Cell(double v) { return text::Format2(v); }

void PrintTable(const ScoredSet& set, bool titled, std::ostream& out) {
  char buf[96];
  if (titled) out << "== " << set.name << " ==\n";
  std::snprintf(buf, sizeof buf, "%-8s %5s %5s %5s\n", "Tweet#", "P", "R", "F1");
  out << buf;
  for (const auto& row : set.rows) {
    std::snprintf(buf, sizeof buf, "%-8d %5s %5s %5s\n", row.number,
                  Cell(row.scores.precision).c_str(),
                  Cell(row.scores.recall).c_str(), Cell(row.scores.f1).c_str());
    out << buf;
  }
  std::snprintf(buf, sizeof buf, "%-8s %5s %5s %5s\n", "Average",
                Cell(set.average.precision).c_str(),
                Cell(set.average.recall).c_str(), Cell(set.average.f1).c_str());
  out << buf;
}

ojson Rounded(double p, double r, double f1) {
  return {{"p", text::RoundHalfUp(p)},
          {"r", text::RoundHalfUp(r)},
          {"f1", text::RoundHalfUp(f1)}};
}

int RunEval(const Options& o, std::ostream& out, std::ostream& err) {
  const auto items = LoadDataset(o.dataset);
  std::optional<Pipeline> pipeline;
  std::vector<std::vector<std::string>> machine;
  for (const auto& item : items) {
    if (item.machine) {
      machine.push_back(*item.machine);
      continue;
    }
    if (!pipeline) pipeline.emplace(MakePipeline(o, err));
    machine.push_back(pipeline->Keywords(item.tweet).Texts());
  }

  std::vector<ScoredSet> sets(1);
  sets[0].name = "human";
  const bool has_second = std::any_of(items.begin(), items.end(),
                                      [](const auto& i) { return i.human2; });
  if (has_second) sets.push_back({"human2", {}, {}});
  for (size_t i = 0; i < items.size(); ++i) {
    const int number = static_cast<int>(i) + 1;
    sets[0].rows.push_back({number, Score(machine[i], items[i].human)});
    if (items[i].human2) {
      sets[1].rows.push_back({number, Score(machine[i], *items[i].human2)});
    }
  }
  for (auto& set : sets) {
    std::vector<EvalScores> s;
    for (const auto& row : set.rows) s.push_back(row.scores);
    set.average = Average(s);
  }
  std::optional<AverageScores> cross;
  if (sets.size() == 2) {
    cross = AverageScores{
        (sets[0].average.precision + sets[1].average.precision) / 2,
        (sets[0].average.recall + sets[1].average.recall) / 2,
        (sets[0].average.f1 + sets[1].average.f1) / 2, 2};
  }

  if (o.format == "json") {
    ojson doc;
    doc["mode"] = o.mode;
    doc["sets"] = ojson::array();
    for (const auto& set : sets) {
      ojson rows = ojson::array();
      for (const auto& row : set.rows) {
        const size_t i = static_cast<size_t>(row.number - 1);
        ojson r = {{"tweet_number", row.number},
                   {"tweet", items[i].tweet},
                   {"machine", machine[i]}};
        r.update(Rounded(row.scores.precision, row.scores.recall,
                         row.scores.f1));
        rows.push_back(std::move(r));
      }
      doc["sets"].push_back(
          {{"name", set.name},
           {"rows", std::move(rows)},
           {"average", Rounded(set.average.precision, set.average.recall,
                               set.average.f1)}});
    }
    if (cross) {
      doc["cross_average"] = Rounded(cross->precision, cross->recall, cross->f1);
    }
    out << doc.dump(-1, ' ', false, ojson::error_handler_t::replace) << '\n';
    return kExitOk;
  }

  for (size_t k = 0; k < sets.size(); ++k) {
    if (k > 0) out << '\n';
    PrintTable(sets[k], sets.size() > 1, out);
  }
  if (cross) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "\n%-8s %5s %5s %5s\n", "Cross",
                  Cell(cross->precision).c_str(), Cell(cross->recall).c_str(),
                  Cell(cross->f1).c_str());
    out << buf;
  }
  return kExitOk;
}

int RunServe(const Options& o, std::ostream& err) {
  ServiceOptions so;
  so.host = o.host;
  so.port = o.port;
  if (!o.session_dir.empty()) so.session_dir = o.session_dir;
  so.dataset_dir = o.dataset_dir.empty() ? DefaultDataDir() / "datasets"
                                         : std::filesystem::path(o.dataset_dir);
  if (!o.static_dir.empty()) so.static_dir = o.static_dir;
  so.resources = Resources(o, err);
  Service service(std::move(so));
  const int port = service.Bind();
  err << "keyxtract: serving on http://" << o.host << ':' << port << '\n';
  err.flush();
  service.Listen();
  return kExitOk;
}

void AddResourceFlags(CLI::App& app, Options& o) {
  app.add_option("--lexicon", o.lexicon, "Tag lexicon (word<TAB>TAG[,TAG])");
  app.add_option("--lemma", o.lemma, "Lemma rules file");
  app.add_option("--gazetteer", o.gazetteer, "Entity gazetteer (CLASS<TAB>term)");
  app.add_option("--dsk", o.dsk, "Domain keyword corpus");
  app.add_option("--reject", o.reject, "Words-to-reject corpus");
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Keyword extraction for tweets", "keyxtract"};
  app.require_subcommand(1);
  app.fallthrough();
  AddResourceFlags(app, o);
  app.add_option("--mode", o.mode, "Pipeline mode")
      ->check(CLI::IsMember({"stage1", "stage2"}));
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));

  auto* tokenize = app.add_subcommand("tokenize", "Print one token per line");
  tokenize->add_option("input", o.input, "Tweets, one per line (default stdin)");

  auto* tag = app.add_subcommand("tag", "Print surface<TAB>TAG lines");
  tag->add_option("input", o.input, "Tweets, one per line (default stdin)");

  auto* extract = app.add_subcommand("extract", "Extract keywords");
  extract->add_option("input", o.input, "Tweets, one per line (default stdin)");
  extract->add_flag("--trace", o.trace, "Include the per-stage trace");
  extract->add_option("--jobs,-j", o.jobs, "Worker threads")
      ->check(CLI::Range(1, 256));

  auto* corpus = app.add_subcommand("corpus", "Corpus utilities");
  corpus->require_subcommand(1);
  auto* check = corpus->add_subcommand("check", "Validate a corpus file");
  check->add_option("path", o.corpus_path, "Corpus file")->required();
  check->add_option("--kind", o.corpus_kind, "dsk or reject")
      ->check(CLI::IsMember({"dsk", "reject"}));

  auto* eval = app.add_subcommand("eval", "Score a dataset against human keywords");
  eval->add_option("dataset", o.dataset, "JSON dataset")->required();

  auto* serve = app.add_subcommand("serve", "Run the supervisor session service");
  serve->add_option("--port", o.port, "Port (0 picks one)")
      ->check(CLI::Range(0, 65535));
  serve->add_option("--host", o.host, "Bind address");
  serve->add_option("--sessions", o.session_dir, "Session persistence directory");
  serve->add_option("--datasets", o.dataset_dir, "Server-side dataset directory");
  serve->add_option("--static", o.static_dir, "UI asset directory");

  std::vector<std::string> argv_store = {"keyxtract"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*tokenize) return RunTokenize(o, in, out);
    if (*tag) return RunTag(o, in, out, err);
    if (*extract) {
      if (o.format.empty()) o.format = "json";
      return RunExtract(o, in, out, err);
    }
    if (*corpus) return RunCorpusCheck(o, out, err);
    if (*eval) {
      if (o.format.empty()) o.format = "table";
      return RunEval(o, out, err);
    }
    if (*serve) return RunServe(o, err);
  } catch (const Error& e) {
    err << "keyxtract: " << e.what() << '\n';
    return kExitResource;
  }
  return kExitUsage;
}

}  // namespace keyxtract::cli
