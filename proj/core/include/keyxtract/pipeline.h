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

// The keyword extraction chain.
//
// STAGE2: tokenize, tag, lemmatize, classify entities, drop DATE/TIME tokens,
// expand contractions, select nouns, verbs and negation adverbs, drop
// reject-list words, drop auxiliaries, append domain keywords, dedupe on
// (text, tag). Trace stages are named tagging, parser4, parser5, selection,
// parser2, parser3, dsk and dedup.
//
// STAGE1 skips entity removal, contraction expansion, negation and dedup.

#ifndef KEYXTRACT_PIPELINE_H_
#define KEYXTRACT_PIPELINE_H_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "keyxtract/corpora.h"
#include "keyxtract/lemmatizer.h"
#include "keyxtract/model.h"
#include "keyxtract/ner.h"
#include "keyxtract/tagger.h"
#include "keyxtract/tokenizer.h"

namespace keyxtract {

// Everything the pipeline reads. Immutable once built; share one instance
// across threads.
struct PipelineResources {
  TagLexicon lexicon;
  LemmaRules rules;
  Gazetteer gazetteer;
  CorpusStore store;
};

struct PipelineConfig {
  Mode mode = Mode::kStage2;
  std::shared_ptr<const PipelineResources> resources;
  TokenizerConfig tokenizer;
  bool keep_trace = false;
};

// A token moving through the selection stages. `id` orders items in tweet
// order; tokens produced by contraction expansion get ids between their
// neighbours and domain keywords sort after every tweet token.
struct Candidate {
  TaggedToken token;
  KeywordSource source = KeywordSource::kSelected;
  long id = 0;
  std::string text;  // keyword form: lowercase, '@'/'#' stripped for DSK
};

enum class TraceAction { kKept, kRemoved, kAdded, kRewritten };
std::string_view TraceActionName(TraceAction action);

struct TraceEntry {
  std::string text;
  PennTag tag = PennTag::kNN;
  TraceAction action = TraceAction::kKept;
};

struct StageSnapshot {
  std::string stage;
  std::vector<TraceEntry> entries;
};

struct PipelineTrace {
  std::vector<StageSnapshot> stages;
};

struct Extraction {
  KeywordList keywords;
  std::optional<PipelineTrace> trace;
};

// Stage functions. Each is pure and preserves relative order.
std::vector<Candidate> RemoveTimeIndicators(std::span<const Candidate> in);
std::vector<Candidate> ExpandContractions(std::span<const Candidate> in,
                                          const LemmaRules& rules);
std::vector<Candidate> SelectCandidates(std::span<const Candidate> in,
                                        Mode mode);
std::vector<Candidate> RejectNoise(std::span<const Candidate> in,
                                   const CorpusStore& store);
// `tweet` is the token stream the candidates were selected from; it decides
// whether an auxiliary is the tweet's only verb.
std::vector<Candidate> RejectAuxiliaries(std::span<const Candidate> in,
                                         std::span<const Candidate> tweet,
                                         const CorpusStore& store);
// Appends domain terms found in `tweet` (single tokens or n-grams up to the
// corpus phrase length) that are not yet candidates. With
// `skip_time_indicators` spans holding a DATE/TIME token are ignored.
std::vector<Candidate> IncludeDomainKeywords(std::span<const Candidate> in,
                                             std::span<const Candidate> tweet,
                                             const CorpusStore& store,
                                             bool skip_time_indicators);
std::vector<Candidate> Dedupe(std::span<const Candidate> in);

class Pipeline {
 public:
  // Throws Error(kInvalidArgument) when resources are missing.
  explicit Pipeline(PipelineConfig config);

  const PipelineConfig& config() const { return config_; }

  Extraction Extract(std::string_view tweet) const;
  KeywordList Keywords(std::string_view tweet) const {
    return Extract(tweet).keywords;
  }

  // Tokenized, tagged and lemmatized tweet (entity labels set in STAGE2).
  TaggedTweet Analyze(std::string_view tweet) const;

 private:
  PipelineConfig config_;
  Tokenizer tokenizer_;
};

}  // namespace keyxtract

#endif  // KEYXTRACT_PIPELINE_H_
