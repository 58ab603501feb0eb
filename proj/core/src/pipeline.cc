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

#include "keyxtract/pipeline.h"

#include <algorithm>
#include <array>
#include <set>
#include <utility>

#include "keyxtract/error.h"
#include "keyxtract/text.h"

namespace keyxtract {
namespace {

// Room for the pieces of an expanded contraction between two tweet tokens.
constexpr long kIdStride = 8;
constexpr long kDskIdBase = 1L << 40;

constexpr std::array<std::string_view, 3> kNegations = {"not", "never", "no"};

bool IsNegation(const TaggedToken& t) {
  return std::find(kNegations.begin(), kNegations.end(), t.key()) !=
         kNegations.end();
}

std::string StripMarker(std::string_view norm) {
  if (norm.size() > 1 && (norm.front() == '@' || norm.front() == '#')) {
    norm.remove_prefix(1);
  }
  return std::string(norm);
}

// Merges two id-sorted lists into one snapshot.
StageSnapshot Diff(std::string stage, std::span<const Candidate> before,
                   std::span<const Candidate> after) {
  StageSnapshot snap{std::move(stage), {}};
  size_t i = 0;
  size_t j = 0;
  auto emit = [&](const Candidate& c, TraceAction a) {
    snap.entries.push_back({c.text, c.token.tag, a});
  };
  while (i < before.size() || j < after.size()) {
    if (j == after.size() ||
        (i < before.size() && before[i].id < after[j].id)) {
      emit(before[i++], TraceAction::kRemoved);
    } else if (i == before.size() || after[j].id < before[i].id) {
      emit(after[j++], TraceAction::kAdded);
    } else {
      const bool same = before[i].text == after[j].text &&
                        before[i].token.tag == after[j].token.tag;
      emit(after[j], same ? TraceAction::kKept : TraceAction::kRewritten);
      ++i;
      ++j;
    }
  }
  return snap;
}

}  // namespace

std::string_view TraceActionName(TraceAction action) {
  switch (action) {
    case TraceAction::kKept:
      return "kept";
    case TraceAction::kRemoved:
      return "removed";
    case TraceAction::kAdded:
      return "added";
    case TraceAction::kRewritten:
      return "rewritten";
  }
  return "kept";
}

std::vector<Candidate> RemoveTimeIndicators(std::span<const Candidate> in) {
  std::vector<Candidate> out;
  for (const Candidate& c : in) {
    if (!IsTimeIndicator(c.token.ner)) out.push_back(c);
  }
  return out;
}

std::vector<Candidate> ExpandContractions(std::span<const Candidate> in,
                                          const LemmaRules& rules) {
  std::vector<Candidate> out;
  out.reserve(in.size());
  for (size_t k = 0; k < in.size(); ++k) {
    const TaggedToken* next = k + 1 < in.size() ? &in[k + 1].token : nullptr;
    const auto parts = ExpandContraction(in[k].token, rules, next);
    if (parts.size() == 1 && parts[0] == in[k].token) {
      out.push_back(in[k]);
      continue;
    }
    for (size_t m = 0; m < parts.size(); ++m) {
      out.push_back({parts[m], in[k].source, in[k].id + static_cast<long>(m),
                     parts[m].token.norm});
    }
  }
  return out;
}

std::vector<Candidate> SelectCandidates(std::span<const Candidate> in,
                                        Mode mode) {
  std::vector<Candidate> out;
  for (const Candidate& c : in) {
    const PennTag tag = c.token.tag;
    if (IsNoun(tag) || IsVerb(tag)) {
      out.push_back(c);
    } else if (mode == Mode::kStage2 && IsAdverb(tag) && IsNegation(c.token)) {
      out.push_back(c);
      out.back().source = KeywordSource::kNegationReinserted;
    }
  }
  return out;
}

std::vector<Candidate> RejectNoise(std::span<const Candidate> in,
                                   const CorpusStore& store) {
  std::vector<Candidate> out;
  for (const Candidate& c : in) {
    if (!store.IsNoise(c.token.token.norm)) out.push_back(c);
  }
  return out;
}

std::vector<Candidate> RejectAuxiliaries(std::span<const Candidate> in,
                                         std::span<const Candidate> tweet,
                                         const CorpusStore& store) {
  const auto verbs = std::count_if(tweet.begin(), tweet.end(),
                                   [](const Candidate& c) {
                                     return IsVerb(c.token.tag);
                                   });
  std::vector<Candidate> out;
  for (const Candidate& c : in) {
    const bool aux = IsVerb(c.token.tag) && store.IsAuxiliary(c.token.key());
    // A lone auxiliary is the tweet's main verb ("Is the outage over").
    if (!aux || verbs == 1) out.push_back(c);
  }
  return out;
}

std::vector<Candidate> IncludeDomainKeywords(std::span<const Candidate> in,
                                             std::span<const Candidate> tweet,
                                             const CorpusStore& store,
                                             bool skip_time_indicators) {
  std::vector<Candidate> out(in.begin(), in.end());
  const Corpus& dsk = store.dsk();
  if (dsk.empty() || tweet.empty()) return out;

  std::set<long> ids;
  std::set<std::string, std::less<>> texts;
  long next_id = kDskIdBase;
  for (const Candidate& c : in) {
    ids.insert(c.id);
    texts.insert(c.text);
    next_id = std::max(next_id, c.id + 1);
  }
  std::vector<std::string> words;
  words.reserve(tweet.size());
  for (const Candidate& c : tweet) words.push_back(StripMarker(c.token.token.norm));

  const size_t max_len =
      static_cast<size_t>(std::clamp(dsk.max_phrase_tokens(), 1, 3));
  size_t i = 0;
  while (i < tweet.size()) {
    size_t consumed = 1;
    for (size_t len = std::min(max_len, tweet.size() - i); len >= 1; --len) {
      const auto span = tweet.subspan(i, len);
      if (skip_time_indicators &&
          std::any_of(span.begin(), span.end(), [](const Candidate& c) {
            return IsTimeIndicator(c.token.ner);
          })) {
        continue;
      }
      std::vector<std::string> parts(words.begin() + i,
                                     words.begin() + i + len);
      const std::string phrase = text::Join(parts, " ");
      if (!dsk.Contains(phrase) || texts.count(phrase) > 0) continue;
      if (len > 1 && std::all_of(span.begin(), span.end(),
                                 [&](const Candidate& c) {
                                   return ids.count(c.id) > 0;
                                 })) {
        continue;
      }
      Candidate added = span.back();
      added.source = KeywordSource::kDskIncluded;
      added.id = next_id++;
      added.text = phrase;
      for (const Candidate& c : span) ids.insert(c.id);
      texts.insert(phrase);
      out.push_back(std::move(added));
      consumed = len;
      break;
    }
    i += consumed;
  }
  return out;
}

std::vector<Candidate> Dedupe(std::span<const Candidate> in) {
  std::set<std::pair<std::string, PennTag>> seen;
  std::vector<Candidate> out;
  for (const Candidate& c : in) {
    if (seen.emplace(c.text, c.token.tag).second) out.push_back(c);
  }
  return out;
}

Pipeline::Pipeline(PipelineConfig config)
    : config_(std::move(config)), tokenizer_(config_.tokenizer) {
  if (!config_.resources) {
    throw Error(ErrorCode::kInvalidArgument, "pipeline resources not loaded");
  }
}

TaggedTweet Pipeline::Analyze(std::string_view tweet) const {
  const PipelineResources& res = *config_.resources;
  const auto tokens = tokenizer_.Tokenize(tweet);
  TaggedTweet tagged = Tag(tokens, res.lexicon);
  AssignLemmas(tagged, res.rules);
  if (config_.mode == Mode::kStage2) Classify(tagged, res.gazetteer);
  return tagged;
}

Extraction Pipeline::Extract(std::string_view tweet) const {
  const PipelineResources& res = *config_.resources;
  const bool stage2 = config_.mode == Mode::kStage2;

  Extraction result;
  result.keywords.tweet = std::string(tweet);
  result.keywords.mode = config_.mode;
  if (config_.keep_trace) result.trace.emplace();

  const TaggedTweet tagged = Analyze(tweet);
  std::vector<Candidate> stream;
  stream.reserve(tagged.tokens.size());
  for (const TaggedToken& t : tagged.tokens) {
    stream.push_back({t, KeywordSource::kSelected,
                      static_cast<long>(t.token.position) * kIdStride,
                      t.token.norm});
  }

  auto record = [&](const char* stage, std::span<const Candidate> before,
                    std::span<const Candidate> after) {
    if (result.trace) result.trace->stages.push_back(Diff(stage, before, after));
  };
  record("tagging", stream, stream);

  std::vector<Candidate> words = stream;
  if (stage2) {
    auto p4 = RemoveTimeIndicators(words);
    record("parser4", words, p4);
    auto p5 = ExpandContractions(p4, res.rules);
    record("parser5", p4, p5);
    words = std::move(p5);
  }
  auto selected = SelectCandidates(words, config_.mode);
  record("selection", words, selected);
  auto p2 = RejectNoise(selected, res.store);
  record("parser2", selected, p2);
  auto p3 = RejectAuxiliaries(p2, words, res.store);
  record("parser3", p2, p3);
  auto dsk = IncludeDomainKeywords(p3, stream, res.store, stage2);
  record("dsk", p3, dsk);
  std::vector<Candidate> final_list = std::move(dsk);
  if (stage2) {
    auto deduped = Dedupe(final_list);
    record("dedup", final_list, deduped);
    final_list = std::move(deduped);
  }

  result.keywords.keywords.reserve(final_list.size());
  for (const Candidate& c : final_list) {
    result.keywords.keywords.push_back({c.text, c.token.tag, c.source});
  }
  return result;
}

}  // namespace keyxtract
