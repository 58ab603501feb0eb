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

#include "keyxtract/ner.h"

#include <array>
#include <algorithm>
#include <regex>

#include "keyxtract/error.h"
#include "keyxtract/text.h"

namespace keyxtract {
namespace {

constexpr std::array<std::string_view, 6> kCurrencySymbols = {
    "$", "£", "€", "₹", "¥", "rs.",
};
constexpr std::array<std::string_view, 12> kCurrencyWords = {
    "rs",     "lkr",    "usd",  "rupee", "rupees", "dollar",
    "dollars", "cents", "euro", "euros", "inr",    "slr",
};
constexpr std::array<std::string_view, 23> kMonths = {
    "january", "february", "march", "april",   "may",  "june",
    "july",    "august",   "september", "october", "november", "december",
    "jan",     "feb",      "mar",   "apr",     "jun",  "jul",
    "aug",     "sep",      "sept",  "oct",     "nov",
};

template <size_t N>
bool In(const std::array<std::string_view, N>& set, std::string_view w) {
  return std::find(set.begin(), set.end(), w) != set.end();
}

bool IsCurrency(std::string_view w) {
  return In(kCurrencySymbols, w) || In(kCurrencyWords, w);
}

bool IsMeridiem(std::string_view w) {
  return w == "am" || w == "pm" || w == "a.m" || w == "p.m" || w == "a.m." ||
         w == "p.m.";
}

bool IsSmallNumber(std::string_view w, int max) {
  if (w.empty() || w.size() > 2) return false;
  int v = 0;
  for (char c : w) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  return v >= 1 && v <= max;
}

const std::regex& ClockRe() {
  static const std::regex re(R"(^\d{1,2}[:.]\d{2}(am|pm)?$|^\d{1,2}(am|pm)$)");
  return re;
}
const std::regex& DateRe() {
  static const std::regex re(
      R"(^\d{1,4}[-/.]\d{1,2}[-/.]\d{1,4}$|^\d{1,2}(st|nd|rd|th)$)");
  return re;
}
const std::regex& PrefixedMoneyRe() {
  static const std::regex re(R"(^(rs|lkr|usd|inr)\.?\d+([.,]\d+)*/?=?$)");
  return re;
}

NerLabel ParseLexicalClass(std::string_view name, int line_no) {
  const auto label = ParseNer(text::Trim(name));
  if (!label || !Gazetteer::IsLexicalClass(*label)) {
    throw Error(ErrorCode::kMalformedLine,
                "not a gazetteer class: '" + std::string(name) + "'", line_no);
  }
  return *label;
}

void Label(std::vector<TaggedToken>& t, size_t from, size_t to, NerLabel l) {
  for (size_t i = from; i < to && i < t.size(); ++i) {
    if (t[i].ner == NerLabel::kNone) t[i].ner = l;
  }
}

void ApplyPatterns(std::vector<TaggedToken>& t) {
  const size_t n = t.size();
  auto norm = [&](size_t i) -> std::string_view {
    return i < n ? std::string_view(t[i].token.norm) : std::string_view();
  };
  for (size_t i = 0; i < n; ++i) {
    if (t[i].ner != NerLabel::kNone) continue;
    const std::string_view w = norm(i);
    const std::string_view next = norm(i + 1);
    const std::string ws(w);
    const bool number = text::IsNumber(w);

    if (number && (next == "%" || next == "percent" || next == "pct")) {
      Label(t, i, i + 2, NerLabel::kPercent);
    } else if (IsCurrency(w) && text::IsNumber(next)) {
      Label(t, i, i + 2, NerLabel::kMoney);
    } else if (number && In(kCurrencyWords, next)) {
      Label(t, i, i + 2, NerLabel::kMoney);
    } else if (std::regex_match(ws, PrefixedMoneyRe())) {
      Label(t, i, i + 1, NerLabel::kMoney);
    } else if (std::regex_match(ws, ClockRe())) {
      Label(t, i, i + 1, NerLabel::kTime);
    } else if (IsSmallNumber(w, 12) &&
               (IsMeridiem(next) || next == "o'clock")) {
      Label(t, i, i + 2, NerLabel::kTime);
    } else if (std::regex_match(ws, DateRe())) {
      Label(t, i, i + 1, NerLabel::kDate);
    } else if (number && next == "/" && text::IsNumber(norm(i + 2))) {
      // 12 / 05 [/ 2024]
      size_t end = i + 3;
      if (norm(end) == "/" && text::IsNumber(norm(end + 1))) end += 2;
      Label(t, i, end, NerLabel::kDate);
    } else if (IsSmallNumber(w, 31) &&
               ((i > 0 && In(kMonths, norm(i - 1))) || In(kMonths, next))) {
      Label(t, i, i + 1, NerLabel::kDate);
    }
  }
}

}  // namespace

bool Gazetteer::IsLexicalClass(NerLabel label) {
  switch (label) {
    case NerLabel::kLocation:
    case NerLabel::kPerson:
    case NerLabel::kOrganization:
    case NerLabel::kDate:
    case NerLabel::kTime:
      return true;
    default:
      return false;
  }
}

Gazetteer Gazetteer::Parse(std::span<const std::string> lines,
                           std::vector<std::string>* warnings) {
  Gazetteer g;
  int line_no = 0;
  for (const std::string& raw : lines) {
    ++line_no;
    const std::string_view line = text::Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw Error(ErrorCode::kMalformedLine, "expected CLASS<TAB>term",
                  line_no);
    }
    const NerLabel label = ParseLexicalClass(line.substr(0, tab), line_no);
    const std::string_view term = text::Trim(line.substr(tab + 1));
    if (term.empty()) {
      throw Error(ErrorCode::kMalformedLine, "empty term", line_no);
    }
    try {
      if (!g.Add(label, term) && warnings != nullptr) {
        warnings->push_back("line " + std::to_string(line_no) +
                            ": duplicate term '" + std::string(term) + "'");
      }
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), line_no);
    }
  }
  return g;
}

Gazetteer Gazetteer::Load(const std::filesystem::path& path,
                          std::vector<std::string>* warnings) {
  const auto lines = text::ReadLines(path);
  return Parse(lines, warnings);
}

bool Gazetteer::Add(NerLabel label, std::string_view term) {
  if (!IsLexicalClass(label)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(NerName(label)) + " is pattern-only");
  }
  std::string key = text::FoldCase(text::Trim(term));
  auto it = index_.find(key);
  if (it == index_.end()) {
    index_.emplace(std::move(key), label);
    return true;
  }
  if (it->second != label) {
    throw Error(ErrorCode::kGazetteerConflict,
                "'" + key + "' listed as both " +
                    std::string(NerName(it->second)) + " and " +
                    std::string(NerName(label)));
  }
  return false;
}

NerLabel Gazetteer::Find(std::string_view term) const {
  auto it = index_.find(term);
  return it == index_.end() ? NerLabel::kNone : it->second;
}

std::vector<std::string> Gazetteer::Terms(NerLabel label) const {
  std::vector<std::string> out;
  for (const auto& [term, l] : index_) {
    if (l == label) out.push_back(term);
  }
  return out;
}

void Classify(TaggedTweet& tweet, const Gazetteer& gazetteer) {
  auto& tokens = tweet.tokens;
  for (auto& t : tokens) t.ner = NerLabel::kNone;
  ApplyPatterns(tokens);
  for (auto& t : tokens) {
    if (t.ner != NerLabel::kNone) continue;
    NerLabel label = gazetteer.Find(t.key());
    if (label == NerLabel::kNone && t.lemma && *t.lemma != t.token.norm) {
      label = gazetteer.Find(t.token.norm);
    }
    if (IsTimeIndicator(label) && (IsVerb(t.tag) || t.tag == PennTag::kMD)) {
      continue;
    }
    t.ner = label;
  }
}

}  // namespace keyxtract
