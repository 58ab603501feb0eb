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

#include "keyxtract/tokenizer.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

#include "keyxtract/text.h"

namespace keyxtract {
namespace {

constexpr std::array<std::string_view, 7> kClitics = {
    "n't", "'ve", "'re", "'ll", "'d", "'m", "'s",
};

bool IsAsciiAlnum(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

// Byte length of an apostrophe at s[i] (ASCII or U+2018/U+2019), else 0.
size_t ApostropheLen(std::string_view s, size_t i) {
  if (i >= s.size()) return 0;
  if (s[i] == '\'') return 1;
  if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
      static_cast<unsigned char>(s[i + 1]) == 0x80 &&
      (static_cast<unsigned char>(s[i + 2]) == 0x98 ||
       static_cast<unsigned char>(s[i + 2]) == 0x99)) {
    return 3;
  }
  return 0;
}

// Byte length of the UTF-8 sequence starting at s[i].
size_t CodePointLen(std::string_view s, size_t i) {
  const auto b = static_cast<unsigned char>(s[i]);
  size_t len = 1;
  if ((b & 0xE0) == 0xC0) {
    len = 2;
  } else if ((b & 0xF0) == 0xE0) {
    len = 3;
  } else if ((b & 0xF8) == 0xF0) {
    len = 4;
  }
  return std::min(len, s.size() - i);
}

// Non-ASCII punctuation that must not glue onto words: typographic quotes,
// dashes, ellipsis, guillemets, inverted marks.
bool IsNonAsciiPunct(std::string_view cp) {
  static constexpr std::array<std::string_view, 11> kMarks = {
      "“", "”", "…", "–", "—", "«",
      "»", "¡", "¿", "•", "·",
  };
  return std::find(kMarks.begin(), kMarks.end(), cp) != kMarks.end();
}

bool IsWordStart(std::string_view s, size_t i) {
  if (i >= s.size()) return false;
  const auto b = static_cast<unsigned char>(s[i]);
  if (b < 0x80) return IsAsciiAlnum(s[i]) || s[i] == '_';
  if (ApostropheLen(s, i) > 0) return false;
  return !IsNonAsciiPunct(s.substr(i, CodePointLen(s, i)));
}

bool StartsWithUrl(std::string_view s) {
  const std::string head = text::FoldCase(s.substr(0, 8));
  return text::StartsWith(head, "http://") ||
         text::StartsWith(head, "https://") || text::StartsWith(head, "www.");
}

bool IsUrlTrailer(char c) {
  return c == '.' || c == ',' || c == '!' || c == '?' || c == ';' ||
         c == ':' || c == ')' || c == '"' || c == '\'';
}

// Length in bytes of a clitic that `s` ends with, leaving a nonempty base;
// 0 when none applies.
size_t CliticSuffixLen(std::string_view s) {
  // "n't"
  if (s.size() >= 3) {
    const char last = static_cast<char>(
        std::tolower(static_cast<unsigned char>(s.back())));
    if (last == 't') {
      for (size_t apos : {size_t{1}, size_t{3}}) {
        if (s.size() < apos + 2) continue;
        const size_t apos_at = s.size() - 1 - apos;
        if (ApostropheLen(s, apos_at) != apos) continue;
        if (apos_at == 0) continue;
        const char n = static_cast<char>(
            std::tolower(static_cast<unsigned char>(s[apos_at - 1])));
        if (n == 'n' && apos_at - 1 > 0) return apos + 2;
      }
    }
  }
  // "'ve" "'re" "'ll" "'d" "'m" "'s"
  for (std::string_view tail : {"ve", "re", "ll", "d", "m", "s"}) {
    if (s.size() <= tail.size()) continue;
    const std::string end =
        text::FoldCase(s.substr(s.size() - tail.size()));
    if (end != tail) continue;
    const size_t body = s.size() - tail.size();
    for (size_t apos : {size_t{1}, size_t{3}}) {
      if (body < apos + 1) continue;
      if (ApostropheLen(s, body - apos) == apos) return apos + tail.size();
    }
  }
  return 0;
}

// Clitic token length when `s` begins with a complete clitic that is not
// followed by more word characters; 0 otherwise.
size_t LeadingCliticLen(std::string_view s) {
  const size_t apos = ApostropheLen(s, 0);
  if (apos == 0) return 0;
  for (std::string_view tail : {"ve", "re", "ll", "d", "m", "s"}) {
    if (s.size() < apos + tail.size()) continue;
    if (text::FoldCase(s.substr(apos, tail.size())) != tail) continue;
    const size_t end = apos + tail.size();
    if (!IsWordStart(s, end) && ApostropheLen(s, end) == 0) return end;
  }
  return 0;
}

}  // namespace

std::span<const std::string_view> ContractionClitics() { return kClitics; }

size_t CliticSuffixLength(std::string_view word) {
  const size_t len = CliticSuffixLen(word);
  return len < word.size() ? len : 0;
}

bool IsClitic(std::string_view word) {
  const std::string norm = text::FoldCase(text::NormalizeApostrophes(word));
  return std::find(kClitics.begin(), kClitics.end(), norm) != kClitics.end();
}

std::vector<Token> Tokenizer::Tokenize(std::string_view tweet) const {
  std::vector<std::string> surfaces;
  for (std::string_view chunk : text::SplitWhitespace(tweet)) {
    TokenizeChunk(chunk, &surfaces);
  }
  std::vector<Token> tokens;
  tokens.reserve(surfaces.size());
  for (auto& surface : surfaces) {
    const int position = static_cast<int>(tokens.size());
    if (config_.lowercase_norm) {
      tokens.push_back(Token::Make(std::move(surface), position));
    } else {
      Token t;
      t.norm = surface;
      t.surface = std::move(surface);
      t.position = position;
      tokens.push_back(std::move(t));
    }
  }
  return tokens;
}

void Tokenizer::TokenizeChunk(std::string_view chunk,
                              std::vector<std::string>* out) const {
  size_t i = 0;
  while (i < chunk.size()) {
    const std::string_view rest = chunk.substr(i);

    if (StartsWithUrl(rest)) {
      size_t end = rest.size();
      size_t trailer = end;
      while (trailer > 0 && IsUrlTrailer(rest[trailer - 1])) --trailer;
      if (trailer == 0) trailer = end;
      out->emplace_back(rest.substr(0, trailer));
      // Trailing punctuation: group runs of the same character.
      size_t j = trailer;
      while (j < end) {
        size_t k = j + 1;
        while (k < end && rest[k] == rest[j]) ++k;
        out->emplace_back(rest.substr(j, k - j));
        j = k;
      }
      return;
    }

    if ((rest[0] == '@' || rest[0] == '#') && IsWordStart(rest, 1)) {
      size_t j = 1;
      while (j < rest.size() && IsWordStart(rest, j)) {
        j += static_cast<unsigned char>(rest[j]) < 0x80 ? 1
                                                        : CodePointLen(rest, j);
      }
      out->emplace_back(rest.substr(0, j));
      i += j;
      continue;
    }

    if (const size_t clitic = LeadingCliticLen(rest); clitic > 0) {
      out->emplace_back(rest.substr(0, clitic));
      i += clitic;
      continue;
    }

    if (IsWordStart(rest, 0)) {
      size_t j = 0;
      while (j < rest.size()) {
        if (IsWordStart(rest, j)) {
          j += static_cast<unsigned char>(rest[j]) < 0x80
                   ? 1
                   : CodePointLen(rest, j);
          continue;
        }
        if (const size_t apos = ApostropheLen(rest, j);
            apos > 0 && IsWordStart(rest, j + apos) &&
            IsAsciiAlnum(rest[j + apos])) {
          j += apos;
          continue;
        }
        if (rest[j] == '-' && j > 0 && IsWordStart(rest, j + 1)) {
          ++j;
          continue;
        }
        if ((rest[j] == '.' || rest[j] == ',' || rest[j] == ':') && j > 0 &&
            IsDigit(rest[j - 1]) && j + 1 < rest.size() &&
            IsDigit(rest[j + 1])) {
          ++j;
          continue;
        }
        break;
      }
      EmitWord(rest.substr(0, j), out);
      i += j;
      continue;
    }

    // Punctuation: one token per run of an identical mark.
    const size_t len = static_cast<unsigned char>(rest[0]) < 0x80
                           ? 1
                           : CodePointLen(rest, 0);
    const std::string_view mark = rest.substr(0, len);
    size_t j = len;
    while (j + len <= rest.size() && rest.substr(j, len) == mark &&
           LeadingCliticLen(rest.substr(j)) == 0) {
      j += len;
    }
    out->emplace_back(rest.substr(0, j));
    i += j;
  }
}

void Tokenizer::EmitWord(std::string_view word,
                         std::vector<std::string>* out) const {
  if (!config_.split_contractions) {
    out->emplace_back(word);
    return;
  }
  std::vector<std::string_view> clitics;
  while (true) {
    const size_t len = CliticSuffixLen(word);
    if (len == 0 || len >= word.size()) break;
    clitics.push_back(word.substr(word.size() - len));
    word.remove_suffix(len);
  }
  out->emplace_back(word);
  for (auto it = clitics.rbegin(); it != clitics.rend(); ++it) {
    out->emplace_back(*it);
  }
}

}  // namespace keyxtract
