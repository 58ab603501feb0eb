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

#ifndef KEYXTRACT_TEXT_H_
#define KEYXTRACT_TEXT_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace keyxtract::text {

// Simple (one-to-one) Unicode lowercase mapping over UTF-8 input. Covers
// ASCII, Latin-1, Latin Extended-A, Greek and basic Cyrillic; other code
// points and invalid bytes pass through unchanged.
std::string FoldCase(std::string_view s);

std::string_view Trim(std::string_view s);

std::vector<std::string_view> Split(std::string_view s, char sep);

// Splits on runs of ASCII whitespace and U+00A0.
std::vector<std::string_view> SplitWhitespace(std::string_view s);

std::string Join(const std::vector<std::string>& parts, std::string_view sep);

bool StartsWith(std::string_view s, std::string_view prefix);
bool EndsWith(std::string_view s, std::string_view suffix);

// Replaces U+2018/U+2019 with an ASCII apostrophe.
std::string NormalizeApostrophes(std::string_view s);

// True when every byte is an ASCII digit, optionally with single ',' '.'
// separators between digits ("1,000", "3.5").
bool IsNumber(std::string_view s);

// True when the token holds no ASCII letter or digit and no non-ASCII
// letter-like byte, i.e. it is punctuation or a symbol.
bool IsPunctuation(std::string_view s);

bool IsUrl(std::string_view s);

// Reads a whole UTF-8 file into lines, stripping a trailing '\r' and a
// leading BOM. Throws Error(kIo) when the file cannot be opened.
std::vector<std::string> ReadLines(const std::filesystem::path& path);

// Rounds half away from zero to `places` decimals; used for every
// reported P/R/F1/T value.
double RoundHalfUp(double value, int places = 2);

// Fixed two-decimal rendering of RoundHalfUp(value).
std::string Format2(double value);

}  // namespace keyxtract::text

#endif  // KEYXTRACT_TEXT_H_
