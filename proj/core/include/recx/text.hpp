// Copyright 2026 The recx Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace recx {

// Collapses every run of Unicode whitespace into one ASCII space and trims
// both ends. Input must be valid UTF-8.
std::string normalize_text(std::string_view utf8);

// True when `bytes` is well-formed UTF-8 (no overlongs, no surrogates).
bool is_valid_utf8(std::string_view bytes);

// Number of code points in a valid UTF-8 string.
std::size_t utf8_length(std::string_view utf8);

// Appends the UTF-8 encoding of `cp` to `out`.
void append_utf8(std::string& out, char32_t cp);

// Transcodes single-byte legacy encodings to UTF-8. Supports the
// iso-8859-1/latin1 and windows-1252 families; returns nullopt for unknown
// encoding names.
std::optional<std::string> transcode_to_utf8(std::string_view bytes,
                                             std::string_view encoding);

// Number of whitespace-separated words.
std::size_t word_count(std::string_view normalized);

std::string to_lower_ascii(std::string_view s);

}  // namespace recx
