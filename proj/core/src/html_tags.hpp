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

// Element category tables used by the parser, serializer and cleaner.

#pragma once

#include <algorithm>
#include <array>
#include <string_view>

namespace recx::html {

template <std::size_t N>
constexpr bool contains(const std::array<std::string_view, N>& set, std::string_view tag) {
  return std::find(set.begin(), set.end(), tag) != set.end();
}

inline constexpr std::array<std::string_view, 14> kVoid = {
    "area", "base", "br", "col", "embed", "hr", "img",
    "input", "link", "meta", "param", "source", "track", "wbr"};

// Content is not parsed for markup. Script and style never contribute text.
inline constexpr std::array<std::string_view, 4> kRawText = {"script", "style", "xmp", "iframe"};
inline constexpr std::array<std::string_view, 2> kEscapableRawText = {"textarea", "title"};

// Start tags that implicitly close an open <p>.
inline constexpr std::array<std::string_view, 35> kClosesParagraph = {
    "address", "article", "aside", "blockquote", "center", "details", "dialog",
    "dir", "div", "dl", "fieldset", "figcaption", "figure", "footer", "form",
    "h1", "h2", "h3", "h4", "h5", "h6", "header", "hgroup", "hr", "main",
    "menu", "nav", "ol", "p", "pre", "section", "summary", "table", "ul", "li"};

inline constexpr std::array<std::string_view, 6> kHeadings = {"h1", "h2", "h3", "h4", "h5", "h6"};

// Elements that bound "in scope" searches.
inline constexpr std::array<std::string_view, 10> kScopeBoundary = {
    "applet", "caption", "html", "table", "td", "th", "marquee", "object", "template", "button"};

inline constexpr std::array<std::string_view, 8> kHeadContent = {
    "base", "link", "meta", "noscript", "script", "style", "template", "title"};

inline bool is_void(std::string_view tag) { return contains(kVoid, tag); }
inline bool is_raw_text(std::string_view tag) {
  return contains(kRawText, tag) || contains(kEscapableRawText, tag);
}
inline bool is_heading(std::string_view tag) { return contains(kHeadings, tag); }

}  // namespace recx::html
