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

#include "recx/xpath.hpp"

#include <algorithm>
#include <charconv>

#include "recx/errors.hpp"

namespace recx {
namespace {

bool is_name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c == '-' || c == '_' || c == ':' || c == '.';
}

[[noreturn]] void syntax_error(std::string_view text, std::string_view why) {
  throw XPathSyntaxError("bad xpath '" + std::string(text) + "': " + std::string(why));
}

}  // namespace

XPath::XPath(std::vector<XPathStep> steps) : steps_(std::move(steps)) {}

XPath XPath::parse(std::string_view text) {
  std::vector<XPathStep> steps;
  std::size_t i = 0;
  if (text.empty()) syntax_error(text, "empty");
  while (i < text.size()) {
    if (text[i] != '/') syntax_error(text, "expected '/'");
    ++i;
    const std::size_t name_start = i;
    while (i < text.size() && is_name_char(text[i])) ++i;
    if (i == name_start) syntax_error(text, "missing tag name");
    std::string tag(text.substr(name_start, i - name_start));
    if (i >= text.size() || text[i] != '[') syntax_error(text, "missing '[index]'");
    ++i;
    const std::size_t num_start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    std::uint32_t index = 0;
    auto [ptr, ec] = std::from_chars(text.data() + num_start, text.data() + i, index);
    if (ec != std::errc() || ptr != text.data() + i || index == 0) {
      syntax_error(text, "index must be a positive integer");
    }
    if (i >= text.size() || text[i] != ']') syntax_error(text, "missing ']'");
    ++i;
    steps.push_back({std::move(tag), index});
  }
  return XPath(std::move(steps));
}

std::string XPath::str() const {
  std::string out;
  for (const auto& step : steps_) {
    out.push_back('/');
    out += step.tag;
    out.push_back('[');
    out += std::to_string(step.index);
    out.push_back(']');
  }
  return out;
}

XPath XPath::prefix(std::size_t n) const {
  n = std::min(n, steps_.size());
  return XPath(std::vector<XPathStep>(steps_.begin(), steps_.begin() + static_cast<std::ptrdiff_t>(n)));
}

XPath XPath::child(std::string tag, std::uint32_t index) const {
  auto steps = steps_;
  steps.push_back({std::move(tag), index});
  return XPath(std::move(steps));
}

bool XPath::is_prefix_of(const XPath& other) const {
  if (steps_.size() > other.steps_.size()) return false;
  return std::equal(steps_.begin(), steps_.end(), other.steps_.begin());
}

std::size_t XPathHash::operator()(const XPath& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (const auto& step : p.steps()) {
    h ^= std::hash<std::string>{}(step.tag) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= std::hash<std::uint32_t>{}(step.index) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace recx
