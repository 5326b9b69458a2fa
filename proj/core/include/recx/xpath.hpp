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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace recx {

// One location step: element name plus its 1-based position among
// same-name siblings.
struct XPathStep {
  std::string tag;
  std::uint32_t index = 1;

  friend auto operator<=>(const XPathStep&, const XPathStep&) = default;
};

// Positional path from the document root, e.g. `/html[1]/body[1]/ul[1]/li[2]`.
// This is the address every module exchanges; node ids never leave a tree.
class XPath {
 public:
  XPath() = default;
  explicit XPath(std::vector<XPathStep> steps);

  // Accepts exactly the serialized form. Throws XPathSyntaxError.
  static XPath parse(std::string_view text);

  std::string str() const;

  const std::vector<XPathStep>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }

  // Leading `n` steps.
  XPath prefix(std::size_t n) const;
  XPath child(std::string tag, std::uint32_t index) const;

  // True iff this path's steps are a leading sublist of `other` (equality
  // included).
  bool is_prefix_of(const XPath& other) const;

  friend bool operator==(const XPath&, const XPath&) = default;
  friend auto operator<=>(const XPath&, const XPath&) = default;

 private:
  std::vector<XPathStep> steps_;
};

struct XPathHash {
  std::size_t operator()(const XPath& p) const noexcept;
};

}  // namespace recx
