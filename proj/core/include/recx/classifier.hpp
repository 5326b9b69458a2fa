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

#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "recx/dom.hpp"
#include "recx/labels.hpp"
#include "recx/xpath.hpp"

namespace recx {

struct LabeledNode {
  XPath xpath;
  NodeLabel label = NodeLabel::kOut;
  std::string text;  // own_text of the node

  friend bool operator==(const LabeledNode&, const LabeledNode&) = default;
};

enum class ClassifyContext { kPage, kRecord };

std::string_view to_string(ClassifyContext context);

struct RequestNode {
  XPath xpath;
  std::string tag;
  std::string text;
};

// Nodes handed to a classifier. Record context carries the fragment root and
// only nodes under it.
struct ClassifyRequest {
  ClassifyContext context = ClassifyContext::kPage;
  std::string page_id;
  std::vector<RequestNode> nodes;
  std::optional<XPath> fragment_root;
};

// Text nodes of `tree` under `scope` (all when absent), in document order.
std::vector<RequestNode> collect_request_nodes(const DomTree& tree, const std::optional<XPath>& scope);

ClassifyRequest make_classify_request(const DomTree& tree, std::string page_id,
                                      const std::optional<XPath>& fragment_root);

// Versioned set of date regular expressions matched against whole
// normalized node texts, case-insensitively.
class DatePatterns {
 public:
  // Parses the JSON pattern file format. Throws std::invalid_argument.
  static DatePatterns from_json(std::string_view json_text);
  // The set shipped with the library.
  static const DatePatterns& builtin();

  bool matches(std::string_view text) const;
  int version() const { return version_; }
  std::size_t size() const { return patterns_.size(); }

 private:
  int version_ = 0;
  std::vector<std::regex> patterns_;
};

// Deterministic rule-based labeler over the text nodes within `scope`
// (whole page when absent). Every text node in scope gets a label:
//   date  - text matches a date pattern;
//   tag   - anchor with at most three words whose link group (parent, or the
//           list when the parent is an <li>) holds nothing but short anchors;
//   title - the longest remaining heading or anchor text, earliest on ties;
//   out   - everything else.
// Only nodes under `scope` are read.
std::vector<LabeledNode> classify_heuristic(const DomTree& tree, const std::optional<XPath>& scope,
                                            const DatePatterns& dates = DatePatterns::builtin());

// Drops `out` labels.
std::vector<LabeledNode> attributes_only(std::vector<LabeledNode> labels);

}  // namespace recx
