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

#include "recx/classifier.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "default_date_patterns.hpp"
#include "html_tags.hpp"
#include "recx/text.hpp"

namespace recx {
namespace {

constexpr std::size_t kMaxTagWords = 3;

struct Scope {
  NodeId begin = 0;
  NodeId end = 0;
};

std::optional<Scope> resolve_scope(const DomTree& tree, const std::optional<XPath>& scope) {
  if (tree.empty()) return std::nullopt;
  if (!scope) return Scope{tree.root(), tree.subtree_end(tree.root())};
  auto id = tree.find(*scope);
  if (!id) return std::nullopt;
  return Scope{*id, tree.subtree_end(*id)};
}

bool is_short_anchor(const DomNode& n) {
  return n.tag == "a" && !n.own_text.empty() && word_count(n.own_text) <= kMaxTagWords;
}

}  // namespace

std::string_view to_string(ClassifyContext context) {
  return context == ClassifyContext::kPage ? "page" : "record";
}

std::vector<RequestNode> collect_request_nodes(const DomTree& tree, const std::optional<XPath>& scope) {
  std::vector<RequestNode> out;
  auto range = resolve_scope(tree, scope);
  if (!range) return out;
  for (NodeId id = range->begin; id < range->end; ++id) {
    const DomNode& n = tree.node(id);
    if (!n.own_text.empty()) out.push_back({tree.xpath(id), n.tag, n.own_text});
  }
  return out;
}

ClassifyRequest make_classify_request(const DomTree& tree, std::string page_id,
                                      const std::optional<XPath>& fragment_root) {
  ClassifyRequest req;
  req.context = fragment_root ? ClassifyContext::kRecord : ClassifyContext::kPage;
  req.page_id = std::move(page_id);
  req.fragment_root = fragment_root;
  req.nodes = collect_request_nodes(tree, fragment_root);
  return req;
}

DatePatterns DatePatterns::from_json(std::string_view json_text) {
  const auto j = nlohmann::json::parse(json_text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("patterns") || !j["patterns"].is_array()) {
    throw std::invalid_argument("date pattern file must be an object with a 'patterns' array");
  }
  DatePatterns out;
  out.version_ = j.value("version", 0);
  for (const auto& p : j["patterns"]) {
    if (!p.is_string()) throw std::invalid_argument("date patterns must be strings");
    try {
      out.patterns_.emplace_back(p.get<std::string>(),
                                 std::regex::ECMAScript | std::regex::icase | std::regex::optimize);
    } catch (const std::regex_error& e) {
      throw std::invalid_argument("bad date pattern '" + p.get<std::string>() + "': " + e.what());
    }
  }
  return out;
}

const DatePatterns& DatePatterns::builtin() {
  static const DatePatterns patterns = from_json(detail::kDefaultDatePatternsJson);
  return patterns;
}

bool DatePatterns::matches(std::string_view text) const {
  return std::any_of(patterns_.begin(), patterns_.end(), [&](const std::regex& re) {
    return std::regex_match(text.begin(), text.end(), re);
  });
}

std::vector<LabeledNode> classify_heuristic(const DomTree& tree, const std::optional<XPath>& scope,
                                            const DatePatterns& dates) {
  std::vector<LabeledNode> out;
  auto range = resolve_scope(tree, scope);
  if (!range) return out;

  // True when every text node under `container` (clamped to the scope) is a
  // short anchor.
  auto is_link_group = [&](NodeId container) {
    if (container < range->begin) container = range->begin;
    for (NodeId id = container; id < tree.subtree_end(container); ++id) {
      const DomNode& n = tree.node(id);
      if (!n.own_text.empty() && !is_short_anchor(n)) return false;
    }
    return true;
  };

  std::optional<std::size_t> title_index;
  std::size_t title_length = 0;
  for (NodeId id = range->begin; id < range->end; ++id) {
    const DomNode& n = tree.node(id);
    if (n.own_text.empty()) continue;
    LabeledNode labeled{tree.xpath(id), NodeLabel::kOut, n.own_text};
    if (dates.matches(n.own_text)) {
      labeled.label = NodeLabel::kDate;
    } else if (is_short_anchor(n) && n.parent && id != range->begin) {
      NodeId container = *n.parent;
      const DomNode& parent = tree.node(container);
      if (parent.tag == "li" && parent.parent) container = *parent.parent;
      if (is_link_group(container)) labeled.label = NodeLabel::kTag;
    }
    if (labeled.label == NodeLabel::kOut && (n.tag == "a" || html::is_heading(n.tag))) {
      const std::size_t length = utf8_length(n.own_text);
      if (!title_index || length > title_length) {
        title_index = out.size();
        title_length = length;
      }
    }
    out.push_back(std::move(labeled));
  }
  if (title_index) out[*title_index].label = NodeLabel::kTitle;
  return out;
}

std::vector<LabeledNode> attributes_only(std::vector<LabeledNode> labels) {
  std::erase_if(labels, [](const LabeledNode& n) { return n.label == NodeLabel::kOut; });
  return labels;
}

}  // namespace recx
