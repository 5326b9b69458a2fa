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

// Normalized, immutable DOM tree built from raw HTML.
//
// Nodes are elements only. Character data is folded into the owning
// element: `own_text` is the whitespace-normalized concatenation of the
// element's direct text children, while `text_runs` keeps the decoded runs
// between children so the tree can be written back out.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "recx/xpath.hpp"

namespace recx {

using NodeId = std::uint32_t;

struct DomNode {
  NodeId id = 0;
  std::string tag;  // lowercase
  std::optional<NodeId> parent;
  std::vector<NodeId> children;
  std::string own_text;
  std::map<std::string, std::string> attrs;
  // text_runs[i] precedes children[i]; the last run trails the last child.
  // Always children.size() + 1 entries.
  std::vector<std::string> text_runs;
};

class DomTree {
 public:
  class Builder;

  DomTree() = default;

  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  NodeId root() const { return 0; }

  // Throws UnknownNode.
  const DomNode& node(NodeId id) const;
  std::span<const DomNode> nodes() const { return nodes_; }

  // Throws UnknownNode.
  const XPath& xpath(NodeId id) const;
  std::optional<NodeId> find(const XPath& path) const;

  // Pre-order ids of a subtree form the half-open range [id, subtree_end(id)).
  NodeId subtree_end(NodeId id) const;
  bool is_ancestor_or_self(NodeId ancestor, NodeId node) const;

 private:
  std::vector<DomNode> nodes_;
  std::vector<XPath> xpaths_;
  std::vector<NodeId> subtree_end_;
  std::unordered_map<XPath, NodeId, XPathHash> by_xpath_;
};

// Incremental construction in document order. Ids are assigned in the order
// elements are opened, which is pre-order.
class DomTree::Builder {
 public:
  NodeId open(std::string tag, std::map<std::string, std::string> attrs = {});
  // Appends decoded character data to the innermost open element.
  // `counts_as_text` = false keeps the run for serialization only
  // (script/style bodies).
  void text(std::string_view decoded, bool counts_as_text = true);
  void close();
  std::size_t depth() const { return stack_.size(); }
  // Tag of the currently open element at stack position `i` from the top.
  const std::string& open_tag(std::size_t from_top) const;
  DomTree finish() &&;

 private:
  std::vector<DomNode> nodes_;
  std::vector<NodeId> stack_;
  std::vector<std::string> raw_own_;  // unnormalized own text per node
};

// Lenient HTML parsing. Malformed markup is repaired, never rejected.
// Comments, doctypes and processing instructions are dropped. A synthetic
// <html> root wraps documents that do not start with one.
// Throws EncodingError when `bytes` is not UTF-8 and `encoding_hint` does not
// name a supported single-byte encoding; std::invalid_argument when empty.
DomTree parse_html(std::string_view bytes,
                   std::optional<std::string_view> encoding_hint = std::nullopt);

// Throws UnknownNode.
XPath positional_xpath(const DomTree& tree, NodeId id);

// Pre-order ids of nodes with non-empty own_text.
std::vector<NodeId> text_nodes(const DomTree& tree);

// Writes the tree back out as HTML (UTF-8, entities escaped).
std::string serialize_html(const DomTree& tree);

}  // namespace recx
