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

#include "recx/dom.hpp"

#include <unordered_set>

#include "html_tags.hpp"
#include "recx/errors.hpp"
#include "recx/text.hpp"

namespace recx {

const DomNode& DomTree::node(NodeId id) const {
  if (id >= nodes_.size()) throw UnknownNode("unknown node id " + std::to_string(id));
  return nodes_[id];
}

const XPath& DomTree::xpath(NodeId id) const {
  if (id >= xpaths_.size()) throw UnknownNode("unknown node id " + std::to_string(id));
  return xpaths_[id];
}

std::optional<NodeId> DomTree::find(const XPath& path) const {
  auto it = by_xpath_.find(path);
  if (it == by_xpath_.end()) return std::nullopt;
  return it->second;
}

NodeId DomTree::subtree_end(NodeId id) const {
  if (id >= subtree_end_.size()) throw UnknownNode("unknown node id " + std::to_string(id));
  return subtree_end_[id];
}

bool DomTree::is_ancestor_or_self(NodeId ancestor, NodeId node) const {
  return node >= ancestor && node < subtree_end(ancestor);
}

NodeId DomTree::Builder::open(std::string tag, std::map<std::string, std::string> attrs) {
  const auto id = static_cast<NodeId>(nodes_.size());
  DomNode n;
  n.id = id;
  n.tag = std::move(tag);
  n.attrs = std::move(attrs);
  n.text_runs.emplace_back();
  if (!stack_.empty()) {
    DomNode& parent = nodes_[stack_.back()];
    n.parent = parent.id;
    parent.children.push_back(id);
    parent.text_runs.emplace_back();
    raw_own_[parent.id].push_back(' ');
  }
  nodes_.push_back(std::move(n));
  raw_own_.emplace_back();
  stack_.push_back(id);
  return id;
}

void DomTree::Builder::text(std::string_view decoded, bool counts_as_text) {
  if (stack_.empty() || decoded.empty()) return;
  DomNode& n = nodes_[stack_.back()];
  n.text_runs.back().append(decoded);
  if (counts_as_text) raw_own_[n.id].append(decoded);
}

void DomTree::Builder::close() {
  if (!stack_.empty()) stack_.pop_back();
}

const std::string& DomTree::Builder::open_tag(std::size_t from_top) const {
  return nodes_[stack_[stack_.size() - 1 - from_top]].tag;
}

DomTree DomTree::Builder::finish() && {
  stack_.clear();
  DomTree tree;
  tree.nodes_ = std::move(nodes_);
  const std::size_t n = tree.nodes_.size();
  for (std::size_t i = 0; i < n; ++i) {
    tree.nodes_[i].own_text = normalize_text(raw_own_[i]);
  }

  tree.xpaths_.resize(n);
  if (n > 0) tree.xpaths_[0] = XPath({{tree.nodes_[0].tag, 1}});
  for (std::size_t i = 0; i < n; ++i) {
    std::unordered_map<std::string_view, std::uint32_t> seen;
    for (NodeId child : tree.nodes_[i].children) {
      const auto& tag = tree.nodes_[child].tag;
      tree.xpaths_[child] = tree.xpaths_[i].child(tag, ++seen[tag]);
    }
  }

  tree.subtree_end_.assign(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    const auto& kids = tree.nodes_[i].children;
    tree.subtree_end_[i] = kids.empty() ? static_cast<NodeId>(i + 1) : tree.subtree_end_[kids.back()];
  }

  tree.by_xpath_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    tree.by_xpath_.emplace(tree.xpaths_[i], static_cast<NodeId>(i));
  }
  return tree;
}

XPath positional_xpath(const DomTree& tree, NodeId id) { return tree.xpath(id); }

std::vector<NodeId> text_nodes(const DomTree& tree) {
  std::vector<NodeId> out;
  for (const auto& n : tree.nodes()) {
    if (!n.own_text.empty()) out.push_back(n.id);
  }
  return out;
}

namespace {

void escape_into(std::string& out, std::string_view s, bool attribute) {
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"':
        if (attribute) {
          out += "&quot;";
          break;
        }
        [[fallthrough]];
      default: out.push_back(c);
    }
  }
}

void write_node(const DomTree& tree, NodeId id, std::string& out) {
  const DomNode& n = tree.node(id);
  out.push_back('<');
  out += n.tag;
  for (const auto& [k, v] : n.attrs) {
    out.push_back(' ');
    out += k;
    out += "=\"";
    escape_into(out, v, true);
    out.push_back('"');
  }
  out.push_back('>');
  if (html::is_void(n.tag)) return;
  const bool raw = html::contains(html::kRawText, n.tag);
  for (std::size_t i = 0; i < n.text_runs.size(); ++i) {
    if (raw) {
      out += n.text_runs[i];
    } else {
      escape_into(out, n.text_runs[i], false);
    }
    if (i < n.children.size()) write_node(tree, n.children[i], out);
  }
  out += "</";
  out += n.tag;
  out.push_back('>');
}

}  // namespace

std::string serialize_html(const DomTree& tree) {
  std::string out = "<!DOCTYPE html>\n";
  if (!tree.empty()) write_node(tree, tree.root(), out);
  out.push_back('\n');
  return out;
}

}  // namespace recx
