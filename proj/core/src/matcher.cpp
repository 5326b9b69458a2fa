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

#include "recx/matcher.hpp"

#include <map>

#include <spdlog/spdlog.h>

#include "recx/errors.hpp"

namespace recx {
namespace {

// Path trie over location steps.
class StepTrie {
 public:
  StepTrie() : nodes_(1) {}

  // Returns the trie node reached by each step of `path`.
  std::vector<std::size_t> insert(const XPath& path) {
    std::vector<std::size_t> trail;
    std::size_t at = 0;
    for (const auto& step : path.steps()) {
      auto [it, inserted] = nodes_[at].children.try_emplace(step, nodes_.size());
      if (inserted) nodes_.emplace_back();
      at = it->second;
      ++nodes_[at].count;
      trail.push_back(at);
    }
    return trail;
  }

  void mark(const XPath& path, std::size_t record) {
    std::size_t at = 0;
    for (const auto& step : path.steps()) {
      auto [it, inserted] = nodes_[at].children.try_emplace(step, nodes_.size());
      if (inserted) nodes_.emplace_back();
      at = it->second;
    }
    if (!nodes_[at].record) nodes_[at].record = record;
  }

  // Record of the deepest marked node along `path`.
  std::optional<std::size_t> deepest(const XPath& path) const {
    std::optional<std::size_t> found;
    std::size_t at = 0;
    for (const auto& step : path.steps()) {
      auto it = nodes_[at].children.find(step);
      if (it == nodes_[at].children.end()) break;
      at = it->second;
      if (nodes_[at].record) found = nodes_[at].record;
    }
    return found;
  }

  std::size_t count(std::size_t node) const { return nodes_[node].count; }

 private:
  struct Node {
    std::map<XPathStep, std::size_t> children;
    std::size_t count = 0;
    std::optional<std::size_t> record;
  };
  std::vector<Node> nodes_;
};

PrefixIndex build(const Segmentation& boundaries, bool strict) {
  const auto& g = boundaries.boundaries();
  StepTrie trie;
  std::vector<std::vector<std::size_t>> trails;
  trails.reserve(g.size());
  for (const auto& b : g) trails.push_back(trie.insert(b));

  PrefixIndex index;
  index.origin = g;
  index.prefixes.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::optional<std::size_t> depth;
    for (std::size_t d = 0; d < trails[i].size(); ++d) {
      if (trie.count(trails[i][d]) == 1) {
        depth = d + 1;
        break;
      }
    }
    if (depth) {
      index.prefixes.push_back(g[i].prefix(*depth));
      continue;
    }
    if (strict) throw NestedBoundaries("boundary " + g[i].str() + " is an ancestor of another boundary");
    spdlog::warn("nested boundaries: {} contains another boundary; using its full path", g[i].str());
    index.nested.push_back(i);
    index.prefixes.push_back(g[i]);
  }
  return index;
}

}  // namespace

PrefixIndex build_prefix_index(const Segmentation& boundaries) { return build(boundaries, false); }

PrefixIndex build_prefix_index_strict(const Segmentation& boundaries) { return build(boundaries, true); }

std::optional<std::size_t> find_record(const PrefixIndex& index, const XPath& xpath) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < index.prefixes.size(); ++i) {
    if (!index.prefixes[i].is_prefix_of(xpath)) continue;
    if (!best || index.prefixes[i].size() > index.prefixes[*best].size()) best = i;
  }
  return best;
}

MatchResult match_attributes(const PrefixIndex& index, std::span<const LabeledNode> attrs) {
  StepTrie trie;
  for (std::size_t i = 0; i < index.prefixes.size(); ++i) trie.mark(index.prefixes[i], i);
  MatchResult result;
  result.records.resize(index.prefixes.size());
  for (std::size_t i = 0; i < result.records.size(); ++i) result.records[i].record_index = i;
  for (const auto& attr : attrs) {
    if (attr.label == NodeLabel::kOut) continue;
    if (auto record = trie.deepest(attr.xpath)) {
      result.records[*record].attributes.push_back(attr);
    } else {
      result.unmatched.push_back(attr);
    }
  }
  return result;
}

std::vector<std::size_t> uncontained_records(const AnnotatedPage& page) {
  std::vector<XPath> boundaries;
  for (const auto& r : page.records) boundaries.push_back(r.boundary);
  const PrefixIndex index = build_prefix_index(Segmentation(std::move(boundaries)));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < page.records.size(); ++i) {
    for (const auto& a : page.records[i].attributes) {
      if (find_record(index, a.xpath) != i) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

}  // namespace recx
