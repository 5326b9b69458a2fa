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

#include "recx/segmenter.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <spdlog/spdlog.h>

#include "recx/errors.hpp"
#include "recx/text.hpp"

namespace recx {
namespace {

// Levenshtein distance over token ids, computed in a diagonal band of width
// `limit`. Returns limit + 1 when the distance exceeds the limit.
std::size_t banded_edit_distance(std::span<const int> a, std::span<const int> b, std::size_t limit) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  const std::size_t diff = n > m ? n - m : m - n;
  if (diff > limit) return limit + 1;
  const std::size_t inf = limit + 1;
  std::vector<std::size_t> prev(m + 1, inf), cur(m + 1, inf);
  for (std::size_t j = 0; j <= std::min(m, limit); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t lo = i > limit ? i - limit : 0;
    const std::size_t hi = std::min(m, i + limit);
    std::fill(cur.begin(), cur.end(), inf);
    if (lo == 0) cur[0] = i;
    std::size_t row_min = lo == 0 ? cur[0] : inf;
    for (std::size_t j = std::max<std::size_t>(lo, 1); j <= hi; ++j) {
      std::size_t best = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      best = std::min(best, prev[j] + 1);
      best = std::min(best, cur[j - 1] + 1);
      cur[j] = std::min(best, inf);
      row_min = std::min(row_min, cur[j]);
    }
    if (row_min > limit) return inf;
    std::swap(prev, cur);
  }
  return std::min(prev[m], inf);
}

double similarity_ids(std::span<const int> a, std::span<const int> b, double tau) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  // Any distance above this puts the similarity below tau.
  const auto limit = static_cast<std::size_t>(std::floor((1.0 - tau) * static_cast<double>(longest) + 1e-9));
  const std::size_t d = banded_edit_distance(a, b, limit);
  if (d > limit) return 0.0;
  return 1.0 - static_cast<double>(d) / static_cast<double>(longest);
}

// Flattened view of a tree used by candidate generation: interned tags in
// pre-order and prefix sums of text characters.
struct PageIndex {
  std::vector<int> tag_ids;
  std::vector<std::size_t> text_prefix;  // size n + 1

  explicit PageIndex(const DomTree& tree) {
    std::unordered_map<std::string_view, int> intern;
    tag_ids.reserve(tree.size());
    text_prefix.assign(tree.size() + 1, 0);
    for (const auto& node : tree.nodes()) {
      auto [it, inserted] = intern.emplace(node.tag, static_cast<int>(intern.size()));
      tag_ids.push_back(it->second);
      text_prefix[node.id + 1] = text_prefix[node.id] + utf8_length(node.own_text);
    }
  }

  std::size_t total_text() const { return text_prefix.back(); }
  std::size_t text_in(NodeId begin, NodeId end) const { return text_prefix[end] - text_prefix[begin]; }
};

// Pre-order id range covered by a group of consecutive children.
std::pair<NodeId, NodeId> group_range(const DomTree& tree, const DomNode& parent, const ChildSpan& g) {
  const NodeId first = parent.children[g.first];
  const NodeId last = parent.children[g.first + g.count - 1];
  return {first, tree.subtree_end(last)};
}

double coverage(const DomTree& tree, const PageIndex& index, const SegCandidate& c) {
  const std::size_t total = index.total_text();
  if (total == 0) return 0.0;
  const DomNode& parent = tree.node(c.parent);
  std::size_t covered = 0;
  for (const auto& g : c.groups) {
    auto [b, e] = group_range(tree, parent, g);
    covered += index.text_in(b, e);
  }
  return static_cast<double>(covered) / static_cast<double>(total);
}

double score_with(const DomTree& tree, const PageIndex& index, const SegCandidate& c) {
  return static_cast<double>(c.groups.size()) * c.mean_similarity() * coverage(tree, index, c);
}

}  // namespace

Segmentation::Segmentation(std::vector<XPath> boundaries) : boundaries_(std::move(boundaries)) {
  std::unordered_set<XPath, XPathHash> seen;
  for (const auto& b : boundaries_) {
    if (!seen.insert(b).second) throw InvalidSegmentation("duplicate boundary " + b.str());
  }
}

std::string check_segmentation(const DomTree& tree, const Segmentation& seg) {
  std::optional<NodeId> prev;
  for (const auto& b : seg.boundaries()) {
    auto id = tree.find(b);
    if (!id) return "boundary " + b.str() + " does not resolve";
    if (tree.node(*id).own_text.empty()) return "boundary " + b.str() + " has no text";
    if (prev && *id <= *prev) return "boundary " + b.str() + " is out of document order";
    prev = id;
  }
  return {};
}

double SegCandidate::mean_similarity() const {
  if (adjacent_similarity.empty()) return 0.0;
  return std::accumulate(adjacent_similarity.begin(), adjacent_similarity.end(), 0.0) /
         static_cast<double>(adjacent_similarity.size());
}

std::vector<std::string> tag_sequence(const DomTree& tree, std::span<const NodeId> roots) {
  std::vector<std::string> out;
  for (NodeId root : roots) {
    for (NodeId id = root; id < tree.subtree_end(root); ++id) out.push_back(tree.node(id).tag);
  }
  return out;
}

double fragment_similarity(std::span<const std::string> a, std::span<const std::string> b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  std::unordered_map<std::string_view, int> intern;
  auto ids = [&](std::span<const std::string> s) {
    std::vector<int> out;
    out.reserve(s.size());
    for (const auto& t : s) out.push_back(intern.emplace(t, static_cast<int>(intern.size())).first->second);
    return out;
  };
  const auto ia = ids(a);
  const auto ib = ids(b);
  const std::size_t d = banded_edit_distance(ia, ib, longest);
  return 1.0 - static_cast<double>(d) / static_cast<double>(longest);
}

std::vector<SegCandidate> generate_candidates(const DomTree& tree, double tau) {
  if (!(tau > 0.0 && tau <= 1.0)) throw std::invalid_argument("tau must be in (0, 1]");
  const PageIndex index(tree);
  std::vector<SegCandidate> out;
  for (const auto& parent : tree.nodes()) {
    const std::size_t n = parent.children.size();
    if (n < 2) continue;
    for (std::size_t size = 1; size <= kMaxGroupSize; ++size) {
      const std::size_t groups = n / size;
      if (groups < 2) break;
      std::vector<ChildSpan> spans;
      std::vector<std::span<const int>> seqs;
      for (std::size_t g = 0; g < groups; ++g) {
        spans.push_back({g * size, size});
        auto [b, e] = group_range(tree, parent, spans.back());
        seqs.emplace_back(index.tag_ids.data() + b, e - b);
      }
      std::vector<double> sims(groups - 1);
      for (std::size_t g = 0; g + 1 < groups; ++g) sims[g] = similarity_ids(seqs[g], seqs[g + 1], tau);

      std::size_t run_start = 0;
      for (std::size_t g = 0; g < groups; ++g) {
        const bool continues = g + 1 < groups && sims[g] >= tau;
        if (continues) continue;
        if (g > run_start) {
          SegCandidate c;
          c.parent = parent.id;
          c.group_size = size;
          c.groups.assign(spans.begin() + static_cast<std::ptrdiff_t>(run_start),
                          spans.begin() + static_cast<std::ptrdiff_t>(g + 1));
          c.adjacent_similarity.assign(sims.begin() + static_cast<std::ptrdiff_t>(run_start),
                                       sims.begin() + static_cast<std::ptrdiff_t>(g));
          c.score = score_with(tree, index, c);
          out.push_back(std::move(c));
        }
        run_start = g + 1;
      }
    }
  }
  return out;
}

double score_candidate(const DomTree& tree, const SegCandidate& candidate) {
  return score_with(tree, PageIndex(tree), candidate);
}

Segmentation candidate_boundaries(const DomTree& tree, const SegCandidate& candidate) {
  const DomNode& parent = tree.node(candidate.parent);
  std::vector<XPath> out;
  for (const auto& g : candidate.groups) {
    auto [b, e] = group_range(tree, parent, g);
    for (NodeId id = b; id < e; ++id) {
      if (!tree.node(id).own_text.empty()) {
        out.push_back(tree.xpath(id));
        break;
      }
    }
  }
  return Segmentation(std::move(out));
}

Segmentation segment_mdr(const DomTree& tree, double tau) {
  const auto candidates = generate_candidates(tree, tau);
  if (candidates.empty()) throw NoRecordsFound("no repeated structure found");
  const SegCandidate* best = &candidates.front();
  constexpr double kEps = 1e-12;
  for (const auto& c : candidates) {
    if (c.score > best->score + kEps) {
      best = &c;
      continue;
    }
    if (c.score < best->score - kEps) continue;
    auto key = [](const SegCandidate& x) {
      return std::make_tuple(x.parent, -static_cast<std::ptrdiff_t>(x.groups.size()), x.group_size,
                             x.groups.front().first);
    };
    if (key(c) < key(*best)) best = &c;
  }
  return candidate_boundaries(tree, *best);
}

Segmentation segmentation_from_labels(const DomTree& tree,
                                      std::span<const std::pair<XPath, BoundaryLabel>> labels) {
  std::set<NodeId> begins;
  for (const auto& [path, label] : labels) {
    auto id = tree.find(path);
    if (!id) throw UnresolvedXPath("label xpath " + path.str() + " does not resolve");
    if (label != BoundaryLabel::kBegin) continue;
    NodeId target = *id;
    if (tree.node(target).own_text.empty()) {
      std::optional<NodeId> moved;
      for (NodeId d = target + 1; d < tree.subtree_end(target); ++d) {
        if (!tree.node(d).own_text.empty()) {
          moved = d;
          break;
        }
      }
      if (!moved) {
        spdlog::warn("dropping BEGIN on {}: no text in subtree", path.str());
        continue;
      }
      target = *moved;
    }
    begins.insert(target);
  }
  std::vector<XPath> out;
  out.reserve(begins.size());
  for (NodeId id : begins) out.push_back(tree.xpath(id));
  return Segmentation(std::move(out));
}

}  // namespace recx
