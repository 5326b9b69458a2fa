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

// Record segmentation: finds the information boundaries of a list page,
// i.e. the first text-bearing node of each record.
//
// segment_mdr is a data-region heuristic in the MDR family: every parent
// with two or more children is cut into consecutive generalized nodes of
// 1..3 siblings, runs of structurally similar neighbours become candidates,
// and the best-scoring candidate yields the records.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "recx/dom.hpp"
#include "recx/labels.hpp"
#include "recx/xpath.hpp"

namespace recx {

inline constexpr double kDefaultTau = 0.7;
inline constexpr std::size_t kMaxGroupSize = 3;

// Document-ordered, distinct record boundaries.
class Segmentation {
 public:
  Segmentation() = default;
  // Throws InvalidSegmentation on duplicates. Order is taken as given.
  explicit Segmentation(std::vector<XPath> boundaries);

  const std::vector<XPath>& boundaries() const { return boundaries_; }
  std::size_t size() const { return boundaries_.size(); }
  bool empty() const { return boundaries_.empty(); }

 private:
  std::vector<XPath> boundaries_;
};

// Checks the node-level invariants against a tree: each boundary resolves,
// has text, and ids strictly increase. Returns a description of the first
// violation, or an empty string.
std::string check_segmentation(const DomTree& tree, const Segmentation& seg);

struct ChildSpan {
  std::size_t first = 0;  // index into the parent's children
  std::size_t count = 0;
};

struct SegCandidate {
  NodeId parent = 0;
  std::size_t group_size = 1;
  std::vector<ChildSpan> groups;
  std::vector<double> adjacent_similarity;  // groups.size() - 1 entries
  double score = 0.0;

  double mean_similarity() const;
};

// Pre-order element tags of each root's subtree, concatenated.
std::vector<std::string> tag_sequence(const DomTree& tree, std::span<const NodeId> roots);

// 1 - levenshtein(a, b) / max(|a|, |b|); 1 when both are empty.
double fragment_similarity(std::span<const std::string> a, std::span<const std::string> b);

// Every maximal run of >= 2 adjacent similar groups, for every parent with
// >= 2 children and group size 1..3. Scores are filled in. Throws
// std::invalid_argument unless 0 < tau <= 1.
std::vector<SegCandidate> generate_candidates(const DomTree& tree, double tau);

// #groups * mean adjacent similarity * fraction of page text characters
// inside the groups.
double score_candidate(const DomTree& tree, const SegCandidate& candidate);

// Best candidate's groups as records. Throws NoRecordsFound when the page has
// no candidate.
Segmentation segment_mdr(const DomTree& tree, double tau = kDefaultTau);

// The record boundaries a candidate induces: the first text node of each
// group; groups without text are skipped.
Segmentation candidate_boundaries(const DomTree& tree, const SegCandidate& candidate);

// Builds a segmentation from BEGIN/OUT node labels. A BEGIN on a node without
// own text moves to its first text-bearing descendant, or is dropped with a
// warning when there is none. Throws UnresolvedXPath.
Segmentation segmentation_from_labels(const DomTree& tree,
                                      std::span<const std::pair<XPath, BoundaryLabel>> labels);

}  // namespace recx
