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

// Assigns classified attributes to records through xpath prefixes.
//
// Each boundary g gets the shortest leading part of its path that no other
// boundary shares. Those prefixes never prefix one another: if p_i prefixed
// p_j it would also prefix g_j, contradicting uniqueness. So every attribute
// path lies under at most one record prefix.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "recx/classifier.hpp"
#include "recx/corpus.hpp"
#include "recx/segmenter.hpp"
#include "recx/xpath.hpp"

namespace recx {

struct PrefixIndex {
  std::vector<XPath> prefixes;  // record regions, in boundary order
  std::vector<XPath> origin;    // the boundaries themselves
  // Boundaries that are ancestors of another boundary. Their prefix is their
  // full path and the uniqueness guarantee does not hold for them.
  std::vector<std::size_t> nested;

  std::size_t size() const { return prefixes.size(); }
};

// Nested boundaries are tolerated: they are listed in `nested` and logged.
PrefixIndex build_prefix_index(const Segmentation& boundaries);

// Same, but throws NestedBoundaries instead.
PrefixIndex build_prefix_index_strict(const Segmentation& boundaries);

struct RecordExtraction {
  std::size_t record_index = 0;
  std::vector<LabeledNode> attributes;
};

struct MatchResult {
  std::vector<RecordExtraction> records;  // one per prefix, possibly empty
  std::vector<LabeledNode> unmatched;
};

// Index of the record whose prefix covers `xpath`. With nested boundaries the
// deepest covering prefix wins.
std::optional<std::size_t> find_record(const PrefixIndex& index, const XPath& xpath);

// `out` labels are ignored.
MatchResult match_attributes(const PrefixIndex& index, std::span<const LabeledNode> attrs);

// Indices of annotated records with an attribute outside their own region,
// i.e. where prefix matching cannot reproduce the annotation.
std::vector<std::size_t> uncontained_records(const AnnotatedPage& page);

}  // namespace recx
