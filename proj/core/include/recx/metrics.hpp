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

// Evaluation mathematics.
//
// Segmentation and classification scores are page-weighted: precision,
// recall and F1 are computed per page and then averaged with equal weight
// per page (so F1_avg is the mean of page F1s, not the F1 of the averaged
// precision and recall). Final record-level scores are micro-totals.
//
// Rate convention: a 0/0 rate is 1.0 only when tp = fp = fn = 0, else 0.0.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "recx/classifier.hpp"
#include "recx/corpus.hpp"
#include "recx/dom.hpp"
#include "recx/segmenter.hpp"

namespace recx {

struct PageConfusion {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;

  PageConfusion& operator+=(const PageConfusion& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    return *this;
  }
  friend bool operator==(const PageConfusion&, const PageConfusion&) = default;
};

struct PRF {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Boundary xpath set overlap.
PageConfusion seg_page_confusion(const Segmentation& reference, const Segmentation& predicted);

PRF page_prf(const PageConfusion& c);

// Unweighted means. Throws EmptyCorpus.
PRF corpus_avg(std::span<const PRF> pages);

// Text node -> cluster (0 = background, i >= 1 = record i), sorted by node.
struct NodeClustering {
  std::vector<std::pair<NodeId, std::size_t>> assignment;
};

// Text nodes under prefix i of the segmentation's prefix index go to
// cluster i + 1, the rest to 0.
NodeClustering node_clustering(const DomTree& tree, const Segmentation& seg);

// Contingency-table formulas. Both throw MismatchedItems unless the two
// clusterings cover the same nodes.
double adjusted_rand_index(const NodeClustering& a, const NodeClustering& b);
// Arithmetic-mean normalization; 1.0 when both sides are a single cluster.
double normalized_mutual_information(const NodeClustering& a, const NodeClustering& b);

// Label-vector forms of the same scores. Throw MismatchedItems on size
// mismatch.
double adjusted_rand_index(std::span<const std::size_t> a, std::span<const std::size_t> b);
double normalized_mutual_information(std::span<const std::size_t> a, std::span<const std::size_t> b);

// Classification input for one page.
struct PageLabels {
  std::string page_id;
  std::vector<LabeledNode> reference;
  std::vector<LabeledNode> predicted;
};

// Per label, (xpath, label) pair confusion per page, then page-averaged over
// every page in `pages`. `out` labels are ignored.
std::map<NodeLabel, PRF> classification_metrics(std::span<const PageLabels> pages);

struct AttributeCounts {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;

  PRF prf() const { return page_prf({tp, fp, fn}); }
  friend bool operator==(const AttributeCounts&, const AttributeCounts&) = default;
};

// One extracted record as evaluation sees it.
struct PredictedRecord {
  XPath prefix;  // record region
  std::map<NodeLabel, std::vector<std::string>> values;
};

struct PredictedPage {
  std::string page_id;
  std::vector<PredictedRecord> records;
  // Attributes the matcher could not place, per label.
  std::map<NodeLabel, std::uint64_t> unmatched;
};

using FinalMetrics = std::map<NodeLabel, AttributeCounts>;

// Record-level accounting for title/tag/date:
//   matched pair      tp += multiset intersection of texts, fp/fn the rest;
//   missed reference  fn += all its attributes;
//   spurious record   fp += all its attributes, plus unmatched attributes.
// A predicted record matches the earliest (document order) unmatched
// reference record whose boundary lies under its prefix. Micro-totals over
// all pages. Throws PageSetMismatch unless both sides cover the same page
// ids; reference pages need their html to order boundaries.
FinalMetrics final_record_metrics(std::span<const AnnotatedPage> reference,
                                  std::span<const PredictedPage> predicted);

}  // namespace recx
