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

#include "recx/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "recx/errors.hpp"
#include "recx/matcher.hpp"

namespace recx {
namespace {

double rate(std::uint64_t num, std::uint64_t den, bool perfect_empty) {
  if (den == 0) return perfect_empty ? 1.0 : 0.0;
  return static_cast<double>(num) / static_cast<double>(den);
}

double comb2(double x) { return x * (x - 1.0) / 2.0; }

struct Contingency {
  double n = 0;
  std::map<std::pair<std::size_t, std::size_t>, double> cells;
  std::map<std::size_t, double> rows;
  std::map<std::size_t, double> cols;
};

Contingency contingency(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  if (a.size() != b.size()) throw MismatchedItems("clusterings cover different numbers of items");
  Contingency t;
  t.n = static_cast<double>(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    t.cells[{a[i], b[i]}] += 1;
    t.rows[a[i]] += 1;
    t.cols[b[i]] += 1;
  }
  return t;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> aligned_labels(const NodeClustering& a,
                                                                             const NodeClustering& b) {
  if (a.assignment.size() != b.assignment.size()) {
    throw MismatchedItems("clusterings cover different node sets");
  }
  std::vector<std::size_t> la, lb;
  la.reserve(a.assignment.size());
  lb.reserve(b.assignment.size());
  for (std::size_t i = 0; i < a.assignment.size(); ++i) {
    if (a.assignment[i].first != b.assignment[i].first) {
      throw MismatchedItems("clusterings cover different node sets");
    }
    la.push_back(a.assignment[i].second);
    lb.push_back(b.assignment[i].second);
  }
  return {std::move(la), std::move(lb)};
}

}  // namespace

PageConfusion seg_page_confusion(const Segmentation& reference, const Segmentation& predicted) {
  std::unordered_set<XPath, XPathHash> ref(reference.boundaries().begin(), reference.boundaries().end());
  PageConfusion c;
  for (const auto& p : predicted.boundaries()) {
    if (ref.count(p)) {
      ++c.tp;
    } else {
      ++c.fp;
    }
  }
  c.fn = ref.size() - c.tp;
  return c;
}

PRF page_prf(const PageConfusion& c) {
  const bool perfect_empty = c.tp == 0 && c.fp == 0 && c.fn == 0;
  PRF out;
  out.precision = rate(c.tp, c.tp + c.fp, perfect_empty);
  out.recall = rate(c.tp, c.tp + c.fn, perfect_empty);
  const double sum = out.precision + out.recall;
  out.f1 = sum == 0.0 ? 0.0 : 2.0 * out.precision * out.recall / sum;
  return out;
}

PRF corpus_avg(std::span<const PRF> pages) {
  if (pages.empty()) throw EmptyCorpus("cannot average over zero pages");
  PRF sum;
  for (const auto& p : pages) {
    sum.precision += p.precision;
    sum.recall += p.recall;
    sum.f1 += p.f1;
  }
  const auto k = static_cast<double>(pages.size());
  return {sum.precision / k, sum.recall / k, sum.f1 / k};
}

NodeClustering node_clustering(const DomTree& tree, const Segmentation& seg) {
  const PrefixIndex index = build_prefix_index(seg);
  std::vector<LabeledNode> probes;
  const auto ids = text_nodes(tree);
  probes.reserve(ids.size());
  for (NodeId id : ids) probes.push_back({tree.xpath(id), NodeLabel::kTitle, {}});
  const MatchResult matched = match_attributes(index, probes);

  std::unordered_map<XPath, std::size_t, XPathHash> cluster_of;
  for (const auto& r : matched.records) {
    for (const auto& a : r.attributes) cluster_of.emplace(a.xpath, r.record_index + 1);
  }
  NodeClustering out;
  out.assignment.reserve(ids.size());
  for (NodeId id : ids) {
    auto it = cluster_of.find(tree.xpath(id));
    out.assignment.emplace_back(id, it == cluster_of.end() ? 0 : it->second);
  }
  return out;
}

double adjusted_rand_index(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  const Contingency t = contingency(a, b);
  const double total = comb2(t.n);
  if (total == 0.0) return 1.0;
  double index = 0, sum_rows = 0, sum_cols = 0;
  for (const auto& [_, v] : t.cells) index += comb2(v);
  for (const auto& [_, v] : t.rows) sum_rows += comb2(v);
  for (const auto& [_, v] : t.cols) sum_cols += comb2(v);
  const double expected = sum_rows * sum_cols / total;
  const double max_index = (sum_rows + sum_cols) / 2.0;
  if (max_index == expected) return 1.0;
  return (index - expected) / (max_index - expected);
}

double normalized_mutual_information(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  const Contingency t = contingency(a, b);
  if (t.n == 0) return 1.0;
  auto entropy = [&](const std::map<std::size_t, double>& marginal) {
    double h = 0;
    for (const auto& [_, v] : marginal) h -= (v / t.n) * std::log(v / t.n);
    return h;
  };
  const double ha = entropy(t.rows);
  const double hb = entropy(t.cols);
  if (ha == 0.0 && hb == 0.0) return 1.0;
  double mi = 0;
  for (const auto& [key, v] : t.cells) {
    mi += (v / t.n) * std::log(t.n * v / (t.rows.at(key.first) * t.cols.at(key.second)));
  }
  const double nmi = mi / ((ha + hb) / 2.0);
  return std::clamp(nmi, 0.0, 1.0);
}

double adjusted_rand_index(const NodeClustering& a, const NodeClustering& b) {
  auto [la, lb] = aligned_labels(a, b);
  return adjusted_rand_index(la, lb);
}

double normalized_mutual_information(const NodeClustering& a, const NodeClustering& b) {
  auto [la, lb] = aligned_labels(a, b);
  return normalized_mutual_information(la, lb);
}

std::map<NodeLabel, PRF> classification_metrics(std::span<const PageLabels> pages) {
  std::map<NodeLabel, PRF> out;
  for (NodeLabel label : kExtractedLabels) {
    std::vector<PRF> per_page;
    per_page.reserve(pages.size());
    for (const auto& page : pages) {
      std::unordered_set<XPath, XPathHash> ref;
      for (const auto& n : page.reference) {
        if (n.label == label) ref.insert(n.xpath);
      }
      std::unordered_set<XPath, XPathHash> pred;
      for (const auto& n : page.predicted) {
        if (n.label == label) pred.insert(n.xpath);
      }
      PageConfusion c;
      for (const auto& x : pred) {
        if (ref.count(x)) {
          ++c.tp;
        } else {
          ++c.fp;
        }
      }
      c.fn = ref.size() - c.tp;
      per_page.push_back(page_prf(c));
    }
    out[label] = corpus_avg(per_page);
  }
  return out;
}

}  // namespace recx
