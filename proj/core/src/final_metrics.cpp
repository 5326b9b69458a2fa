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

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "recx/errors.hpp"
#include "recx/metrics.hpp"
#include "recx/text.hpp"

namespace recx {
namespace {

using Bag = std::map<std::string, std::uint64_t>;

struct RefRecord {
  std::size_t order = 0;  // document position of the boundary
  XPath boundary;
  std::map<NodeLabel, Bag> values;
  std::map<NodeLabel, std::uint64_t> sizes;
  bool matched = false;
};

struct PredRecord {
  const PredictedRecord* source = nullptr;
  std::map<NodeLabel, Bag> values;
  std::map<NodeLabel, std::uint64_t> sizes;
};

void add_value(std::map<NodeLabel, Bag>& values, std::map<NodeLabel, std::uint64_t>& sizes, NodeLabel label,
               const std::string& text) {
  ++values[label][normalize_text(text)];
  ++sizes[label];
}

std::uint64_t intersection(const Bag& a, const Bag& b) {
  std::uint64_t n = 0;
  for (const auto& [text, count] : a) {
    auto it = b.find(text);
    if (it != b.end()) n += std::min(count, it->second);
  }
  return n;
}

std::uint64_t size_of(const std::map<NodeLabel, std::uint64_t>& sizes, NodeLabel label) {
  auto it = sizes.find(label);
  return it == sizes.end() ? 0 : it->second;
}

void score_page(const AnnotatedPage& ref, const PredictedPage& pred, FinalMetrics& totals) {
  std::vector<RefRecord> refs;
  refs.reserve(ref.records.size());
  for (std::size_t i = 0; i < ref.records.size(); ++i) {
    RefRecord r;
    r.boundary = ref.records[i].boundary;
    r.order = std::numeric_limits<std::size_t>::max() / 2 + i;
    if (ref.html) {
      if (auto id = ref.html->find(r.boundary)) r.order = *id;
    }
    for (const auto& a : ref.records[i].attributes) {
      if (auto label = to_node_label(a.label)) add_value(r.values, r.sizes, *label, a.text);
    }
    refs.push_back(std::move(r));
  }
  std::stable_sort(refs.begin(), refs.end(), [](const auto& a, const auto& b) { return a.order < b.order; });

  std::vector<PredRecord> preds;
  preds.reserve(pred.records.size());
  for (const auto& p : pred.records) {
    PredRecord r;
    r.source = &p;
    for (const auto& [label, texts] : p.values) {
      if (label == NodeLabel::kOut) continue;
      for (const auto& t : texts) add_value(r.values, r.sizes, label, t);
    }
    preds.push_back(std::move(r));
  }
  std::sort(preds.begin(), preds.end(), [](const PredRecord& a, const PredRecord& b) {
    if (a.source->prefix != b.source->prefix) return a.source->prefix < b.source->prefix;
    return a.values < b.values;
  });

  for (const auto& p : preds) {
    RefRecord* match = nullptr;
    for (auto& r : refs) {
      if (!r.matched && p.source->prefix.is_prefix_of(r.boundary)) {
        match = &r;
        break;
      }
    }
    for (NodeLabel label : kExtractedLabels) {
      AttributeCounts& t = totals[label];
      const std::uint64_t predicted = size_of(p.sizes, label);
      if (!match) {
        t.fp += predicted;
        continue;
      }
      const std::uint64_t reference = size_of(match->sizes, label);
      std::uint64_t common = 0;
      auto pv = p.values.find(label);
      auto rv = match->values.find(label);
      if (pv != p.values.end() && rv != match->values.end()) common = intersection(pv->second, rv->second);
      t.tp += common;
      t.fp += predicted - common;
      t.fn += reference - common;
    }
    if (match) match->matched = true;
  }

  for (const auto& r : refs) {
    if (r.matched) continue;
    for (NodeLabel label : kExtractedLabels) totals[label].fn += size_of(r.sizes, label);
  }
  for (const auto& [label, count] : pred.unmatched) {
    if (label != NodeLabel::kOut) totals[label].fp += count;
  }
}

}  // namespace

FinalMetrics final_record_metrics(std::span<const AnnotatedPage> reference,
                                  std::span<const PredictedPage> predicted) {
  std::unordered_map<std::string, const PredictedPage*> by_id;
  for (const auto& p : predicted) {
    if (!by_id.emplace(p.page_id, &p).second) throw PageSetMismatch("predicted page listed twice: " + p.page_id);
  }
  if (by_id.size() != reference.size()) {
    throw PageSetMismatch("reference has " + std::to_string(reference.size()) + " pages, predictions have " +
                          std::to_string(by_id.size()));
  }
  FinalMetrics totals;
  for (NodeLabel label : kExtractedLabels) totals[label] = {};
  for (const auto& ref : reference) {
    auto it = by_id.find(ref.page_id);
    if (it == by_id.end()) throw PageSetMismatch("no prediction for page " + ref.page_id);
    score_page(ref, *it->second, totals);
  }
  return totals;
}

}  // namespace recx
