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

// Randomized agreement checks between library code and the reference
// computations in oracles.hpp. Shared by the unit and acceptance tests.

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "recx/matcher.hpp"
#include "recx/metrics.hpp"

namespace recx::testing {

struct PropertyResult {
  std::size_t cases = 0;
  std::optional<std::string> failure;
};

// Random pairwise non-prefixing boundary sets over random trees; prefixes and
// attribute assignment must match the brute-force oracle.
inline PropertyResult check_matcher(std::uint64_t seed, std::size_t rounds, std::size_t max_nodes) {
  std::mt19937_64 rng(seed);
  PropertyResult result;
  while (result.cases < rounds) {
    const DomTree tree = oracle::random_tree(rng, max_nodes);
    std::vector<NodeId> ids;
    for (NodeId id = 0; id < tree.size(); ++id) ids.push_back(id);
    std::shuffle(ids.begin(), ids.end(), rng);
    const std::size_t want = 1 + rng() % std::min<std::size_t>(ids.size(), 12);
    std::vector<std::string> chosen;
    for (NodeId id : ids) {
      if (chosen.size() == want) break;
      const std::string path = tree.xpath(id).str();
      const auto steps = oracle::split_path(path);
      bool clash = false;
      for (const auto& c : chosen) {
        const auto other = oracle::split_path(c);
        clash = clash || oracle::starts_with(steps, other) || oracle::starts_with(other, steps);
      }
      if (!clash) chosen.push_back(path);
    }
    ++result.cases;

    std::vector<XPath> boundaries;
    for (const auto& c : chosen) boundaries.push_back(XPath::parse(c));
    const PrefixIndex index = build_prefix_index_strict(Segmentation(boundaries));
    const auto expected = oracle::unique_prefixes(chosen);
    std::ostringstream where;
    where << "seed " << seed << " case " << result.cases << ": ";
    if (index.prefixes.size() != expected.size()) {
      result.failure = where.str() + "prefix count differs";
      return result;
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (index.prefixes[i].str() != expected[i]) {
        result.failure = where.str() + "prefix of " + chosen[i] + " is " + index.prefixes[i].str() + ", oracle " +
                         expected[i];
        return result;
      }
    }

    std::vector<LabeledNode> attrs;
    for (NodeId id = 0; id < tree.size(); ++id) attrs.push_back({tree.xpath(id), NodeLabel::kTag, "x"});
    const MatchResult m = match_attributes(index, attrs);
    std::vector<std::vector<std::string>> got(expected.size());
    for (const auto& r : m.records) {
      for (const auto& a : r.attributes) got[r.record_index].push_back(a.xpath.str());
    }
    std::vector<std::vector<std::string>> want_records(expected.size());
    std::size_t want_unmatched = 0;
    for (const auto& a : attrs) {
      const auto cover = oracle::covering(expected, a.xpath.str());
      if (cover.size() > 1) {
        result.failure = where.str() + a.xpath.str() + " is covered by several prefixes";
        return result;
      }
      if (cover.empty()) {
        ++want_unmatched;
      } else {
        want_records[cover[0]].push_back(a.xpath.str());
      }
    }
    if (got != want_records || m.unmatched.size() != want_unmatched) {
      result.failure = where.str() + "attribute assignment differs";
      return result;
    }
  }
  return result;
}

// Closed-form rates on every confusion with counts up to `limit`.
inline PropertyResult check_page_prf(std::uint64_t limit) {
  PropertyResult result;
  auto rate = [](double num, double den, bool all_zero) { return den == 0 ? (all_zero ? 1.0 : 0.0) : num / den; };
  for (std::uint64_t tp = 0; tp <= limit; ++tp) {
    for (std::uint64_t fp = 0; fp <= limit; ++fp) {
      for (std::uint64_t fn = 0; fn <= limit; ++fn) {
        ++result.cases;
        const bool zero = tp == 0 && fp == 0 && fn == 0;
        const double p = rate(static_cast<double>(tp), static_cast<double>(tp + fp), zero);
        const double r = rate(static_cast<double>(tp), static_cast<double>(tp + fn), zero);
        const double f = zero ? 1.0 : (p + r == 0 ? 0.0 : 2 * p * r / (p + r));
        const PRF got = page_prf({tp, fp, fn});
        if (std::abs(got.precision - p) > 1e-12 || std::abs(got.recall - r) > 1e-12 ||
            std::abs(got.f1 - f) > 1e-12) {
          std::ostringstream msg;
          msg << "page_prf(" << tp << "," << fp << "," << fn << ") = (" << got.precision << "," << got.recall << ","
              << got.f1 << "), oracle (" << p << "," << r << "," << f << ")";
          result.failure = msg.str();
          return result;
        }
      }
    }
  }
  return result;
}

// ARI and NMI on random label vectors against pair counting and entropies.
inline PropertyResult check_cluster_agreement(std::uint64_t seed, std::size_t rounds, std::size_t max_items,
                                              double tolerance) {
  std::mt19937_64 rng(seed);
  PropertyResult result;
  for (; result.cases < rounds;) {
    const std::size_t n = 1 + rng() % max_items;
    const std::size_t ka = 1 + rng() % 6;
    const std::size_t kb = 1 + rng() % 6;
    std::vector<std::size_t> a(n), b(n);
    for (auto& x : a) x = rng() % ka;
    for (auto& x : b) x = rng() % kb;
    ++result.cases;
    const double ari = adjusted_rand_index(a, b);
    const double nmi = normalized_mutual_information(a, b);
    const double ari_ref = oracle::ari_pairs(a, b);
    const double nmi_ref = oracle::nmi_entropy(a, b);
    if (std::abs(ari - ari_ref) > tolerance || std::abs(nmi - nmi_ref) > tolerance) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "seed " << seed << " case " << result.cases << " (n=" << n << "): ari " << ari << " vs " << ari_ref
          << ", nmi " << nmi << " vs " << nmi_ref;
      result.failure = msg.str();
      return result;
    }
  }
  return result;
}

}  // namespace recx::testing
