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

// Domain-level train/test split.
//
// Domains are placed greedily, largest first, into whichever part still has
// room and leaves the two parts' attribute distributions closest (L1 over
// per-attribute page fractions). A local search of single moves and pairwise
// swaps then pulls the page ratio inside the 5-point tolerance when the
// greedy pass overshoots.

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "recx/corpus.hpp"
#include "recx/errors.hpp"

namespace recx {
namespace {

constexpr std::size_t kLabels = kAllAttributeLabels.size();
constexpr double kRatioTolerance = 0.05;

struct DomainGroup {
  std::string domain;
  std::vector<std::size_t> pages;
  std::array<double, kLabels> attr_pages{};
};

struct Bin {
  std::size_t pages = 0;
  std::array<double, kLabels> attr_pages{};

  void add(const DomainGroup& d, double sign) {
    pages = static_cast<std::size_t>(static_cast<double>(pages) + sign * static_cast<double>(d.pages.size()));
    for (std::size_t k = 0; k < kLabels; ++k) attr_pages[k] += sign * d.attr_pages[k];
  }
};

double divergence(const Bin& a, const Bin& b) {
  if (a.pages == 0 || b.pages == 0) return 0.0;
  double sum = 0.0;
  for (std::size_t k = 0; k < kLabels; ++k) {
    sum += std::abs(a.attr_pages[k] / static_cast<double>(a.pages) -
                    b.attr_pages[k] / static_cast<double>(b.pages));
  }
  return sum;
}

}  // namespace

CorpusSplit split_by_domain(std::span<const AnnotatedPage> pages, double ratio, std::uint64_t seed) {
  if (!(ratio > 0.0 && ratio < 1.0)) throw std::invalid_argument("split ratio must be in (0, 1)");
  if (pages.empty()) throw std::invalid_argument("cannot split an empty corpus");
  const double total = static_cast<double>(pages.size());

  std::map<std::string, DomainGroup> by_domain;
  for (std::size_t i = 0; i < pages.size(); ++i) {
    DomainGroup& g = by_domain[pages[i].domain];
    g.domain = pages[i].domain;
    g.pages.push_back(i);
    std::array<bool, kLabels> present{};
    for (const auto& r : pages[i].records) {
      for (const auto& a : r.attributes) {
        for (std::size_t k = 0; k < kLabels; ++k) present[k] |= kAllAttributeLabels[k] == a.label;
      }
    }
    for (std::size_t k = 0; k < kLabels; ++k) g.attr_pages[k] += present[k] ? 1.0 : 0.0;
  }

  const double largest_allowed = std::max(ratio, 1.0 - ratio);
  std::vector<DomainGroup> domains;
  for (auto& [name, g] : by_domain) {
    if (static_cast<double>(g.pages.size()) / total > largest_allowed) {
      throw InfeasibleSplit("domain '" + name + "' holds " + std::to_string(g.pages.size()) + " of " +
                            std::to_string(pages.size()) + " pages");
    }
    domains.push_back(std::move(g));
  }
  std::mt19937_64 rng(seed);
  std::shuffle(domains.begin(), domains.end(), rng);
  std::stable_sort(domains.begin(), domains.end(),
                   [](const auto& a, const auto& b) { return a.pages.size() > b.pages.size(); });

  const auto train_cap = static_cast<std::size_t>(std::llround(ratio * total));
  const std::array<std::size_t, 2> cap = {train_cap, pages.size() - train_cap};
  std::array<Bin, 2> bins;
  std::vector<int> side(domains.size(), 0);

  auto remaining_fraction = [&](int b) {
    return cap[b] == 0 ? -1.0
                       : (static_cast<double>(cap[b]) - static_cast<double>(bins[b].pages)) /
                             static_cast<double>(cap[b]);
  };

  for (std::size_t d = 0; d < domains.size(); ++d) {
    const auto& g = domains[d];
    std::array<bool, 2> fits{};
    std::array<double, 2> div{};
    for (int b = 0; b < 2; ++b) {
      fits[b] = bins[b].pages + g.pages.size() <= cap[b];
      Bin trial = bins[b];
      trial.add(g, 1.0);
      div[b] = b == 0 ? divergence(trial, bins[1]) : divergence(bins[0], trial);
    }
    int choice;
    if (fits[0] != fits[1]) {
      choice = fits[0] ? 0 : 1;
    } else if (fits[0] && std::abs(div[0] - div[1]) > 1e-12) {
      choice = div[0] < div[1] ? 0 : 1;
    } else {
      choice = remaining_fraction(0) >= remaining_fraction(1) ? 0 : 1;
    }
    side[d] = choice;
    bins[choice].add(g, 1.0);
  }

  auto deviation = [&] { return std::abs(static_cast<double>(bins[0].pages) / total - ratio); };

  // Local repair: best single move or swap, applied only while it strictly
  // reduces the ratio deviation and keeps both parts non-empty.
  for (std::size_t iter = 0; iter < 2 * domains.size() && deviation() > kRatioTolerance; ++iter) {
    const double current = deviation();
    double best = current;
    double best_div = 0.0;
    std::pair<std::ptrdiff_t, std::ptrdiff_t> best_op{-1, -1};
    auto evaluate = [&](std::ptrdiff_t a, std::ptrdiff_t b) {
      std::array<Bin, 2> trial = bins;
      for (auto d : {a, b}) {
        if (d < 0) continue;
        trial[side[d]].add(domains[d], -1.0);
        trial[1 - side[d]].add(domains[d], 1.0);
      }
      if (trial[0].pages == 0 || trial[1].pages == 0) return;
      const double dev = std::abs(static_cast<double>(trial[0].pages) / total - ratio);
      const double dv = divergence(trial[0], trial[1]);
      if (dev < best - 1e-12 || (std::abs(dev - best) <= 1e-12 && best_op.first >= 0 && dv < best_div)) {
        best = dev;
        best_div = dv;
        best_op = {a, b};
      }
    };
    const auto n = static_cast<std::ptrdiff_t>(domains.size());
    for (std::ptrdiff_t a = 0; a < n; ++a) {
      evaluate(a, -1);
      for (std::ptrdiff_t b = a + 1; b < n; ++b) {
        if (side[a] != side[b]) evaluate(a, b);
      }
    }
    if (best_op.first < 0) break;
    for (auto d : {best_op.first, best_op.second}) {
      if (d < 0) continue;
      bins[side[d]].add(domains[d], -1.0);
      side[d] = 1 - side[d];
      bins[side[d]].add(domains[d], 1.0);
    }
  }

  std::vector<int> page_side(pages.size(), 0);
  for (std::size_t d = 0; d < domains.size(); ++d) {
    for (auto p : domains[d].pages) page_side[p] = side[d];
  }
  CorpusSplit split;
  for (std::size_t i = 0; i < pages.size(); ++i) {
    (page_side[i] == 0 ? split.train : split.test).push_back(pages[i]);
  }
  return split;
}

}  // namespace recx
