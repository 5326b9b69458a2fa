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

// Reference computations for tests. Nothing here calls into the library's
// algorithms; paths are plain strings split on '/'.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "recx/dom.hpp"

namespace recx::oracle {

using Steps = std::vector<std::string>;

inline Steps split_path(const std::string& path) {
  Steps out;
  std::string cur;
  for (std::size_t i = 1; i <= path.size(); ++i) {
    if (i == path.size() || path[i] == '/') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(path[i]);
    }
  }
  return out;
}

inline std::string join_path(const Steps& steps, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) out += "/" + steps[i];
  return out;
}

inline bool starts_with(const Steps& whole, const Steps& head) {
  if (head.size() > whole.size()) return false;
  for (std::size_t i = 0; i < head.size(); ++i) {
    if (whole[i] != head[i]) return false;
  }
  return true;
}

// Shortest prefix of each boundary that is a prefix of no other boundary;
// the full path when every prefix is shared.
inline std::vector<std::string> unique_prefixes(const std::vector<std::string>& boundaries) {
  std::vector<Steps> split;
  for (const auto& b : boundaries) split.push_back(split_path(b));
  std::vector<std::string> out;
  for (std::size_t i = 0; i < split.size(); ++i) {
    std::optional<std::string> found;
    for (std::size_t len = 1; len <= split[i].size() && !found; ++len) {
      const Steps head(split[i].begin(), split[i].begin() + static_cast<std::ptrdiff_t>(len));
      bool shared = false;
      for (std::size_t j = 0; j < split.size(); ++j) {
        if (j != i && starts_with(split[j], head)) shared = true;
      }
      if (!shared) found = join_path(split[i], len);
    }
    out.push_back(found.value_or(boundaries[i]));
  }
  return out;
}

// Every prefix that covers `path`.
inline std::vector<std::size_t> covering(const std::vector<std::string>& prefixes, const std::string& path) {
  const Steps p = split_path(path);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    if (starts_with(p, split_path(prefixes[i]))) out.push_back(i);
  }
  return out;
}

inline std::size_t levenshtein(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, sub});
    }
  }
  return d[a.size()][b.size()];
}

// Adjusted Rand index by counting item pairs.
inline double ari_pairs(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  double n11 = 0, n10 = 0, n01 = 0, n00 = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const bool sa = a[i] == a[j];
      const bool sb = b[i] == b[j];
      if (sa && sb) {
        ++n11;
      } else if (sa) {
        ++n10;
      } else if (sb) {
        ++n01;
      } else {
        ++n00;
      }
    }
  }
  const double den = (n11 + n10) * (n10 + n00) + (n11 + n01) * (n01 + n00);
  if (den == 0) return 1.0;
  return 2.0 * (n11 * n00 - n10 * n01) / den;
}

// Mutual information over the joint distribution, normalized by the mean
// entropy.
inline double nmi_entropy(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  const double n = static_cast<double>(a.size());
  if (a.empty()) return 1.0;
  std::map<std::size_t, double> pa, pb;
  std::map<std::pair<std::size_t, std::size_t>, double> pab;
  for (std::size_t i = 0; i < a.size(); ++i) {
    pa[a[i]] += 1.0 / n;
    pb[b[i]] += 1.0 / n;
    pab[{a[i], b[i]}] += 1.0 / n;
  }
  double ha = 0, hb = 0, mi = 0;
  for (const auto& [k, p] : pa) ha -= p * std::log(p);
  for (const auto& [k, p] : pb) hb -= p * std::log(p);
  for (const auto& [k, p] : pab) mi += p * std::log(p / (pa[k.first] * pb[k.second]));
  if (ha == 0 && hb == 0) return 1.0;
  const double v = mi / ((ha + hb) / 2);
  return v < 0 ? 0 : (v > 1 ? 1 : v);
}

// Random element tree with at most `max_nodes` nodes, built directly.
inline DomTree random_tree(std::mt19937_64& rng, std::size_t max_nodes) {
  static const char* kTags[] = {"div", "span", "ul", "li", "a", "p", "section"};
  DomTree::Builder b;
  b.open("html");
  b.open("body");
  std::size_t count = 2;
  const std::size_t target = 3 + rng() % (max_nodes - 2);
  while (count < target) {
    const auto roll = rng() % 10;
    if (roll < 6 || b.depth() <= 2) {
      b.open(kTags[rng() % 7]);
      ++count;
      if (rng() % 2) b.text("t" + std::to_string(count));
    } else {
      b.close();
    }
  }
  while (b.depth() > 0) b.close();
  return std::move(b).finish();
}

}  // namespace recx::oracle
