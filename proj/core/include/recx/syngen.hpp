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

// Synthetic news-list pages with exact annotations.
//
// Pages are rendered once with marker attributes on every annotated element,
// parsed to recover positional xpaths, and rendered again without markers.
// The two renderings have the same element structure, so the xpaths carry
// over. Record boundaries are the first text node of each record.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "recx/corpus.hpp"

namespace recx {

enum class PageTemplate {
  kList,   // <ul> of <li> items
  kCards,  // grid of <div> cards, date first
  kPairs,  // heading and body as sibling pairs
};

inline constexpr PageTemplate kAllTemplates[] = {PageTemplate::kList, PageTemplate::kCards, PageTemplate::kPairs};

std::string_view to_string(PageTemplate t);
std::optional<PageTemplate> parse_page_template(std::string_view s);

struct NoiseSet {
  bool nav = false;
  bool footer = false;  // includes a date and a link row
  bool ads = false;     // sidebar blocks

  static NoiseSet all() { return {true, true, true}; }
};

// Probability that a record omits the attribute.
struct Dropout {
  double date = 0.0;
  double tag = 0.0;  // all tags of the record at once

  static Dropout uniform(double p) { return {p, p}; }
};

// Content of one record, independent of layout.
struct RecordContent {
  std::string title;
  std::string summary;
  std::string author;
  std::vector<std::string> tags;
  std::optional<std::string> date;
};

struct PageSpec {
  std::uint64_t seed = 1;
  std::size_t n_records = 5;  // >= 2
  PageTemplate layout = PageTemplate::kList;
  Dropout optional_attr_dropout;
  std::pair<std::size_t, std::size_t> multi_tag_range{1, 3};
  NoiseSet noise;
  bool class_name_churn = false;
  std::string page_id;  // "page-<seed>" when empty
  std::string domain = "news.example";
};

struct GeneratedPage {
  std::string html;
  AnnotatedPage page;  // carries the cleaned tree
};

// Record contents drawn from the spec's seed. Throws std::invalid_argument
// on an invalid spec.
std::vector<RecordContent> generate_records(const PageSpec& spec);

// Lays out `records` according to the spec. Throws std::invalid_argument on
// an invalid spec or fewer than two records.
GeneratedPage render_page(const PageSpec& spec, const std::vector<RecordContent>& records);

// render_page(spec, generate_records(spec)).
GeneratedPage generate_page(const PageSpec& spec);

struct CorpusSpec {
  std::size_t n_pages = 200;
  std::uint64_t seed = 1;
  std::size_t n_domains = 8;
  std::vector<PageTemplate> templates{std::begin(kAllTemplates), std::end(kAllTemplates)};
  std::pair<std::size_t, std::size_t> records_range{3, 10};
  Dropout optional_attr_dropout;
  std::pair<std::size_t, std::size_t> multi_tag_range{1, 3};
  NoiseSet noise;
  bool class_name_churn = false;
  // Share of pages that copy records from an earlier page, and the share of
  // their records copied.
  double duplicate_rate = 0.0;
  double duplicate_overlap = 0.3;
};

struct InjectedDuplicate {
  std::string page_id;
  std::string source_page_id;
  std::size_t copied_records = 0;
};

struct GeneratedCorpus {
  std::vector<GeneratedPage> pages;  // by page_id
  std::vector<InjectedDuplicate> duplicates;
};

// Deterministic for a fixed spec. Each domain keeps one template. Throws
// std::invalid_argument on an invalid spec.
GeneratedCorpus generate_corpus(const CorpusSpec& spec);

nlohmann::json corpus_manifest(const CorpusSpec& spec, const GeneratedCorpus& corpus);

// Writes every page in the corpus format plus `syngen.json`. Throws IoError.
void write_corpus(const std::filesystem::path& root, const CorpusSpec& spec, const GeneratedCorpus& corpus);

}  // namespace recx
