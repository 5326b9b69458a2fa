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

// Annotated list pages: on-disk format, preprocessing and statistics.
//
// A corpus directory holds one JSON annotation per page under
// `annotations/` (or directly in the root) and the HTML files they point to.
// `html_file` is relative to the corpus root.

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "recx/dom.hpp"
#include "recx/labels.hpp"
#include "recx/xpath.hpp"

namespace recx {

struct AttributeAnnotation {
  AttributeLabel label = AttributeLabel::kTitle;
  XPath xpath;
  std::string text;  // normalized, non-empty
};

struct RecordAnnotation {
  XPath boundary;
  std::vector<AttributeAnnotation> attributes;  // labels may repeat
};

struct AnnotatedPage {
  std::string page_id;
  std::string url;
  std::string domain;
  std::string html_file;
  std::shared_ptr<const DomTree> html;  // null when loaded without HTML
  std::vector<RecordAnnotation> records;
};

// Throws CorpusFormatError on missing fields, unknown labels or bad xpaths.
AnnotatedPage annotation_from_json(const nlohmann::json& j);
nlohmann::json annotation_to_json(const AnnotatedPage& page);

// Problems that break the page invariants: fewer than two records,
// unresolved xpaths, empty attribute text. Requires `page.html`.
std::vector<std::string> validate_page(const AnnotatedPage& page);

struct LoadOptions {
  bool load_html = true;
  bool clean = true;  // apply clean_html after parsing
  bool validate = true;
};

struct Corpus {
  std::vector<AnnotatedPage> pages;  // sorted by page_id
  std::vector<std::string> issues;   // "page_id: message"
};

// Throws IoError when the directory or a referenced file cannot be read and
// CorpusFormatError for malformed annotation files. HTML that fails to parse
// is reported in `issues` and leaves the page's tree null.
Corpus load_corpus(const std::filesystem::path& root, const LoadOptions& options = {});

// Writes `annotations/<page_id>.json` and the HTML at `page.html_file`.
void write_page(const std::filesystem::path& root, const AnnotatedPage& page,
                std::string_view html_bytes);

// Removes script, style, noscript and template subtrees and inline `on*`
// event-handler attributes. Comments never reach the tree. Surviving nodes
// keep their xpaths because removed elements only shift same-tag siblings.
DomTree clean_html(const DomTree& tree);

// Label-sorted concatenation of attribute texts. Empty for records without
// attributes; such records never count as repeated.
std::string record_key(const RecordAnnotation& record);

// True iff strictly more than a quarter of the page's record keys are in
// `seen_record_keys`.
bool is_duplicate(const AnnotatedPage& page, const std::unordered_set<std::string>& seen_record_keys);

struct DedupResult {
  std::vector<AnnotatedPage> kept;
  std::vector<std::string> dropped;  // page ids, input order
};

// Sequential fold over `pages` in input order: a page is dropped when it is a
// duplicate of everything kept before it; kept pages add their keys.
DedupResult dedupe(std::span<const AnnotatedPage> pages);

struct CorpusSplit {
  std::vector<AnnotatedPage> train;
  std::vector<AnnotatedPage> test;
};

// Assigns whole domains to train or test. Throws InfeasibleSplit when one
// domain alone exceeds max(ratio, 1 - ratio) of the pages, and
// std::invalid_argument when ratio is outside (0, 1) or pages is empty.
CorpusSplit split_by_domain(std::span<const AnnotatedPage> pages, double ratio, std::uint64_t seed);

struct AttributeStats {
  AttributeLabel label;
  std::uint64_t pages = 0;
  std::uint64_t records = 0;
  std::uint64_t sites = 0;
};

struct CorpusStats {
  std::uint64_t total_pages = 0;
  std::array<AttributeStats, kAllAttributeLabels.size()> attributes{};  // kAllAttributeLabels order

  const AttributeStats& at(AttributeLabel label) const;
};

CorpusStats compute_stats(std::span<const AnnotatedPage> pages);

// "Name | Pages | Records | Sites" table.
std::string format_stats_markdown(const CorpusStats& stats);
std::string format_stats_tsv(const CorpusStats& stats);

}  // namespace recx
