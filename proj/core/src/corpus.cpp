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

#include "recx/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "html_tags.hpp"
#include "recx/errors.hpp"
#include "recx/text.hpp"

namespace recx {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string& require_string(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    throw CorpusFormatError(where + ": missing string field '" + key + "'");
  }
  return it->get_ref<const std::string&>();
}

XPath parse_xpath_field(const json& j, const char* key, const std::string& where) {
  try {
    return XPath::parse(require_string(j, key, where));
  } catch (const XPathSyntaxError& e) {
    throw CorpusFormatError(where + ": " + e.what());
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, std::string_view bytes) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed for " + path.string());
}

constexpr std::array<std::string_view, 4> kStrippedElements = {"script", "style", "noscript",
                                                               "template"};

void copy_clean(const DomTree& tree, NodeId id, DomTree::Builder& out) {
  const DomNode& n = tree.node(id);
  std::map<std::string, std::string> attrs;
  for (const auto& [k, v] : n.attrs) {
    if (k.size() > 2 && k[0] == 'o' && k[1] == 'n') continue;
    attrs.emplace(k, v);
  }
  out.open(n.tag, std::move(attrs));
  const bool counts = !html::contains(html::kRawText, n.tag);
  for (std::size_t i = 0; i < n.text_runs.size(); ++i) {
    out.text(n.text_runs[i], counts);
    if (i >= n.children.size()) continue;
    const NodeId child = n.children[i];
    if (html::contains(kStrippedElements, tree.node(child).tag)) {
      out.text(" ", counts);
    } else {
      copy_clean(tree, child, out);
    }
  }
  out.close();
}

}  // namespace

AnnotatedPage annotation_from_json(const json& j) {
  if (!j.is_object()) throw CorpusFormatError("annotation must be a JSON object");
  AnnotatedPage page;
  page.page_id = require_string(j, "page_id", "annotation");
  const std::string where = "page " + page.page_id;
  page.url = j.contains("url") && j["url"].is_string() ? j["url"].get<std::string>() : "";
  page.domain = require_string(j, "domain", where);
  page.html_file = require_string(j, "html_file", where);
  auto recs = j.find("records");
  if (recs == j.end() || !recs->is_array()) {
    throw CorpusFormatError(where + ": missing array field 'records'");
  }
  for (const auto& r : *recs) {
    RecordAnnotation record;
    record.boundary = parse_xpath_field(r, "boundary_xpath", where);
    if (auto attrs = r.find("attributes"); attrs != r.end()) {
      if (!attrs->is_array()) throw CorpusFormatError(where + ": 'attributes' must be an array");
      for (const auto& a : *attrs) {
        AttributeAnnotation attr;
        const auto& label = require_string(a, "label", where);
        auto parsed = parse_attribute_label(label);
        if (!parsed) throw CorpusFormatError(where + ": unknown attribute label '" + label + "'");
        attr.label = *parsed;
        attr.xpath = parse_xpath_field(a, "xpath", where);
        attr.text = normalize_text(require_string(a, "text", where));
        record.attributes.push_back(std::move(attr));
      }
    }
    page.records.push_back(std::move(record));
  }
  return page;
}

json annotation_to_json(const AnnotatedPage& page) {
  json records = json::array();
  for (const auto& r : page.records) {
    json attrs = json::array();
    for (const auto& a : r.attributes) {
      attrs.push_back({{"label", to_string(a.label)}, {"xpath", a.xpath.str()}, {"text", a.text}});
    }
    records.push_back({{"boundary_xpath", r.boundary.str()}, {"attributes", std::move(attrs)}});
  }
  return {{"page_id", page.page_id},
          {"url", page.url},
          {"domain", page.domain},
          {"html_file", page.html_file},
          {"records", std::move(records)}};
}

std::vector<std::string> validate_page(const AnnotatedPage& page) {
  std::vector<std::string> issues;
  if (page.records.size() < 2) {
    issues.push_back("page has " + std::to_string(page.records.size()) + " records; need at least 2");
  }
  if (!page.html) {
    issues.push_back("html not loaded");
    return issues;
  }
  const DomTree& tree = *page.html;
  for (std::size_t i = 0; i < page.records.size(); ++i) {
    const auto& r = page.records[i];
    if (!tree.find(r.boundary)) {
      issues.push_back("record " + std::to_string(i) + ": boundary " + r.boundary.str() +
                       " does not resolve");
    }
    for (const auto& a : r.attributes) {
      if (a.text.empty()) {
        issues.push_back("record " + std::to_string(i) + ": empty " + std::string(to_string(a.label)) +
                         " text");
      }
      if (!tree.find(a.xpath)) {
        issues.push_back("record " + std::to_string(i) + ": " + std::string(to_string(a.label)) +
                         " xpath " + a.xpath.str() + " does not resolve");
      }
    }
  }
  return issues;
}

Corpus load_corpus(const fs::path& root, const LoadOptions& options) {
  if (!fs::is_directory(root)) throw IoError("not a corpus directory: " + root.string());
  fs::path ann_dir = root / "annotations";
  if (!fs::is_directory(ann_dir)) ann_dir = root;

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(ann_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  Corpus corpus;
  for (const auto& file : files) {
    json j;
    try {
      j = json::parse(read_file(file));
    } catch (const json::parse_error& e) {
      throw CorpusFormatError(file.string() + ": " + e.what());
    }
    // Manifests and other bookkeeping files in the root are not pages.
    if (!j.is_object() || !j.contains("page_id")) continue;
    AnnotatedPage page = annotation_from_json(j);
    if (options.load_html) {
      const std::string bytes = read_file(root / page.html_file);
      try {
        DomTree tree = parse_html(bytes);
        page.html = std::make_shared<const DomTree>(options.clean ? clean_html(tree) : std::move(tree));
      } catch (const std::exception& e) {
        // Undecodable or empty pages stay in the corpus without a tree.
        corpus.issues.push_back(page.page_id + ": " + e.what());
      }
      if (options.validate && page.html) {
        for (auto& issue : validate_page(page)) corpus.issues.push_back(page.page_id + ": " + issue);
      }
    }
    corpus.pages.push_back(std::move(page));
  }
  std::stable_sort(corpus.pages.begin(), corpus.pages.end(),
                   [](const auto& a, const auto& b) { return a.page_id < b.page_id; });
  return corpus;
}

void write_page(const fs::path& root, const AnnotatedPage& page, std::string_view html_bytes) {
  write_file(root / page.html_file, html_bytes);
  write_file(root / "annotations" / (page.page_id + ".json"), annotation_to_json(page).dump(1) + "\n");
}

DomTree clean_html(const DomTree& tree) {
  DomTree::Builder out;
  if (!tree.empty()) copy_clean(tree, tree.root(), out);
  return std::move(out).finish();
}

std::string record_key(const RecordAnnotation& record) {
  std::vector<std::pair<std::string_view, std::string_view>> parts;
  parts.reserve(record.attributes.size());
  for (const auto& a : record.attributes) parts.emplace_back(to_string(a.label), a.text);
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const auto& [label, text] : parts) {
    key.append(label);
    key.push_back('\x1f');
    key.append(text);
    key.push_back('\x1e');
  }
  return key;
}

bool is_duplicate(const AnnotatedPage& page, const std::unordered_set<std::string>& seen_record_keys) {
  if (page.records.empty()) return false;
  std::size_t repeated = 0;
  for (const auto& r : page.records) {
    const std::string key = record_key(r);
    if (!key.empty() && seen_record_keys.count(key)) ++repeated;
  }
  // repeated / n > 1/4 without floating point.
  return 4 * repeated > page.records.size();
}

DedupResult dedupe(std::span<const AnnotatedPage> pages) {
  DedupResult result;
  std::unordered_set<std::string> seen;
  for (const auto& page : pages) {
    if (is_duplicate(page, seen)) {
      result.dropped.push_back(page.page_id);
      continue;
    }
    for (const auto& r : page.records) {
      std::string key = record_key(r);
      if (!key.empty()) seen.insert(std::move(key));
    }
    result.kept.push_back(page);
  }
  return result;
}

const AttributeStats& CorpusStats::at(AttributeLabel label) const {
  for (const auto& a : attributes) {
    if (a.label == label) return a;
  }
  throw std::out_of_range("unknown attribute label");
}

CorpusStats compute_stats(std::span<const AnnotatedPage> pages) {
  CorpusStats stats;
  stats.total_pages = pages.size();
  std::array<std::set<std::string>, kAllAttributeLabels.size()> sites;
  for (std::size_t k = 0; k < kAllAttributeLabels.size(); ++k) {
    stats.attributes[k].label = kAllAttributeLabels[k];
  }
  for (const auto& page : pages) {
    std::array<bool, kAllAttributeLabels.size()> on_page{};
    for (const auto& record : page.records) {
      std::array<bool, kAllAttributeLabels.size()> in_record{};
      for (const auto& a : record.attributes) {
        for (std::size_t k = 0; k < kAllAttributeLabels.size(); ++k) {
          if (kAllAttributeLabels[k] == a.label) in_record[k] = true;
        }
      }
      for (std::size_t k = 0; k < in_record.size(); ++k) {
        if (!in_record[k]) continue;
        ++stats.attributes[k].records;
        on_page[k] = true;
      }
    }
    for (std::size_t k = 0; k < on_page.size(); ++k) {
      if (!on_page[k]) continue;
      ++stats.attributes[k].pages;
      sites[k].insert(page.domain);
    }
  }
  for (std::size_t k = 0; k < sites.size(); ++k) stats.attributes[k].sites = sites[k].size();
  return stats;
}

std::string format_stats_markdown(const CorpusStats& stats) {
  std::ostringstream out;
  out << "| Name | Pages | Records | Sites |\n|---|---|---|---|\n";
  for (const auto& a : stats.attributes) {
    out << "| " << to_string(a.label) << " | " << a.pages << " | " << a.records << " | " << a.sites
        << " |\n";
  }
  return out.str();
}

std::string format_stats_tsv(const CorpusStats& stats) {
  std::ostringstream out;
  out << "Name\tPages\tRecords\tSites\n";
  for (const auto& a : stats.attributes) {
    out << to_string(a.label) << '\t' << a.pages << '\t' << a.records << '\t' << a.sites << '\n';
  }
  return out.str();
}

}  // namespace recx
