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

#include "recx/formats.hpp"

#include <cstdint>

#include "recx/errors.hpp"
#include "recx/matcher.hpp"

namespace recx {
namespace {

using json = nlohmann::json;

json xpaths_to_json(const std::vector<XPath>& paths) {
  json out = json::array();
  for (const auto& p : paths) out.push_back(p.str());
  return out;
}

XPath xpath_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) {
    throw CorpusFormatError(std::string("missing string field \"") + key + "\"");
  }
  try {
    return XPath::parse(j[key].get<std::string>());
  } catch (const XPathSyntaxError& e) {
    throw CorpusFormatError(std::string("field \"") + key + "\": " + e.what());
  }
}

}  // namespace

json segmentation_to_json(std::string_view page_id, const Segmentation& seg) {
  return {{"page_id", page_id}, {"boundaries", xpaths_to_json(seg.boundaries())}};
}

json labeled_node_to_json(const LabeledNode& node) {
  return {{"xpath", node.xpath.str()}, {"label", to_string(node.label)}, {"text", node.text}};
}

LabeledNode labeled_node_from_json(const json& j) {
  if (!j.is_object()) throw CorpusFormatError("label entry is not an object");
  LabeledNode node;
  node.xpath = xpath_field(j, "xpath");
  if (!j.contains("label") || !j["label"].is_string()) throw CorpusFormatError("label entry without label");
  auto label = parse_node_label(j["label"].get<std::string>());
  if (!label) throw CorpusFormatError("unknown label \"" + j["label"].get<std::string>() + "\"");
  node.label = *label;
  if (j.contains("text")) {
    if (!j["text"].is_string()) throw CorpusFormatError("label text is not a string");
    node.text = j["text"].get<std::string>();
  }
  return node;
}

json labels_to_json(std::string_view page_id, ClassifyContext context, std::span<const LabeledNode> labels) {
  json arr = json::array();
  for (const auto& n : labels) arr.push_back(labeled_node_to_json(n));
  return {{"page_id", page_id}, {"context", to_string(context)}, {"labels", std::move(arr)}};
}

json extraction_to_json(const PageExtraction& page) {
  json records = json::array();
  for (const auto& r : page.records) {
    json rec = {{"title", json::array()}, {"tag", json::array()}, {"date", json::array()}};
    for (const auto& a : r.attributes) {
      if (a.label != NodeLabel::kOut) rec[std::string(to_string(a.label))].push_back(a.text);
    }
    rec["boundary"] = page.index.origin.at(r.record_index).str();
    rec["prefix"] = page.index.prefixes.at(r.record_index).str();
    records.push_back(std::move(rec));
  }
  std::map<NodeLabel, std::uint64_t> counts;
  for (NodeLabel label : kExtractedLabels) counts[label] = 0;
  for (const auto& a : page.unmatched) ++counts[a.label];
  json by_label = json::object();
  for (const auto& [label, n] : counts) by_label[std::string(to_string(label))] = n;
  json labels = json::array();
  for (const auto& n : page.labels) labels.push_back(labeled_node_to_json(n));
  return {
      {"page_id", page.page_id},
      {"records", std::move(records)},
      {"unmatched", page.unmatched.size()},
      {"unmatched_by_label", std::move(by_label)},
      {"boundaries", xpaths_to_json(page.segmentation.boundaries())},
      {"labels", std::move(labels)},
  };
}

PredictedPage predicted_page_from_json(const json& j) {
  if (!j.is_object() || !j.contains("page_id") || !j["page_id"].is_string()) {
    throw CorpusFormatError("extraction line without page_id");
  }
  if (!j.contains("records") || !j["records"].is_array()) throw CorpusFormatError("extraction line without records");
  PredictedPage page;
  page.page_id = j["page_id"].get<std::string>();

  const json& records = j["records"];
  bool all_prefixed = true;
  for (const auto& r : records) {
    if (!r.is_object()) throw CorpusFormatError("record is not an object");
    all_prefixed = all_prefixed && r.contains("prefix");
  }
  std::optional<PrefixIndex> derived;
  if (!all_prefixed) {
    std::vector<XPath> boundaries;
    for (const auto& r : records) boundaries.push_back(xpath_field(r, "boundary"));
    derived = build_prefix_index(Segmentation(std::move(boundaries)));
  }

  for (std::size_t i = 0; i < records.size(); ++i) {
    const json& r = records[i];
    PredictedRecord rec;
    rec.prefix = derived ? derived->prefixes[i] : xpath_field(r, "prefix");
    for (NodeLabel label : kExtractedLabels) {
      const std::string key(to_string(label));
      if (!r.contains(key)) continue;
      if (!r[key].is_array()) throw CorpusFormatError("record field \"" + key + "\" is not an array");
      auto& values = rec.values[label];
      for (const auto& v : r[key]) {
        if (!v.is_string()) throw CorpusFormatError("record value is not a string");
        values.push_back(v.get<std::string>());
      }
    }
    page.records.push_back(std::move(rec));
  }

  if (j.contains("unmatched_by_label")) {
    const json& by_label = j["unmatched_by_label"];
    if (!by_label.is_object()) throw CorpusFormatError("unmatched_by_label is not an object");
    for (const auto& [key, value] : by_label.items()) {
      auto label = parse_node_label(key);
      if (!label || !value.is_number_integer() || value.get<std::int64_t>() < 0) throw CorpusFormatError("bad unmatched_by_label entry " + key);
      page.unmatched[*label] = value.get<std::uint64_t>();
    }
  } else if (j.contains("unmatched") && j["unmatched"].is_number() && j["unmatched"].get<double>() > 0) {
    throw CorpusFormatError("page " + page.page_id + ": unmatched count without unmatched_by_label");
  }
  return page;
}

}  // namespace recx
