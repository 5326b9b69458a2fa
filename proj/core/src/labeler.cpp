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

#include "recx/labeler.hpp"

#include <unordered_set>

#include "recx/errors.hpp"

namespace recx {
using nlohmann::json;

std::string_view to_string(LabelTask task) {
  return task == LabelTask::kSegment ? "segment" : "classify";
}

json make_label_request(LabelTask task, ClassifyContext context, std::string_view page_id,
                        std::span<const RequestNode> nodes) {
  json arr = json::array();
  for (const auto& n : nodes) arr.push_back({{"xpath", n.xpath.str()}, {"tag", n.tag}, {"text", n.text}});
  return {{"task", to_string(task)},
          {"context", to_string(context)},
          {"page_id", page_id},
          {"nodes", std::move(arr)}};
}

std::vector<std::pair<XPath, std::string>> parse_label_response(const json& response, LabelTask task,
                                                                std::span<const RequestNode> nodes) {
  if (!response.is_object()) throw ProtocolViolation("response is not a JSON object");
  if (auto err = response.find("error"); err != response.end()) {
    throw ProtocolViolation("labeler error: " + (err->is_string() ? err->get<std::string>() : err->dump()));
  }
  auto labels = response.find("labels");
  if (labels == response.end() || !labels->is_array()) {
    throw ProtocolViolation("response has no 'labels' array");
  }
  std::unordered_set<std::string> requested;
  for (const auto& n : nodes) requested.insert(n.xpath.str());
  std::unordered_set<std::string> answered;
  std::vector<std::pair<XPath, std::string>> out;
  for (const auto& entry : *labels) {
    if (!entry.is_object() || !entry.contains("xpath") || !entry["xpath"].is_string() ||
        !entry.contains("label") || !entry["label"].is_string()) {
      throw ProtocolViolation("label entry must have string 'xpath' and 'label'");
    }
    const auto& xpath = entry["xpath"].get_ref<const std::string&>();
    const auto& label = entry["label"].get_ref<const std::string&>();
    if (!requested.count(xpath)) throw ProtocolViolation("xpath not in request: " + xpath);
    if (!answered.insert(xpath).second) throw ProtocolViolation("xpath labeled twice: " + xpath);
    const bool valid = task == LabelTask::kSegment ? parse_boundary_label(label).has_value()
                                                   : parse_node_label(label).has_value();
    if (!valid) {
      throw ProtocolViolation("label '" + label + "' is not valid for task " + std::string(to_string(task)));
    }
    out.emplace_back(XPath::parse(xpath), label);
  }
  return out;
}

std::vector<LabeledNode> classify_external(Labeler& labeler, const ClassifyRequest& request) {
  if (request.context == ClassifyContext::kRecord) {
    if (!request.fragment_root) throw std::invalid_argument("record context requires a fragment root");
    for (const auto& n : request.nodes) {
      if (!request.fragment_root->is_prefix_of(n.xpath)) {
        throw std::invalid_argument("request node " + n.xpath.str() + " lies outside the fragment");
      }
    }
  }
  const json reply = labeler.call(
      make_label_request(LabelTask::kClassify, request.context, request.page_id, request.nodes));
  const auto labels = parse_label_response(reply, LabelTask::kClassify, request.nodes);
  std::unordered_map<XPath, NodeLabel, XPathHash> by_xpath;
  for (const auto& [xpath, label] : labels) by_xpath.emplace(xpath, *parse_node_label(label));
  std::vector<LabeledNode> out;
  out.reserve(request.nodes.size());
  for (const auto& n : request.nodes) {
    auto it = by_xpath.find(n.xpath);
    out.push_back({n.xpath, it == by_xpath.end() ? NodeLabel::kOut : it->second, n.text});
  }
  return out;
}

Segmentation segment_external(Labeler& labeler, const DomTree& tree, std::string_view page_id) {
  const auto nodes = collect_request_nodes(tree, std::nullopt);
  const json reply = labeler.call(make_label_request(LabelTask::kSegment, ClassifyContext::kPage, page_id, nodes));
  const auto labels = parse_label_response(reply, LabelTask::kSegment, nodes);
  std::vector<std::pair<XPath, BoundaryLabel>> typed;
  typed.reserve(labels.size());
  for (const auto& [xpath, label] : labels) typed.emplace_back(xpath, *parse_boundary_label(label));
  return segmentation_from_labels(tree, typed);
}

std::unique_ptr<Labeler> make_labeler(const std::string& endpoint, std::chrono::milliseconds timeout) {
  if (endpoint.rfind("http://", 0) == 0 || endpoint.rfind("https://", 0) == 0) {
    return std::make_unique<HttpLabeler>(endpoint, timeout);
  }
  return std::make_unique<SubprocessLabeler>(endpoint, timeout);
}

AnnotationLabeler::AnnotationLabeler(std::span<const AnnotatedPage> pages) {
  for (const auto& page : pages) {
    PageLabels& labels = pages_[page.page_id];
    for (const auto& record : page.records) {
      labels.boundary.emplace(record.boundary.str(), "BEGIN");
      for (const auto& a : record.attributes) {
        if (auto label = to_node_label(a.label)) labels.attribute.emplace(a.xpath.str(), to_string(*label));
      }
    }
  }
}

json AnnotationLabeler::call(const json& request) {
  if (!request.is_object() || !request.contains("page_id") || !request.contains("nodes") ||
      !request.contains("task")) {
    return {{"error", "malformed request"}};
  }
  auto page = pages_.find(request["page_id"].get<std::string>());
  if (page == pages_.end()) return {{"error", "unknown page " + request["page_id"].get<std::string>()}};
  const bool segment = request["task"] == "segment";
  const auto& table = segment ? page->second.boundary : page->second.attribute;
  json labels = json::array();
  for (const auto& n : request["nodes"]) {
    const auto& xpath = n["xpath"].get_ref<const std::string&>();
    auto it = table.find(xpath);
    const std::string label = it != table.end() ? it->second : (segment ? "OUT" : "out");
    labels.push_back({{"xpath", xpath}, {"label", label}});
  }
  return {{"labels", std::move(labels)}};
}

}  // namespace recx
