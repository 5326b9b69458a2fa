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

// External node labeler protocol.
//
// One JSON request, one JSON response:
//
//   request  {"task": "segment"|"classify", "context": "page"|"record",
//             "page_id": str, "nodes": [{"xpath": str, "tag": str, "text": str}]}
//   response {"labels": [{"xpath": str, "label": str}]}
//          | {"error": str}
//
// Segment responses use BEGIN/OUT; classify responses use
// title/tag/date/out. Responses may omit nodes (treated as OUT/out) but may
// not mention xpaths absent from the request or label a node twice.
//
// Transports: HTTP POST to `<url>/label`, or newline-delimited JSON over a
// child process's stdin/stdout. Both are safe to share between threads.

#pragma once

#include <chrono>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "recx/classifier.hpp"
#include "recx/corpus.hpp"
#include "recx/segmenter.hpp"

namespace recx {

enum class LabelTask { kSegment, kClassify };

std::string_view to_string(LabelTask task);

inline constexpr std::chrono::milliseconds kDefaultLabelerTimeout{30000};

// Transport-level handle. `call` sends one request object and returns the
// decoded response object. Throws LabelerUnavailable, LabelerTimeout, or
// ProtocolViolation when the reply is not a JSON object.
class Labeler {
 public:
  virtual ~Labeler() = default;
  virtual nlohmann::json call(const nlohmann::json& request) = 0;
  virtual std::string describe() const = 0;
};

nlohmann::json make_label_request(LabelTask task, ClassifyContext context, std::string_view page_id,
                                  std::span<const RequestNode> nodes);

// Validates a response against its request and returns (xpath, label)
// pairs. Throws ProtocolViolation.
std::vector<std::pair<XPath, std::string>> parse_label_response(const nlohmann::json& response,
                                                                LabelTask task,
                                                                std::span<const RequestNode> nodes);

// Sends the request and returns every node's label, `out` included.
std::vector<LabeledNode> classify_external(Labeler& labeler, const ClassifyRequest& request);

// Asks for BEGIN/OUT labels on every text node of the page.
Segmentation segment_external(Labeler& labeler, const DomTree& tree, std::string_view page_id);

class HttpLabeler final : public Labeler {
 public:
  // `url` is scheme://host[:port][/base]; requests go to <base>/label.
  explicit HttpLabeler(std::string url, std::chrono::milliseconds timeout = kDefaultLabelerTimeout);
  nlohmann::json call(const nlohmann::json& request) override;
  std::string describe() const override { return url_; }

 private:
  std::string url_;
  std::string origin_;
  std::string path_;
  std::chrono::milliseconds timeout_;
};

// Runs `command` through /bin/sh and keeps it alive across calls. Requests
// are serialized; a crashed child is restarted on the next call.
class SubprocessLabeler final : public Labeler {
 public:
  explicit SubprocessLabeler(std::string command,
                             std::chrono::milliseconds timeout = kDefaultLabelerTimeout);
  ~SubprocessLabeler() override;
  SubprocessLabeler(const SubprocessLabeler&) = delete;
  SubprocessLabeler& operator=(const SubprocessLabeler&) = delete;

  nlohmann::json call(const nlohmann::json& request) override;
  std::string describe() const override { return command_; }

 private:
  void start();
  void stop();

  std::string command_;
  std::chrono::milliseconds timeout_;
  std::mutex mu_;
  int pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
};

// http:// or https:// URLs get HttpLabeler, anything else is a command.
std::unique_ptr<Labeler> make_labeler(const std::string& endpoint,
                                      std::chrono::milliseconds timeout = kDefaultLabelerTimeout);

// In-process labeler answering from annotations: BEGIN on record
// boundaries, attribute labels on annotated title/tag/date nodes.
class AnnotationLabeler final : public Labeler {
 public:
  explicit AnnotationLabeler(std::span<const AnnotatedPage> pages);
  nlohmann::json call(const nlohmann::json& request) override;
  std::string describe() const override { return "annotations"; }

 private:
  struct PageLabels {
    std::unordered_map<std::string, std::string> boundary;   // xpath -> BEGIN
    std::unordered_map<std::string, std::string> attribute;  // xpath -> label
  };
  std::unordered_map<std::string, PageLabels> pages_;
};

}  // namespace recx
