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

// Line-oriented labeler used by the tests. Reads one JSON request per line on
// stdin and writes one JSON reply per line on stdout.
//
//   recx_mock_labeler oracle <corpus-dir>   labels from the annotations
//   recx_mock_labeler constant              OUT/out for every node
//   recx_mock_labeler price                 an unknown attribute label
//   recx_mock_labeler alien                 an xpath that was not requested
//   recx_mock_labeler error                 an error object
//   recx_mock_labeler garbage               a line that is not JSON
//   recx_mock_labeler crash                 exits after reading a request
//   recx_mock_labeler slow <millis>         constant replies after a delay

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <thread>

#include <nlohmann/json.hpp>

#include "recx/corpus.hpp"
#include "recx/labeler.hpp"

namespace {

using nlohmann::json;

json constant_reply(const json& request) {
  const bool segment = request.value("task", "") == "segment";
  json labels = json::array();
  for (const auto& n : request["nodes"]) labels.push_back({{"xpath", n["xpath"]}, {"label", segment ? "OUT" : "out"}});
  return {{"labels", std::move(labels)}};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: recx_mock_labeler <mode> [arg]\n";
    return 2;
  }
  const std::string mode = argv[1];
  std::unique_ptr<recx::AnnotationLabeler> oracle;
  if (mode == "oracle") {
    if (argc < 3) {
      std::cerr << "oracle mode needs a corpus directory\n";
      return 2;
    }
    const auto corpus = recx::load_corpus(argv[2], recx::LoadOptions{.load_html = false});
    oracle = std::make_unique<recx::AnnotationLabeler>(corpus.pages);
  }
  const int delay_ms = mode == "slow" && argc >= 3 ? std::atoi(argv[2]) : 0;

  std::string line;
  while (std::getline(std::cin, line)) {
    if (mode == "crash") return 3;
    const json request = json::parse(line, nullptr, false);
    json reply;
    if (request.is_discarded() || !request.is_object() || !request.contains("nodes") ||
        !request["nodes"].is_array()) {
      reply = {{"error", "malformed request"}};
    } else if (mode == "oracle") {
      reply = oracle->call(request);
    } else if (mode == "constant" || mode == "slow") {
      if (delay_ms > 0) std::this_thread::sleep_for(std::chrono::milliseconds(delay_ms));
      reply = constant_reply(request);
    } else if (mode == "price") {
      reply = constant_reply(request);
      if (!reply["labels"].empty()) reply["labels"][0]["label"] = "price";
    } else if (mode == "alien") {
      reply = constant_reply(request);
      reply["labels"].push_back({{"xpath", "/html[1]/body[1]/nowhere[9]"}, {"label", "out"}});
    } else if (mode == "error") {
      reply = {{"error", "model not loaded"}};
    } else if (mode == "garbage") {
      std::cout << "this is not json" << std::endl;
      continue;
    } else {
      std::cerr << "unknown mode " << mode << "\n";
      return 2;
    }
    std::cout << reply.dump() << std::endl;
  }
  return 0;
}
