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

#include <httplib.h>

#include "recx/errors.hpp"
#include "recx/labeler.hpp"

namespace recx {

HttpLabeler::HttpLabeler(std::string url, std::chrono::milliseconds timeout)
    : url_(std::move(url)), timeout_(timeout) {
  const auto scheme_end = url_.find("://");
  if (scheme_end == std::string::npos) throw std::invalid_argument("labeler url needs a scheme: " + url_);
  const auto path_start = url_.find('/', scheme_end + 3);
  origin_ = url_.substr(0, path_start);
  std::string base = path_start == std::string::npos ? "" : url_.substr(path_start);
  while (!base.empty() && base.back() == '/') base.pop_back();
  path_ = base.size() >= 6 && base.compare(base.size() - 6, 6, "/label") == 0 ? base : base + "/label";
}

nlohmann::json HttpLabeler::call(const nlohmann::json& request) {
  httplib::Client client(origin_);
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(timeout_);
  const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(timeout_ - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());
  client.set_write_timeout(secs.count(), usecs.count());

  const auto started = std::chrono::steady_clock::now();
  auto res = client.Post(path_, request.dump(), "application/json");
  if (!res) {
    const auto err = res.error();
    const auto elapsed = std::chrono::steady_clock::now() - started;
    if (err == httplib::Error::ConnectionTimeout ||
        (err == httplib::Error::Read && elapsed >= timeout_ - std::chrono::milliseconds(50))) {
      throw LabelerTimeout("labeler at " + url_ + " timed out");
    }
    throw LabelerUnavailable("labeler at " + url_ + " unreachable: " + httplib::to_string(err));
  }
  auto body = nlohmann::json::parse(res->body, nullptr, false);
  if (res->status != 200) {
    if (body.is_object() && body.contains("error")) return body;
    throw LabelerUnavailable("labeler at " + url_ + " answered HTTP " + std::to_string(res->status));
  }
  if (body.is_discarded() || !body.is_object()) {
    throw ProtocolViolation("labeler at " + url_ + " returned a non-object body");
  }
  return body;
}

}  // namespace recx
