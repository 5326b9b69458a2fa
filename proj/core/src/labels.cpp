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

#include "recx/labels.hpp"

namespace recx {

std::string_view to_string(AttributeLabel label) {
  switch (label) {
    case AttributeLabel::kTitle: return "title";
    case AttributeLabel::kTag: return "tag";
    case AttributeLabel::kDate: return "date";
    case AttributeLabel::kShortText: return "short_text";
    case AttributeLabel::kShortTitle: return "short_title";
    case AttributeLabel::kAuthor: return "author";
    case AttributeLabel::kTime: return "time";
  }
  return "?";
}

std::string_view to_string(NodeLabel label) {
  switch (label) {
    case NodeLabel::kTitle: return "title";
    case NodeLabel::kTag: return "tag";
    case NodeLabel::kDate: return "date";
    case NodeLabel::kOut: return "out";
  }
  return "?";
}

std::string_view to_string(BoundaryLabel label) {
  return label == BoundaryLabel::kBegin ? "BEGIN" : "OUT";
}

std::optional<AttributeLabel> parse_attribute_label(std::string_view s) {
  for (auto label : kAllAttributeLabels) {
    if (to_string(label) == s) return label;
  }
  return std::nullopt;
}

std::optional<NodeLabel> parse_node_label(std::string_view s) {
  for (auto label : {NodeLabel::kTitle, NodeLabel::kTag, NodeLabel::kDate, NodeLabel::kOut}) {
    if (to_string(label) == s) return label;
  }
  return std::nullopt;
}

std::optional<BoundaryLabel> parse_boundary_label(std::string_view s) {
  if (s == "BEGIN") return BoundaryLabel::kBegin;
  if (s == "OUT") return BoundaryLabel::kOut;
  return std::nullopt;
}

std::optional<NodeLabel> to_node_label(AttributeLabel label) {
  switch (label) {
    case AttributeLabel::kTitle: return NodeLabel::kTitle;
    case AttributeLabel::kTag: return NodeLabel::kTag;
    case AttributeLabel::kDate: return NodeLabel::kDate;
    default: return std::nullopt;
  }
}

}  // namespace recx
