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

#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace recx {

// Closed set of annotated record attributes.
enum class AttributeLabel { kTitle, kTag, kDate, kShortText, kShortTitle, kAuthor, kTime };

// Table order: the three extracted attributes first.
inline constexpr std::array<AttributeLabel, 7> kAllAttributeLabels = {
    AttributeLabel::kTitle,      AttributeLabel::kDate,   AttributeLabel::kTag,
    AttributeLabel::kShortText,  AttributeLabel::kShortTitle, AttributeLabel::kAuthor,
    AttributeLabel::kTime};

// Labels the classifier and the evaluation work with.
enum class NodeLabel { kTitle, kTag, kDate, kOut };

inline constexpr std::array<NodeLabel, 3> kExtractedLabels = {NodeLabel::kTitle, NodeLabel::kTag,
                                                              NodeLabel::kDate};

enum class BoundaryLabel { kBegin, kOut };

std::string_view to_string(AttributeLabel label);
std::string_view to_string(NodeLabel label);
std::string_view to_string(BoundaryLabel label);

std::optional<AttributeLabel> parse_attribute_label(std::string_view s);
std::optional<NodeLabel> parse_node_label(std::string_view s);
std::optional<BoundaryLabel> parse_boundary_label(std::string_view s);

// title/tag/date map across; the other annotation labels have no node label.
std::optional<NodeLabel> to_node_label(AttributeLabel label);

}  // namespace recx
