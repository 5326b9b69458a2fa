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

// Hand-worked page covering the three record outcomes of the final metrics:
// a matched pair, a missed reference record and a spurious prediction.

#pragma once

#include <memory>

#include "recx/corpus.hpp"
#include "recx/metrics.hpp"

namespace recx::testing {

struct GoldenCase {
  AnnotatedPage reference;
  PredictedPage predicted;
  // Expected (tp, fp, fn) per label.
  FinalMetrics expected;
};

inline GoldenCase golden_three_cases() {
  GoldenCase g;
  AnnotatedPage& ref = g.reference;
  ref.page_id = "golden";
  ref.domain = "golden.example";
  ref.html_file = "html/golden.html";
  ref.html = std::make_shared<const DomTree>(parse_html(
      "<html><body><ul>"
      "<li><a>Alpha</a><span>01.02.2024</span><b>x</b><b>y</b></li>"
      "<li><a>Beta</a><span>02.02.2024</span></li>"
      "<li><a>Gamma promo</a><b>w</b></li>"
      "</ul></body></html>"));
  auto p = [](const char* s) { return XPath::parse(s); };
  ref.records.push_back({p("/html[1]/body[1]/ul[1]/li[1]/a[1]"),
                         {{AttributeLabel::kTitle, p("/html[1]/body[1]/ul[1]/li[1]/a[1]"), "Alpha"},
                          {AttributeLabel::kDate, p("/html[1]/body[1]/ul[1]/li[1]/span[1]"), "01.02.2024"},
                          {AttributeLabel::kTag, p("/html[1]/body[1]/ul[1]/li[1]/b[1]"), "x"},
                          {AttributeLabel::kTag, p("/html[1]/body[1]/ul[1]/li[1]/b[2]"), "y"}}});
  ref.records.push_back({p("/html[1]/body[1]/ul[1]/li[2]/a[1]"),
                         {{AttributeLabel::kTitle, p("/html[1]/body[1]/ul[1]/li[2]/a[1]"), "Beta"},
                          {AttributeLabel::kDate, p("/html[1]/body[1]/ul[1]/li[2]/span[1]"), "02.02.2024"}}});

  PredictedPage& pred = g.predicted;
  pred.page_id = "golden";
  // Matched with the first reference record; one of the two tags is wrong.
  pred.records.push_back({p("/html[1]/body[1]/ul[1]/li[1]"),
                          {{NodeLabel::kTitle, {"Alpha"}}, {NodeLabel::kTag, {"x", "z"}}, {NodeLabel::kDate, {"01.02.2024"}}}});
  // No reference record lives under the third item.
  pred.records.push_back({p("/html[1]/body[1]/ul[1]/li[3]"), {{NodeLabel::kTag, {"w"}}}});

  g.expected[NodeLabel::kTitle] = {1, 0, 1};
  g.expected[NodeLabel::kTag] = {1, 2, 1};
  g.expected[NodeLabel::kDate] = {1, 0, 1};
  return g;
}

}  // namespace recx::testing
