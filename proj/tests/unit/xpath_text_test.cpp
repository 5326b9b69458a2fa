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

#include <doctest.h>

#include "recx/errors.hpp"
#include "recx/labels.hpp"
#include "recx/text.hpp"
#include "recx/xpath.hpp"

namespace recx {
namespace {

TEST_SUITE("xpath") {
  TEST_CASE("parse and serialize round trip") {
    for (const char* s : {"/html[1]", "/html[1]/body[1]/ul[1]/li[12]", "/html[1]/h1[1]/data-x[3]"}) {
      CHECK(XPath::parse(s).str() == s);
    }
    const XPath p = XPath::parse("/html[1]/body[1]/div[2]");
    CHECK(p.size() == 3);
    CHECK(p.steps()[2].tag == "div");
    CHECK(p.steps()[2].index == 2);
  }

  TEST_CASE("malformed paths are rejected") {
    for (const char* s : {"", "html[1]", "/html", "/html[0]", "/html[1]/", "/html[1]//body[1]", "/html[x]",
                          "/[1]", "/html[1]extra", "/html[-1]"}) {
      CHECK_THROWS_AS(XPath::parse(s), XPathSyntaxError);
    }
  }

  TEST_CASE("prefix relation") {
    const XPath a = XPath::parse("/html[1]/body[1]");
    const XPath b = XPath::parse("/html[1]/body[1]/ul[1]/li[2]");
    CHECK(a.is_prefix_of(b));
    CHECK(a.is_prefix_of(a));
    CHECK_FALSE(b.is_prefix_of(a));
    CHECK_FALSE(XPath::parse("/html[1]/body[2]").is_prefix_of(b));
    CHECK(b.prefix(2) == a);
    CHECK(a.child("ul", 1) == b.prefix(3));
    CHECK(XPath().is_prefix_of(a));
  }

  TEST_CASE("ordering and hashing") {
    const XPath a = XPath::parse("/html[1]/body[1]/li[2]");
    const XPath b = XPath::parse("/html[1]/body[1]/li[10]");
    CHECK(a < b);
    CHECK(XPathHash{}(a) == XPathHash{}(XPath::parse(a.str())));
  }
}

TEST_SUITE("text") {
  TEST_CASE("normalization") {
    CHECK(normalize_text("") == "");
    CHECK(normalize_text(" \t\r\n ") == "");
    CHECK(normalize_text("  a  b\n\nc ") == "a b c");
    CHECK(normalize_text("a\xE3\x80\x80z") == "a z");  // ideographic space
    CHECK(normalize_text("caf\xC3\xA9  ok") == "caf\xC3\xA9 ok");
  }

  TEST_CASE("utf8 validation") {
    CHECK(is_valid_utf8("plain"));
    CHECK(is_valid_utf8("\xC3\xA9\xE2\x82\xAC\xF0\x9F\x98\x80"));
    CHECK_FALSE(is_valid_utf8("\xC3"));
    CHECK_FALSE(is_valid_utf8("\xC0\xAF"));          // overlong
    CHECK_FALSE(is_valid_utf8("\xED\xA0\x80"));      // surrogate
    CHECK_FALSE(is_valid_utf8("\xF4\x90\x80\x80"));  // beyond U+10FFFF
    CHECK(utf8_length("a\xC3\xA9\xE2\x82\xAC") == 3);
  }

  TEST_CASE("legacy encodings") {
    CHECK(transcode_to_utf8("\xE9", "ISO-8859-1") == std::optional<std::string>("\xC3\xA9"));
    CHECK(transcode_to_utf8("\x80", "windows-1252") == std::optional<std::string>("\xE2\x82\xAC"));
    CHECK_FALSE(transcode_to_utf8("x", "ebcdic").has_value());
  }

  TEST_CASE("word counting") {
    CHECK(word_count("") == 0);
    CHECK(word_count("one") == 1);
    CHECK(word_count("science and tech") == 3);
  }
}

TEST_SUITE("labels") {
  TEST_CASE("names round trip") {
    for (AttributeLabel l : kAllAttributeLabels) CHECK(parse_attribute_label(to_string(l)) == l);
    for (NodeLabel l : {NodeLabel::kTitle, NodeLabel::kTag, NodeLabel::kDate, NodeLabel::kOut}) {
      CHECK(parse_node_label(to_string(l)) == l);
    }
    CHECK(parse_boundary_label("BEGIN") == BoundaryLabel::kBegin);
    CHECK_FALSE(parse_node_label("price").has_value());
    CHECK_FALSE(parse_boundary_label("begin").has_value());
    CHECK(to_node_label(AttributeLabel::kDate) == NodeLabel::kDate);
    CHECK_FALSE(to_node_label(AttributeLabel::kAuthor).has_value());
  }
}

}  // namespace
}  // namespace recx
