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

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "recx/corpus.hpp"
#include "recx/errors.hpp"
#include "recx/syngen.hpp"
#include "temp_dir.hpp"

namespace recx {
namespace {

RecordAnnotation titled(const std::string& title, std::size_t i) {
  RecordAnnotation r;
  r.boundary = XPath::parse("/html[1]/body[1]/ul[1]/li[" + std::to_string(i + 1) + "]");
  r.attributes.push_back({AttributeLabel::kTitle, r.boundary.child("a", 1), title});
  return r;
}

AnnotatedPage page_of(const std::string& id, const std::string& domain, std::size_t n_records,
                      const std::string& stem = "t") {
  AnnotatedPage p;
  p.page_id = id;
  p.domain = domain;
  p.html_file = "html/" + id + ".html";
  for (std::size_t i = 0; i < n_records; ++i) p.records.push_back(titled(stem + std::to_string(i), i));
  return p;
}

std::size_t count_tag(const DomTree& t, const std::string& tag) {
  return static_cast<std::size_t>(
      std::count_if(t.nodes().begin(), t.nodes().end(), [&](const DomNode& n) { return n.tag == tag; }));
}

TEST_SUITE("corpus") {
  TEST_CASE("cleaning removes every script block") {
    const DomTree t = parse_html(
        "<html><head><script>a()</script></head><body><script src=x></script><p>t</p>"
        "<script>b()</script></body></html>");
    REQUIRE(count_tag(t, "script") == 3);
    const DomTree c = clean_html(t);
    CHECK(count_tag(c, "script") == 0);
    CHECK(c.node(*c.find(XPath::parse("/html[1]/body[1]/p[1]"))).own_text == "t");
  }

  TEST_CASE("cleaning reindexes siblings") {
    const DomTree c = clean_html(parse_html("<html><body><div><script>x</script><p>t</p></div></body></html>"));
    const NodeId div = *c.find(XPath::parse("/html[1]/body[1]/div[1]"));
    REQUIRE(c.node(div).children.size() == 1);
    CHECK(c.xpath(c.node(div).children[0]).str() == "/html[1]/body[1]/div[1]/p[1]");
  }

  TEST_CASE("cleaning is the identity without script or style") {
    const DomTree t = parse_html("<html><body><ul><li><a href=/a>x</a> y</li><li>z</li></ul></body></html>");
    const DomTree c = clean_html(t);
    REQUIRE(c.size() == t.size());
    for (NodeId id = 0; id < t.size(); ++id) {
      CHECK(c.xpath(id) == t.xpath(id));
      CHECK(c.node(id).own_text == t.node(id).own_text);
      CHECK(c.node(id).attrs == t.node(id).attrs);
    }
    const DomTree twice = clean_html(c);
    CHECK(serialize_html(twice) == serialize_html(c));
  }

  TEST_CASE("duplicate threshold is strictly above a quarter") {
    const AnnotatedPage page = page_of("p", "d", 8);
    std::unordered_set<std::string> seen;
    seen.insert(record_key(page.records[0]));
    seen.insert(record_key(page.records[5]));
    CHECK_FALSE(is_duplicate(page, seen));
    seen.insert(record_key(page.records[7]));
    CHECK(is_duplicate(page, seen));
    CHECK_FALSE(is_duplicate(page_of("empty", "d", 0), seen));
  }

  TEST_CASE("record keys ignore attribute order and xpaths") {
    RecordAnnotation a = titled("x", 0);
    a.attributes.push_back({AttributeLabel::kTag, XPath::parse("/html[1]/b[1]"), "sports"});
    RecordAnnotation b = titled("x", 4);
    b.attributes.insert(b.attributes.begin(), {AttributeLabel::kTag, XPath::parse("/html[1]/i[1]"), "sports"});
    CHECK(record_key(a) == record_key(b));
    CHECK(record_key(a) != record_key(titled("x", 0)));
    CHECK(record_key(RecordAnnotation{}).empty());
  }

  TEST_CASE("dedupe keeps the first occurrence") {
    std::vector<AnnotatedPage> pages = {page_of("a", "d", 4), page_of("b", "d", 4, "u"), page_of("c", "d", 4)};
    const DedupResult r = dedupe(pages);
    CHECK(r.dropped == std::vector<std::string>{"c"});
    REQUIRE(r.kept.size() == 2);
    CHECK(r.kept[1].page_id == "b");
  }

  TEST_CASE("four equal domains split three to one") {
    std::vector<AnnotatedPage> pages;
    for (int d = 0; d < 4; ++d) {
      for (int i = 0; i < 25; ++i) {
        pages.push_back(page_of("d" + std::to_string(d) + "-" + std::to_string(i), "site" + std::to_string(d), 2));
      }
    }
    const CorpusSplit s = split_by_domain(pages, 0.75, 3);
    CHECK(s.train.size() == 75);
    CHECK(s.test.size() == 25);
    std::set<std::string> train_domains, test_domains;
    for (const auto& p : s.train) train_domains.insert(p.domain);
    for (const auto& p : s.test) test_domains.insert(p.domain);
    CHECK(train_domains.size() == 3);
    CHECK(test_domains.size() == 1);
    for (const auto& d : test_domains) CHECK(train_domains.count(d) == 0);

    const CorpusSplit again = split_by_domain(pages, 0.75, 3);
    REQUIRE(again.train.size() == s.train.size());
    for (std::size_t i = 0; i < s.train.size(); ++i) CHECK(again.train[i].page_id == s.train[i].page_id);
  }

  TEST_CASE("split rejects infeasible input") {
    std::vector<AnnotatedPage> one;
    for (int i = 0; i < 10; ++i) one.push_back(page_of("p" + std::to_string(i), "only", 2));
    CHECK_THROWS_AS(split_by_domain(one, 0.75, 1), InfeasibleSplit);
    CHECK_THROWS_AS(split_by_domain(one, 1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(split_by_domain({}, 0.75, 1), std::invalid_argument);
  }

  TEST_CASE("statistics count pages records and sites") {
    const CorpusStats empty = compute_stats({});
    CHECK(empty.total_pages == 0);
    for (const auto& a : empty.attributes) {
      CHECK(a.pages == 0);
      CHECK(a.records == 0);
      CHECK(a.sites == 0);
    }

    std::vector<AnnotatedPage> pages = {page_of("a", "x", 3), page_of("b", "x", 2), page_of("c", "y", 4)};
    pages[0].records[0].attributes.push_back({AttributeLabel::kTag, XPath::parse("/html[1]/b[1]"), "s"});
    pages[0].records[0].attributes.push_back({AttributeLabel::kTag, XPath::parse("/html[1]/b[2]"), "t"});
    pages[2].records[1].attributes.push_back({AttributeLabel::kTag, XPath::parse("/html[1]/b[1]"), "s"});
    const CorpusStats s = compute_stats(pages);
    CHECK(s.total_pages == 3);
    CHECK(s.at(AttributeLabel::kTitle).pages == 3);
    CHECK(s.at(AttributeLabel::kTitle).records == 9);
    CHECK(s.at(AttributeLabel::kTitle).sites == 2);
    CHECK(s.at(AttributeLabel::kTag).pages == 2);
    CHECK(s.at(AttributeLabel::kTag).records == 2);
    CHECK(s.at(AttributeLabel::kTag).sites == 2);
    CHECK(s.at(AttributeLabel::kAuthor).records == 0);
    CHECK(format_stats_tsv(s).find("title\t3\t9\t2\n") != std::string::npos);
    CHECK(format_stats_markdown(s).find("| tag | 2 | 2 | 2 |") != std::string::npos);
  }

  TEST_CASE("annotation json round trip") {
    const GeneratedPage g = generate_page(PageSpec{});
    const AnnotatedPage back = annotation_from_json(annotation_to_json(g.page));
    CHECK(annotation_to_json(back) == annotation_to_json(g.page));
    CHECK_THROWS_AS(annotation_from_json(nlohmann::json::array()), CorpusFormatError);
    CHECK_THROWS_AS(annotation_from_json({{"page_id", "x"}, {"domain", "d"}, {"html_file", "f"}}), CorpusFormatError);
    auto j = annotation_to_json(g.page);
    j["records"][0]["attributes"][0]["label"] = "price";
    CHECK_THROWS_AS(annotation_from_json(j), CorpusFormatError);
    j = annotation_to_json(g.page);
    j["records"][0]["boundary_xpath"] = "body/li";
    CHECK_THROWS_AS(annotation_from_json(j), CorpusFormatError);
  }

  TEST_CASE("pages written to disk load back clean and valid") {
    testing::TempDir dir("recx-corpus");
    PageSpec spec;
    spec.noise = NoiseSet::all();
    const GeneratedPage g = generate_page(spec);
    write_page(dir.path(), g.page, g.html);
    {
      std::ofstream(dir.path() / "annotations" / "notes.json") << "{\"kind\": \"manifest\"}";
    }
    const Corpus c = load_corpus(dir.path());
    CHECK(c.issues.empty());
    REQUIRE(c.pages.size() == 1);
    REQUIRE(c.pages[0].html);
    CHECK(count_tag(*c.pages[0].html, "script") == 0);
    CHECK(validate_page(c.pages[0]).empty());

    const Corpus raw = load_corpus(dir.path(), LoadOptions{.load_html = true, .clean = false, .validate = false});
    CHECK(count_tag(*raw.pages[0].html, "script") > 0);
    const Corpus bare = load_corpus(dir.path(), LoadOptions{.load_html = false});
    CHECK_FALSE(bare.pages[0].html);
  }

  TEST_CASE("loading reports problems per page") {
    testing::TempDir dir("recx-corpus");
    AnnotatedPage p = page_of("bad", "d", 1);
    write_page(dir.path(), p, "<p>caf\xE9</p>");
    AnnotatedPage q = page_of("odd", "d", 2);
    write_page(dir.path(), q, "<html><body><p>nothing here</p></body></html>");
    const Corpus c = load_corpus(dir.path());
    REQUIRE(c.pages.size() == 2);
    CHECK_FALSE(c.pages[0].html);
    std::ostringstream all;
    for (const auto& issue : c.issues) all << issue << "\n";
    CHECK(all.str().find("bad: ") != std::string::npos);
    CHECK(all.str().find("odd: page has 2") == std::string::npos);
    CHECK(all.str().find("odd: record 0: boundary") != std::string::npos);

    CHECK_THROWS_AS(load_corpus(dir.path() / "missing"), IoError);
    std::ofstream(dir.path() / "annotations" / "broken.json") << "{";
    CHECK_THROWS_AS(load_corpus(dir.path()), CorpusFormatError);
  }
}

}  // namespace
}  // namespace recx
