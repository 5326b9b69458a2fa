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

#include "recx/syngen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <stdexcept>

#include "recx/errors.hpp"

namespace recx {
namespace {

// Word lists. Titles and summaries draw from kWords, tags from kTags.
constexpr std::array<std::string_view, 120> kWords = {
    "city",     "council",  "approves", "new",       "budget",    "plan",      "for",       "river",
    "bridge",   "repairs",  "after",    "months",    "of",        "debate",    "local",     "school",
    "board",    "announces", "changes", "to",        "spring",    "exam",      "schedule",  "museum",
    "opens",    "exhibit",  "on",       "early",     "maps",      "and",       "trade",     "routes",
    "weather",  "service",  "warns",    "drivers",   "about",     "icy",       "roads",     "across",
    "northern", "districts", "hospital", "expands",  "night",     "clinic",    "with",      "volunteer",
    "doctors",  "farmers",  "market",   "returns",   "downtown",  "square",    "this",      "weekend",
    "researchers", "test",  "quiet",    "electric",  "buses",     "along",     "coastal",   "line",
    "library",  "extends",  "hours",    "during",    "winter",    "holidays",  "mayor",     "meets",
    "residents", "over",    "parking",  "fees",      "near",      "station",   "startup",   "raises",
    "funds",    "solar",    "panels",   "rooftop",   "gardens",   "students",  "build",     "robot",
    "that",     "sorts",    "recycling", "theater",  "group",     "stages",    "classic",   "comedy",
    "at",       "old",      "mill",     "police",    "report",    "fewer",     "burglaries", "in",
    "harbor",   "district", "regional", "airport",   "adds",      "direct",    "flights",   "south",
    "park",     "rangers",  "count",    "migrating", "birds",     "wetlands",  "firm",      "hires",
};

constexpr std::array<std::string_view, 32> kTags = {
    "Politics",     "Economy",     "Local news",   "Education",    "Health",        "Science",
    "Technology",   "Culture",     "Sports",       "Weather",      "Transport",     "Environment",
    "City hall",    "Business",    "Travel",       "Crime",        "Housing",       "Energy",
    "Arts",         "Food",        "Opinion",      "World",        "Real estate",   "Startups",
    "Public safety", "Family",     "Jobs",         "Events",       "Science and tech", "Climate",
    "History",      "Community",
};

constexpr std::array<std::string_view, 12> kFirstNames = {"Anna", "Boris", "Chen", "Dana", "Emil", "Farah",
                                                          "Goran", "Hana", "Ivan", "Julia", "Kofi", "Lena"};
constexpr std::array<std::string_view, 12> kLastNames = {"Adams", "Brandt", "Costa", "Dvorak", "Evans", "Fischer",
                                                         "Garcia", "Horvat", "Ito", "Jensen", "Khan", "Lindqvist"};
constexpr std::array<std::string_view, 8> kSites = {"Daily Herald", "Metro Courier", "River Gazette", "Evening Post",
                                                    "Harbor Times", "Valley Ledger", "North Star", "Town Crier"};
constexpr std::array<std::string_view, 6> kSections = {"Latest news", "Top stories", "Local", "Around town",
                                                       "Headlines", "Updates"};
constexpr std::array<std::string_view, 8> kNavItems = {"Home", "World", "Business", "Sport",
                                                       "Culture", "Opinion", "Video", "Contact"};
constexpr std::array<std::string_view, 12> kMonths = {"January", "February", "March",     "April",   "May",      "June",
                                                      "July",    "August",   "September", "October", "November", "December"};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(engine_() % n); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }
  template <typename C>
  auto pick(const C& c) -> decltype(c[0]) {
    return c[below(std::size(c))];
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string words(Rng& rng, std::size_t lo, std::size_t hi) {
  std::string out;
  const std::size_t n = rng.between(lo, hi);
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out.push_back(' ');
    out.append(rng.pick(kWords));
  }
  out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

std::string two(int v) { return (v < 10 ? "0" : "") + std::to_string(v); }

// A date between 28 Dec 2023 and 28 Apr 2024 in one of several styles.
std::string make_date(Rng& rng, int style) {
  static constexpr int kDays[] = {31, 29, 31, 30};  // Jan..Apr 2024
  int offset = static_cast<int>(rng.below(123));
  int year = 2023, month = 12, day = 28 + offset;
  if (day > 31) {
    day -= 31;
    year = 2024;
    month = 1;
    while (day > kDays[month - 1]) {
      day -= kDays[month - 1];
      ++month;
    }
  }
  const std::string name(kMonths[month - 1]);
  switch (style) {
    case 0: return two(day) + "." + two(month) + "." + std::to_string(year);
    case 1: return std::to_string(year) + "-" + two(month) + "-" + two(day);
    case 2: return std::to_string(day) + " " + name + " " + std::to_string(year);
    case 3: return name + " " + std::to_string(day) + ", " + std::to_string(year);
    case 4:
      return two(day) + "." + two(month) + "." + std::to_string(year) + " " + two(static_cast<int>(rng.below(24))) +
             ":" + two(static_cast<int>(rng.below(60)));
    case 5: return name.substr(0, 3) + " " + std::to_string(day) + ", " + std::to_string(year);
    default: {
      const std::size_t n = rng.between(1, 23);
      return std::to_string(n) + (n == 1 ? " hour ago" : " hours ago");
    }
  }
}
constexpr int kDateStyles = 7;

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string slug(std::string_view title) {
  std::string out;
  for (char c : title) {
    if (c == ' ') {
      out.push_back('-');
    } else {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (out.size() >= 40) break;
  }
  return out;
}

void check(const PageSpec& spec) {
  if (spec.n_records < 2) throw std::invalid_argument("a list page needs at least two records");
  auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!prob(spec.optional_attr_dropout.date) || !prob(spec.optional_attr_dropout.tag)) {
    throw std::invalid_argument("dropout probabilities must lie in [0, 1]");
  }
  if (spec.multi_tag_range.first > spec.multi_tag_range.second || spec.multi_tag_range.second > kTags.size()) {
    throw std::invalid_argument("bad multi_tag_range");
  }
}

// Everything random about a page besides its records, fixed before
// rendering so both renderings agree.
struct Layout {
  std::string site;
  std::string section;
  std::map<std::string, std::string> cls;
  std::vector<std::string> nav;
  std::string footer_date;
  std::vector<std::string> ads;
  std::vector<std::size_t> counters;  // comments or views per record
  std::string source;
};

Layout make_layout(const PageSpec& spec, std::size_t n_records) {
  Rng rng(mix(spec.seed, 0x1a70u));
  Layout l;
  l.site = std::string(rng.pick(kSites));
  l.section = std::string(rng.pick(kSections));
  static constexpr std::string_view kRoles[] = {"list", "item", "thumb", "body", "head", "summary", "meta",
                                                "date", "tags",  "tag",   "author", "extra", "source"};
  const std::string prefix = spec.class_name_churn ? "c" + std::to_string(rng.below(100000)) + "-" : "";
  for (auto role : kRoles) l.cls[std::string(role)] = prefix + std::string(role);
  const std::size_t n_nav = rng.between(5, kNavItems.size());
  for (std::size_t i = 0; i < n_nav; ++i) l.nav.emplace_back(kNavItems[i]);
  l.footer_date = make_date(rng, 0);
  for (int i = 0; i < 3; ++i) l.ads.push_back("Sponsored: " + words(rng, 3, 5));
  for (std::size_t i = 0; i < n_records; ++i) l.counters.push_back(rng.between(0, 400));
  l.source = std::string(rng.pick(kSites));
  return l;
}

class Renderer {
 public:
  Renderer(const PageSpec& spec, const Layout& layout, const std::vector<RecordContent>& records, bool markers)
      : spec_(spec), l_(layout), records_(records), markers_(markers) {}

  std::string render() {
    out_ += "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n";
    out_ += "<title>" + escape(l_.section) + " | " + escape(l_.site) + "</title>\n";
    out_ += "<style>body { font-family: serif; } ." + l_.cls.at("item") + " { margin: 1em; }</style>\n";
    out_ += "<script>window.dataLayer = [{\"page\": \"list\"}];</script>\n</head>\n<body>\n";
    out_ += "<header><a class=\"logo\" href=\"/\">" + escape(l_.site) + "</a></header>\n";
    if (spec_.noise.nav) {
      out_ += "<nav><ul>";
      for (const auto& item : l_.nav) out_ += "<li><a href=\"/" + slug(item) + "\">" + escape(item) + "</a></li>";
      out_ += "</ul></nav>\n";
    }
    out_ += "<main>\n<h1>" + escape(l_.section) + "</h1>\n";
    switch (spec_.layout) {
      case PageTemplate::kList: list(); break;
      case PageTemplate::kCards: cards(); break;
      case PageTemplate::kPairs: pairs(); break;
    }
    out_ += "</main>\n";
    if (spec_.noise.ads) {
      out_ += "<aside>\n";
      for (const auto& ad : l_.ads) {
        out_ += "<div class=\"ad\"><a href=\"/promo\"><img src=\"/ad.png\" alt=\"\"><span>" + escape(ad) +
                "</span></a></div>\n";
      }
      out_ += "</aside>\n";
    }
    if (spec_.noise.footer) {
      out_ += "<footer>\n<div class=\"links\"><a href=\"/about\">About us</a><a href=\"/contact\">Contact</a>"
              "<a href=\"/privacy\">Privacy</a></div>\n";
      out_ += "<p>Copyright 2024 " + escape(l_.site) + ". All rights reserved.</p>\n";
      out_ += "<span class=\"updated\">" + escape(l_.footer_date) + "</span>\n</footer>\n";
    }
    out_ += "<script>track('list');</script>\n</body>\n</html>\n";
    return std::move(out_);
  }

 private:
  std::string mark(std::size_t record, std::string_view kind) const {
    if (!markers_) return {};
    return " data-recx=\"" + std::to_string(record) + ":" + std::string(kind) + "\"";
  }
  std::string cls(const char* role) const { return " class=\"" + l_.cls.at(role) + "\""; }

  std::string title(std::size_t i, const char* heading) const {
    const RecordContent& r = records_[i];
    return "<" + std::string(heading) + cls("head") + "><a href=\"/news/" + slug(r.title) + "\"" + mark(i, "title") +
           ">" + escape(r.title) + "</a></" + heading + ">";
  }
  std::string date(std::size_t i) const {
    const RecordContent& r = records_[i];
    if (!r.date) return {};
    return "<span" + cls("date") + mark(i, "date") + ">" + escape(*r.date) + "</span>";
  }
  std::string tags(std::size_t i) const {
    std::string s = "<div" + cls("tags") + ">";
    for (const auto& t : records_[i].tags) {
      s += "<a href=\"/tag/" + slug(t) + "\"" + cls("tag") + mark(i, "tag") + ">" + escape(t) + "</a>";
    }
    return s + "</div>";
  }
  std::string summary(std::size_t i) const {
    return "<p" + cls("summary") + mark(i, "short_text") + ">" + escape(records_[i].summary) + "</p>";
  }
  std::string thumb(std::size_t i) const {
    return "<div" + cls("thumb") + "><img src=\"/img/" + std::to_string(i) + ".jpg\" alt=\"\"></div>";
  }

  void list() {
    out_ += "<ul" + cls("list") + ">\n";
    for (std::size_t i = 0; i < records_.size(); ++i) {
      const RecordContent& r = records_[i];
      out_ += "<li" + cls("item") + mark(i, "record") + ">\n";
      out_ += "  <div" + cls("thumb") + "><a href=\"/news/" + slug(r.title) + "\"><img src=\"/img/" +
              std::to_string(i) + ".jpg\" alt=\"\"></a></div>\n";
      out_ += "  <div" + cls("body") + ">\n    " + title(i, "h3") + "\n    " + summary(i) + "\n";
      out_ += "    <div" + cls("meta") + ">" + date(i) + tags(i) + "</div>\n  </div>\n</li>\n";
    }
    out_ += "</ul>\n";
  }

  void cards() {
    out_ += "<div" + cls("list") + ">\n";
    for (std::size_t i = 0; i < records_.size(); ++i) {
      const RecordContent& r = records_[i];
      out_ += "<div" + cls("item") + mark(i, "record") + ">\n  " + date(i) + "\n  " + thumb(i) + "\n";
      out_ += "  <div" + cls("body") + ">" + title(i, "h2") + summary(i) + "<span" + cls("author") +
              mark(i, "author") + ">" + escape(r.author) + "</span></div>\n";
      out_ += "  " + tags(i) + "\n  <span" + cls("extra") + ">" + std::to_string(l_.counters[i]) +
              " comments</span>\n</div>\n";
    }
    out_ += "</div>\n";
  }

  void pairs() {
    out_ += "<div" + cls("list") + ">\n";
    for (std::size_t i = 0; i < records_.size(); ++i) {
      std::string head = title(i, "h3");
      head.insert(3, mark(i, "record"));  // after "<h3"
      out_ += head + "\n<div" + cls("body") + mark(i, "record") + ">\n  " + thumb(i) + "\n  " + summary(i) + "\n";
      out_ += "  <div" + cls("meta") + ">" + date(i) + "<span" + cls("source") + ">" + escape(l_.source) +
              "</span><span" + cls("extra") + ">" + std::to_string(l_.counters[i]) + " views</span></div>\n";
      out_ += "  " + tags(i) + "\n</div>\n";
    }
    out_ += "</div>\n";
  }

  const PageSpec& spec_;
  const Layout& l_;
  const std::vector<RecordContent>& records_;
  bool markers_;
  std::string out_;
};

struct Marked {
  std::vector<NodeId> roots;
  std::vector<std::pair<NodeId, AttributeLabel>> attributes;
};

std::vector<RecordAnnotation> read_markers(const DomTree& tree, std::size_t n_records) {
  std::vector<Marked> marked(n_records);
  for (const DomNode& n : tree.nodes()) {
    auto it = n.attrs.find("data-recx");
    if (it == n.attrs.end()) continue;
    const std::string& v = it->second;
    const std::size_t colon = v.find(':');
    const std::size_t record = std::stoul(v.substr(0, colon));
    const std::string kind = v.substr(colon + 1);
    if (kind == "record") {
      marked.at(record).roots.push_back(n.id);
    } else {
      marked.at(record).attributes.emplace_back(n.id, *parse_attribute_label(kind));
    }
  }
  std::vector<RecordAnnotation> out;
  for (const auto& m : marked) {
    RecordAnnotation r;
    std::optional<NodeId> boundary;
    for (NodeId root : m.roots) {
      for (NodeId id = root; id < tree.subtree_end(root) && !boundary; ++id) {
        if (!tree.node(id).own_text.empty()) boundary = id;
      }
      if (boundary) break;
    }
    if (!boundary) throw std::logic_error("generated record without text");
    r.boundary = tree.xpath(*boundary);
    for (const auto& [id, label] : m.attributes) r.attributes.push_back({label, tree.xpath(id), tree.node(id).own_text});
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::string_view to_string(PageTemplate t) {
  switch (t) {
    case PageTemplate::kList: return "list";
    case PageTemplate::kCards: return "cards";
    case PageTemplate::kPairs: return "pairs";
  }
  return "list";
}

std::optional<PageTemplate> parse_page_template(std::string_view s) {
  for (PageTemplate t : kAllTemplates) {
    if (to_string(t) == s) return t;
  }
  return std::nullopt;
}

std::vector<RecordContent> generate_records(const PageSpec& spec) {
  check(spec);
  Rng rng(mix(spec.seed, 0x2ec0u));
  const int style = static_cast<int>(rng.below(kDateStyles));
  std::vector<RecordContent> out;
  out.reserve(spec.n_records);
  for (std::size_t i = 0; i < spec.n_records; ++i) {
    RecordContent r;
    r.title = words(rng, 7, 12);
    r.summary = words(rng, 12, 24) + ".";
    r.author = std::string(rng.pick(kFirstNames)) + " " + std::string(rng.pick(kLastNames));
    const std::size_t k = rng.between(spec.multi_tag_range.first, spec.multi_tag_range.second);
    std::vector<std::size_t> order(kTags.size());
    for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
    for (std::size_t j = 0; j < k; ++j) {
      std::swap(order[j], order[j + rng.below(order.size() - j)]);
      r.tags.emplace_back(kTags[order[j]]);
    }
    const std::string date = make_date(rng, style);
    if (rng.chance(spec.optional_attr_dropout.tag)) r.tags.clear();
    if (!rng.chance(spec.optional_attr_dropout.date)) r.date = date;
    out.push_back(std::move(r));
  }
  return out;
}

GeneratedPage render_page(const PageSpec& spec, const std::vector<RecordContent>& records) {
  check(spec);
  if (records.size() < 2) throw std::invalid_argument("a list page needs at least two records");
  const Layout layout = make_layout(spec, records.size());
  const std::string marked = Renderer(spec, layout, records, true).render();
  std::string plain = Renderer(spec, layout, records, false).render();

  const DomTree marked_tree = parse_html(marked);
  auto annotations = read_markers(marked_tree, records.size());
  auto tree = std::make_shared<const DomTree>(clean_html(parse_html(plain)));
  for (const auto& r : annotations) {
    for (const auto& a : r.attributes) {
      auto id = tree->find(a.xpath);
      if (!id || tree->node(*id).own_text != a.text) throw std::logic_error("renderings diverge at " + a.xpath.str());
    }
  }

  GeneratedPage out;
  out.html = std::move(plain);
  out.page.page_id = spec.page_id.empty() ? "page-" + std::to_string(spec.seed) : spec.page_id;
  out.page.domain = spec.domain;
  out.page.url = "https://" + spec.domain + "/list/" + out.page.page_id;
  out.page.html_file = "html/" + out.page.page_id + ".html";
  out.page.html = std::move(tree);
  out.page.records = std::move(annotations);
  return out;
}

GeneratedPage generate_page(const PageSpec& spec) { return render_page(spec, generate_records(spec)); }

GeneratedCorpus generate_corpus(const CorpusSpec& spec) {
  if (spec.n_pages == 0 || spec.n_domains == 0 || spec.templates.empty()) {
    throw std::invalid_argument("corpus needs pages, domains and templates");
  }
  if (spec.records_range.first < 2 || spec.records_range.first > spec.records_range.second) {
    throw std::invalid_argument("bad records_range");
  }
  if (!(spec.duplicate_rate >= 0.0 && spec.duplicate_rate <= 1.0) ||
      !(spec.duplicate_overlap > 0.0 && spec.duplicate_overlap <= 1.0)) {
    throw std::invalid_argument("bad duplicate settings");
  }

  Rng rng(mix(spec.seed, 0xc0u));
  struct Domain {
    std::string name;
    PageTemplate layout;
  };
  std::vector<Domain> domains;
  for (std::size_t d = 0; d < spec.n_domains; ++d) {
    domains.push_back({"site" + std::to_string(d + 1) + ".example", spec.templates[d % spec.templates.size()]});
  }

  GeneratedCorpus out;
  std::vector<std::vector<RecordContent>> contents;
  std::vector<std::size_t> domain_of;
  std::vector<bool> injected;
  const int width = static_cast<int>(std::to_string(spec.n_pages).size()) + 1;
  for (std::size_t i = 0; i < spec.n_pages; ++i) {
    const std::size_t d = rng.below(domains.size());
    std::string id = std::to_string(i + 1);
    id.insert(0, static_cast<std::size_t>(std::max(0, width - static_cast<int>(id.size()))), '0');

    PageSpec page;
    page.seed = mix(spec.seed, i + 1);
    page.n_records = rng.between(spec.records_range.first, spec.records_range.second);
    page.layout = domains[d].layout;
    page.optional_attr_dropout = spec.optional_attr_dropout;
    page.multi_tag_range = spec.multi_tag_range;
    page.noise = spec.noise;
    page.class_name_churn = spec.class_name_churn;
    page.page_id = "page-" + id;
    page.domain = domains[d].name;
    std::vector<RecordContent> records = generate_records(page);

    bool copy = rng.chance(spec.duplicate_rate);
    std::vector<std::size_t> sources;
    for (std::size_t j = 0; j < i; ++j) {
      if (domain_of[j] == d && !injected[j]) sources.push_back(j);
    }
    if (copy && !sources.empty()) {
      const std::size_t src = sources[rng.below(sources.size())];
      const auto& from = contents[src];
      const std::size_t m = std::min({from.size(), records.size(),
                                      static_cast<std::size_t>(std::ceil(spec.duplicate_overlap *
                                                                         static_cast<double>(records.size())))});
      for (std::size_t j = 0; j < m; ++j) records[j] = from[j];
      out.duplicates.push_back({page.page_id, out.pages[src].page.page_id, m});
    } else {
      copy = false;
    }
    out.pages.push_back(render_page(page, records));
    contents.push_back(std::move(records));
    domain_of.push_back(d);
    injected.push_back(copy);
  }
  return out;
}

nlohmann::json corpus_manifest(const CorpusSpec& spec, const GeneratedCorpus& corpus) {
  nlohmann::json templates = nlohmann::json::array();
  for (PageTemplate t : spec.templates) templates.push_back(to_string(t));
  nlohmann::json dups = nlohmann::json::array();
  for (const auto& d : corpus.duplicates) {
    dups.push_back({{"page_id", d.page_id}, {"source_page_id", d.source_page_id}, {"copied_records", d.copied_records}});
  }
  return {
      {"generator", "recx-syngen"},
      {"seed", spec.seed},
      {"pages", corpus.pages.size()},
      {"domains", spec.n_domains},
      {"templates", std::move(templates)},
      {"records_range", {spec.records_range.first, spec.records_range.second}},
      {"multi_tag_range", {spec.multi_tag_range.first, spec.multi_tag_range.second}},
      {"dropout", {{"date", spec.optional_attr_dropout.date}, {"tag", spec.optional_attr_dropout.tag}}},
      {"noise", {{"nav", spec.noise.nav}, {"footer", spec.noise.footer}, {"ads", spec.noise.ads}}},
      {"class_name_churn", spec.class_name_churn},
      {"duplicate_rate", spec.duplicate_rate},
      {"duplicate_overlap", spec.duplicate_overlap},
      {"injected_duplicates", std::move(dups)},
  };
}

void write_corpus(const std::filesystem::path& root, const CorpusSpec& spec, const GeneratedCorpus& corpus) {
  for (const auto& p : corpus.pages) write_page(root, p.page, p.html);
  std::ofstream out(root / "syngen.json", std::ios::binary);
  if (!out) throw IoError("cannot write " + (root / "syngen.json").string());
  out << corpus_manifest(spec, corpus).dump(2) << "\n";
  if (!out) throw IoError("write failed for " + (root / "syngen.json").string());
}

}  // namespace recx
