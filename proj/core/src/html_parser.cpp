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

// Lenient HTML tokenizer and tree builder.
//
// The tree builder follows the HTML5 implied-end-tag rules that matter for
// list pages (p, li, dt/dd, option, table rows and cells, headings, nested
// anchors) and otherwise keeps the source nesting. It deliberately does not
// synthesize <head>/<body>, and it honours `<tag/>` on non-void elements as
// an empty element.

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "html_tags.hpp"
#include "recx/dom.hpp"
#include "recx/errors.hpp"
#include "recx/text.hpp"

namespace recx {
namespace {

const std::unordered_map<std::string_view, char32_t>& named_entities() {
  static const std::unordered_map<std::string_view, char32_t> table = {
      {"amp", '&'},      {"lt", '<'},        {"gt", '>'},        {"quot", '"'},
      {"apos", '\''},    {"nbsp", 0xA0},     {"copy", 0xA9},     {"reg", 0xAE},
      {"trade", 0x2122}, {"hellip", 0x2026}, {"mdash", 0x2014},  {"ndash", 0x2013},
      {"laquo", 0xAB},   {"raquo", 0xBB},    {"lsquo", 0x2018},  {"rsquo", 0x2019},
      {"ldquo", 0x201C}, {"rdquo", 0x201D},  {"bdquo", 0x201E},  {"sbquo", 0x201A},
      {"bull", 0x2022},  {"middot", 0xB7},   {"deg", 0xB0},      {"euro", 0x20AC},
      {"pound", 0xA3},   {"yen", 0xA5},      {"cent", 0xA2},     {"sect", 0xA7},
      {"para", 0xB6},    {"times", 0xD7},    {"divide", 0xF7},   {"plusmn", 0xB1},
      {"frac12", 0xBD},  {"frac14", 0xBC},   {"frac34", 0xBE},   {"shy", 0xAD},
      {"thinsp", 0x2009}, {"ensp", 0x2002},  {"emsp", 0x2003},   {"zwnj", 0x200C},
      {"zwj", 0x200D},   {"larr", 0x2190},   {"rarr", 0x2192},   {"uarr", 0x2191},
      {"darr", 0x2193},  {"hearts", 0x2665}, {"iexcl", 0xA1},    {"iquest", 0xBF},
      {"aacute", 0xE1},  {"eacute", 0xE9},   {"iacute", 0xED},   {"oacute", 0xF3},
      {"uacute", 0xFA},  {"ntilde", 0xF1},   {"uuml", 0xFC},     {"ouml", 0xF6},
      {"auml", 0xE4},    {"szlig", 0xDF},    {"ccedil", 0xE7},   {"agrave", 0xE0},
      {"egrave", 0xE8},  {"numero", 0x2116}, {"prime", 0x2032},  {"minus", 0x2212},
  };
  return table;
}

// Decodes character references in `s`. Unknown references stay literal.
std::string decode_entities(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '&') {
      out.push_back(s[i++]);
      continue;
    }
    std::size_t j = i + 1;
    if (j < s.size() && s[j] == '#') {
      ++j;
      const bool hex = j < s.size() && (s[j] == 'x' || s[j] == 'X');
      if (hex) ++j;
      const std::size_t digits = j;
      char32_t cp = 0;
      while (j < s.size() && (hex ? std::isxdigit(static_cast<unsigned char>(s[j]))
                                  : std::isdigit(static_cast<unsigned char>(s[j])))) {
        const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(s[j])));
        cp = cp * (hex ? 16 : 10) + static_cast<char32_t>(c <= '9' ? c - '0' : c - 'a' + 10);
        if (cp > 0x10FFFF) cp = 0x110000;
        ++j;
      }
      if (j == digits) {
        out.push_back(s[i++]);
        continue;
      }
      if (j < s.size() && s[j] == ';') ++j;
      if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
      append_utf8(out, cp);
      i = j;
      continue;
    }
    while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j])) && j - i <= 10) ++j;
    const std::string_view name = s.substr(i + 1, j - i - 1);
    auto it = named_entities().find(name);
    if (it != named_entities().end()) {
      append_utf8(out, it->second);
      i = (j < s.size() && s[j] == ';') ? j + 1 : j;
      continue;
    }
    out.push_back(s[i++]);
  }
  return out;
}

struct Tag {
  std::string name;
  std::map<std::string, std::string> attrs;
  bool end = false;
  bool self_closing = false;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f'; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

class TreeConstructor {
 public:
  void start_tag(Tag tag) {
    const std::string& name = tag.name;
    if (name == "html") {
      ensure_root(std::move(tag.attrs));
      return;
    }
    ensure_root({});
    if (name == "head" || name == "body") {
      if (seen_.count(name)) return;
      seen_.insert({name, true});
      close_head_if_open();
    } else if (in_head() && !html::contains(html::kHeadContent, name)) {
      close_head_if_open();
    }

    if (html::contains(html::kClosesParagraph, name)) close_in_scope("p", {});
    if (name == "li") {
      close_in_scope("li", {"ul", "ol"});
    } else if (name == "dd" || name == "dt") {
      close_in_scope("dd", {"dl"});
      close_in_scope("dt", {"dl"});
    } else if (name == "option") {
      if (current() == "option") builder_.close();
    } else if (name == "optgroup") {
      if (current() == "option") builder_.close();
      if (current() == "optgroup") builder_.close();
    } else if (name == "tr") {
      close_in_scope("td", {"tr"});
      close_in_scope("th", {"tr"});
      close_in_scope("tr", {"thead", "tbody", "tfoot"});
    } else if (name == "td" || name == "th") {
      close_in_scope("td", {"tr"});
      close_in_scope("th", {"tr"});
    } else if (name == "thead" || name == "tbody" || name == "tfoot") {
      close_in_scope("td", {});
      close_in_scope("th", {});
      close_in_scope("tr", {});
      close_in_scope("thead", {});
      close_in_scope("tbody", {});
      close_in_scope("tfoot", {});
    } else if (html::is_heading(name)) {
      if (html::is_heading(current())) builder_.close();
    } else if (name == "a") {
      close_in_scope("a", {});
    }

    builder_.open(name, std::move(tag.attrs));
    if (html::is_void(name) || tag.self_closing) builder_.close();
  }

  void end_tag(const std::string& name) {
    if (builder_.depth() == 0) return;
    if (name == "html" || name == "body") return;
    // Pop to the matching element, but never past a scope boundary unless
    // the tag names the boundary itself.
    for (std::size_t k = 0; k + 1 < builder_.depth(); ++k) {
      const std::string& open = builder_.open_tag(k);
      if (open == name) {
        for (std::size_t n = 0; n <= k; ++n) builder_.close();
        return;
      }
      if (html::contains(html::kScopeBoundary, open)) return;
    }
  }

  void text(std::string_view decoded, bool counts_as_text) {
    if (decoded.empty()) return;
    const bool whitespace_only = std::all_of(decoded.begin(), decoded.end(), is_space);
    if (builder_.depth() == 0) {
      if (whitespace_only) return;
      ensure_root({});
    }
    if (!whitespace_only && in_head() && current() == "head") close_head_if_open();
    builder_.text(decoded, counts_as_text);
  }

  const std::string& current() const {
    static const std::string none;
    return builder_.depth() == 0 ? none : builder_.open_tag(0);
  }

  DomTree finish() && {
    ensure_root({});
    return std::move(builder_).finish();
  }

 private:
  void ensure_root(std::map<std::string, std::string> attrs) {
    if (builder_.depth() == 0 && !root_opened_) {
      builder_.open("html", std::move(attrs));
      root_opened_ = true;
    }
  }

  bool in_head() const {
    for (std::size_t k = 0; k < builder_.depth(); ++k) {
      if (builder_.open_tag(k) == "head") return true;
    }
    return false;
  }

  void close_head_if_open() {
    for (std::size_t k = 0; k + 1 < builder_.depth(); ++k) {
      if (builder_.open_tag(k) == "head") {
        for (std::size_t n = 0; n <= k; ++n) builder_.close();
        return;
      }
    }
  }

  // Closes the nearest open `name` unless a scope boundary (default set plus
  // `extra`) is hit first.
  void close_in_scope(std::string_view name, std::initializer_list<std::string_view> extra) {
    for (std::size_t k = 0; k + 1 < builder_.depth(); ++k) {
      const std::string& open = builder_.open_tag(k);
      if (open == name) {
        for (std::size_t n = 0; n <= k; ++n) builder_.close();
        return;
      }
      if (html::contains(html::kScopeBoundary, open)) return;
      for (auto e : extra) {
        if (open == e) return;
      }
    }
  }

  DomTree::Builder builder_;
  bool root_opened_ = false;
  std::map<std::string, bool, std::less<>> seen_;
};

class Tokenizer {
 public:
  Tokenizer(std::string_view src, TreeConstructor& sink) : src_(src), sink_(sink) {}

  void run() {
    std::size_t text_start = 0;
    while (pos_ < src_.size()) {
      if (src_[pos_] != '<') {
        ++pos_;
        continue;
      }
      const std::size_t lt = pos_;
      if (starts_with("<!--")) {
        flush_text(text_start, lt);
        const auto end = src_.find("-->", pos_ + 4);
        pos_ = end == std::string_view::npos ? src_.size() : end + 3;
        text_start = pos_;
      } else if (starts_with("<![CDATA[")) {
        flush_text(text_start, lt);
        const auto end = src_.find("]]>", pos_ + 9);
        const std::size_t stop = end == std::string_view::npos ? src_.size() : end;
        sink_.text(src_.substr(pos_ + 9, stop - pos_ - 9), true);
        pos_ = end == std::string_view::npos ? src_.size() : end + 3;
        text_start = pos_;
      } else if (starts_with("<!") || starts_with("<?")) {
        flush_text(text_start, lt);
        const auto end = src_.find('>', pos_ + 2);
        pos_ = end == std::string_view::npos ? src_.size() : end + 1;
        text_start = pos_;
      } else if (starts_with("</") && pos_ + 2 < src_.size() && is_alpha(src_[pos_ + 2])) {
        flush_text(text_start, lt);
        Tag tag = read_tag(pos_ + 2);
        tag.end = true;
        sink_.end_tag(tag.name);
        text_start = pos_;
      } else if (pos_ + 1 < src_.size() && is_alpha(src_[pos_ + 1])) {
        flush_text(text_start, lt);
        Tag tag = read_tag(pos_ + 1);
        const std::string name = tag.name;
        const bool self_closing = tag.self_closing;
        sink_.start_tag(std::move(tag));
        if (html::is_raw_text(name) && !self_closing) read_raw_text(name);
        text_start = pos_;
      } else {
        ++pos_;
      }
    }
    flush_text(text_start, src_.size());
  }

 private:
  bool starts_with(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

  void flush_text(std::size_t begin, std::size_t end) {
    if (end > begin) sink_.text(decode_entities(src_.substr(begin, end - begin)), true);
  }

  // Reads a tag starting at the first name character; leaves pos_ after '>'.
  Tag read_tag(std::size_t at) {
    Tag tag;
    std::size_t i = at;
    while (i < src_.size() && !is_space(src_[i]) && src_[i] != '>' && src_[i] != '/') {
      tag.name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(src_[i]))));
      ++i;
    }
    while (i < src_.size() && src_[i] != '>') {
      if (is_space(src_[i])) {
        ++i;
        continue;
      }
      if (src_[i] == '/') {
        ++i;
        if (i < src_.size() && src_[i] == '>') tag.self_closing = true;
        continue;
      }
      std::string key;
      while (i < src_.size() && !is_space(src_[i]) && src_[i] != '>' && src_[i] != '=' &&
             !(src_[i] == '/' && i + 1 < src_.size() && src_[i + 1] == '>')) {
        key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(src_[i]))));
        ++i;
      }
      while (i < src_.size() && is_space(src_[i])) ++i;
      std::string value;
      if (i < src_.size() && src_[i] == '=') {
        ++i;
        while (i < src_.size() && is_space(src_[i])) ++i;
        if (i < src_.size() && (src_[i] == '"' || src_[i] == '\'')) {
          const char quote = src_[i++];
          const auto end = src_.find(quote, i);
          const std::size_t stop = end == std::string_view::npos ? src_.size() : end;
          value = decode_entities(src_.substr(i, stop - i));
          i = end == std::string_view::npos ? src_.size() : end + 1;
        } else {
          const std::size_t start = i;
          while (i < src_.size() && !is_space(src_[i]) && src_[i] != '>') ++i;
          value = decode_entities(src_.substr(start, i - start));
        }
      }
      if (!key.empty()) tag.attrs.emplace(std::move(key), std::move(value));
    }
    pos_ = i < src_.size() ? i + 1 : src_.size();
    return tag;
  }

  // Consumes element content up to the matching end tag (case-insensitive).
  void read_raw_text(const std::string& name) {
    std::size_t i = pos_;
    std::size_t stop = src_.size();
    while ((i = src_.find("</", i)) != std::string_view::npos) {
      if (to_lower_ascii(src_.substr(i + 2, name.size())) == name) {
        const std::size_t after = i + 2 + name.size();
        if (after >= src_.size() || is_space(src_[after]) || src_[after] == '>' ||
            src_[after] == '/') {
          stop = i;
          break;
        }
      }
      i += 2;
    }
    const std::string_view body = src_.substr(pos_, stop - pos_);
    const bool escapable = html::contains(html::kEscapableRawText, name);
    sink_.text(escapable ? decode_entities(body) : std::string(body),
               escapable && name != "iframe");
    if (stop < src_.size()) {
      const auto gt = src_.find('>', stop);
      pos_ = gt == std::string_view::npos ? src_.size() : gt + 1;
    } else {
      pos_ = stop;
    }
    sink_.end_tag(name);
  }

  std::string_view src_;
  TreeConstructor& sink_;
  std::size_t pos_ = 0;
};

}  // namespace

DomTree parse_html(std::string_view bytes, std::optional<std::string_view> encoding_hint) {
  if (bytes.empty()) throw std::invalid_argument("parse_html: empty input");
  std::string decoded;
  std::string_view src = bytes;
  if (src.substr(0, 3) == "\xEF\xBB\xBF") src.remove_prefix(3);
  if (!is_valid_utf8(src)) {
    std::optional<std::string> transcoded;
    if (encoding_hint) transcoded = transcode_to_utf8(src, *encoding_hint);
    if (!transcoded) {
      throw EncodingError(encoding_hint
                              ? "input is not UTF-8 and encoding '" + std::string(*encoding_hint) +
                                    "' is not supported"
                              : "input is not valid UTF-8");
    }
    decoded = std::move(*transcoded);
    src = decoded;
  }
  TreeConstructor tree;
  Tokenizer(src, tree).run();
  return std::move(tree).finish();
}

}  // namespace recx
