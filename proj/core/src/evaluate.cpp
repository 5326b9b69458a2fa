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

#include "recx/evaluate.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <unordered_set>

#include "recx/errors.hpp"
#include "recx/formats.hpp"

namespace recx {
namespace {

using json = nlohmann::json;

PagePrediction parse_line(const json& j, PagePrediction merged) {
  if (j.contains("boundaries")) {
    if (!j["boundaries"].is_array()) throw CorpusFormatError("boundaries is not an array");
    std::vector<XPath> boundaries;
    for (const auto& b : j["boundaries"]) {
      if (!b.is_string()) throw CorpusFormatError("boundary is not a string");
      try {
        boundaries.push_back(XPath::parse(b.get<std::string>()));
      } catch (const XPathSyntaxError& e) {
        throw CorpusFormatError(e.what());
      }
    }
    merged.boundaries = std::move(boundaries);
  }
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw CorpusFormatError("labels is not an array");
    std::vector<LabeledNode> labels;
    for (const auto& l : j["labels"]) labels.push_back(labeled_node_from_json(l));
    merged.labels = std::move(labels);
  }
  if (j.contains("records")) merged.records = predicted_page_from_json(j);
  return merged;
}

// Reference boundaries in document order.
Segmentation reference_segmentation(const AnnotatedPage& page) {
  // Unresolvable boundaries go last, in annotation order.
  std::vector<std::pair<std::pair<bool, std::size_t>, XPath>> keyed;
  for (std::size_t i = 0; i < page.records.size(); ++i) {
    std::pair<bool, std::size_t> key{true, i};
    if (page.html) {
      if (auto id = page.html->find(page.records[i].boundary)) key = {false, *id};
    }
    keyed.emplace_back(key, page.records[i].boundary);
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<XPath> out;
  for (auto& [_, x] : keyed) out.push_back(std::move(x));
  return Segmentation(std::move(out));
}

std::vector<LabeledNode> reference_labels(const AnnotatedPage& page) {
  std::vector<LabeledNode> out;
  for (const auto& r : page.records) {
    for (const auto& a : r.attributes) {
      if (auto label = to_node_label(a.label)) out.push_back({a.xpath, *label, a.text});
    }
  }
  return out;
}

json prf_json(const PRF& p) {
  return {{"precision_avg", p.precision}, {"recall_avg", p.recall}, {"f1_avg", p.f1}};
}

std::string fixed(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << v;
  return s.str();
}

}  // namespace

Predictions parse_predictions(std::istream& in) {
  Predictions out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const json j = json::parse(line);
      if (!j.is_object() || !j.contains("page_id") || !j["page_id"].is_string()) {
        throw CorpusFormatError("object with a string page_id expected");
      }
      const std::string id = j["page_id"].get<std::string>();
      out[id] = parse_line(j, std::move(out[id]));
    } catch (const json::exception& e) {
      throw CorpusFormatError("line " + std::to_string(line_no) + ": " + e.what());
    } catch (const CorpusFormatError& e) {
      throw CorpusFormatError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

Predictions read_predictions(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_predictions(in);
}

EvalReport evaluate(std::span<const AnnotatedPage> reference, const Predictions& predicted) {
  if (reference.empty()) throw EmptyCorpus("reference corpus has no pages");
  std::unordered_set<std::string> ids;
  for (const auto& page : reference) ids.insert(page.page_id);
  for (const auto& [id, _] : predicted) {
    if (!ids.count(id)) throw PageSetMismatch("prediction for unknown page " + id);
  }

  EvalReport report;
  report.pages = reference.size();
  bool any_seg = false, any_cls = false, any_rec = false;
  for (const auto& [_, p] : predicted) {
    any_seg = any_seg || p.boundaries.has_value();
    any_cls = any_cls || p.labels.has_value();
    any_rec = any_rec || p.records.has_value();
  }
  auto lookup = [&](const std::string& id) -> const PagePrediction* {
    auto it = predicted.find(id);
    return it == predicted.end() ? nullptr : &it->second;
  };
  for (const auto& page : reference) {
    if (!lookup(page.page_id)) report.missing.push_back(page.page_id);
  }

  if (any_seg) {
    std::vector<PRF> prfs;
    double ari = 0, nmi = 0;
    std::size_t clustered = 0;
    for (const auto& page : reference) {
      const PagePrediction* p = lookup(page.page_id);
      const Segmentation ref = reference_segmentation(page);
      const Segmentation pred = p && p->boundaries ? Segmentation(*p->boundaries) : Segmentation();
      prfs.push_back(page_prf(seg_page_confusion(ref, pred)));
      if (page.html) {
        const NodeClustering a = node_clustering(*page.html, ref);
        const NodeClustering b = node_clustering(*page.html, pred);
        ari += adjusted_rand_index(a, b);
        nmi += normalized_mutual_information(a, b);
        ++clustered;
      }
    }
    SegmentationReport seg;
    seg.avg = corpus_avg(prfs);
    seg.pages = prfs.size();
    if (clustered > 0) {
      seg.ari = ari / static_cast<double>(clustered);
      seg.nmi = nmi / static_cast<double>(clustered);
    }
    report.segmentation = seg;
  }

  if (any_cls) {
    std::vector<PageLabels> pages;
    for (const auto& page : reference) {
      const PagePrediction* p = lookup(page.page_id);
      PageLabels labels{page.page_id, reference_labels(page), {}};
      if (p && p->labels) labels.predicted = *p->labels;
      pages.push_back(std::move(labels));
    }
    report.classification = classification_metrics(pages);
  }

  if (any_rec) {
    std::vector<PredictedPage> pages;
    for (const auto& page : reference) {
      const PagePrediction* p = lookup(page.page_id);
      if (p && p->records) {
        pages.push_back(*p->records);
      } else {
        pages.push_back({page.page_id, {}, {}});
      }
    }
    report.final = final_record_metrics(reference, pages);
  }
  return report;
}

json report_to_json(const EvalReport& report) {
  json j = {{"pages", report.pages}, {"missing", report.missing}};
  if (report.segmentation) {
    json seg = prf_json(report.segmentation->avg);
    seg["ari"] = report.segmentation->ari;
    seg["nmi"] = report.segmentation->nmi;
    seg["pages"] = report.segmentation->pages;
    j["segmentation"] = std::move(seg);
  }
  if (report.classification) {
    json cls = json::object();
    for (const auto& [label, prf] : *report.classification) cls[std::string(to_string(label))] = prf_json(prf);
    j["classification"] = std::move(cls);
  }
  if (report.final) {
    json fin = json::object();
    for (const auto& [label, c] : *report.final) {
      const PRF prf = c.prf();
      fin[std::string(to_string(label))] = {{"tp", c.tp},           {"fp", c.fp},         {"fn", c.fn},
                                            {"precision", prf.precision}, {"recall", prf.recall}, {"f1", prf.f1}};
    }
    j["final"] = std::move(fin);
  }
  return j;
}

std::string format_report(const EvalReport& report) {
  std::ostringstream out;
  out << "Pages: " << report.pages;
  if (!report.missing.empty()) out << " (" << report.missing.size() << " without predictions)";
  out << "\n";
  if (report.segmentation) {
    const auto& s = *report.segmentation;
    out << "\nSegmentation\n"
        << "| Precision_avg | Recall_avg | F1_avg | ARI | NMI |\n"
        << "|---|---|---|---|---|\n"
        << "| " << fixed(s.avg.precision) << " | " << fixed(s.avg.recall) << " | " << fixed(s.avg.f1) << " | "
        << fixed(s.ari) << " | " << fixed(s.nmi) << " |\n";
  }
  if (report.classification) {
    out << "\nClassification\n"
        << "| Label | Precision_avg | Recall_avg | F1_avg |\n"
        << "|---|---|---|---|\n";
    for (const auto& [label, p] : *report.classification) {
      out << "| " << to_string(label) << " | " << fixed(p.precision) << " | " << fixed(p.recall) << " | "
          << fixed(p.f1) << " |\n";
    }
  }
  if (report.final) {
    out << "\nRecords\n"
        << "| Label | TP | FP | FN | Precision | Recall | F1 |\n"
        << "|---|---|---|---|---|---|---|\n";
    for (const auto& [label, c] : *report.final) {
      const PRF p = c.prf();
      out << "| " << to_string(label) << " | " << c.tp << " | " << c.fp << " | " << c.fn << " | "
          << fixed(p.precision) << " | " << fixed(p.recall) << " | " << fixed(p.f1) << " |\n";
    }
  }
  return out.str();
}

}  // namespace recx
