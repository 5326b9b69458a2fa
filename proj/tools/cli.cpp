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

#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "recx/corpus.hpp"
#include "recx/errors.hpp"
#include "recx/evaluate.hpp"
#include "recx/formats.hpp"
#include "recx/labeler.hpp"
#include "recx/pipeline.hpp"
#include "recx/syngen.hpp"

namespace recx {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string corpus;
  std::string out;
  std::string pipeline = "parallel";
  std::string segmenter = "mdr";
  std::string classifier = "heuristic";
  std::string context = "page";
  double tau = kDefaultTau;
  std::string endpoint;
  std::uint64_t seed = 1;
  double ratio = 0.75;
  std::size_t workers = 1;
  std::string format = "markdown";
  bool no_clean = false;

  // eval
  std::string pred;
  std::string ref;
  bool json_output = false;

  // gen
  std::size_t pages = 200;
  std::size_t domains = 8;
  std::vector<std::string> templates{"list", "cards", "pairs"};
  std::vector<std::size_t> records{3, 10};
  std::vector<std::size_t> tags{1, 3};
  double dropout = 0.0;
  std::vector<std::string> noise;
  bool churn = false;
  double duplicates = 0.0;
  double overlap = 0.3;
};

struct Io {
  std::ostream& out;
  std::ostream& err;
};

PipelineConfig make_config(const Options& o) {
  PipelineConfig cfg;
  cfg.mode = *parse_pipeline_mode(o.pipeline);
  cfg.segmenter = *parse_segmenter_kind(o.segmenter);
  cfg.classifier = *parse_classifier_kind(o.classifier);
  cfg.tau = o.tau;
  cfg.workers = o.workers;
  if (!o.endpoint.empty()) cfg.labeler_endpoint = o.endpoint;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

fs::path existing_dir(const std::string& path) {
  if (!fs::is_directory(path)) throw UsageError("not a directory: " + path);
  return path;
}

Corpus load(const std::string& path, bool with_html, bool clean = true) {
  LoadOptions options;
  options.load_html = with_html;
  options.clean = clean;
  Corpus corpus = load_corpus(existing_dir(path), options);
  for (const auto& issue : corpus.issues) spdlog::warn("{}", issue);
  return corpus;
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path.string());
  f << text;
  if (!f) throw IoError("write failed for " + path.string());
}

std::string jsonl(const std::vector<json>& lines) {
  std::string s;
  for (const auto& l : lines) s += l.dump() + "\n";
  return s;
}

// Per-page work on up to `workers` threads. Results keep the input order.
struct PageRun {
  std::vector<json> lines;
  std::vector<PageFailure> failures;
};

template <typename F>
PageRun run_pages(const std::vector<AnnotatedPage>& pages, std::size_t workers, F&& fn) {
  std::vector<std::optional<json>> results(pages.size());
  std::vector<std::string> errors(pages.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < pages.size(); i = next++) {
      try {
        if (!pages[i].html) throw IoError("page html not loaded");
        results[i] = fn(pages[i]);
      } catch (const std::exception& e) {
        spdlog::warn("page {} failed: {}", pages[i].page_id, e.what());
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> threads;
  for (std::size_t t = 1; t < std::min(workers, pages.size()); ++t) threads.emplace_back(work);
  work();
  for (auto& t : threads) t.join();
  PageRun run;
  for (std::size_t i = 0; i < pages.size(); ++i) {
    if (results[i]) {
      run.lines.push_back(std::move(*results[i]));
    } else {
      run.failures.push_back({pages[i].page_id, errors[i]});
    }
  }
  return run;
}

json manifest(const std::string& command, const std::vector<std::string>& args, const Options& o,
              const std::optional<PipelineConfig>& cfg, std::size_t pages, const std::vector<PageFailure>& failures,
              const json& outputs) {
  json failed = json::array();
  json details = json::array();
  for (const auto& f : failures) {
    failed.push_back(f.page_id);
    details.push_back({{"page_id", f.page_id}, {"error", f.error}});
  }
  json m = {
      {"command", command},
      {"args", args},
      {"corpus", o.corpus},
      {"pages", pages},
      {"succeeded", pages - failures.size()},
      {"failed", std::move(failed)},
      {"failures", std::move(details)},
      {"outputs", outputs},
  };
  m["config"] = cfg ? config_to_json(*cfg) : json::object();
  return m;
}

// Writes JSON lines to <out>/<name> plus a manifest, or the lines to stdout
// when no output directory was given.
int finish_run(Io io, const std::string& command, const std::vector<std::string>& args, const Options& o,
               const std::optional<PipelineConfig>& cfg, std::size_t pages, const PageRun& run,
               const std::string& name) {
  if (o.out.empty()) {
    io.out << jsonl(run.lines);
  } else {
    const fs::path dir(o.out);
    write_text(dir / name, jsonl(run.lines));
    write_text(dir / "manifest.json",
               manifest(command, args, o, cfg, pages, run.failures, {{"lines", (dir / name).string()}}).dump(2) + "\n");
  }
  for (const auto& f : run.failures) io.err << "failed: " << f.page_id << ": " << f.error << "\n";
  return run.failures.empty() ? kExitOk : kExitPageFailures;
}

std::unique_ptr<Labeler> labeler_for(const PipelineConfig& cfg) {
  if (!cfg.needs_labeler()) return nullptr;
  return make_labeler(*cfg.labeler_endpoint);
}

int cmd_stats(Io io, const Options& o) {
  const Corpus corpus = load(o.corpus, false);
  const CorpusStats stats = compute_stats(corpus.pages);
  if (o.format == "tsv") {
    io.out << format_stats_tsv(stats);
  } else if (o.format == "json") {
    json j = {{"pages", stats.total_pages}, {"attributes", json::array()}};
    for (const auto& a : stats.attributes) {
      j["attributes"].push_back({{"name", to_string(a.label)}, {"pages", a.pages}, {"records", a.records}, {"sites", a.sites}});
    }
    io.out << j.dump(2) << "\n";
  } else {
    io.out << format_stats_markdown(stats);
  }
  return kExitOk;
}

int cmd_clean(Io io, const Options& o) {
  if (o.out.empty()) throw UsageError("clean needs --out");
  const Corpus corpus = load(o.corpus, true, false);
  std::size_t removed = 0;
  std::vector<PageFailure> failures;
  for (const auto& page : corpus.pages) {
    if (!page.html) {
      failures.push_back({page.page_id, "page html not loaded"});
      continue;
    }
    auto cleaned = std::make_shared<const DomTree>(clean_html(*page.html));
    removed += page.html->size() - cleaned->size();
    AnnotatedPage copy = page;
    copy.html = cleaned;
    write_page(o.out, copy, serialize_html(*cleaned));
  }
  io.out << "cleaned " << corpus.pages.size() - failures.size() << " pages, removed " << removed << " elements\n";
  for (const auto& f : failures) io.err << "failed: " << f.page_id << ": " << f.error << "\n";
  return failures.empty() ? kExitOk : kExitPageFailures;
}

int cmd_dedupe(Io io, const Options& o) {
  const Corpus corpus = load(o.corpus, false);
  const DedupResult result = dedupe(corpus.pages);
  if (!o.out.empty()) {
    const fs::path root(o.corpus);
    for (const auto& page : result.kept) {
      std::ifstream in(root / page.html_file, std::ios::binary);
      if (!in) throw IoError("cannot read " + (root / page.html_file).string());
      std::ostringstream bytes;
      bytes << in.rdbuf();
      write_page(o.out, page, bytes.str());
    }
    write_text(fs::path(o.out) / "dedupe.json",
               json({{"kept", result.kept.size()}, {"dropped", result.dropped}}).dump(2) + "\n");
  }
  for (const auto& id : result.dropped) io.out << id << "\n";
  io.err << "kept " << result.kept.size() << ", dropped " << result.dropped.size() << "\n";
  return kExitOk;
}

int cmd_split(Io io, const Options& o) {
  const Corpus corpus = load(o.corpus, false);
  CorpusSplit split;
  try {
    split = split_by_domain(corpus.pages, o.ratio, o.seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto describe = [](const std::vector<AnnotatedPage>& part) {
    json ids = json::array();
    std::set<std::string> domains;
    for (const auto& p : part) {
      ids.push_back(p.page_id);
      domains.insert(p.domain);
    }
    return json{{"pages", std::move(ids)}, {"domains", domains}};
  };
  const double n = static_cast<double>(corpus.pages.size());
  json j = {{"ratio", o.ratio},
            {"seed", o.seed},
            {"train_fraction", static_cast<double>(split.train.size()) / n},
            {"train", describe(split.train)},
            {"test", describe(split.test)}};
  if (o.out.empty()) {
    io.out << j.dump(2) << "\n";
  } else {
    write_text(fs::path(o.out) / "split.json", j.dump(2) + "\n");
  }
  io.err << "train " << split.train.size() << " pages, test " << split.test.size() << " pages\n";
  return kExitOk;
}

int cmd_gen(Io io, const Options& o) {
  if (o.out.empty()) throw UsageError("gen needs --out");
  CorpusSpec spec;
  spec.n_pages = o.pages;
  spec.seed = o.seed;
  spec.n_domains = o.domains;
  spec.templates.clear();
  for (const auto& t : o.templates) {
    auto parsed = parse_page_template(t);
    if (!parsed) throw UsageError("unknown template " + t);
    spec.templates.push_back(*parsed);
  }
  spec.records_range = {o.records.at(0), o.records.at(1)};
  spec.multi_tag_range = {o.tags.at(0), o.tags.at(1)};
  spec.optional_attr_dropout = Dropout::uniform(o.dropout);
  for (const auto& n : o.noise) {
    if (n == "nav") {
      spec.noise.nav = true;
    } else if (n == "footer") {
      spec.noise.footer = true;
    } else if (n == "ads") {
      spec.noise.ads = true;
    } else if (n != "none") {
      throw UsageError("unknown noise kind " + n);
    }
  }
  spec.class_name_churn = o.churn;
  spec.duplicate_rate = o.duplicates;
  spec.duplicate_overlap = o.overlap;
  GeneratedCorpus corpus;
  try {
    corpus = generate_corpus(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  write_corpus(o.out, spec, corpus);
  io.out << "generated " << corpus.pages.size() << " pages in " << o.out << "\n";
  return kExitOk;
}

int cmd_segment(Io io, const Options& o, const std::vector<std::string>& args) {
  const PipelineConfig cfg = make_config(o);
  const Corpus corpus = load(o.corpus, true, !o.no_clean);
  auto labeler = labeler_for(cfg);
  const PageRun run = run_pages(corpus.pages, cfg.workers, [&](const AnnotatedPage& page) {
    const Segmentation seg = cfg.segmenter == SegmenterKind::kMdr
                                 ? segment_mdr(*page.html, cfg.tau)
                                 : segment_external(*labeler, *page.html, page.page_id);
    return segmentation_to_json(page.page_id, seg);
  });
  return finish_run(io, "segment", args, o, cfg, corpus.pages.size(), run, "segments.jsonl");
}

int cmd_classify(Io io, const Options& o, const std::vector<std::string>& args) {
  const PipelineConfig cfg = make_config(o);
  const bool record = o.context == "record";
  const Corpus corpus = load(o.corpus, true, !o.no_clean);
  auto labeler = labeler_for(cfg);
  const PageRun run = run_pages(corpus.pages, cfg.workers, [&](const AnnotatedPage& page) {
    if (record) {
      const PageExtraction e = run_sequential(*page.html, page.page_id, cfg, labeler.get());
      return labels_to_json(page.page_id, ClassifyContext::kRecord, e.labels);
    }
    std::vector<LabeledNode> labels;
    if (cfg.classifier == ClassifierKind::kHeuristic) {
      labels = classify_heuristic(*page.html, std::nullopt);
    } else {
      labels = classify_external(*labeler, make_classify_request(*page.html, page.page_id, std::nullopt));
    }
    return labels_to_json(page.page_id, ClassifyContext::kPage, attributes_only(std::move(labels)));
  });
  return finish_run(io, "classify", args, o, cfg, corpus.pages.size(), run, "labels.jsonl");
}

int cmd_extract(Io io, const Options& o, const std::vector<std::string>& args) {
  const PipelineConfig cfg = make_config(o);
  const Corpus corpus = load(o.corpus, true, !o.no_clean);
  auto labeler = labeler_for(cfg);
  const CorpusRun result = run_corpus(corpus.pages, cfg, labeler.get());
  PageRun run;
  for (const auto& page : result.pages) run.lines.push_back(extraction_to_json(page));
  run.failures = result.failures;
  return finish_run(io, "extract", args, o, cfg, corpus.pages.size(), run, "extractions.jsonl");
}

int cmd_eval(Io io, const Options& o) {
  if (!fs::is_regular_file(o.pred)) throw UsageError("no such prediction file: " + o.pred);
  const Corpus corpus = load(o.ref, true, !o.no_clean);
  const EvalReport report = evaluate(corpus.pages, read_predictions(o.pred));
  const json j = report_to_json(report);
  if (!o.out.empty()) {
    write_text(fs::path(o.out) / "report.json", j.dump(2) + "\n");
    write_text(fs::path(o.out) / "report.md", format_report(report));
  }
  if (o.json_output) {
    io.out << j.dump(2) << "\n";
  } else {
    io.out << format_report(report);
  }
  return kExitOk;
}

void add_pipeline_flags(CLI::App* sub, Options& o) {
  sub->add_option("corpus", o.corpus, "Corpus directory")->required();
  sub->add_option("--pipeline", o.pipeline, "parallel or sequential")
      ->check(CLI::IsMember({"parallel", "sequential"}));
  sub->add_option("--segmenter", o.segmenter, "mdr or external")->check(CLI::IsMember({"mdr", "external"}));
  sub->add_option("--classifier", o.classifier, "heuristic or external")
      ->check(CLI::IsMember({"heuristic", "external"}));
  sub->add_option("--tau", o.tau, "Fragment similarity threshold")->check(CLI::Range(0.0, 1.0));
  sub->add_option("--labeler-endpoint", o.endpoint, "HTTP URL or command of an external labeler");
  sub->add_option("--workers", o.workers, "Pages processed concurrently")->check(CLI::PositiveNumber);
  sub->add_option("--out", o.out, "Output directory (default: JSON lines on stdout)");
  sub->add_flag("--no-clean", o.no_clean, "Skip script/style removal when loading");
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Record extraction from multi-record HTML list pages", "recx"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Log progress");

  auto* stats = app.add_subcommand("stats", "Attribute frequency table");
  stats->add_option("corpus", o.corpus, "Corpus directory")->required();
  stats->add_option("--format", o.format, "markdown, tsv or json")->check(CLI::IsMember({"markdown", "tsv", "json"}));

  auto* clean = app.add_subcommand("clean", "Strip script and style content");
  clean->add_option("corpus", o.corpus, "Corpus directory")->required();
  clean->add_option("--out", o.out, "Output corpus directory")->required();

  auto* dedup = app.add_subcommand("dedupe", "Drop pages repeating more than a quarter of their records");
  dedup->add_option("corpus", o.corpus, "Corpus directory")->required();
  dedup->add_option("--out", o.out, "Write the kept pages here");

  auto* split = app.add_subcommand("split", "Domain-disjoint train/test split");
  split->add_option("corpus", o.corpus, "Corpus directory")->required();
  split->add_option("--ratio", o.ratio, "Training share of pages");
  split->add_option("--seed", o.seed, "Random seed");
  split->add_option("--out", o.out, "Write split.json here");

  auto* gen = app.add_subcommand("gen", "Generate a synthetic annotated corpus");
  gen->add_option("--out", o.out, "Output corpus directory")->required();
  gen->add_option("--pages", o.pages, "Number of pages")->check(CLI::PositiveNumber);
  gen->add_option("--seed", o.seed, "Random seed");
  gen->add_option("--domains", o.domains, "Number of sites")->check(CLI::PositiveNumber);
  gen->add_option("--templates", o.templates, "list, cards, pairs")->delimiter(',');
  gen->add_option("--records", o.records, "Records per page: MIN,MAX")->delimiter(',')->expected(2);
  gen->add_option("--tags", o.tags, "Tags per record: MIN,MAX")->delimiter(',')->expected(2);
  gen->add_option("--dropout", o.dropout, "Date and tag dropout probability")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--noise", o.noise, "nav, footer, ads")->delimiter(',');
  gen->add_flag("--churn", o.churn, "Randomize class names per page");
  gen->add_option("--duplicates", o.duplicates, "Share of pages copying records from an earlier page")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--overlap", o.overlap, "Share of records copied")->check(CLI::Range(0.0, 1.0));

  auto* segment = app.add_subcommand("segment", "Record boundaries per page");
  add_pipeline_flags(segment, o);

  auto* classify = app.add_subcommand("classify", "Attribute labels per page");
  add_pipeline_flags(classify, o);
  classify->add_option("--context", o.context, "page or record")->check(CLI::IsMember({"page", "record"}));

  auto* extract = app.add_subcommand("extract", "Records with their attributes");
  add_pipeline_flags(extract, o);

  auto* eval = app.add_subcommand("eval", "Score predictions against annotations");
  eval->add_option("--pred", o.pred, "Prediction JSON lines")->required();
  eval->add_option("--ref", o.ref, "Reference corpus directory")->required();
  eval->add_option("--out", o.out, "Write report.json and report.md here");
  eval->add_flag("--json", o.json_output, "Print the JSON report");
  eval->add_flag("--no-clean", o.no_clean, "Skip script/style removal when loading");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto logger = spdlog::get("recx");
  if (!logger) logger = spdlog::stderr_color_mt("recx");
  logger->set_level(verbose ? spdlog::level::info : spdlog::level::warn);
  spdlog::set_default_logger(logger);

  Io io{out, err};
  try {
    if (stats->parsed()) return cmd_stats(io, o);
    if (clean->parsed()) return cmd_clean(io, o);
    if (dedup->parsed()) return cmd_dedupe(io, o);
    if (split->parsed()) return cmd_split(io, o);
    if (gen->parsed()) return cmd_gen(io, o);
    if (segment->parsed()) return cmd_segment(io, o, args);
    if (classify->parsed()) return cmd_classify(io, o, args);
    if (extract->parsed()) return cmd_extract(io, o, args);
    if (eval->parsed()) return cmd_eval(io, o);
  } catch (const UsageError& e) {
    err << "recx: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "recx: error: " << e.what() << "\n";
    return kExitPageFailures;
  }
  return kExitUsage;
}

int cli_dispatch(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_dispatch(args, std::cout, std::cerr);
}

}  // namespace recx
