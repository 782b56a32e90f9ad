#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pga/cli.hpp"

int main(int argc, char** argv) {
  using namespace pga::cli;
  CLI::App app{"Automorphism groups of power graphs of finite groups"};
  app.require_subcommand(1);

  AnalysisRequest req;
  std::string format = "text";
  std::string corpus;
  std::vector<std::string> targets;

  auto add_common = [&](CLI::App* sub) {
    auto* group = sub->add_option("--group", req.group, "group spec, e.g. \"Z(4)^2\" or \"P(Q8,Z(3))\"");
    auto* batch = sub->add_option("--corpus", corpus, "file with one group spec per line");
    group->excludes(batch);
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", req.out, "output file (analyze/verify) or directory (export)");
    sub->add_option("--max-nodes", req.caps.max_nodes, "oracle node limit")->capture_default_str();
    sub->add_option("--max-count", req.caps.max_count, "oracle enumeration limit")->capture_default_str();
    sub->add_option("--max-order", req.max_group_order, "largest group order accepted")->capture_default_str();
  };
  auto* analyze = app.add_subcommand("analyze", "compute Aut of the power graph");
  auto* verify = app.add_subcommand("verify", "compute and cross-check against the brute-force oracle");
  auto* exporter = app.add_subcommand("export", "write DOT drawings and a JSON report");
  add_common(analyze);
  add_common(verify);
  add_common(exporter);
  exporter->add_option("--target", targets, "power-graph-dot, quotient-dot, json (default: all)")
      ->check(CLI::IsMember({"power-graph-dot", "quotient-dot", "json"}));

  CLI11_PARSE(app, argc, argv);

  req.format = format == "json" ? Format::Json : Format::Text;
  if (analyze->parsed()) req.mode = Mode::Analyze;
  if (verify->parsed()) req.mode = Mode::Verify;
  if (exporter->parsed()) {
    req.mode = Mode::Export;
    if (!targets.empty()) {
      auto has = [&](const char* t) { return std::find(targets.begin(), targets.end(), t) != targets.end(); };
      req.export_power_graph = has("power-graph-dot");
      req.export_quotient = has("quotient-dot");
      req.export_report = has("json");
    }
  }

  if (!corpus.empty()) {
    std::ifstream in(corpus);
    if (!in) {
      std::cerr << "error: cannot read " << corpus << "\n";
      return kIoError;
    }
    return cmd_corpus(req, read_corpus(in), std::cout, std::cerr);
  }
  if (req.group.empty()) {
    std::cerr << "error: --group or --corpus is required\n";
    return kSpecError;
  }
  switch (req.mode) {
    case Mode::Analyze:
      return cmd_analyze(req, std::cout, std::cerr);
    case Mode::Verify:
      return cmd_verify(req, std::cout, std::cerr);
    case Mode::Export:
      return cmd_export(req, std::cout, std::cerr);
  }
  return kInternalError;
}
