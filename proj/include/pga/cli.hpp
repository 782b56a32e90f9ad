#pragma once

// Command implementations behind the `pga` executable. Kept in a header so
// the commands can be driven in-process by tests.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pga/analysis.hpp"
#include "pga/report.hpp"

namespace pga::cli {

enum ExitCode : int {
  kOk = 0,
  kSpecError = 1,
  kInternalError = 2,
  kOracleUnknown = 3,
  kMismatch = 4,
  kIoError = 5,
};

enum class Mode { Analyze, Verify, Export };
enum class Format { Text, Json };

struct AnalysisRequest {
  std::string group;
  Mode mode = Mode::Analyze;
  Format format = Format::Text;
  bool export_power_graph = true;
  bool export_quotient = true;
  bool export_report = true;
  std::string out;  // file for analyze/verify, directory for export
  oracle::Caps caps{};
  std::size_t max_group_order = kDefaultMaxGroupOrder;
};

struct CommandResult {
  int code = kOk;
  std::string output;  // report text or JSON
  std::string error;
  nlohmann::ordered_json json;  // structured form, when available
};

namespace detail {

inline bool write_file(const std::filesystem::path& path, const std::string& content, std::string& error) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    error = "cannot write " + path.string();
    return false;
  }
  f << content;
  if (!f) {
    error = "write failed for " + path.string();
    return false;
  }
  return true;
}

inline std::string render_result(const AutReport& r, Format format, nlohmann::ordered_json& json) {
  json = to_json(r);
  return format == Format::Json ? json.dump(2) + "\n" : to_text(r);
}

}  // namespace detail

/// Runs one request and produces its output without touching stdout.
inline CommandResult run(const AnalysisRequest& req) {
  CommandResult res;
  try {
    AnalyzeOptions opts;
    opts.max_group_order = req.max_group_order;
    opts.engine.fallback_caps = req.caps;
    Analysis a = analyze(req.group, opts);

    if (req.mode == Mode::Verify) {
      a.report.verification = verify(a, req.caps);
      switch (a.report.verification.status) {
        case Verification::Status::Mismatch:
          res.code = kMismatch;
          break;
        case Verification::Status::Unknown:
          res.code = kOracleUnknown;
          break;
        default:
          break;
      }
    }
    res.output = detail::render_result(a.report, req.format, res.json);

    if (req.mode == Mode::Export) {
      if (req.out.empty()) {
        res.code = kIoError;
        res.error = "export needs --out <directory>";
        return res;
      }
      std::error_code ec;
      const std::filesystem::path dir(req.out);
      std::filesystem::create_directories(dir, ec);
      if (ec) {
        res.code = kIoError;
        res.error = "cannot create " + dir.string() + ": " + ec.message();
        return res;
      }
      std::string err;
      bool ok = true;
      if (req.export_power_graph)
        ok = ok && detail::write_file(dir / "power_graph.dot", power_graph_dot(a.group, a.graph), err);
      if (req.export_quotient) ok = ok && detail::write_file(dir / "quotient.dot", quotient_dot(a), err);
      if (req.export_report) ok = ok && detail::write_file(dir / "report.json", res.json.dump(2) + "\n", err);
      if (!ok) {
        res.code = kIoError;
        res.error = err;
      }
    } else if (!req.out.empty()) {
      std::string err;
      if (!detail::write_file(req.out, res.output, err)) {
        res.code = kIoError;
        res.error = err;
      }
    }
  } catch (const SpecError& e) {
    res.code = kSpecError;
    res.error = e.what();
  } catch (const InternalError& e) {
    res.code = kInternalError;
    res.error = std::string("internal assertion failed: ") + e.what();
  } catch (const CapExceeded& e) {
    res.code = kOracleUnknown;
    res.error = std::string("cap exceeded: ") + e.what();
  }
  return res;
}

inline int cmd_analyze(AnalysisRequest req, std::ostream& out, std::ostream& err) {
  req.mode = Mode::Analyze;
  const auto res = run(req);
  if (req.out.empty()) out << res.output;
  if (!res.error.empty()) err << "error: " << res.error << "\n";
  return res.code;
}

inline int cmd_verify(AnalysisRequest req, std::ostream& out, std::ostream& err) {
  req.mode = Mode::Verify;
  const auto res = run(req);
  if (req.out.empty()) out << res.output;
  if (!res.error.empty()) err << "error: " << res.error << "\n";
  return res.code;
}

inline int cmd_export(AnalysisRequest req, std::ostream& out, std::ostream& err) {
  req.mode = Mode::Export;
  const auto res = run(req);
  if (res.code == kOk) out << "wrote " << req.out << "\n";
  if (!res.error.empty()) err << "error: " << res.error << "\n";
  return res.code;
}

/// Non-empty lines that are not comments (#).
inline std::vector<std::string> read_corpus(std::istream& in) {
  std::vector<std::string> specs;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    specs.push_back(line.substr(first, last - first + 1));
  }
  return specs;
}

/// Runs `req` for every corpus spec concurrently; output keeps corpus order.
/// The exit code is the largest individual code.
inline int cmd_corpus(const AnalysisRequest& req, const std::vector<std::string>& specs, std::ostream& out,
                      std::ostream& err) {
  std::vector<std::future<CommandResult>> jobs;
  for (const auto& s : specs) {
    AnalysisRequest r = req;
    r.group = s;
    r.out.clear();
    if (req.mode == Mode::Export) r.mode = Mode::Analyze;
    jobs.push_back(std::async(std::launch::async, [r] { return run(r); }));
  }
  int code = kOk;
  auto array = nlohmann::ordered_json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    CommandResult res = jobs[i].get();
    code = std::max(code, res.code);
    if (!res.error.empty()) err << specs[i] << ": error: " << res.error << "\n";
    if (req.format == Format::Json) {
      array.push_back(res.error.empty() ? res.json : nlohmann::ordered_json{{"spec", specs[i]}, {"error", res.error}});
    } else {
      text << res.output << (res.output.empty() ? "" : "\n");
    }
  }
  const std::string body = req.format == Format::Json ? array.dump(2) + "\n" : text.str();
  if (req.out.empty()) {
    out << body;
  } else {
    std::string e;
    if (!detail::write_file(req.out, body, e)) {
      err << "error: " << e << "\n";
      code = std::max(code, static_cast<int>(kIoError));
    }
  }
  return code;
}

}  // namespace pga::cli
