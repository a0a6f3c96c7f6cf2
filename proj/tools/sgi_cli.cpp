#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sgi/errors.hpp"
#include "sgi/http_api.hpp"
#include "sgi/service.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kUnknown = 2;

struct AnalyzeOptions {
  std::string structure;
  std::vector<std::string> edits;
  bool no_canonical = false;
  std::string naming = "caps";
  std::vector<std::uint64_t> seeds;
  bool positivity = false;
  std::string out;
  std::string format = "text";
  std::string layout = "LR";
  double timeout = 60.0;
  bool timings = false;
};

struct ServeOptions {
  int port = -1;
  std::string host = "0.0.0.0";
  std::string examples;
  std::string ui;
};

int analyze(const AnalyzeOptions& opt) {
  sgi::AnalysisRequest req;
  try {
    std::ifstream in(opt.structure, std::ios::binary);
    if (!in) throw sgi::InvalidInput("cannot read " + opt.structure);
    std::ostringstream text;
    text << in.rdbuf();
    req.spec = sgi::parse_structure(text.str());
    for (const auto& e : opt.edits) req.edits.push_back(sgi::DesignEdit::parse(e));
    req.naming = sgi::parse_naming_mode(opt.naming);
    if (!sgi::is_layout_hint(opt.layout)) {
      throw sgi::InvalidInput("--layout must be one of LR, TB, RL, BT");
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  req.canonical_form = !opt.no_canonical;
  req.seeds = opt.seeds;
  req.positivity_filter = opt.positivity;
  req.layout_hint = opt.layout;
  req.timeout = std::chrono::duration<double>(opt.timeout);
  req.include_timings = opt.timings;

  const sgi::AnalysisResult result = sgi::run_analysis(req);
  for (const auto& e : result.errors) {
    std::cerr << (e.input_error ? "error" : "warning") << ": " << e.stage << ": " << e.message
              << "\n";
  }

  std::string output;
  if (opt.format == "structured") {
    output = result.document.dump(2) + "\n";
  } else if (opt.format == "graph") {
    const auto& diagram = result.document["diagram"];
    if (!diagram.contains("dot")) return kInputError;
    output = diagram["dot"].get<std::string>();
  } else {
    output = sgi::render_text(result.document);
  }
  if (opt.out.empty()) {
    std::cout << output;
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    f << output;
    if (!f) {
      std::cerr << "error: cannot write " << opt.out << "\n";
      return kInputError;
    }
  }
  if (result.input_error()) return kInputError;
  return result.verdict == sgi::Verdict::Unknown ? kUnknown : kOk;
}

int serve(const ServeOptions& opt) {
  sgi::ServerConfig config;
  config.examples_dir = std::filesystem::path(SGI_DATA_DIR) / "structures";
  config.ui_dir = std::filesystem::path(SGI_DATA_DIR).parent_path() / "webui" / "dist";
  try {
    config = sgi::config_from_environment(config);
  } catch (const sgi::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  if (opt.port >= 0) config.port = opt.port;
  if (!opt.examples.empty()) config.examples_dir = opt.examples;
  if (!opt.ui.empty()) config.ui_dir = opt.ui;

  httplib::Server server;
  sgi::install_routes(server, config);
  std::cerr << "listening on " << opt.host << ":" << config.port << "\n";
  if (!server.listen(opt.host, config.port)) {
    std::cerr << "error: cannot listen on " << opt.host << ":" << config.port << "\n";
    return kInputError;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structural identifiability of uncontrolled LTI structures"};
  app.require_subcommand(1);

  AnalyzeOptions a;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Analyse one structure");
  analyze_cmd->add_option("--structure", a.structure, "Structure file")->required();
  analyze_cmd->add_option("--edit", a.edits, "Design edit, e.g. C[1][1]=1 or x0[2]=0");
  analyze_cmd->add_flag("--no-canonical", a.no_canonical, "Keep the denominator's leading coefficient");
  analyze_cmd->add_option("--naming", a.naming, "Naming of the alternative parameters")
      ->check(CLI::IsMember({"underscore", "caps"}, CLI::ignore_case));
  analyze_cmd->add_option("--seed", a.seeds, "Generic-point seed (repeatable)");
  analyze_cmd->add_flag("--positivity", a.positivity, "Report which branches are non-negative");
  analyze_cmd->add_option("--out", a.out, "Write the report to this file");
  analyze_cmd->add_option("--format", a.format, "Output format")
      ->check(CLI::IsMember({"text", "structured", "graph"}));
  analyze_cmd->add_option("--layout", a.layout, "Diagram direction: LR, TB, RL or BT");
  analyze_cmd->add_option("--timeout", a.timeout, "Time limit in seconds")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_flag("--timings", a.timings, "Include stage timings in structured output");

  ServeOptions s;
  CLI::App* serve_cmd = app.add_subcommand("serve", "Serve the HTTP API");
  serve_cmd->add_option("--port", s.port, "Port (default SGI_PORT or 8080)")
      ->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--host", s.host, "Address to bind");
  serve_cmd->add_option("--examples", s.examples, "Directory of bundled structure files");
  serve_cmd->add_option("--ui", s.ui, "Directory of the web UI bundle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  if (*analyze_cmd) return analyze(a);
  return serve(s);
}
