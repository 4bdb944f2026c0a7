#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "genmult/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact j- and epsilon-multiplicities of monomial and edge ideals"};
  genmult::RunConfig cfg;
  std::string input_path;
  bool use_stdin = false;
  std::string kind = "auto", format = "text";

  app.add_option("command", cfg.command, "j | epsilon | spread | profile | report | fixtures")
      ->required()
      ->check(CLI::IsMember({"j", "epsilon", "spread", "profile", "report", "fixtures"}));
  auto* in_opt = app.add_option("--input", input_path, "input document");
  auto* stdin_opt = app.add_flag("--stdin", use_stdin, "read the input document from stdin");
  in_opt->excludes(stdin_opt);
  app.add_option("--kind", kind, "hypergraph | ideal (default: detect)")
      ->check(CLI::IsMember({"auto", "hypergraph", "ideal"}));
  app.add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--oracle", cfg.oracle, "recompute with the lattice-point oracle and compare");
  app.add_option("--tulgeity-cap", cfg.tulgeity_cap, "skip odd tulgeity above this many nodes")
      ->check(CLI::Range(1, 30));
  app.add_flag("--explain", cfg.explain, "list the compact facets behind j");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : genmult::kExitInput;
  }

  cfg.kind = kind == "hypergraph" ? genmult::InputKind::Hypergraph
             : kind == "ideal"    ? genmult::InputKind::Ideal
                                  : genmult::InputKind::Auto;
  cfg.format = format == "json" ? genmult::OutputFormat::Json : genmult::OutputFormat::Text;

  if (cfg.command != "fixtures") {
    if (use_stdin) {
      cfg.document.emplace(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else if (!input_path.empty()) {
      std::ifstream f(input_path);
      if (!f) {
        std::cerr << "error (input): cannot open " << input_path << "\n";
        return genmult::kExitInput;
      }
      std::ostringstream ss;
      ss << f.rdbuf();
      cfg.document = ss.str();
    } else {
      std::cerr << "error (input): give --input PATH or --stdin\n";
      return genmult::kExitInput;
    }
  }
  return genmult::run(cfg, std::cout, std::cerr);
}
