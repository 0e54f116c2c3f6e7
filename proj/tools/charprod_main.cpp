#include "charprod/cli.hpp"
#include "charprod/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace cli = charprod::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact character tables and products of characters"};
  app.set_help_flag("-h,--help", "Show help");

  std::string command;
  unsigned pmax_n = 0;
  std::string zoo, file, chi, out_path;
  std::size_t max_order = 128;
  bool corpus = false, exhaustive = false;

  app.add_option("command", command, "table | decompose | eta | chain | verify | corpus | pmax")
      ->required()
      ->check(CLI::IsMember({"table", "decompose", "eta", "chain", "verify", "corpus", "pmax"}));
  app.add_option("n", pmax_n, "argument of pmax");
  app.add_option("--zoo", zoo, "zoo label, e.g. A6, extraspecial:3, C2xS3");
  app.add_option("--file", file, "group in .cayley format");
  app.add_option("--chi", chi, "row=<i> or deg=<d>; every row when omitted");
  app.add_flag("--corpus", corpus, "verify every corpus group");
  app.add_option("--max-order", max_order, "corpus order bound")->check(CLI::Range(1, 65535));
  app.add_flag("--exhaustive-chains", exhaustive, "check every maximal chain (orders <= 96)");
  app.add_option("--out", out_path, "write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? cli::exit_ok : cli::exit_usage;
  }

  cli::RunConfig config;
  config.command = *cli::parse_command(command);
  if (!zoo.empty())
    config.zoo = zoo;
  if (!file.empty())
    config.file = file;
  config.corpus = corpus;
  config.exhaustive_chains = exhaustive;
  config.max_order = max_order;
  config.pmax_n = pmax_n;
  if (config.command == cli::Command::pmax && app.count("n") == 0) {
    std::cerr << "error: pmax needs n\n";
    return cli::exit_usage;
  }
  if (!chi.empty()) {
    try {
      config.chi = cli::parse_chi_selector(chi);
    } catch (const charprod::ParseError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return cli::exit_usage;
    }
  }

  if (out_path.empty())
    return cli::run(config, std::cout, std::cerr);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return cli::exit_usage;
  }
  return cli::run(config, out, std::cerr);
}
