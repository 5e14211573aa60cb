#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gorlab/errors.hpp"
#include "gorlab/script.hpp"

namespace sc = gorlab::script;

int main(int argc, char** argv) {
  CLI::App app{"Ext/Tor vanishing laboratory over graded quotient rings"};
  std::string path;
  sc::RunOptions opts;
  double timeout = 0;
  std::string format = "table";
  app.add_option("script", path, "script file (.gor)")->required()->check(CLI::ExistingFile);
  app.add_option("--seed", opts.seed, "seed for random modules and searches");
  app.add_option("--window", opts.window, "default window H for checks")->check(CLI::Range(1, 1000));
  app.add_option("--degree-cap", opts.degreeCap, "Groebner degree cap")->check(CLI::Range(1, 10000));
  app.add_option("--timeout-secs", timeout, "wall-clock limit, 0 for none")->check(CLI::NonNegativeNumber);
  app.add_option("--format", format, "stdout format")->check(CLI::IsMember({"json", "table"}));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  sc::Script script;
  try {
    script = sc::parseScript(buf.str());
  } catch (const gorlab::ParseError& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return sc::kParse;
  }
  if (timeout > 0) opts.timeoutSecs = timeout;
  opts.json = format == "json";
  opts.out = &std::cout;
  opts.baseDir = std::filesystem::path(path).parent_path();
  opts.scriptName = std::filesystem::path(path).filename().string();
  sc::RunReport r = sc::runScript(script, opts);
  if (opts.json) std::cout << r.json.dump(2) << "\n";
  if (r.json.contains("error")) std::cerr << path << ": " << r.json["error"]["message"].get<std::string>() << "\n";
  return r.exitCode;
}
