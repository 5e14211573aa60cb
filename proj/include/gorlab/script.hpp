#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace gorlab::script {

// 1-based.
struct Loc {
  std::size_t line = 0;
  std::size_t column = 0;
};

struct Expr {
  enum class Kind { Name, Int, String, Range, Call };
  Kind kind = Kind::Name;
  std::string text;  // name, string contents, or function name
  std::int64_t lo = 0, hi = 0;  // Int uses lo
  std::vector<Expr> args;
  Loc loc;
};

// Polynomial source text, parsed once its ring is known.
struct PolyText {
  std::string text;
  Loc loc;
};

struct Statement {
  enum class Kind { Ring, Module, Let, Command, Emit };
  Kind kind = Kind::Let;
  Loc loc;
  std::string source;
  std::string name;

  // ring NAME = GF(p)[vars] / (relations);
  std::uint64_t prime = 101;
  std::vector<std::string> variables;
  std::vector<PolyText> relations;

  // module NAME = coker RING [gens {a, b}] [[...], ...];
  std::string ringName;
  std::vector<int> rowDegrees;
  std::vector<std::vector<PolyText>> rows;

  // let NAME = expr;  VERB call;
  std::string verb;
  Expr expr;

  // emit FORMAT "path";
  std::string format;
  std::string path;
};

struct Script {
  std::vector<Statement> statements;
};

// Throws ParseError with line and column, including for identifiers used
// before their definition.
Script parseScript(std::string_view text);

enum ExitCode : int {
  kOk = 0,
  kError = 1,
  kHypothesis = 2,
  kViolation = 3,
  kResource = 4,
  kParse = 5,
};

struct RunOptions {
  std::uint64_t seed = 1;
  int window = 10;
  int degreeCap = 64;
  std::optional<double> timeoutSecs;
  bool json = false;               // stdout format
  std::ostream* out = nullptr;     // progress and tables
  std::filesystem::path baseDir;   // for relative emit paths
  std::string scriptName;
};

struct RunReport {
  nlohmann::json json;
  int exitCode = kOk;
};

RunReport runScript(const Script& s, const RunOptions& opts);

// Drops timing fields, for determinism comparisons.
nlohmann::json withoutTimings(nlohmann::json j);

}  // namespace gorlab::script
