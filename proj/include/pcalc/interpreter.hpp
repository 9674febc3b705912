#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "pcalc/chern.hpp"
#include "pcalc/geomtool.hpp"
#include "pcalc/logcalc.hpp"
#include "pcalc/parser.hpp"

namespace pcalc::script {

enum class Verdict { Holds, Fails };

/// Outcome of one command (or of a failing declaration).
struct Report {
  std::string command;  // statement text
  SourceLocation loc;
  bool ok = true;
  std::string text;              // canonical result, or the error message
  nlohmann::ordered_json value;  // structured result; null on error
  std::optional<Verdict> verdict;
  std::string error_kind;  // set when !ok

  std::string render_text() const;
  nlohmann::ordered_json to_json() const;
};

using Value = std::variant<RationalFunction, MultiVector, DiffForm, PoissonStructure, NCDivisor,
                           ChartMap, BlowupChart, Point, ChernElement, FormalDivisor>;

/// Executes parsed scripts statement by statement. State persists across
/// calls to run(), so a script may be fed in pieces.
class Interpreter {
 public:
  /// Runs every statement; with `strict`, stops after the first error.
  std::vector<Report> run(const Script& script, bool strict = false);

  const Value* lookup(const std::string& name) const;
  ChartPtr chart(const std::string& name) const;

 private:
  struct Outcome {
    std::string text;
    nlohmann::ordered_json value;
    std::optional<Verdict> verdict;
    std::optional<Value> bindable;
  };

  void execute_declaration(const Statement& st);
  Outcome execute_command(const Command& cmd);

  std::map<std::string, ChartPtr> charts_;
  std::map<std::string, Value> values_;
};

}  // namespace pcalc::script
