// pcalc: run Poisson-calculus scripts from files or the command line.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pcalc/interpreter.hpp"

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kEvaluation = 3 };

struct Flags {
  bool json = false;
  bool check = false;
  bool strict = false;
};

int execute(const std::string& origin, const std::string& source, const Flags& flags) {
  using namespace pcalc::script;
  Script script;
  try {
    script = parse(source);
  } catch (const ParseError& e) {
    std::cerr << origin << ":" << e.what() << "\n";
    return kUsage;
  }
  Interpreter interp;
  const std::vector<Report> reports = interp.run(script, flags.strict);
  bool failed_check = false;
  bool errored = false;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const Report& r = reports[i];
    if (flags.json) {
      std::cout << r.to_json().dump() << "\n";
    } else {
      if (i) std::cout << "\n";
      std::cout << r.render_text();
    }
    errored = errored || !r.ok;
    failed_check = failed_check || (r.verdict && *r.verdict == Verdict::Fails);
  }
  std::cout.flush();
  if (errored) return kEvaluation;
  if (flags.check && failed_check) return kCheckFailed;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculus for Poisson structures, log forms and Chern-class bookkeeping"};
  app.require_subcommand(1);
  Flags flags;
  app.add_flag("--json", flags.json, "emit one JSON record per command");
  app.add_flag("--check", flags.check, "exit 1 when a verdict-bearing command fails");
  app.add_flag("--strict", flags.strict, "stop at the first evaluation error");

  std::string file;
  auto* run = app.add_subcommand("run", "execute a script file");
  run->add_option("file", file, "script file (.pc)")->required();
  run->fallthrough();

  std::string statements;
  auto* eval = app.add_subcommand("eval", "execute statements given inline");
  eval->add_option("statements", statements, "statements separated by ';' or newlines")->required();
  eval->fallthrough();

  int pspace = 0;
  int free_n = 0;
  auto* chern = app.add_subcommand("chern", "characteristic-class computations");
  auto* opt_p = chern->add_option("--pspace", pspace, "projective space P^N")->check(CLI::Range(1, 16));
  auto* opt_f = chern->add_option("--free", free_n, "free Chern classes c1..cN")->check(CLI::Range(1, 16));
  opt_p->excludes(opt_f);
  bool obstruction = false, classes = false, cotangent = false, divisor_cotangent = false;
  chern->add_flag("--obstruction", obstruction, "c1(c1c2 - c3)");
  chern->add_flag("--classes", classes, "the Chern classes of the model");
  chern->add_flag("--cotangent", cotangent, "total Chern class of the cotangent bundle");
  chern->add_flag("--divisor-cotangent", divisor_cotangent, "c(cotangent) of an anticanonical divisor");
  chern->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (run->parsed()) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
      std::cerr << "pcalc: cannot open '" << file << "'\n";
      return kUsage;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return execute(file, buf.str(), flags);
  }
  if (eval->parsed()) return execute("<eval>", statements, flags);

  if (opt_p->count() + opt_f->count() != 1) {
    std::cerr << "pcalc chern: give exactly one of --pspace N or --free N\n";
    return kUsage;
  }
  const std::string model = opt_p->count() ? "pspace " + std::to_string(pspace) : "free " + std::to_string(free_n);
  std::string source;
  if (classes) source += "chern " + model + " classes\n";
  if (cotangent) source += "chern " + model + " cotangent\n";
  if (divisor_cotangent) source += "chern " + model + " divisor_cotangent\n";
  if (obstruction || source.empty()) source += "chern " + model + " obstruction\n";
  return execute("<chern>", source, flags);
}
