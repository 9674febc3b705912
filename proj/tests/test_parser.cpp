#include "doctest.h"
#include "oracles.hpp"
#include "pcalc/interpreter.hpp"

using namespace pcalc;
using namespace pcalc::script;

namespace {

const char* kHeader = "chart X dim 4 coords x1 x2 x3 x4\n";

std::string error_of(const std::string& src) {
  try {
    parse(src);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "no error";
}

/// Parses `text` as the value of `let v = ...` and prints it back.
std::string reparse(const std::string& text) {
  Interpreter interp;
  const auto reports = interp.run(parse(std::string(kHeader) + "let v = " + text + "\n"));
  REQUIRE(reports.empty());
  const Value* v = interp.lookup("v");
  REQUIRE(v != nullptr);
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, RationalFunction> || std::is_same_v<T, MultiVector> ||
                      std::is_same_v<T, DiffForm>) {
          return to_string(x);
        } else {
          return "<not algebraic>";
        }
      },
      *v);
}

}  // namespace

TEST_CASE("tokens") {
  const auto t = tokenize("poisson Pi = x1*@1/\\@2 -> ; # comment\n2");
  std::vector<TokenType> types;
  for (const auto& tok : t) types.push_back(tok.type);
  const std::vector<TokenType> expected = {
      TokenType::Identifier, TokenType::Identifier, TokenType::Equals,  TokenType::Identifier,
      TokenType::Star,       TokenType::Generator,  TokenType::Wedge,   TokenType::Generator,
      TokenType::Arrow,      TokenType::Newline,    TokenType::Newline, TokenType::Integer,
      TokenType::End};
  CHECK(types == expected);
  CHECK(t[11].loc.line == 2);
  CHECK(t[11].loc.column == 1);
}

TEST_CASE("statements") {
  const Script s = parse(
      "chart X dim 4 coords x1 x2 x3 x4\n"
      "poisson Pi = x1*@1/\\@2 + @3/\\@4\n"
      "form w = x1*d(x2)\n"
      "delta Pi w\n");
  REQUIRE(s.statements.size() == 4);
  const auto& chart = std::get<ChartDecl>(s.statements[0].node);
  CHECK(chart.coords == std::vector<std::string>{"x1", "x2", "x3", "x4"});
  const auto& pi = std::get<ValueDecl>(s.statements[1].node);
  CHECK(pi.keyword == "poisson");
  CHECK(pi.expr->op == Expr::Op::Add);
  CHECK(pi.expr->args[0]->op == Expr::Op::Wedge);
  const auto& cmd = std::get<Command>(s.statements[3].node);
  CHECK(cmd.name == "delta");
  REQUIRE(cmd.args.size() == 2);
  CHECK(cmd.args[0].word == "Pi");
  CHECK(cmd.args[1].expr->op == Expr::Op::Name);
  CHECK(s.statements[3].source == "delta Pi w");
  CHECK(s.statements[3].loc.line == 4);
}

TEST_CASE("precedence") {
  const ExprPtr e = parse_expression("a + b*c^2 /\\ d", {"a", "b", "c", "d"});
  REQUIRE(e->op == Expr::Op::Add);
  const ExprPtr w = e->args[1];
  REQUIRE(w->op == Expr::Op::Wedge);
  CHECK(w->args[0]->op == Expr::Op::Mul);
  CHECK(w->args[0]->args[1]->op == Expr::Op::Pow);
  CHECK(w->args[0]->args[1]->value == 2);
  const ExprPtr n = parse_expression("-a^2", {"a"});
  CHECK(n->op == Expr::Op::Negate);
  CHECK(n->args[0]->op == Expr::Op::Pow);
  const ExprPtr l = parse_expression("a - b - c", {"a", "b", "c"});
  CHECK(l->op == Expr::Op::Sub);
  CHECK(l->args[0]->op == Expr::Op::Sub);
}

TEST_CASE("canonical printing") {
  CHECK(reparse("x1*@1/\\@2 + @3/\\@4") == "x1*@1/\\@2 + @3/\\@4");
  CHECK(reparse("@4/\\@3 + @2/\\@1*x1") == "-x1*@1/\\@2 - @3/\\@4");
  CHECK(reparse("(x1 + x2)*(x1 - x2)") == "x1^2 - x2^2");
  CHECK(reparse("x2*x1 + x1*x2") == reparse("2*x1*x2"));
  CHECK(reparse("d(x1*x2)") == "x2*d(x1) + x1*d(x2)");
  CHECK(reparse("x1^-1") == "1/x1");
  CHECK(reparse("1/(x1*x2)") == "1/(x1*x2)");
  CHECK(reparse("3/6") == "1/2");
  CHECK(reparse("1 + @1") == "1 + @1");
}

TEST_CASE("print then parse is the identity on 100 random values of each kind") {
  oracle::Random rng(61);
  auto X = oracle::chart_x(4);
  for (int trial = 0; trial < 400; ++trial) {
    std::string text;
    switch (trial % 4) {
      case 0: {
        const RationalFunction f = rng.polynomial(X, 3);
        const Polynomial g = rng.nonzero_polynomial(X, 2);
        text = to_string(f / RationalFunction(g));
        break;
      }
      case 1: text = to_string(rng.homogeneous<MultiVector>(X, rng.integer(0, 4), 2) +
                               rng.homogeneous<MultiVector>(X, rng.integer(0, 4), 2));
        break;
      case 2: text = to_string(rng.homogeneous<DiffForm>(X, rng.integer(0, 4), 2));
        break;
      default: {
        auto w = rng.homogeneous<DiffForm>(X, 2, 1);
        w *= RationalFunction(X, 1) / RationalFunction(rng.nonzero_polynomial(X, 1));
        text = to_string(w);
      }
    }
    CHECK(reparse(text) == text);
  }
}

TEST_CASE("error positions") {
  const std::string h = kHeader;
  CHECK(error_of(h + "poisson Pi = x1*@1/\\@5\n") == "2:21: generator index @5 out of range for chart 'X'");
  CHECK(error_of(h + "let f = x1 + y\n") == "2:14: unknown name 'y'");
  CHECK(error_of(h + "let f = x1 +\n") == "2:13: expected an expression, found end of line");
  CHECK(error_of(h + "let f = (x1 + x2\n") == "2:9: unclosed '('");
  CHECK(error_of(h + "let f = x1 $ x2\n") == "2:12: unexpected character '$'");
  CHECK(error_of(h + "let f = 1\nlet f = 2\n") == "3:5: redefinition of 'f'");
  CHECK(error_of(h + "pfaffian Q\n") == "2:10: unknown name 'Q'");
  CHECK(error_of(h + "frobnicate x1\n") == "2:1: unknown statement 'frobnicate'");
  CHECK(error_of(h + "let f = 2x1\n") == "2:9: malformed number");
  CHECK(error_of("let f = 1\n") == "1:5: no chart declared yet");
  CHECK(error_of("chart X dim 3 coords a b\n") == "1:7: chart 'X' declares dim 3 but lists 2 coordinates");
  CHECK(error_of(h + "divisor D = x5\n") == "2:13: 'x5' is not a coordinate of chart 'X'");
  CHECK(error_of(h + "let x1 = 2\n") == "2:5: 'x1' is a coordinate of chart 'X'");
  CHECK(error_of(h + "let pfaffian = 2\n") == "2:5: 'pfaffian' is a reserved word");
  CHECK(error_of(h + "let f = x1^x2\n") == "2:12: expected an integer, found 'x2'");
  CHECK(error_of(h + "chern pspace 4 everything\n") == "2:16: unknown Chern computation 'everything'");
  CHECK(error_of(h + "print x1 x2\n") == "2:10: unexpected 'x2' after statement");
}

TEST_CASE("maps, blowups and product charts") {
  const Script s = parse(
      "chart H coords a0 a1 b0 b1\n"
      "chart T coords t a1 b0 b1\n"
      "map phi : T -> H (a0 = t*a1)\n"
      "blowup B = phi exceptional a1\n"
      "multiplicity B a0^2 + b0*a1^2 + b1*a0*a1\n"
      "chart A coords x1 x2\n"
      "poisson P = x1*@1/\\@2\n"
      "let Q = product P P\n"
      "use AxA\n"
      "pfaffian Q\n"
      "print x1_2\n");
  CHECK(s.statements.size() == 11);
  CHECK(error_of("chart H coords a0 a1\nchart T coords t\nmap phi : T -> H (a0 = t)\n") ==
        "3:5: no image for target coordinate 'a1'");
}
