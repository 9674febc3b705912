#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pcalc::script {

struct SourceLocation {
  int line = 1;
  int column = 1;
};

/// Lexical, syntactic and name-resolution failures. what() is
/// "line:column: message".
class ParseError : public std::runtime_error {
 public:
  ParseError(SourceLocation loc, const std::string& message);
  SourceLocation location() const { return loc_; }
  const std::string& message() const { return message_; }

 private:
  SourceLocation loc_;
  std::string message_;
};

// ---------------------------------------------------------------- tokens

enum class TokenType {
  Identifier,
  Integer,
  Generator,  // @i
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  Wedge,  // /\ .
  LParen,
  RParen,
  Comma,
  Equals,
  Colon,
  Arrow,
  Newline,  // also ';'
  End,
};

struct Token {
  TokenType type;
  std::string text;
  SourceLocation loc;
  std::size_t offset = 0;  // byte offset into the source
};

std::vector<Token> tokenize(std::string_view source);

// ---------------------------------------------------------------- AST

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Op {
    Number,        // text = decimal digits
    Name,          // text = identifier
    Negate,
    Add,
    Sub,
    Mul,
    Div,
    Pow,           // args[0] ^ exponent
    Wedge,
    Differential,  // d(args[0])
    Generator,     // @index
    Tuple,         // (a, b, ...)
  };
  Op op;
  SourceLocation loc;
  std::string text;
  long value = 0;  // Generator index (1-based) or Pow exponent
  std::vector<ExprPtr> args;
};

struct ChartDecl {
  std::string name;
  std::vector<std::string> coords;
};
struct UseChart {
  std::string name;
};
/// let / poisson / form / field / func / point  NAME = expr
struct ValueDecl {
  std::string keyword;
  std::string name;
  ExprPtr expr;
};
struct DivisorDecl {
  std::string name;
  std::vector<std::string> branches;
};
struct MapDecl {
  std::string name;
  std::string source;
  std::string target;
  std::vector<std::pair<std::string, ExprPtr>> images;  // target coord -> expr on source
};
struct BlowupDecl {
  std::string name;
  std::string map;
  ExprPtr exceptional;
};

/// A command argument: an expression, or a bare word (labels, keywords).
struct Arg {
  ExprPtr expr;       // set for expression arguments
  std::string word;   // set for word/label/integer arguments
  SourceLocation loc;
};

struct Command {
  std::string name;
  std::vector<Arg> args;
  std::string context_chart;  // chart in force when the command was parsed
};
struct CommandBinding {
  std::string name;
  Command command;
};

struct Statement {
  SourceLocation loc;
  std::string source;  // statement text, whitespace collapsed
  std::string chart;   // chart in force for its expressions
  std::variant<ChartDecl, UseChart, ValueDecl, DivisorDecl, MapDecl, BlowupDecl, Command,
               CommandBinding>
      node;
};

struct Script {
  std::vector<Statement> statements;
};

/// Parses and name-resolves a script: every referenced name is defined
/// earlier, no name is defined twice, coordinates exist on the chart in force.
Script parse(std::string_view source);

/// Parses a single expression (no names other than coordinates of `coords`
/// and the given extra names are allowed).
ExprPtr parse_expression(std::string_view source, const std::vector<std::string>& coords);

/// Names of the commands the grammar knows.
const std::vector<std::string>& command_names();

/// Coordinate names of a product chart: the second factor's names get "_2"
/// suffixes until they are unique.
std::vector<std::string> product_coordinate_names(const std::vector<std::string>& a,
                                                  const std::vector<std::string>& b);

}  // namespace pcalc::script
