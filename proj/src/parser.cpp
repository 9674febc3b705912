#include <algorithm>
#include <set>

#include "pcalc/parser.hpp"

namespace pcalc::script {

namespace {

// Argument patterns, one character per argument:
//   E full expression      e primary expression     n defined name
//   c coordinate name      p point                  T expression on the target
//                                                     chart of the preceding name
// Expression arguments are primaries, except in final position.
// Commands with keyword sections have a custom parser (pattern "*").
const std::vector<std::pair<std::string, std::string>>& signatures() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"print", "E"},
      {"exterior_d", "e"},
      {"diff", "ec"},
      {"wedge", "ee"},
      {"contract", "ee"},
      {"lie", "ee"},
      {"gcd", "ee"},
      {"squarefree", "e"},
      {"eval", "ep"},
      {"pullback", "nT"},
      {"schouten", "ee"},
      {"integrable", "n"},
      {"lichnerowicz", "ne"},
      {"hamiltonian", "ne"},
      {"pbracket", "nee"},
      {"delta", "ne"},
      {"koszul", "nee"},
      {"sharp", "ne"},
      {"pfaffian", "n"},
      {"product", "nn"},
      {"corank", "np"},
      {"logframe", "n"},
      {"logmatrix", "nn"},
      {"logiso", "nn"},
      {"pnormal", "*"},
      {"multiplicity", "nT"},
      {"transverse", "eep"},
      {"anticanonical", "*"},
      {"reduced_pullback", "*"},
      {"chern", "*"},
  };
  return table;
}

const std::set<std::string>& declaration_keywords() {
  static const std::set<std::string> kw = {"chart", "use",    "let",     "poisson", "form",
                                           "field", "func",   "point",   "divisor", "map",
                                           "blowup"};
  return kw;
}

struct NameInfo {
  std::string kind;   // keyword of the declaration, or "map", "blowup", "divisor", "result"
  std::string chart;  // chart the value lives on, when known
  std::string map;    // for blowups: the underlying map
};

class Parser {
 public:
  explicit Parser(std::string_view source) : source_(source), tokens_(tokenize(source)) {}

  Script parse_script() {
    Script script;
    while (true) {
      skip_newlines();
      if (peek().type == TokenType::End) break;
      script.statements.push_back(parse_statement());
      if (peek().type != TokenType::End) expect(TokenType::Newline, "end of statement");
    }
    return script;
  }

  ExprPtr parse_lone_expression(const std::vector<std::string>& coords) {
    charts_["<expr>"] = coords;
    current_chart_ = "<expr>";
    skip_newlines();
    ExprPtr e = parse_expr(0, current_chart_);
    skip_newlines();
    expect(TokenType::End, "end of input");
    return e;
  }

 private:
  // ------------------------------------------------------------ token helpers
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool accept(TokenType t) {
    if (peek().type != t) return false;
    next();
    return true;
  }
  static std::string describe(const Token& t) {
    switch (t.type) {
      case TokenType::End: return "end of input";
      case TokenType::Newline: return "end of line";
      default: return "'" + t.text + "'";
    }
  }
  const Token& expect(TokenType t, const std::string& what) {
    if (peek().type != t) throw ParseError(peek().loc, "expected " + what + ", found " + describe(peek()));
    return next();
  }
  std::string expect_identifier(const std::string& what) {
    return expect(TokenType::Identifier, what).text;
  }
  void expect_word(const std::string& word) {
    const Token& t = peek();
    if (t.type != TokenType::Identifier || t.text != word) {
      throw ParseError(t.loc, "expected '" + word + "', found " + describe(t));
    }
    next();
  }
  void skip_newlines() {
    while (peek().type == TokenType::Newline) next();
  }
  bool at_statement_end() const {
    return peek().type == TokenType::Newline || peek().type == TokenType::End;
  }

  // ------------------------------------------------------------ names
  bool is_command(const std::string& s) const {
    const auto& sig = signatures();
    return std::any_of(sig.begin(), sig.end(), [&](const auto& p) { return p.first == s; });
  }
  bool is_reserved(const std::string& s) const {
    return is_command(s) || declaration_keywords().count(s) != 0 || s == "d";
  }

  void define(const Token& at, const std::string& name, NameInfo info) {
    if (is_reserved(name)) throw ParseError(at.loc, "'" + name + "' is a reserved word");
    if (names_.count(name) != 0) throw ParseError(at.loc, "redefinition of '" + name + "'");
    if (!current_chart_.empty()) {
      const auto& coords = charts_.at(current_chart_);
      if (std::find(coords.begin(), coords.end(), name) != coords.end()) {
        throw ParseError(at.loc, "'" + name + "' is a coordinate of chart '" + current_chart_ + "'");
      }
    }
    names_.emplace(name, std::move(info));
  }

  const NameInfo& lookup(const Token& at, const std::string& name) const {
    auto it = names_.find(name);
    if (it == names_.end()) throw ParseError(at.loc, "unknown name '" + name + "'");
    return it->second;
  }

  void require_chart_in_force(const Token& at) const {
    if (current_chart_.empty()) throw ParseError(at.loc, "no chart declared yet");
  }

  // ------------------------------------------------------------ expressions
  static int binding_power(TokenType t) {
    switch (t) {
      case TokenType::Plus:
      case TokenType::Minus: return 10;
      case TokenType::Wedge: return 20;
      case TokenType::Star:
      case TokenType::Slash: return 30;
      case TokenType::Caret: return 40;
      default: return 0;
    }
  }
  static constexpr int kPrefixPower = 35;

  static ExprPtr make(Expr::Op op, SourceLocation loc, std::vector<ExprPtr> args = {},
                      std::string text = {}, long value = 0) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->loc = loc;
    e->args = std::move(args);
    e->text = std::move(text);
    e->value = value;
    return e;
  }

  ExprPtr parse_expr(int rbp, const std::string& chart) {
    ExprPtr left = parse_prefix(chart);
    while (binding_power(peek().type) > rbp) left = parse_infix(std::move(left), chart);
    return left;
  }

  long parse_signed_integer() {
    const bool negative = accept(TokenType::Minus);
    const Token& t = expect(TokenType::Integer, "an integer");
    if (t.text.size() > 9) throw ParseError(t.loc, "integer too large");
    const long v = std::stol(t.text);
    return negative ? -v : v;
  }

  ExprPtr parse_prefix(const std::string& chart) {
    const Token& t = peek();
    switch (t.type) {
      case TokenType::Integer:
        next();
        return make(Expr::Op::Number, t.loc, {}, t.text);
      case TokenType::Generator: {
        next();
        const std::string digits = t.text.substr(1);
        if (digits.size() > 3) throw ParseError(t.loc, "generator index too large");
        const long idx = std::stol(digits);
        const auto& coords = charts_.at(chart);
        if (idx < 1 || static_cast<std::size_t>(idx) > coords.size()) {
          throw ParseError(t.loc, "generator index @" + digits + " out of range for chart '" + chart + "'");
        }
        return make(Expr::Op::Generator, t.loc, {}, {}, idx);
      }
      case TokenType::Minus: {
        next();
        return make(Expr::Op::Negate, t.loc, {parse_expr(kPrefixPower, chart)});
      }
      case TokenType::LParen: {
        next();
        std::vector<ExprPtr> items{parse_expr(0, chart)};
        while (accept(TokenType::Comma)) items.push_back(parse_expr(0, chart));
        expect(TokenType::RParen, "')'");
        if (items.size() == 1) return items.front();
        return make(Expr::Op::Tuple, t.loc, std::move(items));
      }
      case TokenType::Identifier: {
        next();
        if (t.text == "d" && peek().type == TokenType::LParen) {
          next();
          ExprPtr inner = parse_expr(0, chart);
          expect(TokenType::RParen, "')'");
          return make(Expr::Op::Differential, t.loc, {std::move(inner)});
        }
        const auto& coords = charts_.at(chart);
        if (std::find(coords.begin(), coords.end(), t.text) == coords.end()) lookup(t, t.text);
        return make(Expr::Op::Name, t.loc, {}, t.text);
      }
      default:
        throw ParseError(t.loc, "expected an expression, found " + describe(t));
    }
  }

  ExprPtr parse_infix(ExprPtr left, const std::string& chart) {
    const Token& t = next();
    const int bp = binding_power(t.type);
    switch (t.type) {
      case TokenType::Caret: {
        const long exponent = parse_signed_integer();
        return make(Expr::Op::Pow, t.loc, {std::move(left)}, {}, exponent);
      }
      case TokenType::Plus: return make(Expr::Op::Add, t.loc, {left, parse_expr(bp, chart)});
      case TokenType::Minus: return make(Expr::Op::Sub, t.loc, {left, parse_expr(bp, chart)});
      case TokenType::Star: return make(Expr::Op::Mul, t.loc, {left, parse_expr(bp, chart)});
      case TokenType::Slash: return make(Expr::Op::Div, t.loc, {left, parse_expr(bp, chart)});
      case TokenType::Wedge: return make(Expr::Op::Wedge, t.loc, {left, parse_expr(bp, chart)});
      default: throw ParseError(t.loc, "unexpected " + describe(t));
    }
  }

  // ------------------------------------------------------------ statements
  std::string collapse(std::size_t begin, std::size_t end) const {
    std::string out;
    bool space = false;
    for (std::size_t i = begin; i < end; ++i) {
      const char c = source_[i];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        space = !out.empty();
        continue;
      }
      if (space) out += ' ';
      space = false;
      out += c;
    }
    return out;
  }

  Statement parse_statement() {
    const Token& first = peek();
    Statement st;
    st.loc = first.loc;
    const std::size_t begin = first.offset;
    if (first.type != TokenType::Identifier) {
      throw ParseError(first.loc, "expected a statement, found " + describe(first));
    }
    const std::string& kw = first.text;
    if (kw == "chart") {
      st.node = parse_chart();
    } else if (kw == "use") {
      next();
      const Token& name = expect(TokenType::Identifier, "chart name");
      if (charts_.count(name.text) == 0) throw ParseError(name.loc, "unknown chart '" + name.text + "'");
      current_chart_ = name.text;
      st.node = UseChart{name.text};
    } else if (kw == "divisor") {
      st.node = parse_divisor();
    } else if (kw == "map") {
      st.node = parse_map();
    } else if (kw == "blowup") {
      st.node = parse_blowup();
    } else if (kw == "let" && peek(2).type == TokenType::Equals && peek(3).type == TokenType::Identifier &&
               is_command(peek(3).text)) {
      next();
      const Token& name = expect(TokenType::Identifier, "a name");
      expect(TokenType::Equals, "'='");
      Command cmd = parse_command();
      NameInfo info{"result", current_chart_, {}};
      if (cmd.name == "product") {
        const std::string& ca = names_.at(cmd.args[0].word).chart;
        const std::string& cb = names_.at(cmd.args[1].word).chart;
        const std::string chart = ca + "x" + cb;
        if (charts_.count(chart) == 0) charts_[chart] = product_coordinate_names(charts_.at(ca), charts_.at(cb));
        info = {"poisson", chart, {}};
      }
      define(name, name.text, info);
      st.node = CommandBinding{name.text, std::move(cmd)};
    } else if (declaration_keywords().count(kw) != 0) {
      st.node = parse_value_decl();
    } else if (is_command(kw)) {
      st.node = parse_command();
    } else {
      throw ParseError(first.loc, "unknown statement '" + kw + "'");
    }
    const Token& last = tokens_[pos_ - 1];
    st.source = collapse(begin, last.offset + last.text.size());
    st.chart = current_chart_;
    if (!at_statement_end()) {
      throw ParseError(peek().loc, "unexpected " + describe(peek()) + " after statement");
    }
    return st;
  }

  ChartDecl parse_chart() {
    next();
    const Token& name = expect(TokenType::Identifier, "chart name");
    if (charts_.count(name.text) != 0) throw ParseError(name.loc, "redefinition of chart '" + name.text + "'");
    std::optional<long> dim;
    std::vector<std::string> coords;
    if (peek().type == TokenType::Identifier && peek().text == "dim") {
      next();
      const Token& d = expect(TokenType::Integer, "dimension");
      if (d.text.size() > 2 || std::stol(d.text) < 1 || std::stol(d.text) > 32) {
        throw ParseError(d.loc, "dimension must be between 1 and 32");
      }
      dim = std::stol(d.text);
    }
    if (peek().type == TokenType::Identifier && peek().text == "coords") {
      next();
      while (peek().type == TokenType::Identifier) {
        const Token& c = next();
        if (c.text == "d" || is_reserved(c.text)) {
          throw ParseError(c.loc, "'" + c.text + "' cannot be a coordinate name");
        }
        if (std::find(coords.begin(), coords.end(), c.text) != coords.end()) {
          throw ParseError(c.loc, "duplicate coordinate '" + c.text + "'");
        }
        if (names_.count(c.text) != 0) {
          throw ParseError(c.loc, "coordinate '" + c.text + "' clashes with a defined name");
        }
        coords.push_back(c.text);
      }
      if (coords.empty()) throw ParseError(peek().loc, "expected coordinate names");
      if (dim && static_cast<std::size_t>(*dim) != coords.size()) {
        throw ParseError(name.loc, "chart '" + name.text + "' declares dim " + std::to_string(*dim) +
                                       " but lists " + std::to_string(coords.size()) + " coordinates");
      }
    } else if (dim) {
      for (long i = 1; i <= *dim; ++i) coords.push_back("x" + std::to_string(i));
    } else {
      throw ParseError(peek().loc, "expected 'dim' or 'coords'");
    }
    charts_[name.text] = coords;
    current_chart_ = name.text;
    return {name.text, coords};
  }

  ValueDecl parse_value_decl() {
    const Token& kw = next();
    const Token& name = expect(TokenType::Identifier, "a name");
    require_chart_in_force(name);
    expect(TokenType::Equals, "'='");
    ExprPtr e = parse_expr(0, current_chart_);
    define(name, name.text, {kw.text, current_chart_, {}});
    return {kw.text, name.text, std::move(e)};
  }

  DivisorDecl parse_divisor() {
    next();
    const Token& name = expect(TokenType::Identifier, "divisor name");
    require_chart_in_force(name);
    expect(TokenType::Equals, "'='");
    DivisorDecl d{name.text, {}};
    const auto& coords = charts_.at(current_chart_);
    while (peek().type == TokenType::Identifier) {
      const Token& c = next();
      if (std::find(coords.begin(), coords.end(), c.text) == coords.end()) {
        throw ParseError(c.loc, "'" + c.text + "' is not a coordinate of chart '" + current_chart_ + "'");
      }
      d.branches.push_back(c.text);
    }
    if (d.branches.empty()) throw ParseError(peek().loc, "a divisor needs at least one branch coordinate");
    define(name, name.text, {"divisor", current_chart_, {}});
    return d;
  }

  MapDecl parse_map() {
    next();
    const Token& name = expect(TokenType::Identifier, "map name");
    expect(TokenType::Colon, "':'");
    const Token& src = expect(TokenType::Identifier, "source chart");
    expect(TokenType::Arrow, "'->'");
    const Token& tgt = expect(TokenType::Identifier, "target chart");
    for (const Token* t : {&src, &tgt}) {
      if (charts_.count(t->text) == 0) throw ParseError(t->loc, "unknown chart '" + t->text + "'");
    }
    MapDecl m{name.text, src.text, tgt.text, {}};
    const auto& target_coords = charts_.at(tgt.text);
    expect(TokenType::LParen, "'('");
    if (peek().type != TokenType::RParen) {
      do {
        const Token& coord = expect(TokenType::Identifier, "target coordinate");
        if (std::find(target_coords.begin(), target_coords.end(), coord.text) == target_coords.end()) {
          throw ParseError(coord.loc, "'" + coord.text + "' is not a coordinate of chart '" + tgt.text + "'");
        }
        for (const auto& [c, e] : m.images) {
          if (c == coord.text) throw ParseError(coord.loc, "image of '" + coord.text + "' given twice");
        }
        expect(TokenType::Equals, "'='");
        m.images.emplace_back(coord.text, parse_expr(0, src.text));
      } while (accept(TokenType::Comma));
    }
    expect(TokenType::RParen, "')'");
    const auto& source_coords = charts_.at(src.text);
    for (const auto& c : target_coords) {
      const bool given = std::any_of(m.images.begin(), m.images.end(), [&](const auto& p) { return p.first == c; });
      if (!given && std::find(source_coords.begin(), source_coords.end(), c) == source_coords.end()) {
        throw ParseError(name.loc, "no image for target coordinate '" + c + "'");
      }
    }
    define(name, name.text, {"map", src.text, {}});
    names_[name.text].map = tgt.text;  // target chart
    return m;
  }

  BlowupDecl parse_blowup() {
    next();
    const Token& name = expect(TokenType::Identifier, "blowup name");
    expect(TokenType::Equals, "'='");
    const Token& map = expect(TokenType::Identifier, "map name");
    const NameInfo& info = lookup(map, map.text);
    if (info.kind != "map") throw ParseError(map.loc, "'" + map.text + "' is not a chart map");
    expect_word("exceptional");
    ExprPtr e = parse_expr(0, info.chart);
    define(name, name.text, {"blowup", info.chart, info.map});
    return {name.text, map.text, std::move(e)};
  }

  Arg expression_arg(const std::string& chart, bool full = false) {
    const Token& t = peek();
    if (at_statement_end()) throw ParseError(t.loc, "missing argument");
    return Arg{parse_expr(full ? 0 : kPrefixPower - 1, chart), {}, t.loc};
  }

  Arg word_arg(const std::string& what) {
    const Token& t = peek();
    if (t.type != TokenType::Identifier) {
      throw ParseError(t.loc, "expected " + what + ", found " + describe(t));
    }
    next();
    return Arg{nullptr, t.text, t.loc};
  }

  Arg integer_arg() {
    const Token& t = peek();
    const long v = parse_signed_integer();
    return Arg{nullptr, std::to_string(v), t.loc};
  }

  Command parse_command() {
    const Token& head = next();
    Command cmd{head.text, {}, current_chart_};
    auto sig = std::find_if(signatures().begin(), signatures().end(),
                            [&](const auto& p) { return p.first == head.text; });
    if (sig->second == "*") {
      parse_special(cmd, head);
      return cmd;
    }
    std::string previous_target;
    const std::string& pattern = sig->second;
    for (std::size_t ai = 0; ai < pattern.size(); ++ai) {
      const char k = pattern[ai];
      // the final argument may be a full expression
      const bool last = ai + 1 == pattern.size();
      switch (k) {
        case 'E':
        case 'e':
        case 'p':
          require_chart_in_force(peek());
          cmd.args.push_back(expression_arg(current_chart_, k == 'E' || (k == 'e' && last)));
          break;
        case 'n': {
          Arg a = word_arg("a name");
          const NameInfo& info = lookup(tokens_[pos_ - 1], a.word);
          previous_target = info.kind == "map" ? info.map : info.kind == "blowup" ? info.map : std::string();
          cmd.args.push_back(std::move(a));
          break;
        }
        case 'T':
          if (previous_target.empty()) {
            throw ParseError(cmd.args.back().loc, "'" + cmd.args.back().word + "' is not a chart map or blowup");
          }
          cmd.args.push_back(expression_arg(previous_target, last));
          break;
        case 'c': {
          Arg a = word_arg("a coordinate name");
          const auto& coords = charts_.at(current_chart_);
          if (std::find(coords.begin(), coords.end(), a.word) == coords.end()) {
            throw ParseError(a.loc, "'" + a.word + "' is not a coordinate of chart '" + current_chart_ + "'");
          }
          cmd.args.push_back(std::move(a));
          break;
        }
        default: break;
      }
    }
    return cmd;
  }

  void parse_special(Command& cmd, const Token& head) {
    if (cmd.name == "pnormal") {
      for (int i = 0; i < 2; ++i) {
        Arg a = word_arg("a name");
        lookup(tokens_[pos_ - 1], a.word);
        cmd.args.push_back(std::move(a));
      }
      std::string section;
      while (!at_statement_end()) {
        if (peek().type == TokenType::Identifier && (peek().text == "smooth" || peek().text == "singular")) {
          section = peek().text;
          cmd.args.push_back(word_arg("section"));
          continue;
        }
        if (section.empty()) throw ParseError(peek().loc, "expected 'smooth' or 'singular'");
        cmd.args.push_back(expression_arg(current_chart_));
      }
    } else if (cmd.name == "anticanonical") {
      cmd.args.push_back(word_arg("a proper-transform label"));
      if (at_statement_end()) throw ParseError(peek().loc, "expected exceptional divisor data");
      while (!at_statement_end()) {
        cmd.args.push_back(word_arg("an exceptional divisor label"));
        cmd.args.push_back(integer_arg());
        cmd.args.push_back(integer_arg());
      }
    } else if (cmd.name == "reduced_pullback") {
      if (at_statement_end()) throw ParseError(peek().loc, "expected divisor terms");
      while (!at_statement_end()) {
        cmd.args.push_back(word_arg("a divisor label"));
        cmd.args.push_back(integer_arg());
      }
    } else if (cmd.name == "chern") {
      Arg model = word_arg("'pspace' or 'free'");
      if (model.word != "pspace" && model.word != "free") {
        throw ParseError(model.loc, "expected 'pspace' or 'free'");
      }
      cmd.args.push_back(std::move(model));
      cmd.args.push_back(integer_arg());
      Arg what = word_arg("a Chern computation");
      static const std::set<std::string> known = {"classes", "cotangent", "divisor_cotangent", "obstruction"};
      if (known.count(what.word) == 0) {
        throw ParseError(what.loc, "unknown Chern computation '" + what.word + "'");
      }
      cmd.args.push_back(std::move(what));
    } else {
      throw ParseError(head.loc, "unknown command");
    }
  }

  std::string_view source_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::map<std::string, std::vector<std::string>> charts_;
  std::map<std::string, NameInfo> names_;
  std::string current_chart_;
};

}  // namespace

Script parse(std::string_view source) { return Parser(source).parse_script(); }

ExprPtr parse_expression(std::string_view source, const std::vector<std::string>& coords) {
  return Parser(source).parse_lone_expression(coords);
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, p] : signatures()) out.push_back(n);
    return out;
  }();
  return names;
}

std::vector<std::string> product_coordinate_names(const std::vector<std::string>& a,
                                                  const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  std::set<std::string> used(a.begin(), a.end());
  for (std::string name : b) {
    while (used.count(name) != 0) name += "_2";
    used.insert(name);
    out.push_back(name);
  }
  return out;
}

}  // namespace pcalc::script
