#include "pcalc/interpreter.hpp"

#include <sstream>

namespace pcalc::script {

using json = nlohmann::ordered_json;

namespace {

using Operand = std::variant<RationalFunction, MultiVector, DiffForm>;

[[noreturn]] void kind_error(const std::string& msg) { throw Error(ErrorKind::KindMismatch, msg); }

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

const char* operand_kind(const Operand& v) {
  switch (v.index()) {
    case 0: return "function";
    case 1: return "multivector";
    default: return "form";
  }
}

const char* value_kind(const Value& v) {
  static const char* names[] = {"function", "multivector", "form",  "Poisson structure",
                                "divisor",  "chart map",   "blowup chart", "point",
                                "Chern class", "formal divisor"};
  return names[v.index()];
}

template <Kind K>
Graded<K> promote(const Operand& v) {
  if (const auto* f = std::get_if<RationalFunction>(&v)) return Graded<K>::scalar(*f);
  if (const auto* g = std::get_if<Graded<K>>(&v)) return *g;
  kind_error(std::string("cannot combine a ") + operand_kind(v) + " with a " +
             (K == Kind::Vector ? "multivector" : "form"));
}

/// Common kind of two operands: 0 function, 1 multivector, 2 form.
std::size_t common_kind(const Operand& a, const Operand& b) {
  const std::size_t ka = a.index();
  const std::size_t kb = b.index();
  if (ka != 0 && kb != 0 && ka != kb) {
    kind_error(std::string("cannot combine a ") + operand_kind(a) + " with a " + operand_kind(b));
  }
  return std::max(ka, kb);
}

Operand add(const Operand& a, const Operand& b, bool subtract) {
  switch (common_kind(a, b)) {
    case 0: {
      const auto& fa = std::get<RationalFunction>(a);
      const auto& fb = std::get<RationalFunction>(b);
      return subtract ? fa - fb : fa + fb;
    }
    case 1: return subtract ? promote<Kind::Vector>(a) - promote<Kind::Vector>(b)
                            : promote<Kind::Vector>(a) + promote<Kind::Vector>(b);
    default: return subtract ? promote<Kind::Form>(a) - promote<Kind::Form>(b)
                             : promote<Kind::Form>(a) + promote<Kind::Form>(b);
  }
}

Operand negate(const Operand& a) {
  return std::visit([](const auto& x) -> Operand { return -x; }, a);
}

Operand scale(const Operand& a, const RationalFunction& f) {
  return std::visit(Overloaded{[&](const RationalFunction& x) -> Operand { return x * f; },
                               [&](const auto& g) -> Operand { return g * f; }},
                    a);
}

Operand multiply(const Operand& a, const Operand& b) {
  if (const auto* fb = std::get_if<RationalFunction>(&b)) return scale(a, *fb);
  if (const auto* fa = std::get_if<RationalFunction>(&a)) return scale(b, *fa);
  kind_error("product of two graded elements; use /\\ for the wedge product");
}

Operand wedge_op(const Operand& a, const Operand& b) {
  switch (common_kind(a, b)) {
    case 0: return std::get<RationalFunction>(a) * std::get<RationalFunction>(b);
    case 1: return wedge(promote<Kind::Vector>(a), promote<Kind::Vector>(b));
    default: return wedge(promote<Kind::Form>(a), promote<Kind::Form>(b));
  }
}

const RationalFunction& as_function(const Operand& v, const std::string& what) {
  if (const auto* f = std::get_if<RationalFunction>(&v)) return *f;
  kind_error(what + " must be a function, got a " + operand_kind(v));
}

Polynomial as_polynomial(const Operand& v, const std::string& what) {
  const RationalFunction& f = as_function(v, what);
  if (!f.is_polynomial()) throw Error(ErrorKind::InvalidArgument, what + " must be a polynomial");
  return f.numerator();
}

MultiVector as_multivector(const Operand& v) { return promote<Kind::Vector>(v); }
DiffForm as_form(const Operand& v) { return promote<Kind::Form>(v); }

class Evaluator {
 public:
  Evaluator(const std::map<std::string, Value>& values, ChartPtr chart)
      : values_(values), chart_(std::move(chart)) {}

  Operand eval(const Expr& e) const {
    switch (e.op) {
      case Expr::Op::Number: return RationalFunction(chart_, Rational(e.text));
      case Expr::Op::Name: return name(e);
      case Expr::Op::Negate: return negate(eval(*e.args[0]));
      case Expr::Op::Add: return add(eval(*e.args[0]), eval(*e.args[1]), false);
      case Expr::Op::Sub: return add(eval(*e.args[0]), eval(*e.args[1]), true);
      case Expr::Op::Mul: return multiply(eval(*e.args[0]), eval(*e.args[1]));
      case Expr::Op::Div: {
        const Operand den = eval(*e.args[1]);
        const RationalFunction& f = as_function(den, "a divisor");
        if (f.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
        const Operand num = eval(*e.args[0]);
        if (const auto* g = std::get_if<RationalFunction>(&num)) return *g / f;
        return scale(num, RationalFunction(chart_, 1) / f);
      }
      case Expr::Op::Pow: {
        const Operand base = eval(*e.args[0]);
        const RationalFunction& f = as_function(base, "the base of a power");
        if (e.value < 0 && f.is_zero()) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
        return pow(f, static_cast<int>(e.value));
      }
      case Expr::Op::Wedge: return wedge_op(eval(*e.args[0]), eval(*e.args[1]));
      case Expr::Op::Differential: {
        const Operand inner = eval(*e.args[0]);
        if (const auto* f = std::get_if<RationalFunction>(&inner)) return differential(*f);
        if (const auto* w = std::get_if<DiffForm>(&inner)) return exterior_derivative(*w);
        kind_error("d() of a multivector");
      }
      case Expr::Op::Generator:
        return MultiVector::generator(chart_, static_cast<std::size_t>(e.value - 1));
      case Expr::Op::Tuple: kind_error("a tuple is only allowed as a point");
    }
    kind_error("unknown expression");
  }

  Point point(const Expr& e) const {
    if (e.op == Expr::Op::Name && !chart_->index_of(e.text)) {
      if (const auto* p = std::get_if<Point>(&values_.at(e.text))) return *p;
    }
    std::vector<const Expr*> items;
    if (e.op == Expr::Op::Tuple) {
      for (const auto& a : e.args) items.push_back(a.get());
    } else {
      items.push_back(&e);
    }
    Point out;
    for (const Expr* item : items) {
      const Operand v = eval(*item);
      const RationalFunction& f = as_function(v, "a point coordinate");
      auto c = f.as_constant();
      if (!c) throw Error(ErrorKind::InvalidArgument, "point coordinates must be constants");
      out.push_back(*c);
    }
    return out;
  }

 private:
  Operand name(const Expr& e) const {
    if (auto idx = chart_->index_of(e.text)) return RationalFunction(Polynomial::variable(chart_, *idx));
    const Value& v = values_.at(e.text);
    return std::visit(Overloaded{
                          [](const RationalFunction& f) -> Operand { return f; },
                          [](const MultiVector& m) -> Operand { return m; },
                          [](const DiffForm& w) -> Operand { return w; },
                          [](const PoissonStructure& p) -> Operand { return p.bivector(); },
                          [&](const auto&) -> Operand {
                            kind_error("'" + e.text + "' is a " + value_kind(v) +
                                       ", not an algebraic value");
                          },
                      },
                      v);
  }

  const std::map<std::string, Value>& values_;
  ChartPtr chart_;
};

// ------------------------------------------------------------ result encoding

template <Kind K>
json graded_json(const Graded<K>& g) {
  json terms = json::array();
  for (const auto& [m, c] : g.terms()) {
    json idx = json::array();
    for (auto i : indices_of(m)) idx.push_back(i + 1);
    terms.push_back({{"indices", idx}, {"coefficient", to_string(c)}});
  }
  return {{"type", K == Kind::Vector ? "multivector" : "form"}, {"text", to_string(g)}, {"terms", terms}};
}

json operand_json(const Operand& v) {
  return std::visit(Overloaded{[](const RationalFunction& f) -> json {
                                 return {{"type", "function"}, {"text", to_string(f)}};
                               },
                               [](const auto& g) -> json { return graded_json(g); }},
                    v);
}

std::string operand_text(const Operand& v) {
  return std::visit([](const auto& x) { return to_string(x); }, v);
}

json bool_json(bool b) { return {{"type", "boolean"}, {"text", b ? "true" : "false"}, {"value", b}}; }

std::string join(const std::vector<std::string>& items, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string row_text(const std::vector<RationalFunction>& row) {
  std::vector<std::string> cells;
  for (const auto& c : row) cells.push_back(to_string(c));
  return "[" + join(cells) + "]";
}

json matrix_json(const Matrix<RationalFunction>& m) {
  json rows = json::array();
  std::vector<std::string> lines;
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& c : row) r.push_back(to_string(c));
    rows.push_back(r);
    lines.push_back(row_text(row));
  }
  return {{"type", "matrix"}, {"text", join(lines, "\n")}, {"rows", rows}};
}

json chern_json(const ChernElement& e) { return {{"type", "chern"}, {"text", to_string(e)}}; }

json formal_json(const FormalDivisor& d) {
  json terms = json::object();
  for (const auto& [label, c] : d.terms()) terms[label] = c;
  return {{"type", "formal_divisor"}, {"text", to_string(d)}, {"terms", terms}};
}

long integer_word(const Arg& a) { return std::stol(a.word); }

}  // namespace

// ------------------------------------------------------------ reports

std::string Report::render_text() const {
  std::string out = "> " + command + "\n";
  if (!ok) return out + "error (" + error_kind + ") at " + std::to_string(loc.line) + ":" +
                    std::to_string(loc.column) + ": " + text + "\n";
  return out + text + "\n";
}

json Report::to_json() const {
  json j;
  j["command"] = command;
  j["line"] = loc.line;
  j["column"] = loc.column;
  j["status"] = ok ? "ok" : "error";
  if (ok) {
    j["result"] = value;
    if (verdict) j["verdict"] = *verdict == Verdict::Holds ? "holds" : "fails";
  } else {
    j["error"] = {{"kind", error_kind}, {"message", text}};
  }
  return j;
}

// ------------------------------------------------------------ interpreter

const Value* Interpreter::lookup(const std::string& name) const {
  auto it = values_.find(name);
  return it == values_.end() ? nullptr : &it->second;
}

ChartPtr Interpreter::chart(const std::string& name) const {
  auto it = charts_.find(name);
  return it == charts_.end() ? nullptr : it->second;
}

std::vector<Report> Interpreter::run(const Script& script, bool strict) {
  std::vector<Report> reports;
  for (const Statement& st : script.statements) {
    Report r;
    r.command = st.source;
    r.loc = st.loc;
    const bool is_command = std::holds_alternative<Command>(st.node) ||
                            std::holds_alternative<CommandBinding>(st.node);
    try {
      if (const auto* cmd = std::get_if<Command>(&st.node)) {
        Outcome o = execute_command(*cmd);
        r.text = std::move(o.text);
        r.value = std::move(o.value);
        r.verdict = o.verdict;
      } else if (const auto* b = std::get_if<CommandBinding>(&st.node)) {
        Outcome o = execute_command(b->command);
        if (!o.bindable) {
          throw Error(ErrorKind::InvalidArgument,
                      "the result of '" + b->command.name + "' cannot be bound to a name");
        }
        if (const auto* pi = std::get_if<PoissonStructure>(&*o.bindable)) {
          charts_.try_emplace(pi->chart()->name(), pi->chart());
        }
        values_.insert_or_assign(b->name, std::move(*o.bindable));
        r.text = b->name + " = " + o.text;
        r.value = std::move(o.value);
        r.verdict = o.verdict;
      } else {
        execute_declaration(st);
      }
    } catch (const Error& e) {
      r.ok = false;
      r.error_kind = to_string(e.kind());
      r.text = e.what();
    } catch (const std::exception& e) {
      r.ok = false;
      r.error_kind = "Internal";
      r.text = e.what();
    }
    if (is_command || !r.ok) reports.push_back(std::move(r));
    if (strict && !reports.empty() && !reports.back().ok) break;
  }
  return reports;
}

void Interpreter::execute_declaration(const Statement& st) {
  if (const auto* c = std::get_if<ChartDecl>(&st.node)) {
    charts_[c->name] = Chart::make(c->name, c->coords);
    return;
  }
  if (std::holds_alternative<UseChart>(st.node)) return;
  const ChartPtr chart = charts_.at(st.chart);

  if (const auto* v = std::get_if<ValueDecl>(&st.node)) {
    const Evaluator ev(values_, chart);
    if (v->keyword == "point") {
      values_.insert_or_assign(v->name, ev.point(*v->expr));
      return;
    }
    const Operand x = ev.eval(*v->expr);
    Value out = RationalFunction(chart);
    if (v->keyword == "poisson") {
      out = PoissonStructure(as_multivector(x));
    } else if (v->keyword == "form") {
      out = as_form(x);
    } else if (v->keyword == "field") {
      out = as_multivector(x);
    } else if (v->keyword == "func") {
      out = as_function(x, "'" + v->name + "'");
    } else {
      out = std::visit([](const auto& y) -> Value { return y; }, x);
    }
    values_.insert_or_assign(v->name, std::move(out));
    return;
  }
  if (const auto* d = std::get_if<DivisorDecl>(&st.node)) {
    std::vector<std::size_t> idx;
    for (const auto& b : d->branches) idx.push_back(*chart->index_of(b));
    values_.insert_or_assign(d->name, NCDivisor(chart, idx));
    return;
  }
  if (const auto* m = std::get_if<MapDecl>(&st.node)) {
    const ChartPtr source = charts_.at(m->source);
    const ChartPtr target = charts_.at(m->target);
    const Evaluator ev(values_, source);
    std::vector<RationalFunction> images;
    for (const auto& coord : target->coords()) {
      auto it = std::find_if(m->images.begin(), m->images.end(),
                             [&](const auto& p) { return p.first == coord; });
      if (it != m->images.end()) {
        images.push_back(as_function(ev.eval(*it->second), "the image of '" + coord + "'"));
      } else {
        images.emplace_back(Polynomial::variable(source, *source->index_of(coord)));
      }
    }
    values_.insert_or_assign(m->name, ChartMap(source, target, std::move(images)));
    return;
  }
  if (const auto* b = std::get_if<BlowupDecl>(&st.node)) {
    const auto& map = std::get<ChartMap>(values_.at(b->map));
    const Evaluator ev(values_, map.source());
    values_.insert_or_assign(b->name,
                             BlowupChart(map, as_polynomial(ev.eval(*b->exceptional), "the exceptional equation")));
  }
}

Interpreter::Outcome Interpreter::execute_command(const Command& cmd) {
  const auto& a = cmd.args;
  const ChartPtr chart = cmd.context_chart.empty() ? nullptr : charts_.at(cmd.context_chart);
  auto ev = [&](ChartPtr c = nullptr) { return Evaluator(values_, c ? c : chart); };
  auto arg = [&](std::size_t i) { return ev().eval(*a.at(i).expr); };
  auto value = [&](std::size_t i) -> const Value& { return values_.at(a.at(i).word); };
  auto poisson = [&](std::size_t i) -> const PoissonStructure& {
    const Value& v = value(i);
    if (const auto* p = std::get_if<PoissonStructure>(&v)) return *p;
    kind_error("'" + a[i].word + "' is a " + value_kind(v) + ", not a Poisson structure");
  };
  auto divisor = [&](std::size_t i) -> const NCDivisor& {
    const Value& v = value(i);
    if (const auto* d = std::get_if<NCDivisor>(&v)) return *d;
    kind_error("'" + a[i].word + "' is a " + value_kind(v) + ", not a divisor");
  };
  auto operand_result = [](const Operand& v) {
    return Outcome{operand_text(v), operand_json(v), std::nullopt,
                   std::visit([](const auto& x) -> Value { return x; }, v)};
  };
  const std::string& name = cmd.name;

  if (name == "print") return operand_result(arg(0));
  if (name == "exterior_d") {
    const Operand v = arg(0);
    if (const auto* f = std::get_if<RationalFunction>(&v)) return operand_result(differential(*f));
    if (const auto* w = std::get_if<DiffForm>(&v)) return operand_result(exterior_derivative(*w));
    kind_error("exterior_d of a multivector");
  }
  if (name == "diff") {
    return operand_result(as_function(arg(0), "the argument of diff").derivative(*chart->index_of(a[1].word)));
  }
  if (name == "wedge") return operand_result(wedge_op(arg(0), arg(1)));
  if (name == "contract") {
    const Operand x = arg(0);
    const Operand y = arg(1);
    if (std::holds_alternative<DiffForm>(x)) return operand_result(contract(as_form(x), as_multivector(y)));
    return operand_result(contract(as_multivector(x), as_form(y)));
  }
  if (name == "lie") return operand_result(lie_derivative(as_multivector(arg(0)), as_form(arg(1))));
  if (name == "gcd") {
    return operand_result(RationalFunction(gcd(as_polynomial(arg(0), "gcd argument"),
                                               as_polynomial(arg(1), "gcd argument"))));
  }
  if (name == "squarefree") {
    const bool b = is_squarefree(as_polynomial(arg(0), "squarefree argument"));
    return {b ? "true" : "false", bool_json(b), std::nullopt, std::nullopt};
  }
  if (name == "eval") {
    const Rational q = as_function(arg(0), "the evaluated expression").evaluate(ev().point(*a[1].expr));
    return {to_string(q), {{"type", "number"}, {"text", to_string(q)}}, std::nullopt, std::nullopt};
  }
  if (name == "pullback") {
    const Value& v = value(0);
    const ChartMap* map = std::get_if<ChartMap>(&v);
    if (const auto* b = std::get_if<BlowupChart>(&v)) map = &b->map();
    if (map == nullptr) kind_error("'" + a[0].word + "' is not a chart map");
    const Operand f = ev(map->target()).eval(*a[1].expr);
    return operand_result(map->pullback(as_function(f, "the pulled-back expression")));
  }

  if (name == "schouten") return operand_result(schouten_bracket(as_multivector(arg(0)), as_multivector(arg(1))));
  if (name == "integrable") {
    const IntegrabilityCheck check = check_integrable(poisson(0));
    values_.insert_or_assign(a[0].word, check.structure);
    std::string text = std::string("integrable: ") + (check.integrable ? "true" : "false");
    json j = bool_json(check.integrable);
    if (!check.integrable) {
      text += "\nwitness: [" + a[0].word + "," + a[0].word + "] = " + to_string(check.witness);
      j["witness"] = graded_json(check.witness);
    }
    j["text"] = text;
    return {text, j, check.integrable ? Verdict::Holds : Verdict::Fails, std::nullopt};
  }
  if (name == "lichnerowicz") return operand_result(lichnerowicz(poisson(0), as_multivector(arg(1))));
  if (name == "hamiltonian") return operand_result(hamiltonian(poisson(0), as_function(arg(1), "the Hamiltonian")));
  if (name == "pbracket") {
    return operand_result(
        poisson_bracket(poisson(0), as_function(arg(1), "bracket argument"), as_function(arg(2), "bracket argument")));
  }
  if (name == "delta") return operand_result(codifferential(poisson(0), as_form(arg(1))));
  if (name == "koszul") return operand_result(koszul_bracket(poisson(0), as_form(arg(1)), as_form(arg(2))));
  if (name == "sharp") return operand_result(pi_sharp(poisson(0), as_form(arg(1))));
  if (name == "pfaffian") return operand_result(pfaffian(poisson(0)));
  if (name == "product") {
    PoissonStructure p = product_structure(poisson(0), poisson(1));
    Outcome o = operand_result(p.bivector());
    o.value["chart"] = {{"name", p.chart()->name()}, {"coords", p.chart()->coords()}};
    o.bindable = std::move(p);
    return o;
  }
  if (name == "corank") {
    const std::size_t k = corank_at_point(poisson(0), ev().point(*a[1].expr));
    return {std::to_string(k), {{"type", "integer"}, {"text", std::to_string(k)}, {"value", k}},
            std::nullopt, std::nullopt};
  }

  if (name == "logframe") {
    const LogFrame frame = log_frame(divisor(0));
    std::vector<std::string> forms;
    std::vector<std::string> fields;
    for (const auto& w : frame.forms) forms.push_back(to_string(w));
    for (const auto& v : frame.fields) fields.push_back(to_string(v));
    const std::string text = "forms: " + join(forms) + "\nfields: " + join(fields);
    return {text, {{"type", "log_frame"}, {"text", text}, {"forms", forms}, {"fields", fields}},
            std::nullopt, std::nullopt};
  }
  if (name == "logmatrix") {
    const json j = matrix_json(pi_sharp_log_matrix(poisson(0), log_frame(divisor(1))));
    return {j["text"], j, std::nullopt, std::nullopt};
  }
  if (name == "logiso") {
    const LogIsoResult r = log_duality_iso_check(poisson(0), log_frame(divisor(1)));
    const json m = matrix_json(r.matrix);
    const std::string text = std::string("isomorphism: ") + (r.isomorphism ? "true" : "false") +
                             "\ndeterminant: " + to_string(r.determinant) + "\nmatrix:\n" +
                             m["text"].get<std::string>();
    json j = {{"type", "log_iso"}, {"text", text}, {"value", r.isomorphism},
              {"determinant", to_string(r.determinant)}, {"rows", m["rows"]}};
    return {text, j, r.isomorphism ? Verdict::Holds : Verdict::Fails, std::nullopt};
  }
  if (name == "pnormal") {
    std::vector<Point> smooth;
    std::vector<Point> singular;
    std::vector<Point>* section = nullptr;
    for (std::size_t i = 2; i < a.size(); ++i) {
      if (!a[i].expr) {
        section = a[i].word == "smooth" ? &smooth : &singular;
      } else {
        section->push_back(ev().point(*a[i].expr));
      }
    }
    const PNormalityReport r = pnormality_check(poisson(0), divisor(1), smooth, singular);
    auto coranks = [](const std::vector<std::size_t>& v) {
      std::vector<std::string> s;
      for (auto k : v) s.push_back(std::to_string(k));
      return s.empty() ? std::string("none") : join(s);
    };
    auto tf = [](bool b) { return std::string(b ? "true" : "false"); };
    const std::string text = "pfaffian: " + to_string(r.pfaffian) +
                             "\npfaffian reduced: " + tf(r.pfaffian_reduced) +
                             "\ndivisor match: " + tf(r.divisor_match) +
                             "\nsmooth coranks: " + coranks(r.smooth_coranks) +
                             "\nsingular coranks: " + coranks(r.singular_coranks) +
                             "\np-normal: " + tf(r.p_normal()) + "\nscope: " + PNormalityReport::scope;
    json j = {{"type", "pnormality"},
              {"text", text},
              {"value", r.p_normal()},
              {"pfaffian", to_string(r.pfaffian)},
              {"pfaffian_reduced", r.pfaffian_reduced},
              {"divisor_match", r.divisor_match},
              {"smooth_corank", r.smooth_corank},
              {"singular_corank", r.singular_corank},
              {"smooth_coranks", r.smooth_coranks},
              {"singular_coranks", r.singular_coranks},
              {"scope", PNormalityReport::scope}};
    return {text, j, r.p_normal() ? Verdict::Holds : Verdict::Fails, std::nullopt};
  }

  if (name == "multiplicity") {
    const Value& v = value(0);
    const auto* bc = std::get_if<BlowupChart>(&v);
    if (bc == nullptr) kind_error("'" + a[0].word + "' is a " + value_kind(v) + ", not a blowup chart");
    const Polynomial f = as_polynomial(ev(bc->map().target()).eval(*a[1].expr), "the transformed equation");
    const ExceptionalMultiplicity m = exceptional_multiplicity(f, *bc);
    const std::string text = "multiplicity: " + std::to_string(m.multiplicity) +
                             "\nproper transform: " + to_string(m.proper) +
                             "\ncleared: " + to_string(m.cleared);
    return {text,
            {{"type", "multiplicity"},
             {"text", text},
             {"multiplicity", m.multiplicity},
             {"proper", to_string(m.proper)},
             {"cleared", to_string(m.cleared)}},
            std::nullopt,
            RationalFunction(m.proper)};
  }
  if (name == "transverse") {
    const bool b = transversality_at(as_polynomial(arg(0), "transverse argument"),
                                     as_polynomial(arg(1), "transverse argument"), ev().point(*a[2].expr));
    const std::string text = std::string("transverse: ") + (b ? "true" : "false");
    json j = bool_json(b);
    j["text"] = text;
    return {text, j, std::nullopt, std::nullopt};
  }
  if (name == "anticanonical") {
    std::vector<ExceptionalData> data;
    for (std::size_t i = 1; i + 2 < a.size(); i += 3) {
      data.push_back({a[i].word, integer_word(a[i + 1]), integer_word(a[i + 2])});
    }
    const FormalDivisor d = anticanonical_bookkeeping(a[0].word, data);
    return {to_string(d), formal_json(d), std::nullopt, d};
  }
  if (name == "reduced_pullback") {
    FormalDivisor pulled;
    for (std::size_t i = 0; i + 1 < a.size(); i += 2) pulled += FormalDivisor::of(a[i].word, integer_word(a[i + 1]));
    const FormalDivisor d = reduced_pullback(pulled);
    return {to_string(d), formal_json(d), std::nullopt, d};
  }
  if (name == "chern") {
    const long n = integer_word(a[1]);
    if (n < 1 || n > 16) throw Error(ErrorKind::InvalidArgument, "Chern model size must be between 1 and 16");
    const GradedRingModel model = a[0].word == "pspace" ? GradedRingModel::projective(static_cast<int>(n))
                                                        : GradedRingModel::free_chern(static_cast<int>(n));
    const std::vector<ChernElement> classes = chern_classes(model);
    const std::string& what = a[2].word;
    if (what == "classes") {
      std::vector<std::string> lines;
      json list = json::array();
      for (std::size_t i = 0; i < classes.size(); ++i) {
        lines.push_back("c" + std::to_string(i + 1) + " = " + to_string(classes[i]));
        list.push_back(to_string(classes[i]));
      }
      const std::string text = join(lines, "\n");
      return {text, {{"type", "chern_classes"}, {"text", text}, {"classes", list}}, std::nullopt, std::nullopt};
    }
    ChernElement e = what == "cotangent"           ? cotangent_total_chern(classes)
                     : what == "divisor_cotangent" ? divisor_cotangent_chern(classes)
                                                   : obstruction(classes);
    if (what != "obstruction") return {to_string(e), chern_json(e), std::nullopt, e};
    const bool vanishes = e.is_zero();
    const std::string text = "obstruction: " + to_string(e) + "\nvanishes: " + (vanishes ? "true" : "false");
    json j = chern_json(e);
    j["text"] = text;
    j["obstruction"] = to_string(e);
    j["value"] = vanishes;
    return {text, j, vanishes ? Verdict::Holds : Verdict::Fails, e};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown command '" + name + "'");
}

}  // namespace pcalc::script
