#include "sosinv/model.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>

#include "sosinv/rng.hpp"
#include "sosinv/util.hpp"

namespace sosinv {

bool membership(const SemialgebraicSet& set, const Eigen::VectorXd& x) {
  for (const auto& c : set.constraints) {
    const double v = eval(c.poly, x);
    if (c.strict ? !(v < 0.0) : !(v <= 0.0)) return false;
  }
  return true;
}

int Pps::max_update_degree() const {
  int t = 1;
  for (const auto& cell : cells) t = std::max(t, cell.update.degree());
  return t;
}

int select_cell(const Pps& pps, const Eigen::VectorXd& x) {
  if (x.size() != pps.dim) throw std::invalid_argument("select_cell: point dimension mismatch");
  for (std::size_t i = 0; i < pps.cells.size(); ++i)
    if (membership(pps.cells[i].guard, x)) return static_cast<int>(i);
  return -1;
}

namespace {

enum class Tok { Ident, Number, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  double value = 0.0;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : src_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_ws();
      Token t;
      t.line = line_;
      t.col = col_;
      if (eof()) {
        t.kind = Tok::End;
        out.push_back(t);
        break;
      }
      const char c = peek();
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
          t.text += get();
        t.kind = Tok::Ident;
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        t.kind = Tok::Number;
        t.text = lex_number(t.line, t.col);
        t.value = std::strtod(t.text.c_str(), nullptr);
      } else if (c == '<') {
        t.kind = Tok::Punct;
        t.text += get();
        if (!eof() && peek() == '=') t.text += get();
      } else if (std::string("(){}[],;=^*+-:/").find(c) != std::string::npos) {
        t.kind = Tok::Punct;
        t.text += get();
      } else {
        throw ParseError(t.line, t.col, std::string("unexpected character '") + c + "'");
      }
      out.push_back(t);
    }
    return out;
  }

 private:
  bool eof() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  char get() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws() {
    while (!eof()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        get();
      } else if (peek() == '#') {
        while (!eof() && peek() != '\n') get();
      } else {
        break;
      }
    }
  }

  std::string lex_number(int line, int col) {
    std::string s;
    bool saw_digit = false;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      s += get();
      saw_digit = true;
    }
    if (!eof() && peek() == '.') {
      s += get();
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
        s += get();
        saw_digit = true;
      }
    }
    if (!saw_digit) throw ParseError(line, col, "malformed number");
    if (!eof() && (peek() == 'e' || peek() == 'E')) {
      // only consume as an exponent if it looks like one
      std::size_t save = pos_;
      int save_line = line_, save_col = col_;
      std::string ex;
      ex += get();
      if (!eof() && (peek() == '+' || peek() == '-')) ex += get();
      if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ex += get();
        s += ex;
      } else {
        pos_ = save;
        line_ = save_line;
        col_ = save_col;
      }
    }
    return s;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Pps parse_program() {
    Pps pps;
    parse_decls(pps);
    parse_loop(pps);
    expect_end();
    return pps;
  }

  Polynomial parse_expression_only(const std::vector<std::string>& vars) {
    set_vars(vars);
    Polynomial p = parse_polyexpr();
    expect_end();
    return p;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool is_punct(const char* s) const { return cur().kind == Tok::Punct && cur().text == s; }
  bool is_ident(const char* s) const { return cur().kind == Tok::Ident && cur().text == s; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(cur().line, cur().col, msg);
  }

  void expect_punct(const char* s) {
    if (!is_punct(s)) fail(std::string("expected '") + s + "'");
    ++pos_;
  }

  void expect_ident(const char* s) {
    if (!is_ident(s)) fail(std::string("expected '") + s + "'");
    ++pos_;
  }

  void expect_end() {
    if (cur().kind != Tok::End) fail("unexpected trailing input");
  }

  void set_vars(const std::vector<std::string>& vars) {
    var_index_.clear();
    for (std::size_t i = 0; i < vars.size(); ++i) var_index_[vars[i]] = static_cast<int>(i);
    dim_ = static_cast<int>(vars.size());
  }

  double parse_signed_number() {
    double sign = 1.0;
    if (is_punct("-")) {
      ++pos_;
      sign = -1.0;
    }
    if (cur().kind != Tok::Number) fail("expected a number");
    return sign * next().value;
  }

  void parse_decls(Pps& pps) {
    std::vector<std::string> vars;
    while (true) {
      if (cur().kind != Tok::Ident) fail("expected a variable name");
      vars.push_back(next().text);
      if (is_punct(",")) {
        ++pos_;
        continue;
      }
      break;
    }
    expect_ident("in");
    for (const auto& v : vars)
      if (v == "in" || v == "while" || v == "case" || v == "and" || v == "true")
        throw ParseError(1, 1, "reserved word used as variable name: " + v);
    pps.vars = vars;
    pps.dim = static_cast<int>(vars.size());
    set_vars(vars);

    std::vector<Interval> box;
    while (true) {
      expect_punct("[");
      Interval iv;
      iv.lo = parse_signed_number();
      expect_punct(",");
      iv.hi = parse_signed_number();
      expect_punct("]");
      box.push_back(iv);
      if (is_ident("x")) {
        ++pos_;
        continue;
      }
      break;
    }
    expect_punct(";");
    if (static_cast<int>(box.size()) != pps.dim)
      fail("declaration box has " + std::to_string(box.size()) + " intervals for " +
           std::to_string(pps.dim) + " variables");
    pps.init_box = box;
    for (int k = 0; k < pps.dim; ++k) {
      // a <= x_k and x_k <= b as (a - x_k <= 0), (x_k - b <= 0)
      Polynomial xk = Polynomial::variable(pps.dim, k);
      pps.x_in.constraints.push_back({Polynomial::constant(pps.dim, box[k].lo) - xk, false});
      pps.x_in.constraints.push_back({xk - Polynomial::constant(pps.dim, box[k].hi), false});
    }
  }

  SemialgebraicSet parse_guard() {
    SemialgebraicSet set;
    if (is_ident("true")) {
      ++pos_;
      set.constraints.push_back({Polynomial::constant(dim_, -1.0), false});
      return set;
    }
    while (true) {
      Polynomial lhs = parse_polyexpr();
      bool strict;
      if (is_punct("<=")) {
        strict = false;
      } else if (is_punct("<")) {
        strict = true;
      } else {
        fail("expected '<=' or '<'");
      }
      ++pos_;
      Polynomial rhs = parse_polyexpr();
      set.constraints.push_back({lhs - rhs, strict});
      if (is_ident("and")) {
        ++pos_;
        continue;
      }
      break;
    }
    return set;
  }

  void parse_loop(Pps& pps) {
    expect_ident("while");
    expect_punct("(");
    pps.x0 = parse_guard();
    expect_punct(")");
    expect_punct("{");
    while (is_ident("case")) parse_case(pps);
    if (pps.cells.empty()) fail("loop body must contain at least one case");
    expect_punct("}");
  }

  void parse_case(Pps& pps) {
    expect_ident("case");
    expect_punct("(");
    SemialgebraicSet guard = parse_guard();
    expect_punct(")");
    expect_punct(":");

    std::map<int, Polynomial> updates;
    while (cur().kind == Tok::Ident && !is_ident("case") && !is_punct("}")) {
      const Token& name = cur();
      auto it = var_index_.find(name.text);
      if (it == var_index_.end())
        throw ParseError(name.line, name.col, "unknown identifier '" + name.text + "'");
      ++pos_;
      expect_punct("=");
      Polynomial rhs = parse_polyexpr();
      expect_punct(";");
      if (!updates.emplace(it->second, rhs).second)
        throw ParseError(name.line, name.col,
                         "variable '" + name.text + "' assigned twice in one case");
    }
    if (updates.empty()) fail("case must contain at least one assignment");

    // parallel semantics: every right-hand side reads the pre-state, and
    // unassigned variables carry through identically
    std::vector<Polynomial> comps;
    for (int k = 0; k < dim_; ++k) {
      auto it = updates.find(k);
      comps.push_back(it != updates.end() ? it->second : Polynomial::variable(dim_, k));
    }
    pps.cells.push_back({std::move(guard), PolyMap(dim_, std::move(comps))});
  }

  Polynomial parse_polyexpr() {
    Polynomial p = parse_term();
    while (is_punct("+") || is_punct("-")) {
      const bool minus = cur().text == "-";
      ++pos_;
      Polynomial q = parse_term();
      p = minus ? p - q : p + q;
    }
    return p;
  }

  Polynomial parse_term() {
    Polynomial p = parse_unary();
    while (true) {
      if (is_punct("*")) {
        ++pos_;
        p = p * parse_unary();
      } else if (is_punct("/")) {
        fail("non-polynomial expression: division is not supported");
      } else {
        break;
      }
    }
    return p;
  }

  Polynomial parse_unary() {
    if (is_punct("-")) {
      ++pos_;
      return -parse_unary();
    }
    if (is_punct("+")) {
      ++pos_;
      return parse_unary();
    }
    return parse_power();
  }

  Polynomial parse_power() {
    Polynomial base = parse_primary();
    if (is_punct("^")) {
      ++pos_;
      if (cur().kind != Tok::Number) fail("expected an exponent");
      const Token& e = cur();
      if (e.text.find('.') != std::string::npos || e.text.find('e') != std::string::npos ||
          e.text.find('E') != std::string::npos)
        fail("non-polynomial expression: exponents must be nonnegative integers");
      ++pos_;
      return pow(base, static_cast<int>(e.value));
    }
    return base;
  }

  Polynomial parse_primary() {
    if (cur().kind == Tok::Number) return Polynomial::constant(dim_, next().value);
    if (cur().kind == Tok::Ident) {
      auto it = var_index_.find(cur().text);
      if (it == var_index_.end()) fail("unknown identifier '" + cur().text + "'");
      ++pos_;
      return Polynomial::variable(dim_, it->second);
    }
    if (is_punct("(")) {
      ++pos_;
      Polynomial p = parse_polyexpr();
      expect_punct(")");
      return p;
    }
    fail("expected a number, variable, or parenthesized expression");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, int> var_index_;
  int dim_ = 0;
};

std::string render_guard(const SemialgebraicSet& set, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t j = 0; j < set.constraints.size(); ++j) {
    if (j > 0) out += " and ";
    out += to_string(set.constraints[j].poly, names);
    out += set.constraints[j].strict ? " < 0" : " <= 0";
  }
  return out;
}

}  // namespace

Pps parse_program(const std::string& text) {
  Parser parser(Lexer(text).run());
  return parser.parse_program();
}

Polynomial parse_polyexpr(const std::string& text, const std::vector<std::string>& vars) {
  Parser parser(Lexer(text).run());
  return parser.parse_expression_only(vars);
}

std::string render_program(const Pps& pps) {
  if (static_cast<int>(pps.init_box.size()) != pps.dim)
    throw std::invalid_argument("render_program: initialization box missing");
  std::string out;
  for (int k = 0; k < pps.dim; ++k) {
    if (k > 0) out += ", ";
    out += pps.vars[k];
  }
  out += " in ";
  for (int k = 0; k < pps.dim; ++k) {
    if (k > 0) out += " x ";
    out += "[" + format_double(pps.init_box[k].lo) + ", " + format_double(pps.init_box[k].hi) + "]";
  }
  out += ";\n";
  out += "while (" + render_guard(pps.x0, pps.vars) + ") {\n";
  for (const auto& cell : pps.cells) {
    out += "  case (" + render_guard(cell.guard, pps.vars) + "):\n";
    for (int k = 0; k < pps.dim; ++k)
      out += "    " + pps.vars[k] + " = " + to_string(cell.update.components[k], pps.vars) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string program_hash(const Pps& pps) { return to_hex(fnv1a64(render_program(pps))); }

PartitionDiagnostic partition_diagnostic(const Pps& pps, const std::vector<Interval>& probe_box,
                                         int samples, std::uint64_t seed) {
  if (static_cast<int>(probe_box.size()) != pps.dim)
    throw std::invalid_argument("partition_diagnostic: probe box dimension mismatch");
  PartitionDiagnostic diag;
  diag.samples = samples;
  CounterRng rng{seed};
  Eigen::VectorXd x(pps.dim);
  for (int s = 0; s < samples; ++s) {
    for (int k = 0; k < pps.dim; ++k)
      x[k] = rng.uniform(static_cast<std::uint64_t>(s) * pps.dim + k, probe_box[k].lo,
                         probe_box[k].hi);
    int matches = 0;
    for (const auto& cell : pps.cells)
      if (membership(cell.guard, x)) ++matches;
    if (matches == 0) ++diag.unmatched;
    if (matches > 1) ++diag.multimatch;
  }
  return diag;
}

}  // namespace sosinv
