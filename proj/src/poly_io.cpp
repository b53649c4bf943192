#include "tropimp/poly_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "tropimp/linalg.hpp"

namespace tropimp {

namespace {

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance();
  }

  bool eof() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  char get() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    advance();
    return c;
  }

  void expect(char c) {
    char got = get();
    if (got != c)
      fail(std::string("expected '") + c + "' but found '" + got + "'");
  }

  bool accept(char c) {
    if (peek() == c) {
      advance_past_ws_char();
      return true;
    }
    return false;
  }

  std::string identifier() {
    skip_ws();
    if (pos_ >= text_.size() ||
        !(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      fail("expected an identifier");
    std::string id;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      id += text_[pos_];
      advance();
    }
    return id;
  }

  Int integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      advance();
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an integer");
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits += text_[pos_];
      advance();
    }
    Int v(digits);
    return neg ? -v : v;
  }

  bool next_is_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  bool next_is_ident() {
    skip_ws();
    return pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_');
  }

  [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, line_, col_); }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void advance_past_ws_char() {
    skip_ws();
    advance();
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

PolynomialSystem parse_system(const std::string& text) {
  Lexer lex(text);
  PolynomialSystem sys;

  lex.expect('[');
  if (lex.peek() == ']') lex.fail("empty variable list");
  while (true) {
    sys.variables.push_back(lex.identifier());
    if (lex.accept(',')) continue;
    lex.expect(']');
    break;
  }
  std::map<std::string, int> var_index;
  for (std::size_t i = 0; i < sys.variables.size(); ++i) {
    if (!var_index.emplace(sys.variables[i], static_cast<int>(i)).second)
      lex.fail("duplicate variable name '" + sys.variables[i] + "'");
  }
  const int p = sys.num_variables();

  auto parse_exponent = [&]() -> Int {
    if (lex.accept('(')) {
      Int e = lex.integer();
      lex.expect(')');
      return e;
    }
    return lex.integer();
  };

  auto parse_factor = [&](IVec& exp) {
    if (lex.next_is_digit()) {
      lex.integer();  // numeric coefficient: parsed and discarded
      return;
    }
    if (lex.next_is_ident()) {
      std::string name = lex.identifier();
      auto it = var_index.find(name);
      if (it == var_index.end()) lex.fail("unknown variable '" + name + "'");
      Int e = 1;
      if (lex.accept('^')) e = parse_exponent();
      exp[it->second] += e;
      return;
    }
    lex.fail("expected a variable or an integer");
  };

  auto parse_term = [&]() -> IVec {
    IVec exp(p, Int(0));
    parse_factor(exp);
    while (lex.accept('*')) parse_factor(exp);
    return exp;
  };

  auto parse_poly = [&]() -> std::vector<IVec> {
    std::vector<IVec> support;
    // An optional leading sign; '-' separates terms like '+' does since only
    // supports are retained.
    lex.accept('+') || lex.accept('-');
    while (true) {
      support.push_back(parse_term());
      if (lex.accept('+') || lex.accept('-')) continue;
      break;
    }
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    return support;
  };

  lex.expect('[');
  if (lex.peek() == ']') lex.fail("empty polynomial list");
  while (true) {
    sys.supports.push_back(parse_poly());
    if (lex.accept(',')) continue;
    lex.expect(']');
    break;
  }
  if (!lex.eof()) lex.fail("trailing content after the polynomial list");
  return sys;
}

namespace {

std::string term_to_string(const PolynomialSystem& sys, const IVec& exp) {
  std::string s;
  for (std::size_t i = 0; i < exp.size(); ++i) {
    if (exp[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += sys.variables[i];
    if (exp[i] != 1) {
      s += '^';
      if (exp[i] < 0)
        s += "(" + exp[i].str() + ")";
      else
        s += exp[i].str();
    }
  }
  if (s.empty()) s = "1";
  return s;
}

}  // namespace

std::string serialize_system(const PolynomialSystem& sys) {
  std::string out = "[";
  for (std::size_t i = 0; i < sys.variables.size(); ++i) {
    if (i) out += ",";
    out += sys.variables[i];
  }
  out += "]\n[";
  for (std::size_t k = 0; k < sys.supports.size(); ++k) {
    if (k) out += ",\n ";
    for (std::size_t t = 0; t < sys.supports[k].size(); ++t) {
      if (t) out += " + ";
      out += term_to_string(sys, sys.supports[k][t]);
    }
  }
  out += "]\n";
  return out;
}

MonomialMap parse_linear_map(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  IMat rows;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    std::vector<std::string> toks;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (!header_seen) {
      if (toks.size() != 1 || toks[0] != "LINEAR_MAP")
        throw parse_error("expected LINEAR_MAP header", lineno, 1);
      header_seen = true;
      continue;
    }
    IVec row;
    for (const auto& t : toks) {
      try {
        row.push_back(Int(t));
      } catch (const std::exception&) {
        throw parse_error("bad integer '" + t + "' in matrix row", lineno, 1);
      }
    }
    rows.push_back(std::move(row));
  }
  if (!header_seen) throw input_error("linear map: missing LINEAR_MAP header");
  if (rows.empty()) throw input_error("linear map: no matrix rows");
  for (const auto& r : rows)
    if (r.size() != rows[0].size())
      throw input_error("linear map: ragged rows (all rows must have equal length)");
  // Independence check, naming the first dependent row.
  for (std::size_t k = 1; k < rows.size(); ++k) {
    IMat head(rows.begin(), rows.begin() + k);
    if (rank(head) == rank(IMat(rows.begin(), rows.begin() + k + 1)))
      throw input_error("linear map: row " + std::to_string(k + 1) +
                        " is a rational combination of rows 1.." + std::to_string(k));
  }
  MonomialMap m;
  m.matrix = std::move(rows);
  return m;
}

std::string serialize_linear_map(const MonomialMap& map) {
  std::string out = "LINEAR_MAP\n";
  for (const auto& r : map.matrix) out += to_string(r) + "\n";
  return out;
}

std::string write_polytope(const Polytope& p, const PolytopeWriteOptions& opts) {
  std::ostringstream out;
  out << "VERTICES\n";
  for (const auto& v : p.vertices) out << "1 " << to_string(v) << "\n";
  if (!p.equations.empty()) {
    out << "\nAFFINE_HULL\n";
    for (const auto& e : p.equations)
      out << e.c0 << " " << to_string(e.c) << "\n";
  }
  out << "\nFACETS\n";
  for (const auto& f : p.facets) out << f.a0 << " " << to_string(f.a) << "\n";
  if (opts.with_lattice_count) {
    out << "\nN_LATTICE_POINTS\n" << count_lattice_points(p) << "\n";
  }
  if (opts.with_degree) {
    Rat best = 0;
    for (const auto& v : p.vertices) {
      Rat s = 0;
      for (const auto& x : v) s += x;
      best = std::max(best, s);
    }
    out << "\nDEGREE\n" << best << "\n";
  }
  return out.str();
}

}  // namespace tropimp
