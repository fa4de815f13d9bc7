// Copyright 2025-2026 The qcpaul developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcpaul/parse.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>

namespace qcpaul {

namespace {

struct Token {
  enum class Kind { Word, Number, Sym, KetLit, BraLit };
  Kind kind;
  std::string text;  // word text, symbol, or ket/bra inner name
  double num = 0.0;
};

class Lexer {
 public:
  Lexer(const std::string& line, std::size_t line_no) : line_no_(line_no) {
    lex(line);
  }

  bool done() const { return pos_ >= toks_.size(); }
  const Token& peek() const {
    if (done()) fail("unexpected end of line");
    return toks_[pos_];
  }
  Token next() {
    Token t = peek();
    ++pos_;
    return t;
  }
  bool accept_sym(const std::string& s) {
    if (!done() && toks_[pos_].kind == Token::Kind::Sym &&
        toks_[pos_].text == s) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept_word(const std::string& w) {
    if (!done() && toks_[pos_].kind == Token::Kind::Word &&
        toks_[pos_].text == w) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect_sym(const std::string& s) {
    if (!accept_sym(s)) fail("expected '" + s + "'");
  }
  std::string expect_word(const char* what) {
    if (done() || peek().kind != Token::Kind::Word)
      fail(std::string("expected ") + what);
    return next().text;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_no_, msg);
  }
  std::size_t line_no() const { return line_no_; }

 private:
  void lex(const std::string& s) {
    std::size_t i = 0;
    const std::size_t n = s.size();
    while (i < n) {
      const char c = s[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (c == '#') break;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < n && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                         s[j] == '_'))
          ++j;
        toks_.push_back({Token::Kind::Word, s.substr(i, j - i)});
        i = j;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) ||
          (c == '.' && i + 1 < n &&
           std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
        const char* start = s.c_str() + i;
        char* end = nullptr;
        const double v = std::strtod(start, &end);
        Token t{Token::Kind::Number, s.substr(i, end - start), v};
        toks_.push_back(t);
        i += static_cast<std::size_t>(end - start);
        continue;
      }
      if (c == '|') {
        const std::size_t close = s.find('>', i + 1);
        if (close == std::string::npos)
          fail("malformed ket literal (missing '>')");
        toks_.push_back({Token::Kind::KetLit, s.substr(i + 1, close - i - 1)});
        i = close + 1;
        continue;
      }
      if (c == '<') {
        const std::size_t close = s.find('|', i + 1);
        if (close == std::string::npos)
          fail("malformed bra literal (missing '|')");
        toks_.push_back({Token::Kind::BraLit, s.substr(i + 1, close - i - 1)});
        i = close + 1;
        continue;
      }
      if (c == '-' && i + 1 < n && s[i + 1] == '>') {
        toks_.push_back({Token::Kind::Sym, "->"});
        i += 2;
        continue;
      }
      static const std::string singles = "()[],;+-*/:";
      if (singles.find(c) != std::string::npos) {
        toks_.push_back({Token::Kind::Sym, std::string(1, c)});
        ++i;
        continue;
      }
      fail(std::string("unexpected character '") + c + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_no_;
};

// Complex arithmetic expressions: reals, i, pi, sqrt(), exp(), + - * / ().
// A number immediately followed by `i` is an imaginary literal.
class ExprParser {
 public:
  explicit ExprParser(Lexer& lex) : lex_(lex) {}

  Complex parse() { return expr(); }

 private:
  Complex expr() {
    Complex v = term();
    for (;;) {
      if (lex_.accept_sym("+")) v += term();
      else if (lex_.accept_sym("-")) v -= term();
      else return v;
    }
  }
  Complex term() {
    Complex v = unary();
    for (;;) {
      if (lex_.accept_sym("*")) v *= unary();
      else if (lex_.accept_sym("/")) v /= unary();
      else return v;
    }
  }
  Complex unary() {
    if (lex_.accept_sym("-")) return -unary();
    if (lex_.accept_sym("+")) return unary();
    return atom();
  }
  Complex atom() {
    if (lex_.done()) lex_.fail("expected expression");
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Number) {
      const double v = lex_.next().num;
      if (lex_.accept_word("i")) return Complex(0.0, v);
      return Complex(v, 0.0);
    }
    if (t.kind == Token::Kind::Word) {
      if (lex_.accept_word("i")) return Complex(0.0, 1.0);
      if (lex_.accept_word("pi")) return Complex(M_PI, 0.0);
      if (lex_.accept_word("sqrt")) return fn_arg(true);
      if (lex_.accept_word("exp")) return fn_arg(false);
      lex_.fail("unexpected word '" + t.text + "' in expression");
    }
    if (lex_.accept_sym("(")) {
      const Complex v = expr();
      lex_.expect_sym(")");
      return v;
    }
    lex_.fail("unexpected token in expression");
  }
  Complex fn_arg(bool is_sqrt) {
    lex_.expect_sym("(");
    const Complex v = expr();
    lex_.expect_sym(")");
    return is_sqrt ? std::sqrt(v) : std::exp(v);
  }

  Lexer& lex_;
};

const std::set<std::string> kGateNames = {"X",    "Y",    "Z",    "H",
                                          "S",    "E",    "RZ",   "ROT",
                                          "CNOT", "MAT2", "MAT4", "MAT8",
                                          "MAT16"};
const std::set<std::string> kKeywords = {"ket",    "bra",      "scalar",
                                         "projz",  "projzz",   "projpair",
                                         "projmat"};

struct FileParser {
  WireList wires;
  std::set<std::string> wire_set;
  std::set<std::string> kets_seen, bras_seen;
  std::vector<CircuitElement> elements;

  void check_wire(Lexer& lex, const std::string& w) const {
    if (!wire_set.count(w)) lex.fail("unknown wire '" + w + "'");
  }

  double real_param(Lexer& lex) {
    const Complex v = ExprParser(lex).parse();
    if (v.imag() != 0.0) lex.fail("parameter must be real");
    return v.real();
  }

  std::vector<double> params(Lexer& lex) {
    std::vector<double> ps;
    if (!lex.accept_sym("(")) return ps;
    ps.push_back(real_param(lex));
    while (lex.accept_sym(",")) ps.push_back(real_param(lex));
    lex.expect_sym(")");
    return ps;
  }

  ComplexMatrix matrix_literal(Lexer& lex, std::size_t dim) {
    lex.expect_sym("[");
    std::vector<Complex> entries;
    for (;;) {
      entries.push_back(ExprParser(lex).parse());
      if (lex.accept_sym(",") || lex.accept_sym(";")) continue;
      break;
    }
    if (!lex.accept_sym("]")) lex.fail("malformed matrix literal");
    if (entries.size() != dim * dim)
      lex.fail("matrix literal has " + std::to_string(entries.size()) +
               " entries, expected " + std::to_string(dim * dim));
    return ComplexMatrix(dim, dim, std::move(entries));
  }

  ComplexMatrix vector_literal(Lexer& lex, bool bra) {
    lex.expect_sym("[");
    const Complex a = ExprParser(lex).parse();
    lex.expect_sym(",");
    const Complex b = ExprParser(lex).parse();
    if (!lex.accept_sym("]")) lex.fail("malformed vector literal");
    return bra ? ComplexMatrix::bra(a, b) : ComplexMatrix::ket(a, b);
  }

  ComplexMatrix named_vector(Lexer& lex, const std::string& name, bool bra) {
    const double r = 1.0 / std::sqrt(2.0);
    Complex a, b;
    if (name == "0") { a = 1; b = 0; }
    else if (name == "1") { a = 0; b = 1; }
    else if (name == "+X") { a = r; b = r; }
    else if (name == "-X") { a = r; b = -r; }
    else if (name == "+Y") { a = r; b = Complex(0, r); }
    else if (name == "-Y") { a = r; b = Complex(0, -r); }
    else lex.fail("unknown state name '" + name + "'");
    if (bra) return ComplexMatrix::bra(std::conj(a), std::conj(b));
    return ComplexMatrix::ket(a, b);
  }

  std::vector<ControlSpec> controls(Lexer& lex) {
    std::vector<ControlSpec> out;
    while (lex.accept_word("ctrl")) {
      const std::string kind = lex.expect_word("control kind (n/nbar/proj)");
      lex.expect_sym("(");
      if (kind == "n" || kind == "nbar") {
        const std::string w = lex.expect_word("control wire");
        check_wire(lex, w);
        lex.expect_sym(")");
        out.push_back(kind == "n" ? ControlSpec::n(w) : ControlSpec::nbar(w));
      } else if (kind == "proj") {
        WireList ws;
        while (!lex.done() && lex.peek().kind == Token::Kind::Word) {
          ws.push_back(lex.next().text);
          check_wire(lex, ws.back());
        }
        if (ws.empty()) lex.fail("projector control needs at least one wire");
        lex.expect_sym(")");
        ComplexMatrix m =
            matrix_literal(lex, std::size_t{1} << ws.size());
        try {
          out.push_back(ControlSpec::proj(std::move(ws), std::move(m)));
        } catch (const Error& e) {
          lex.fail(e.what());
        }
      } else {
        lex.fail("unknown control kind '" + kind + "'");
      }
    }
    return out;
  }

  WireList targets(Lexer& lex, std::size_t count) {
    lex.accept_word("on");
    WireList ts;
    while (!lex.done() && lex.peek().kind == Token::Kind::Word &&
           lex.peek().text != "ctrl") {
      ts.push_back(lex.next().text);
      check_wire(lex, ts.back());
      if (count != 0 && ts.size() == count) break;
    }
    if (ts.empty()) lex.fail("expected target wire");
    if (count != 0 && ts.size() != count)
      lex.fail("expected " + std::to_string(count) + " target wire(s)");
    return ts;
  }

  void gate_stmt(Lexer& lex, const std::string& name) {
    if (name == "CNOT") {
      const std::string ctl = lex.expect_word("control wire");
      check_wire(lex, ctl);
      lex.expect_sym("->");
      const std::string tgt = lex.expect_word("target wire");
      check_wire(lex, tgt);
      GateElement g = make_cnot(ctl, tgt);
      auto extra = controls(lex);
      g.controls.insert(g.controls.end(), extra.begin(), extra.end());
      elements.emplace_back(std::move(g));
      return;
    }
    if (name == "RZ" || name == "ROT") {
      const std::vector<double> ps = params(lex);
      const std::size_t want = name == "RZ" ? 1 : 3;
      if (ps.size() != want)
        lex.fail(name + " takes " + std::to_string(want) + " parameter(s)");
      const WireList ts = targets(lex, 0);
      const auto ctls = controls(lex);
      for (const std::string& t : ts) {
        if (name == "RZ") {
          elements.emplace_back(make_rz(ps[0], t, ctls));
        } else {
          GateElement g = make_rot({ps[0], ps[1], ps[2]}, t);
          g.controls = ctls;
          elements.emplace_back(std::move(g));
        }
      }
      return;
    }
    if (name.rfind("MAT", 0) == 0) {
      const std::size_t dim = std::stoul(name.substr(3));
      std::size_t k = 0;
      while ((std::size_t{1} << k) < dim) ++k;
      ComplexMatrix m = matrix_literal(lex, dim);
      WireList ts = targets(lex, k);
      GateElement g = make_matrix_gate(std::move(m), std::move(ts),
                                       controls(lex));
      elements.emplace_back(std::move(g));
      return;
    }
    if (name == "E") {
      WireList ts = targets(lex, 2);
      GateElement g = make_gate("E", std::move(ts), controls(lex));
      elements.emplace_back(std::move(g));
      return;
    }
    // Single-qubit fixed gates broadcast over their target list.
    const WireList ts = targets(lex, 0);
    const auto ctls = controls(lex);
    for (const std::string& t : ts)
      elements.emplace_back(make_gate(name, {t}, ctls));
  }

  void proj_stmt(Lexer& lex, const std::string& name) {
    if (name == "projmat") {
      // Extension used for printing arbitrary projector payloads.
      lex.expect_sym("[");
      std::vector<Complex> entries;
      for (;;) {
        entries.push_back(ExprParser(lex).parse());
        if (lex.accept_sym(",") || lex.accept_sym(";")) continue;
        break;
      }
      if (!lex.accept_sym("]")) lex.fail("malformed matrix literal");
      std::size_t dim = 1, k = 0;
      while (dim * dim < entries.size()) {
        dim <<= 1;
        ++k;
      }
      if (dim * dim != entries.size())
        lex.fail("projector literal must be square with power-of-two size");
      ComplexMatrix m(dim, dim, std::move(entries));
      WireList ts = targets(lex, k);
      ProjectorElement p;
      p.name = "projmat";
      p.matrix = std::move(m);
      p.targets = std::move(ts);
      if (!p.matrix.is_idempotent()) lex.fail("projector is not idempotent");
      elements.emplace_back(std::move(p));
      return;
    }
    auto bit = [&](const std::string& what) {
      if (lex.done() || lex.peek().kind != Token::Kind::Number)
        lex.fail("expected " + what);
      const double v = lex.next().num;
      if (v != 0.0 && v != 1.0) lex.fail(what + " must be 0 or 1");
      return static_cast<int>(v);
    };
    if (name == "projz") {
      const int j = bit("eigenvalue bit");
      WireList ts = targets(lex, 1);
      elements.emplace_back(make_projz(j, ts[0]));
    } else if (name == "projzz") {
      const int j = bit("eigenvalue bit");
      WireList ts = targets(lex, 2);
      elements.emplace_back(make_projzz(j, ts[0], ts[1]));
    } else {  // projpair
      Axis w1 = Axis::X, w2 = Axis::X;
      try {
        w1 = axis_from_string(lex.expect_word("axis"));
        w2 = axis_from_string(lex.expect_word("axis"));
      } catch (const Error& e) {
        lex.fail(e.what());
      }
      const int j = bit("eigenvalue bit");
      WireList ts = targets(lex, 2);
      elements.emplace_back(make_projpair(w1, w2, j, ts[0], ts[1]));
    }
  }

  void stmt(Lexer& lex) {
    const std::string head = lex.expect_word("statement");
    if (head == "ket" || head == "bra") {
      const bool is_bra = head == "bra";
      const std::string w = lex.expect_word("wire");
      check_wire(lex, w);
      auto& seen = is_bra ? bras_seen : kets_seen;
      if (!seen.insert(w).second)
        lex.fail("wire '" + w + "' already has a " + head);
      ComplexMatrix v;
      if (lex.done()) lex.fail("expected state");
      const Token& t = lex.peek();
      if (t.kind == Token::Kind::KetLit) {
        if (is_bra) lex.fail("bra statement needs a <...| literal");
        v = named_vector(lex, lex.next().text, false);
      } else if (t.kind == Token::Kind::BraLit) {
        if (!is_bra) lex.fail("ket statement needs a |...> literal");
        v = named_vector(lex, lex.next().text, true);
      } else {
        v = vector_literal(lex, is_bra);
      }
      if (!lex.done()) lex.fail("trailing tokens after statement");
      if (is_bra) elements.emplace_back(BraSelect{w, std::move(v)});
      else elements.emplace_back(KetPrep{w, std::move(v)});
      return;
    }
    if (head == "scalar") {
      elements.emplace_back(ScalarFactor{ExprParser(lex).parse()});
      if (!lex.done()) lex.fail("trailing tokens after scalar expression");
      return;
    }
    if (head == "projz" || head == "projzz" || head == "projpair" ||
        head == "projmat") {
      proj_stmt(lex, head);
    } else if (kGateNames.count(head)) {
      gate_stmt(lex, head);
    } else {
      lex.fail("unknown gate name '" + head + "'");
    }
    if (!lex.done()) lex.fail("trailing tokens after statement");
  }
};

}  // namespace

Circuit parse(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (const char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) lines.push_back(cur);

  FileParser fp;
  bool have_wires = false;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    Lexer lex(lines[li], li + 1);
    if (lex.done()) continue;
    if (!have_wires) {
      if (!lex.accept_word("wires"))
        lex.fail("file must start with a 'wires:' declaration");
      lex.expect_sym(":");
      while (!lex.done()) {
        const std::string w = lex.expect_word("wire label");
        if (!fp.wire_set.insert(w).second)
          lex.fail("duplicate wire label '" + w + "'");
        fp.wires.push_back(w);
      }
      if (fp.wires.empty()) lex.fail("wire declaration is empty");
      have_wires = true;
      continue;
    }
    fp.stmt(lex);
  }
  if (!have_wires) throw ParseError(1, "missing 'wires:' declaration");

  Circuit c(fp.wires);
  c.elements = std::move(fp.elements);
  validate(c);
  return c;
}

}  // namespace qcpaul
