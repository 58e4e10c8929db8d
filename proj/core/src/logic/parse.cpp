#include "marfal/logic/parse.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <vector>

namespace marfal::logic {

namespace {

enum class Tok {
  lparen,
  rparen,
  lbracket,
  rbracket,
  comma,
  number,
  name,     // lowercase identifier, also carries keywords not/and/or/...
  op_until,
  op_eventually,
  op_always,
  end,
};

struct Token {
  Tok kind;
  std::string text;
  double value = 0.0;
  std::size_t pos = 0;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '(') {
      out.push_back({Tok::lparen, "(", 0.0, i++});
    } else if (c == ')') {
      out.push_back({Tok::rparen, ")", 0.0, i++});
    } else if (c == '[') {
      out.push_back({Tok::lbracket, "[", 0.0, i++});
    } else if (c == ']') {
      out.push_back({Tok::rbracket, "]", 0.0, i++});
    } else if (c == ',') {
      out.push_back({Tok::comma, ",", 0.0, i++});
    } else if (c == 'U' || c == 'F' || c == 'G') {
      const Tok k = c == 'U'   ? Tok::op_until
                    : c == 'F' ? Tok::op_eventually
                               : Tok::op_always;
      out.push_back({k, std::string(1, c), 0.0, i++});
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = text.c_str() + i;
      char* end = nullptr;
      const double v = std::strtod(begin, &end);
      if (end == begin) throw ParseError("bad number", i);
      out.push_back({Tok::number, std::string(begin, end), v, i});
      i += static_cast<std::size_t>(end - begin);
    } else if (std::islower(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < n && (std::islower(static_cast<unsigned char>(text[j])) ||
                       std::isdigit(static_cast<unsigned char>(text[j])) ||
                       text[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::name, text.substr(i, j - i), 0.0, i});
      i = j;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Tok::end, "", 0.0, n});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const PredicateRegistry& reg,
         double time_unit)
      : toks_(std::move(toks)), reg_(reg), time_unit_(time_unit) {}

  Formula run() {
    Formula f = implication();
    if (peek().kind != Tok::end) {
      throw ParseError("unexpected trailing input", peek().pos);
    }
    return f;
  }

 private:
  const Token& peek() const { return toks_[idx_]; }
  const Token& take() { return toks_[idx_++]; }

  bool accept_name(const char* word) {
    if (peek().kind == Tok::name && peek().text == word) {
      ++idx_;
      return true;
    }
    return false;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (accept_name("implies")) {
      return Formula::implies(std::move(lhs), implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept_name("or")) {
      f = Formula::disjunction(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = until_chain();
    while (accept_name("and")) {
      f = Formula::conjunction(std::move(f), until_chain());
    }
    return f;
  }

  Formula until_chain() {
    Formula lhs = unary();
    if (peek().kind == Tok::op_until) {
      take();
      Interval i = interval();
      return Formula::until(std::move(lhs), i, until_chain());
    }
    return lhs;
  }

  Formula unary() {
    if (accept_name("not")) return Formula::negation(unary());
    if (peek().kind == Tok::op_eventually) {
      take();
      Interval i = interval();
      return Formula::eventually(i, unary());
    }
    if (peek().kind == Tok::op_always) {
      take();
      Interval i = interval();
      return Formula::always(i, unary());
    }
    return primary();
  }

  Formula primary() {
    const Token& t = peek();
    if (t.kind == Tok::lparen) {
      take();
      Formula f = implication();
      if (peek().kind != Tok::rparen) {
        throw ParseError("expected ')'", peek().pos);
      }
      take();
      return f;
    }
    if (t.kind == Tok::name) {
      if (t.text == "true") {
        take();
        return Formula::boolean_true();
      }
      if (t.text == "not" || t.text == "and" || t.text == "or" ||
          t.text == "implies" || t.text == "inf") {
        throw ParseError("expected a predicate or '('", t.pos);
      }
      auto id = reg_.find(t.text);
      if (!id) {
        throw ParseError("unknown predicate '" + t.text + "'", t.pos);
      }
      take();
      return Formula::atom(*id);
    }
    throw ParseError("expected a predicate, 'true', or '('", t.pos);
  }

  int to_steps(double bound, std::size_t pos) const {
    const double steps = bound / time_unit_;
    if (!(steps >= 0.0) || steps > 1e9) {
      throw ParseError("interval bound out of range", pos);
    }
    return static_cast<int>(std::llround(steps));
  }

  Interval interval() {
    if (peek().kind != Tok::lbracket) {
      throw ParseError("expected '['", peek().pos);
    }
    take();
    if (peek().kind != Tok::number) {
      throw ParseError("expected a numeric lower bound", peek().pos);
    }
    const Token lo_tok = take();
    const int lo = to_steps(lo_tok.value, lo_tok.pos);
    if (peek().kind != Tok::comma) {
      throw ParseError("expected ','", peek().pos);
    }
    take();
    std::optional<int> hi;
    if (peek().kind == Tok::name && peek().text == "inf") {
      take();
    } else if (peek().kind == Tok::number) {
      const Token hi_tok = take();
      hi = to_steps(hi_tok.value, hi_tok.pos);
      if (*hi < lo) {
        throw ParseError("interval upper bound below lower bound", hi_tok.pos);
      }
    } else {
      throw ParseError("expected a numeric upper bound or 'inf'", peek().pos);
    }
    if (peek().kind != Tok::rbracket) {
      throw ParseError("expected ']'", peek().pos);
    }
    take();
    return Interval{lo, hi};
  }

  std::vector<Token> toks_;
  const PredicateRegistry& reg_;
  double time_unit_;
  std::size_t idx_ = 0;
};

}  // namespace

Formula parse_formula(const std::string& text, const PredicateRegistry& reg,
                      double time_unit) {
  if (!(time_unit > 0.0)) {
    throw std::invalid_argument("parse_formula: time_unit must be positive");
  }
  return Parser(lex(text), reg, time_unit).run();
}

}  // namespace marfal::logic
