#include "ldiag/text.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "ldiag/errors.hpp"

namespace ldiag {

namespace {

struct Token {
  enum Kind { Int, Qc, Qs, Var, Dot, Star, Caret, LParen, RParen, Plus, Minus, End };
  Kind kind;
  long long value = 0;  // Int value or Var index
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }
  Token expect(Token::Kind k, const char* what) {
    if (tok_.kind != k) throw ParseError(tok_.pos, std::string("expected ") + what);
    return take();
  }

 private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    tok_.pos = i_;
    if (i_ >= text_.size()) {
      tok_.kind = Token::End;
      return;
    }
    char c = text_[i_];
    switch (c) {
      case '.': tok_.kind = Token::Dot; ++i_; return;
      case '*': tok_.kind = Token::Star; ++i_; return;
      case '^': tok_.kind = Token::Caret; ++i_; return;
      case '(': tok_.kind = Token::LParen; ++i_; return;
      case ')': tok_.kind = Token::RParen; ++i_; return;
      case '+': tok_.kind = Token::Plus; ++i_; return;
      case '-': tok_.kind = Token::Minus; ++i_; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      tok_.kind = Token::Int;
      tok_.value = lex_int();
      return;
    }
    if (c == 'x') {
      ++i_;
      if (i_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[i_])))
        throw ParseError(tok_.pos, "variable must be written xN");
      tok_.kind = Token::Var;
      tok_.value = lex_int();
      if (tok_.value < 1) throw ParseError(tok_.pos, "variable index must be positive");
      return;
    }
    if (text_.compare(i_, 2, "qc") == 0) {
      tok_.kind = Token::Qc;
      i_ += 2;
      return;
    }
    if (text_.compare(i_, 2, "qs") == 0) {
      tok_.kind = Token::Qs;
      i_ += 2;
      return;
    }
    throw ParseError(i_, std::string("unexpected character '") + c + "'");
  }

  long long lex_int() {
    long long v = 0;
    while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
      v = v * 10 + (text_[i_] - '0');
      ++i_;
    }
    return v;
  }

  const std::string& text_;
  std::size_t i_ = 0;
  Token tok_;
};

int parse_exponent(Lexer& lx) {
  if (lx.peek().kind != Token::Caret) return 1;
  lx.take();
  Token t = lx.expect(Token::Int, "an exponent");
  if (t.value < 1) throw ParseError(t.pos, "exponent must be positive");
  return static_cast<int>(t.value);
}

// mono := "x" INT ("^" INT)? ("*" ...)*   -- variables only
Monomial parse_mono(Lexer& lx) {
  Monomial m;
  for (;;) {
    Token t = lx.expect(Token::Var, "a variable xN");
    m = m.times(Monomial::var(static_cast<int>(t.value), parse_exponent(lx)));
    if (lx.peek().kind != Token::Star) return m;
    lx.take();
  }
}

Word parse_word_body(Lexer& lx) {
  if (lx.peek().kind == Token::Int && lx.peek().value == 1) {
    lx.take();
    return Word();
  }
  std::vector<Monomial> letters;
  letters.push_back(parse_mono(lx));
  while (lx.peek().kind == Token::Dot) {
    lx.take();
    letters.push_back(parse_mono(lx));
  }
  return Word(std::move(letters));
}

Coeff parse_coeff_body(Lexer& lx);

// One additive term of a linear combination: an optional scalar prefix of
// "*"-joined factors, then an optional word.  A bare integer or polynomial
// denotes a multiple of the unit word.
void parse_lin_term(Lexer& lx, Lin& out, bool negate) {
  Coeff c = Coeff::one();
  Monomial first_letter;
  bool have_letter = false;
  for (;;) {
    Token t = lx.peek();
    if (t.kind == Token::Int) {
      lx.take();
      c *= Coeff::integer(t.value);
    } else if (t.kind == Token::Qc) {
      lx.take();
      c *= Coeff::qc(parse_exponent(lx));
    } else if (t.kind == Token::Qs) {
      lx.take();
      c *= Coeff::qs(parse_exponent(lx));
    } else if (t.kind == Token::LParen) {
      lx.take();
      c *= parse_coeff_body(lx);
      lx.expect(Token::RParen, "')'");
    } else if (t.kind == Token::Var) {
      lx.take();
      first_letter =
          first_letter.times(Monomial::var(static_cast<int>(t.value), parse_exponent(lx)));
      have_letter = true;
    } else {
      throw ParseError(t.pos, "expected a coefficient factor or a variable");
    }
    if (lx.peek().kind != Token::Star) break;
    lx.take();
  }
  Word w;
  if (have_letter) {
    std::vector<Monomial> letters{first_letter};
    while (lx.peek().kind == Token::Dot) {
      lx.take();
      letters.push_back(parse_mono(lx));
    }
    w = Word(std::move(letters));
  } else if (lx.peek().kind == Token::Dot) {
    throw ParseError(lx.peek().pos, "'.' must follow a letter");
  }
  out.add(w, negate ? -c : c);
}

Coeff parse_coeff_term(Lexer& lx) {
  Coeff c = Coeff::one();
  for (;;) {
    Token t = lx.peek();
    if (t.kind == Token::Int) {
      lx.take();
      c *= Coeff::integer(t.value);
    } else if (t.kind == Token::Qc) {
      lx.take();
      c *= Coeff::qc(parse_exponent(lx));
    } else if (t.kind == Token::Qs) {
      lx.take();
      c *= Coeff::qs(parse_exponent(lx));
    } else {
      throw ParseError(t.pos, "expected an integer, qc or qs");
    }
    if (lx.peek().kind != Token::Star) return c;
    lx.take();
  }
}

Coeff parse_coeff_body(Lexer& lx) {
  Coeff r;
  bool neg = false;
  if (lx.peek().kind == Token::Minus) {
    lx.take();
    neg = true;
  }
  for (;;) {
    Coeff t = parse_coeff_term(lx);
    r += neg ? -t : t;
    if (lx.peek().kind == Token::Plus) {
      lx.take();
      neg = false;
    } else if (lx.peek().kind == Token::Minus) {
      lx.take();
      neg = true;
    } else {
      return r;
    }
  }
}

void expect_end(Lexer& lx) {
  if (lx.peek().kind != Token::End)
    throw ParseError(lx.peek().pos, "unexpected trailing input");
}

}  // namespace

Word parse_word(const std::string& text) {
  Lexer lx(text);
  Word w = parse_word_body(lx);
  expect_end(lx);
  return w;
}

Lin parse_lin(const std::string& text) {
  Lexer lx(text);
  Lin r;
  bool neg = false;
  if (lx.peek().kind == Token::Minus) {
    lx.take();
    neg = true;
  }
  parse_lin_term(lx, r, neg);
  while (lx.peek().kind == Token::Plus || lx.peek().kind == Token::Minus) {
    neg = lx.take().kind == Token::Minus;
    parse_lin_term(lx, r, neg);
  }
  expect_end(lx);
  return r;
}

Coeff parse_coeff(const std::string& text) {
  Lexer lx(text);
  // Accept "0" as the zero polynomial.
  if (lx.peek().kind == Token::Int && lx.peek().value == 0) {
    lx.take();
    expect_end(lx);
    return Coeff();
  }
  Coeff c = parse_coeff_body(lx);
  expect_end(lx);
  return c;
}

std::string render_monomial(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, e] : m.exps()) {
    if (!first) os << '*';
    first = false;
    os << 'x' << i;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::string render_word(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << '.';
    os << render_monomial(w[i]);
  }
  return os.str();
}

namespace {

// One polynomial term without sign, e.g. "1", "2*qc", "qc^2*qs".
std::string render_coeff_term(const Coeff::Key& k, long long abs_c) {
  std::ostringstream os;
  bool printed = false;
  if (abs_c != 1 || (k.first == 0 && k.second == 0)) {
    os << abs_c;
    printed = true;
  }
  if (k.first > 0) {
    if (printed) os << '*';
    os << "qc";
    if (k.first > 1) os << '^' << k.first;
    printed = true;
  }
  if (k.second > 0) {
    if (printed) os << '*';
    os << "qs";
    if (k.second > 1) os << '^' << k.second;
  }
  return os.str();
}

}  // namespace

std::string render_coeff(const Coeff& c) {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : c.terms()) {
    if (first) {
      if (v < 0) os << '-';
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    first = false;
    os << render_coeff_term(k, v < 0 ? -v : v);
  }
  return os.str();
}

std::string render_lin(const Lin& l) {
  if (l.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : l.terms()) {
    if (!first) os << " + ";
    first = false;
    if (c.is_one()) {
      os << render_word(w);
    } else if (c.terms().size() == 1 && c.terms().begin()->second > 0) {
      os << render_coeff(c) << '*' << render_word(w);
    } else {
      os << '(' << render_coeff(c) << ")*" << render_word(w);
    }
  }
  return os.str();
}

std::string render_tensor2(const Tensor2& t) {
  if (t.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [ww, c] : t.terms()) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << '(' << render_coeff(c) << ")*";
    os << '[' << render_word(ww.first) << " (x) " << render_word(ww.second) << ']';
  }
  return os.str();
}

}  // namespace ldiag
