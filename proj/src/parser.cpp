#include "supmech/parser.hpp"

#include <cctype>
#include <vector>

#include "supmech/error.hpp"

namespace supmech {

namespace {

struct Token {
  enum Kind { Num, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;
  long pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    long pos = static_cast<long>(i);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Num, s.substr(i, j - i), pos});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({Token::Ident, s.substr(i, j - i), pos});
      i = j;
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::Plus; break;
      case '-': k = Token::Minus; break;
      case '*': k = Token::Star; break;
      case '/': k = Token::Slash; break;
      case '^': k = Token::Caret; break;
      case '(': k = Token::LParen; break;
      case ')': k = Token::RParen; break;
      default:
        throw Error(std::string("unexpected character '") + c + "' in expression", pos);
    }
    out.push_back({k, std::string(1, c), pos});
    ++i;
  }
  out.push_back({Token::End, "", static_cast<long>(s.size())});
  return out;
}

class Parser {
 public:
  Parser(const Presentation* pres, const std::string& text)
      : pres_(pres), toks_(tokenize(text)) {}

  NcPoly parse() {
    NcPoly r = expr();
    if (cur().kind != Token::End)
      throw Error("unexpected trailing input '" + cur().text + "'", cur().pos);
    return r;
  }

 private:
  const Token& cur() const { return toks_[idx_]; }
  const Token& peek() const {
    return toks_[idx_ + 1 < toks_.size() ? idx_ + 1 : toks_.size() - 1];
  }
  Token take() { return toks_[idx_++]; }

  static bool starts_operand(const Token& t) {
    return t.kind == Token::Num || t.kind == Token::Ident || t.kind == Token::LParen;
  }

  NcPoly expr() {
    NcPoly r = term();
    while (cur().kind == Token::Plus || cur().kind == Token::Minus) {
      bool plus = take().kind == Token::Plus;
      NcPoly rhs = term();
      if (plus)
        r += rhs;
      else
        r -= rhs;
    }
    return r;
  }

  NcPoly term() {
    NcPoly r = unary();
    for (;;) {
      if (cur().kind == Token::Star && starts_operand(peek())) {
        take();
        r = r * unary();
      } else if (cur().kind == Token::Slash) {
        long pos = take().pos;
        NcPoly d = unary();
        r = divide(r, d, pos);
      } else {
        return r;
      }
    }
  }

  NcPoly unary() {
    if (cur().kind == Token::Minus) {
      take();
      return -unary();
    }
    if (cur().kind == Token::Plus) {
      take();
      return unary();
    }
    return postfix();
  }

  NcPoly postfix() {
    NcPoly r = primary();
    for (;;) {
      if (cur().kind == Token::Caret) {
        long pos = take().pos;
        bool neg = false;
        if (cur().kind == Token::Minus) {
          take();
          neg = true;
        }
        if (cur().kind != Token::Num)
          throw Error("expected integer exponent after '^'", cur().pos);
        long k = std::stol(take().text);
        r = power(r, neg ? -k : k, pos);
      } else if (cur().kind == Token::Star && !starts_operand(peek())) {
        take();
        r = r.star();
      } else {
        return r;
      }
    }
  }

  NcPoly primary() {
    const Token& t = cur();
    switch (t.kind) {
      case Token::Num: {
        Token n = take();
        return NcPoly::scalar(pres_, GaussRat(Rational(n.text)));
      }
      case Token::Ident: {
        Token id = take();
        int g = pres_->gen_index(id.text);
        if (g >= 0) return NcPoly::generator(pres_, g);
        int p = pres_->param_index(id.text);
        if (p >= 0)
          return NcPoly::scalar(
              pres_, Laurent::param_pow(pres_->nparams(), p, 1));
        if (id.text == "I") return NcPoly::unit(pres_);
        if (id.text == "i") return NcPoly::scalar(pres_, GaussRat::i());
        throw Error("unknown identifier '" + id.text + "'", id.pos);
      }
      case Token::LParen: {
        take();
        NcPoly r = expr();
        if (cur().kind != Token::RParen)
          throw Error("expected ')'", cur().pos);
        take();
        return r;
      }
      default:
        throw Error("expected a number, identifier, or '('", t.pos);
    }
  }

  // Extracts the coefficient of an expression that reduced to a single
  // invertible scalar monomial; errors otherwise.
  Laurent scalar_monomial(const NcPoly& p, const char* what, long pos) {
    const auto& tm = p.terms();
    if (tm.size() != 1 || !tm.begin()->first.empty())
      throw Error(std::string(what) + " must be a nonzero scalar", pos);
    const Laurent& c = tm.begin()->second;
    if (!c.is_single_term())
      throw Error(std::string(what) + " must be a single scalar monomial", pos);
    return c;
  }

  NcPoly divide(const NcPoly& num, const NcPoly& den, long pos) {
    return num.divided_by(scalar_monomial(den, "divisor", pos));
  }

  NcPoly power(const NcPoly& base, long k, long pos) {
    if (k >= 0) {
      NcPoly r = NcPoly::unit(pres_);
      for (long j = 0; j < k; ++j) r = r * base;
      return r;
    }
    Laurent c = scalar_monomial(base, "base of a negative power", pos);
    NcPoly r = NcPoly::unit(pres_);
    for (long j = 0; j < -k; ++j) r = r.divided_by(c);
    return r;
  }

  const Presentation* pres_;
  std::vector<Token> toks_;
  size_t idx_ = 0;
};

}  // namespace

NcPoly parse_expr(const Presentation* pres, const std::string& text) {
  return Parser(pres, text).parse();
}

}  // namespace supmech
