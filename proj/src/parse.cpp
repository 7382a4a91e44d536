#include "torsor/parse.hpp"

#include <cctype>
#include <optional>

namespace torsor {

namespace {

enum class Tok { integer, qsym, ident, plus, minus, star, slash, caret, lparen, rparen, tensor, end };

struct Token {
  Tok kind;
  std::string text;
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
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::integer, s.substr(i, j - i)});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      std::string word = s.substr(i, j - i);
      out.push_back({word == "q" ? Tok::qsym : Tok::ident, word});
      i = j;
      continue;
    }
    // UTF-8 tensor sign
    if (s.compare(i, 3, "⊗") == 0) {
      out.push_back({Tok::tensor, "⊗"});
      i += 3;
      continue;
    }
    switch (c) {
      case '+': out.push_back({Tok::plus, "+"}); break;
      case '-': out.push_back({Tok::minus, "-"}); break;
      case '*': out.push_back({Tok::star, "*"}); break;
      case '/': out.push_back({Tok::slash, "/"}); break;
      case '^': out.push_back({Tok::caret, "^"}); break;
      case '(': out.push_back({Tok::lparen, "("}); break;
      case ')': out.push_back({Tok::rparen, ")"}); break;
      case '@': out.push_back({Tok::tensor, "@"}); break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "' in expression");
    }
    ++i;
  }
  out.push_back({Tok::end, ""});
  return out;
}

// Recursive-descent evaluator for scalar expressions in q.  Stops in front
// of identifiers so a scalar prefix can precede a word.
class ScalarParser {
 public:
  explicit ScalarParser(const std::vector<Token>& toks, size_t pos = 0)
      : toks_(toks), pos_(pos) {}

  Scalar parse_expression() {
    Scalar v = parse_term();
    while (peek() == Tok::plus || peek() == Tok::minus) {
      bool neg = next().kind == Tok::minus;
      Scalar t = parse_term();
      v = neg ? v - t : v + t;
    }
    return v;
  }

  // term := factor (('*'|'/') factor | juxtaposed factor)*
  Scalar parse_term() {
    Scalar v = parse_factor();
    for (;;) {
      if (peek() == Tok::star || peek() == Tok::slash) {
        // a '*' in front of a word or a leg group belongs to the outer grammar
        if (peek() == Tok::star &&
            (toks_[pos_ + 1].kind == Tok::ident || starts_leg(pos_ + 1) ||
             paren_has_ident(pos_ + 1)))
          break;
        bool div = next().kind == Tok::slash;
        Scalar f = parse_factor();
        v = div ? v / f : v * f;
      } else if (peek() == Tok::integer || peek() == Tok::qsym ||
                 (peek() == Tok::lparen && !starts_leg(pos_) &&
                  !paren_has_ident(pos_))) {
        v = v * parse_factor();
      } else {
        break;
      }
    }
    return v;
  }

  // does the parenthesized group opening at p mention a generator name?
  bool paren_has_ident(size_t p) const {
    if (toks_[p].kind != Tok::lparen) return false;
    int depth = 0;
    for (size_t k = p; toks_[k].kind != Tok::end; ++k) {
      if (toks_[k].kind == Tok::lparen) ++depth;
      if (toks_[k].kind == Tok::rparen && --depth == 0) return false;
      if (toks_[k].kind == Tok::ident) return true;
    }
    return false;
  }

  Scalar parse_factor() {
    if (peek() == Tok::minus) {
      next();
      return -parse_factor();
    }
    Scalar base;
    if (peek() == Tok::integer) {
      base = Scalar(Int(next().text));
    } else if (peek() == Tok::qsym) {
      next();
      base = Scalar::q_power(1);
    } else if (peek() == Tok::lparen) {
      next();
      base = parse_expression();
      expect(Tok::rparen, ")");
    } else {
      throw ParseError("expected a scalar factor near token '" + toks_[pos_].text + "'");
    }
    if (peek() == Tok::caret) {
      next();
      bool neg = false;
      if (peek() == Tok::minus) {
        neg = true;
        next();
      }
      if (peek() != Tok::integer) throw ParseError("expected an integer exponent");
      int e = std::stoi(next().text);
      base = base.pow(neg ? -e : e);
    }
    return base;
  }

  size_t pos() const { return pos_; }
  Tok peek() const { return toks_[pos_].kind; }
  const Token& token_at(size_t i) const {
    return toks_[std::min(i, toks_.size() - 1)];
  }
  const Token& next() { return toks_[pos_++]; }
  void expect(Tok k, const char* what) {
    if (toks_[pos_].kind != k)
      throw ParseError(std::string("expected '") + what + "' near token '" +
                       toks_[pos_].text + "'");
    ++pos_;
  }

  // Does the '(' at position p open a leg group, i.e. is its matching ')'
  // followed by a tensor sign, or preceded by one?
  bool starts_leg(size_t p) const {
    if (toks_[p].kind != Tok::lparen) return false;
    if (p > 0 && toks_[p - 1].kind == Tok::tensor) return true;
    int depth = 0;
    for (size_t k = p; toks_[k].kind != Tok::end; ++k) {
      if (toks_[k].kind == Tok::lparen) ++depth;
      if (toks_[k].kind == Tok::rparen) {
        --depth;
        if (depth == 0) return toks_[k + 1].kind == Tok::tensor;
      }
    }
    return false;
  }

 private:
  const std::vector<Token>& toks_;
  size_t pos_;
};

Element parse_element_sum(ScalarParser& p, const PresentationPtr& pres);

// scalar-prefix followed by a product of generators and parenthesized
// sub-elements; used by element terms and by tensor leg contents
Element parse_element_term(ScalarParser& p, const PresentationPtr& pres) {
  Scalar coeff(1);
  bool have_scalar = false;
  if (p.peek() != Tok::ident &&
      !(p.peek() == Tok::lparen && p.paren_has_ident(p.pos()))) {
    coeff = p.parse_term();
    have_scalar = true;
  }
  if (have_scalar && p.peek() == Tok::star) p.next();

  Element acc = Element::unit(pres, coeff);
  bool have_factor = false;
  for (;;) {
    if (p.peek() == Tok::star) {
      p.next();
      continue;
    }
    if (p.peek() == Tok::ident) {
      const std::string name = p.next().text;
      int id = pres->gen_id(name);
      if (id < 0) throw ParseError("unknown generator '" + name + "'");
      acc = acc * Element::generator(pres, id);
      have_factor = true;
      continue;
    }
    if (p.peek() == Tok::lparen) {
      p.next();
      acc = acc * parse_element_sum(p, pres);
      p.expect(Tok::rparen, ")");
      have_factor = true;
      continue;
    }
    break;
  }
  if (!have_scalar && !have_factor) throw ParseError("empty term");
  return acc;
}

Element parse_element_sum(ScalarParser& p, const PresentationPtr& pres) {
  Element acc(pres);
  for (;;) {
    bool negate = false;
    while (p.peek() == Tok::plus || p.peek() == Tok::minus) {
      if (p.next().kind == Tok::minus) negate = !negate;
    }
    Element term = parse_element_term(p, pres);
    acc += negate ? -term : term;
    if (p.peek() != Tok::plus && p.peek() != Tok::minus) break;
  }
  return acc;
}

}  // namespace

Element parse_element(const std::string& text, const PresentationPtr& pres) {
  std::vector<Token> toks = tokenize(text);
  ScalarParser p(toks);
  Element acc = parse_element_sum(p, pres);
  if (p.peek() != Tok::end) throw ParseError("trailing input in element expression");
  return acc;
}

TensorElement parse_tensor(const std::string& text, const SignaturePtr& sig) {
  if (sig->size() == 1) {
    // single-leg tensors are plain element expressions
    Element e = parse_element(text, sig->leg(0).pres);
    TensorElement t(sig);
    t.add_pure({e}, Scalar(1));
    return t;
  }
  std::vector<Token> toks = tokenize(text);
  ScalarParser p(toks);
  TensorElement acc(sig);
  for (;;) {
    bool negate = false;
    while (p.peek() == Tok::plus || p.peek() == Tok::minus) {
      if (p.next().kind == Tok::minus) negate = !negate;
    }
    // optional scalar prefix (anything before a leg group or bare ident)
    Scalar coeff(1);
    if (p.peek() != Tok::ident && !(p.peek() == Tok::lparen && p.starts_leg(p.pos()))) {
      coeff = p.parse_term();
      if (p.peek() == Tok::star) p.next();
    }
    if (negate) coeff = -coeff;
    if (p.peek() == Tok::lparen && p.starts_leg(p.pos())) {
      std::vector<Element> legs;
      for (;;) {
        p.expect(Tok::lparen, "(");
        // parse one leg: an element expression over the leg presentation
        const PresentationPtr& lp = sig->leg(legs.size()).pres;
        Element leg = parse_element_sum(p, lp);
        p.expect(Tok::rparen, ")");
        legs.push_back(std::move(leg));
        if (p.peek() == Tok::tensor) {
          p.next();
          if (legs.size() == sig->size())
            throw ParseError("too many legs for the signature");
          continue;
        }
        break;
      }
      if (legs.size() != sig->size())
        throw ParseError("expected " + std::to_string(sig->size()) + " legs");
      acc.add_pure(legs, coeff);
    } else {
      // bare scalar term: multiple of the unit tensor
      acc += TensorElement::unit(sig, coeff);
    }
    if (p.peek() != Tok::plus && p.peek() != Tok::minus) break;
  }
  if (p.peek() != Tok::end) throw ParseError("trailing input in tensor expression");
  return acc;
}

Scalar Scalar::parse(const std::string& text) {
  std::vector<Token> toks = tokenize(text);
  ScalarParser p(toks);
  Scalar v = p.parse_expression();
  if (p.peek() != Tok::end) throw ParseError("trailing input in scalar expression");
  return v;
}

}  // namespace torsor
