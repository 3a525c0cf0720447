#include "leavitt/expr.hpp"

#include <cctype>
#include <limits>

#include "leavitt/error.hpp"

namespace leavitt {

namespace {

class Parser {
public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse_all() {
    Expr e = expr();
    skip_space();
    if (pos_ != src_.size())
      fail(std::string("unexpected '") + src_[pos_] + "'");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError(msg, pos_);
  }

  void skip_space() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ == src_.size())
        fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
  }

  bool at_digit() {
    skip_space();
    return pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_]));
  }

  std::string digits() {
    if (!at_digit())
      fail("expected a number");
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  std::uint64_t small_number() {
    std::size_t start = pos_;
    mpz_class z(digits());
    if (z > mpz_class(std::to_string(std::numeric_limits<std::uint64_t>::max()))) {
      pos_ = start;
      fail("number too large");
    }
    return std::stoull(z.get_str());
  }

  static Expr node(Expr::Kind k, std::vector<Expr> children) {
    Expr e;
    e.kind = k;
    e.children = std::move(children);
    return e;
  }

  Expr expr() {
    bool negate = accept('-');
    Expr lhs = term();
    if (negate)
      lhs = node(Expr::Kind::Negate, {std::move(lhs)});
    for (;;) {
      Expr::Kind k;
      if (accept('+'))
        k = Expr::Kind::Sum;
      else if (accept('-'))
        k = Expr::Kind::Difference;
      else
        return lhs;
      // Operands first: GCC 11 leaks braced-init elements if a later one throws.
      Expr rhs = term();
      lhs = node(k, {std::move(lhs), std::move(rhs)});
    }
  }

  Expr term() {
    Expr lhs = factor();
    for (;;) {
      if (accept('*')) {
        Expr rhs = factor();
        lhs = node(Expr::Kind::Product, {std::move(lhs), std::move(rhs)});
      } else if (accept('/')) {
        mpz_class den(digits());
        Expr q = node(Expr::Kind::Quotient, {std::move(lhs)});
        q.value = std::move(den);
        lhs = std::move(q);
      } else {
        return lhs;
      }
    }
  }

  Expr factor() {
    Expr base = atom();
    if (!accept('^'))
      return base;
    std::size_t start = pos_;
    std::uint64_t e = small_number();
    if (e < 1 || e > std::numeric_limits<std::uint32_t>::max()) {
      pos_ = start;
      fail("exponent must be a positive 32-bit integer");
    }
    Expr p = node(Expr::Kind::Power, {std::move(base)});
    p.exponent = static_cast<std::uint32_t>(e);
    return p;
  }

  Expr atom() {
    skip_space();
    if (pos_ == src_.size())
      fail("unexpected end of input");
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Expr e;
      e.value = mpz_class(digits());
      return e;
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      Expr e;
      e.is_y = c == 'y';
      if (accept('[')) {
        e.kind = Expr::Kind::WordTerm;
        if (!accept(']')) {
          do {
            e.letters.push_back(small_number());
          } while (accept(','));
          expect(']');
        }
        return e;
      }
      e.kind = Expr::Kind::Generator;
      e.letters.push_back(small_number());
      return e;
    }
    if (accept('(')) {
      Expr inner = expr();
      expect(')');
      return node(Expr::Kind::Group, {std::move(inner)});
    }
    if (accept('[')) {
      Expr a = expr();
      expect(',');
      Expr b = expr();
      expect(']');
      return node(Expr::Kind::Bracket, {std::move(a), std::move(b)});
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

std::string letter_list(const std::vector<std::uint64_t> &ls) {
  std::string s = "[";
  for (std::size_t i = 0; i < ls.size(); ++i)
    s += (i ? "," : "") + std::to_string(ls[i]);
  return s + "]";
}

template <class Entry> struct Algebra;

template <> struct Algebra<CohnElement> {
  static CohnElement lift(const CohnElement &c) { return c; }
  static CohnElement lie(const CohnElement &a, const CohnElement &b) {
    return bracket(a, b);
  }
};

template <> struct Algebra<LeavittElement> {
  static LeavittElement lift(const CohnElement &c) { return normal_form(c); }
  static LeavittElement lie(const LeavittElement &a, const LeavittElement &b) {
    return leavitt_bracket(a, b);
  }
};

Letter checked_letter(std::uint64_t l, std::uint32_t n) {
  if (l < 1 || l > n)
    throw DomainError("generator index " + std::to_string(l) +
                      " outside [1, " + std::to_string(n) + "]");
  return static_cast<Letter>(l);
}

template <class Entry>
Entry eval(const Expr &e, FieldSpec spec, std::uint32_t n) {
  using K = Expr::Kind;
  using A = Algebra<Entry>;
  switch (e.kind) {
  case K::Integer:
    return A::lift(CohnElement::scalar(Scalar::from_int(e.value, spec), n));
  case K::Generator:
    return Entry::generator(spec, n, e.is_y, checked_letter(e.letters[0], n));
  case K::WordTerm: {
    std::vector<Letter> ls;
    for (auto l : e.letters)
      ls.push_back(checked_letter(l, n));
    Word w(n, std::move(ls));
    Monomial m = e.is_y ? Monomial(Word(n), w) : Monomial(w, Word(n));
    return A::lift(CohnElement::term(Scalar::one(spec), std::move(m)));
  }
  case K::Negate:
    return -eval<Entry>(e.children[0], spec, n);
  case K::Sum:
    return eval<Entry>(e.children[0], spec, n) +
           eval<Entry>(e.children[1], spec, n);
  case K::Difference:
    return eval<Entry>(e.children[0], spec, n) -
           eval<Entry>(e.children[1], spec, n);
  case K::Product:
    return eval<Entry>(e.children[0], spec, n) *
           eval<Entry>(e.children[1], spec, n);
  case K::Quotient: {
    Scalar den = Scalar::from_int(e.value, spec);
    if (den.is_zero())
      throw DomainError("division by " + e.value.get_str() + ", which is zero in " +
                        spec.name());
    return den.inverse() * eval<Entry>(e.children[0], spec, n);
  }
  case K::Power:
    return power(eval<Entry>(e.children[0], spec, n), e.exponent);
  case K::Bracket:
    return A::lie(eval<Entry>(e.children[0], spec, n),
                  eval<Entry>(e.children[1], spec, n));
  case K::Group:
    return eval<Entry>(e.children[0], spec, n);
  }
  throw DomainError("unknown expression node");
}

} // namespace

Expr parse(std::string_view input) { return Parser(input).parse_all(); }

std::string print(const Expr &e) {
  using K = Expr::Kind;
  switch (e.kind) {
  case K::Integer:
    return e.value.get_str();
  case K::Generator:
    return (e.is_y ? "y" : "x") + std::to_string(e.letters[0]);
  case K::WordTerm:
    return (e.is_y ? "y" : "x") + letter_list(e.letters);
  case K::Negate:
    return "-" + print(e.children[0]);
  case K::Sum:
    return print(e.children[0]) + " + " + print(e.children[1]);
  case K::Difference:
    return print(e.children[0]) + " - " + print(e.children[1]);
  case K::Product:
    return print(e.children[0]) + "*" + print(e.children[1]);
  case K::Quotient:
    return print(e.children[0]) + "/" + e.value.get_str();
  case K::Power:
    return print(e.children[0]) + "^" + std::to_string(e.exponent);
  case K::Bracket:
    return "[" + print(e.children[0]) + ", " + print(e.children[1]) + "]";
  case K::Group:
    return "(" + print(e.children[0]) + ")";
  }
  return {};
}

std::string_view mode_name(Mode m) {
  switch (m) {
  case Mode::Cohn:
    return "cohn";
  case Mode::Leavitt:
    return "leavitt";
  case Mode::Matrix:
    return "matrix";
  }
  return "";
}

Mode parse_mode(std::string_view name) {
  if (name == "cohn")
    return Mode::Cohn;
  if (name == "leavitt")
    return Mode::Leavitt;
  if (name == "matrix")
    return Mode::Matrix;
  throw DomainError("unknown mode '" + std::string(name) +
                    "' (expected cohn, leavitt or matrix)");
}

CohnElement evaluate_cohn(const Expr &e, FieldSpec spec, std::uint32_t n) {
  return eval<CohnElement>(e, spec, n);
}

LeavittElement evaluate_leavitt(const Expr &e, FieldSpec spec,
                                std::uint32_t n) {
  return eval<LeavittElement>(e, spec, n);
}

Value evaluate(const Expr &e, const SessionConfig &cfg) {
  switch (cfg.mode) {
  case Mode::Cohn:
    return evaluate_cohn(e, cfg.field, cfg.n);
  case Mode::Leavitt:
    return evaluate_leavitt(e, cfg.field, cfg.n);
  case Mode::Matrix:
    return LeavittMatrix::diagonal(cfg.d, evaluate_leavitt(e, cfg.field, cfg.n));
  }
  throw DomainError("unknown mode");
}

CohnElement parse_cohn(std::string_view text, FieldSpec spec, std::uint32_t n) {
  return evaluate_cohn(parse(text), spec, n);
}

LeavittElement parse_leavitt(std::string_view text, FieldSpec spec,
                             std::uint32_t n) {
  return evaluate_leavitt(parse(text), spec, n);
}

} // namespace leavitt
