#include "depict/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace depict {

namespace {

constexpr std::uint32_t kMaxExponent = 1u << 20;

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b %= p;
  if (b < 0) b += p;
  while (e > 0) {
    if (e & 1) r = (__int128)r * b % p;
    b = (__int128)b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

CtxPtr VarContext::make(std::vector<std::string> names,
                        std::optional<std::uint64_t> modulus) {
  if (names.empty()) throw error("variable context must name at least one variable");
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw error("duplicate variable name: " + names[i]);
  if (modulus) {
    if (*modulus >= (1ull << 31)) throw error("prime field modulus too large");
    if (!is_prime(*modulus))
      throw error("modulus " + std::to_string(*modulus) + " is not prime");
  }
  auto ctx = std::make_shared<VarContext>();
  ctx->names = std::move(names);
  ctx->modulus = modulus;
  return ctx;
}

int VarContext::index_of(std::string_view name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto e : exps) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](auto e) { return e == 0; });
}

Monomial Monomial::times(const Monomial& other) const {
  if (arity() != other.arity()) throw error("monomial arity mismatch");
  Monomial r = *this;
  for (int i = 0; i < arity(); ++i) {
    r.exps[i] += other.exps[i];
    if (r.exps[i] > kMaxExponent) throw error("exponent overflow");
  }
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (arity() != other.arity()) throw error("monomial arity mismatch");
  for (int i = 0; i < arity(); ++i)
    if (exps[i] > other.exps[i]) return false;
  return true;
}

Monomial Monomial::div(const Monomial& other) const {
  if (!other.divides(*this)) throw error("monomial division is not exact");
  Monomial r = *this;
  for (int i = 0; i < arity(); ++i) r.exps[i] -= other.exps[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  if (arity() != other.arity()) throw error("monomial arity mismatch");
  Monomial r = *this;
  for (int i = 0; i < arity(); ++i) r.exps[i] = std::max(r.exps[i], other.exps[i]);
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  if (arity() != other.arity()) throw error("monomial arity mismatch");
  for (int i = 0; i < arity(); ++i)
    if (exps[i] > 0 && other.exps[i] > 0) return false;
  return true;
}

namespace {

std::strong_ordering cmp_lex(const std::uint32_t* a, const std::uint32_t* b, int n) {
  for (int i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

std::strong_ordering cmp_grevlex(const std::uint32_t* a, const std::uint32_t* b, int n) {
  std::uint64_t da = 0, db = 0;
  for (int i = 0; i < n; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  // equal degree: last nonzero entry of a-b negative => a greater
  for (int i = n - 1; i >= 0; --i)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       const MonomialOrder& ord) {
  if (a.arity() != b.arity()) throw error("monomial arity mismatch");
  const int n = a.arity();
  switch (ord.kind) {
    case MonomialOrder::Kind::lex:
      return cmp_lex(a.exps.data(), b.exps.data(), n);
    case MonomialOrder::Kind::grevlex:
      return cmp_grevlex(a.exps.data(), b.exps.data(), n);
    case MonomialOrder::Kind::block: {
      if (ord.split < 0 || ord.split > n) throw error("block split out of range");
      auto lead = cmp_grevlex(a.exps.data(), b.exps.data(), ord.split);
      if (lead != std::strong_ordering::equal) return lead;
      return cmp_grevlex(a.exps.data() + ord.split, b.exps.data() + ord.split,
                         n - ord.split);
    }
  }
  throw error("unreachable monomial order kind");
}

Rational reduce_coeff(const Rational& c, const VarContext& ctx) {
  if (!ctx.modulus) return c;
  const std::int64_t p = static_cast<std::int64_t>(*ctx.modulus);
  Int num = numerator(c) % p;
  Int den = denominator(c) % p;
  std::int64_t n = num.convert_to<std::int64_t>();
  std::int64_t d = den.convert_to<std::int64_t>();
  if (n < 0) n += p;
  if (d < 0) d += p;
  if (d == 0) throw error("division by zero in prime field");
  std::int64_t r = (__int128)n * mod_pow(d, p - 2, p) % p;
  return Rational(r);
}

Rational coeff_inverse(const Rational& c, const VarContext& ctx) {
  if (c == 0) throw error("inverse of zero coefficient");
  if (!ctx.modulus) return Rational(1) / c;
  return reduce_coeff(Rational(1) / c, ctx);
}

Polynomial Polynomial::zero(CtxPtr ctx, MonomialOrder ord) {
  Polynomial p;
  p.ctx_ = std::move(ctx);
  p.ord_ = ord;
  return p;
}

Polynomial Polynomial::constant(CtxPtr ctx, const Rational& c, MonomialOrder ord) {
  Polynomial p = zero(std::move(ctx), ord);
  Rational r = reduce_coeff(c, *p.ctx_);
  if (r != 0) p.terms_.push_back({r, Monomial::one(p.ctx_->arity())});
  return p;
}

Polynomial Polynomial::variable(CtxPtr ctx, int index, MonomialOrder ord) {
  Polynomial p = zero(std::move(ctx), ord);
  if (index < 0 || index >= p.ctx_->arity()) throw error("variable index out of range");
  Monomial m = Monomial::one(p.ctx_->arity());
  m.exps[index] = 1;
  p.terms_.push_back({Rational(1), m});
  return p;
}

Polynomial Polynomial::from_terms(CtxPtr ctx, std::vector<Term> terms,
                                  MonomialOrder ord) {
  Polynomial p = zero(std::move(ctx), ord);
  for (auto& t : terms)
    if (t.mono.arity() != p.ctx_->arity())
      throw error("term arity does not match context");
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw error("leading term of zero polynomial");
  return terms_.front();
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

void Polynomial::normalize() {
  for (auto& t : terms_) t.coeff = reduce_coeff(t.coeff, *ctx_);
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return compare_monomials(a.mono, b.mono, ord_) == std::strong_ordering::greater;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = reduce_coeff(out.back().coeff + t.coeff, *ctx_);
    } else {
      out.push_back(std::move(t));
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const Term& t) { return t.coeff == 0; }),
            out.end());
  terms_ = std::move(out);
}

Polynomial Polynomial::reordered(MonomialOrder ord) const {
  if (ord == ord_) return *this;
  Polynomial p = *this;
  p.ord_ = ord;
  p.normalize();
  return p;
}

namespace {
void require_same_ctx(const Polynomial& a, const Polynomial& b) {
  if (!a.ctx() || !b.ctx() || !a.ctx()->same_as(*b.ctx()))
    throw error("polynomial context mismatch");
}
}  // namespace

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_ctx(*this, other);
  const Polynomial rhs = other.order() == ord_ ? other : other.reordered(ord_);
  std::vector<Term> ts = terms_;
  ts.insert(ts.end(), rhs.terms_.begin(), rhs.terms_.end());
  return from_terms(ctx_, std::move(ts), ord_);
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + (-other);
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = reduce_coeff(-t.coeff, *ctx_);
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ctx(*this, other);
  const Polynomial rhs = other.order() == ord_ ? other : other.reordered(ord_);
  std::vector<Term> ts;
  ts.reserve(terms_.size() * rhs.terms_.size());
  for (auto& a : terms_)
    for (auto& b : rhs.terms_)
      ts.push_back({a.coeff * b.coeff, a.mono.times(b.mono)});
  return from_terms(ctx_, std::move(ts), ord_);
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = reduce_coeff(t.coeff * c, *ctx_);
  p.normalize();
  return p;
}

Polynomial Polynomial::times_term(const Rational& c, const Monomial& m) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (auto& t : terms_) ts.push_back({t.coeff * c, t.mono.times(m)});
  return from_terms(ctx_, std::move(ts), ord_);
}

Polynomial Polynomial::pow(std::uint32_t n) const {
  Polynomial r = constant(ctx_, 1, ord_);
  Polynomial b = *this;
  while (n > 0) {
    if (n & 1) r = r * b;
    b = n > 1 ? b * b : b;
    n >>= 1;
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(coeff_inverse(leading_coeff(), *ctx_));
}

bool Polynomial::equals(const Polynomial& other) const {
  if (!ctx_ || !other.ctx_ || !ctx_->same_as(*other.ctx_)) return false;
  const Polynomial a = reordered(MonomialOrder::lex());
  const Polynomial b = other.reordered(MonomialOrder::lex());
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].mono == b.terms_[i].mono))
      return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    const bool unit_coeff = (c == 1);
    std::string mono_str;
    {
      std::ostringstream ms;
      bool mfirst = true;
      for (int i = 0; i < t.mono.arity(); ++i) {
        if (t.mono.exps[i] == 0) continue;
        if (!mfirst) ms << "*";
        mfirst = false;
        ms << ctx_->names[i];
        if (t.mono.exps[i] > 1) ms << "^" << t.mono.exps[i];
      }
      mono_str = ms.str();
    }
    if (mono_str.empty()) {
      os << c;
    } else if (unit_coeff) {
      os << mono_str;
    } else {
      os << c << "*" << mono_str;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;
  CtxPtr ctx;
  MonomialOrder ord;

  [[noreturn]] void fail(const std::string& msg) const {
    throw error("parse error at position " + std::to_string(pos) + ": " + msg);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  Polynomial parse_expr() {
    skip_ws();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Polynomial r = parse_term();
    if (neg) r = -r;
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos;
        r = r + parse_term();
      } else if (c == '-') {
        ++pos;
        r = r - parse_term();
      } else {
        break;
      }
    }
    return r;
  }

  Polynomial parse_term() {
    Polynomial r = parse_factor();
    while (eat('*')) r = r * parse_factor();
    return r;
  }

  Polynomial parse_factor() {
    Polynomial base = parse_base();
    if (eat('^')) {
      skip_ws();
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        fail("expected integer exponent after '^'");
      std::uint64_t e = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        e = e * 10 + (text[pos] - '0');
        if (e > (1u << 20)) fail("exponent too large");
        ++pos;
      }
      return base.pow(static_cast<std::uint32_t>(e));
    }
    return base;
  }

  Int parse_int() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected integer");
    Int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    return v;
  }

  Polynomial parse_base() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Polynomial r = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = parse_int();
      if (eat('/')) {
        Int den = parse_int();
        if (den == 0) fail("zero denominator");
        return Polynomial::constant(ctx, Rational(num, den), ord);
      }
      return Polynomial::constant(ctx, Rational(num), ord);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      std::string name(text.substr(start, pos - start));
      int idx = ctx->index_of(name);
      if (idx < 0) {
        pos = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ctx, idx, ord);
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

Polynomial parse_poly(std::string_view text, CtxPtr ctx, MonomialOrder ord) {
  Parser p{text, 0, std::move(ctx), ord};
  Polynomial r = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return r;
}

}  // namespace depict
