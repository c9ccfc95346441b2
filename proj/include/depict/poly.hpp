#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace depict {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Variable context: an ordered list of distinct variable names plus the
/// coefficient field (rationals, or Z/p when a modulus is set).
struct VarContext;
using CtxPtr = std::shared_ptr<const VarContext>;

struct VarContext {
  std::vector<std::string> names;
  std::optional<std::uint64_t> modulus;  // prime field Z/p when set

  static CtxPtr make(std::vector<std::string> names,
                     std::optional<std::uint64_t> modulus = std::nullopt);

  int arity() const { return static_cast<int>(names.size()); }
  int index_of(std::string_view name) const;  // -1 if absent
  bool same_as(const VarContext& other) const {
    return names == other.names && modulus == other.modulus;
  }
};

/// Exponent vector; length always matches the arity of its context.
struct Monomial {
  std::vector<std::uint32_t> exps;

  static Monomial one(int arity) { return Monomial{std::vector<std::uint32_t>(arity, 0)}; }
  int arity() const { return static_cast<int>(exps.size()); }
  std::uint64_t degree() const;
  bool is_one() const;
  Monomial times(const Monomial& other) const;  // throws on exponent overflow
  bool divides(const Monomial& other) const;
  Monomial div(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  bool operator==(const Monomial& other) const = default;
};

struct MonomialOrder {
  enum class Kind { lex, grevlex, block };
  Kind kind = Kind::grevlex;
  int split = 0;  // block order: size of the (graded) leading block

  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
  static MonomialOrder block(int split) { return {Kind::block, split}; }
  auto operator<=>(const MonomialOrder&) const = default;
};

/// Total, multiplicative comparison of two monomials of equal arity.
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       const MonomialOrder& ord);

struct Term {
  Rational coeff;
  Monomial mono;
};

/// Canonical multivariate polynomial: nonzero coefficients only, terms
/// strictly descending under the stored order.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial zero(CtxPtr ctx, MonomialOrder ord = MonomialOrder::grevlex());
  static Polynomial constant(CtxPtr ctx, const Rational& c,
                             MonomialOrder ord = MonomialOrder::grevlex());
  static Polynomial variable(CtxPtr ctx, int index,
                             MonomialOrder ord = MonomialOrder::grevlex());
  static Polynomial from_terms(CtxPtr ctx, std::vector<Term> terms,
                               MonomialOrder ord = MonomialOrder::grevlex());

  const CtxPtr& ctx() const { return ctx_; }
  const MonomialOrder& order() const { return ord_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  const Term& leading() const;  // throws on zero polynomial
  const Monomial& leading_monomial() const { return leading().mono; }
  const Rational& leading_coeff() const { return leading().coeff; }
  std::uint64_t total_degree() const;  // 0 for the zero polynomial

  Polynomial reordered(MonomialOrder ord) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Rational& c, const Monomial& m) const;
  Polynomial pow(std::uint32_t n) const;
  Polynomial monic() const;  // divide by leading coefficient

  /// Order-independent equality (same context value, same term multiset).
  bool equals(const Polynomial& other) const;

  std::string to_string() const;

 private:
  CtxPtr ctx_;
  MonomialOrder ord_ = MonomialOrder::grevlex();
  std::vector<Term> terms_;

  void normalize();  // sort, combine, drop zeros, reduce mod p
};

/// Reduce a coefficient into canonical form for the context's field.
Rational reduce_coeff(const Rational& c, const VarContext& ctx);
/// Multiplicative inverse in the context's field (modular inverse under Z/p).
Rational coeff_inverse(const Rational& c, const VarContext& ctx);

/// Parse a polynomial expression: variables, integer and a/b coefficients,
/// operators + - * ^, parentheses. Throws error with position on bad input.
Polynomial parse_poly(std::string_view text, CtxPtr ctx,
                      MonomialOrder ord = MonomialOrder::grevlex());

}  // namespace depict
