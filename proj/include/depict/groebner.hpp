#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "depict/poly.hpp"

namespace depict {

/// Reduced Groebner basis: monic elements, fully auto-reduced, sorted by
/// descending leading monomial.
struct GroebnerBasis {
  std::vector<Polynomial> elements;
  MonomialOrder order;
};

GroebnerBasis reduced_groebner(const std::vector<Polynomial>& gens,
                               const MonomialOrder& ord);

/// Full remainder of f modulo B: no term of the result is divisible by any
/// leading term of B, and f - result lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& B);

/// Generator list with memoized reduced Groebner bases per monomial order.
class IdealHandle {
 public:
  IdealHandle() = default;
  IdealHandle(CtxPtr ctx, std::vector<Polynomial> gens);

  const CtxPtr& ctx() const { return ctx_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const GroebnerBasis& groebner(const MonomialOrder& ord) const;

  bool contains(const Polynomial& f) const;
  bool is_zero() const;
  bool is_unit() const;  // 1 in the ideal

 private:
  CtxPtr ctx_;
  std::vector<Polynomial> gens_;
  mutable std::mutex mu_;
  mutable std::map<MonomialOrder, GroebnerBasis> cache_;

 public:
  IdealHandle(const IdealHandle& o) : ctx_(o.ctx_), gens_(o.gens_) {
    std::scoped_lock lk(o.mu_);
    cache_ = o.cache_;
  }
  IdealHandle& operator=(const IdealHandle& o) {
    if (this != &o) {
      ctx_ = o.ctx_;
      gens_ = o.gens_;
      std::scoped_lock lk(o.mu_);
      cache_ = o.cache_;
    }
    return *this;
  }
};

bool ideal_member(const Polynomial& f, const IdealHandle& I);
bool ideal_equal(const IdealHandle& I, const IdealHandle& J);

/// Contraction I \cap k[remaining variables]; the result lives in the reduced
/// context of the retained variables (original relative order kept).
IdealHandle eliminate(const IdealHandle& I, const std::vector<int>& drop_indices);

IdealHandle intersect(const IdealHandle& I, const IdealHandle& J);

/// Saturation (I : f^inf) via the inverse-variable trick.
IdealHandle saturate(const IdealHandle& I, const Polynomial& f);

/// Krull dimension of k[vars]/I via maximal independent variable sets modulo
/// the leading term ideal under grevlex. Throws on the unit ideal.
int krull_dim(const IdealHandle& I);

/// Height of q in the domain k[vars]/P: dim(P) - dim(q). Requires P prime
/// (asserted by the caller) and P \subseteq q proper.
int height_in_domain(const IdealHandle& q, const IdealHandle& P);

/// Membership of f in the subalgebra k[algebra_gens], decided by elimination
/// on the graph ideal.
bool subalgebra_member(const Polynomial& f, const std::vector<Polynomial>& algebra_gens);

/// As subalgebra_member, but on success returns the expression of f in the
/// tag variables of tag_ctx (one tag per generator, same coefficient field).
std::optional<Polynomial> subalgebra_express(const Polynomial& f,
                                             const std::vector<Polynomial>& algebra_gens,
                                             const CtxPtr& tag_ctx);

/// Rebuild f in new_ctx, sending variable i of f's context to variable
/// var_map[i] of new_ctx.
Polynomial transplant(const Polynomial& f, const CtxPtr& new_ctx,
                      const std::vector<int>& var_map,
                      MonomialOrder ord = MonomialOrder::grevlex());

/// Substitute images[i] (polynomials over the target context) for variable i.
Polynomial substitute(const Polynomial& f, const CtxPtr& target_ctx,
                      const std::vector<Polynomial>& images);

}  // namespace depict
