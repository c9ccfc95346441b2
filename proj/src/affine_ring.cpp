#include "depict/affine_ring.hpp"

namespace depict {

DomainPtr AffineDomain::polynomial_ring(CtxPtr ctx) {
  auto d = std::shared_ptr<AffineDomain>(new AffineDomain());
  d->ctx_ = ctx;
  d->defining_ = IdealHandle(ctx, {});
  d->primality_ = Primality::verified_monomial;  // zero ideal
  Realization r;
  r.ambient_ctx = ctx;
  for (int i = 0; i < ctx->arity(); ++i)
    r.images.push_back(Polynomial::variable(ctx, i));
  d->realization_ = std::move(r);
  return d;
}

DomainPtr AffineDomain::presented(CtxPtr ctx, std::vector<Polynomial> defining_gens,
                                  Primality primality,
                                  std::optional<Realization> realization,
                                  std::optional<SemigroupData> semigroup) {
  auto d = std::shared_ptr<AffineDomain>(new AffineDomain());
  d->ctx_ = ctx;
  d->defining_ = IdealHandle(ctx, std::move(defining_gens));
  if (d->defining_.is_unit()) throw error("defining ideal is the unit ideal");
  d->primality_ = primality;
  if (primality == Primality::verified_monomial) {
    for (const auto& g : d->defining_.generators()) {
      bool var = g.terms().size() == 1 && g.terms()[0].mono.degree() == 1;
      if (!var && !g.is_zero())
        throw error("verified-monomial primality requires variable generators");
    }
  }
  if (realization) {
    if ((int)realization->images.size() != ctx->arity())
      throw error("realization must map every presentation variable");
  }
  d->realization_ = std::move(realization);
  d->semigroup_ = std::move(semigroup);
  return d;
}

int AffineDomain::dim() const {
  {
    std::scoped_lock lk(mu_);
    if (dim_cache_) return *dim_cache_;
  }
  int d = krull_dim(defining_);
  std::scoped_lock lk(mu_);
  dim_cache_ = d;
  return d;
}

RingIdeal RingIdeal::make(DomainPtr ring, std::vector<Polynomial> gens) {
  if (!ring) throw error("RingIdeal requires a ring");
  for (const auto& p : ring->defining().generators()) gens.push_back(p);
  RingIdeal r{ring, IdealHandle(ring->ctx(), std::move(gens))};
  return r;
}

bool RingIdeal::contains_ring_ideal() const {
  for (const auto& p : ring->defining().generators())
    if (!lift.contains(p)) return false;
  return true;
}

int ring_dim(const AffineDomain& S) { return S.dim(); }

int quotient_dim(const RingIdeal& q) { return krull_dim(q.lift); }

int ideal_height(const RingIdeal& q) {
  return height_in_domain(q.lift, q.ring->defining());
}

bool ring_ideal_equal(const RingIdeal& a, const RingIdeal& b) {
  if (!a.ring->ctx()->same_as(*b.ring->ctx())) return false;
  return ideal_equal(a.lift, b.lift);
}

namespace {

// Combined context [big vars | small vars]; names uniquified if they clash.
struct GraphSetup {
  CtxPtr combined;
  int nbig;
  std::vector<int> big_up;    // big ctx index -> combined index
  std::vector<int> small_up;  // small ctx index -> combined index
};

GraphSetup graph_setup(const CtxPtr& big, const CtxPtr& small) {
  std::vector<std::string> names;
  for (const auto& n : big->names) names.push_back(n);
  for (const auto& n : small->names) {
    std::string nn = n;
    while (std::find(names.begin(), names.end(), nn) != names.end()) nn = "s_" + nn;
    names.push_back(nn);
  }
  GraphSetup g;
  g.combined = VarContext::make(names, big->modulus);
  g.nbig = big->arity();
  for (int i = 0; i < big->arity(); ++i) g.big_up.push_back(i);
  for (int i = 0; i < small->arity(); ++i) g.small_up.push_back(g.nbig + i);
  return g;
}

// Preimage of J (ideal of big, lift including P_big) in small's presentation
// ring under the variable-image map.
IdealHandle preimage_ideal(const IdealHandle& J, const CtxPtr& big_ctx,
                           const CtxPtr& small_ctx,
                           const std::vector<Polynomial>& images) {
  if ((int)images.size() != small_ctx->arity())
    throw error("inclusion needs one image per variable of the small ring");
  auto g = graph_setup(big_ctx, small_ctx);
  std::vector<Polynomial> gens;
  for (const auto& f : J.generators())
    gens.push_back(transplant(f, g.combined, g.big_up));
  for (int i = 0; i < small_ctx->arity(); ++i)
    gens.push_back(Polynomial::variable(g.combined, g.small_up[i]) -
                   transplant(images[i], g.combined, g.big_up));
  IdealHandle graph(g.combined, std::move(gens));
  std::vector<int> drop;
  for (int i = 0; i < g.nbig; ++i) drop.push_back(i);
  IdealHandle down = eliminate(graph, drop);
  // rename the (possibly uniquified) small variables back
  std::vector<int> id(small_ctx->arity());
  for (size_t i = 0; i < id.size(); ++i) id[i] = (int)i;
  std::vector<Polynomial> out;
  for (const auto& f : down.generators())
    out.push_back(transplant(f, small_ctx, id));
  return IdealHandle(small_ctx, std::move(out));
}

}  // namespace

RingIdeal contract_ideal(const RingIdeal& J, const RingInclusion& inc) {
  if (J.ring.get() != inc.big.get() && !J.ring->ctx()->same_as(*inc.big->ctx()))
    throw error("contract_ideal: ideal does not live in the big ring");
  IdealHandle pre = preimage_ideal(J.lift, inc.big->ctx(), inc.small->ctx(), inc.images);
  std::vector<Polynomial> gens = pre.generators();
  return RingIdeal::make(inc.small, std::move(gens));
}

RingIdeal extend_ideal(const RingIdeal& J, const RingInclusion& inc) {
  if (J.ring.get() != inc.small.get() && !J.ring->ctx()->same_as(*inc.small->ctx()))
    throw error("extend_ideal: ideal does not live in the small ring");
  std::vector<Polynomial> gens;
  for (const auto& f : J.lift.generators())
    gens.push_back(substitute(f, inc.big->ctx(), inc.images));
  return RingIdeal::make(inc.big, std::move(gens));
}

IdealHandle inclusion_kernel(const RingInclusion& inc) {
  return preimage_ideal(inc.big->defining(), inc.big->ctx(), inc.small->ctx(),
                        inc.images);
}

bool check_inclusion(const RingInclusion& inc) {
  IdealHandle ker = inclusion_kernel(inc);
  return ideal_equal(ker, inc.small->defining());
}

bool check_realized_inclusion(const AffineDomain& small, const AffineDomain& big) {
  if (!small.realization() || !big.realization())
    throw error("check_realized_inclusion requires realizations on both rings");
  const auto& rs = *small.realization();
  const auto& rb = *big.realization();
  if (!rs.ambient_ctx->same_as(*rb.ambient_ctx))
    throw error("realizations live over different ambient rings");
  for (const auto& g : rs.images)
    if (!subalgebra_member(g, rb.images)) return false;
  // presentation kernel of small matches its defining ideal
  IdealHandle ker =
      preimage_ideal(IdealHandle(rs.ambient_ctx, {}), rs.ambient_ctx,
                     small.ctx(), rs.images);
  return ideal_equal(ker, small.defining());
}

}  // namespace depict
