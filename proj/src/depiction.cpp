#include "depict/depiction.hpp"

#include <algorithm>
#include <climits>

namespace depict {

namespace {

AffineSemigroup attached_semigroup(const AffineDomain& S) {
  const auto& d = *S.semigroup();
  return AffineSemigroup::make(d.rank, d.gens);
}

bool is_single_variable(const Polynomial& g) {
  if (g.terms().size() != 1) return false;
  return g.leading_monomial().degree() == 1;
}

/// Minimal primes over an ideal of the ring, in the cases we can decide
/// combinatorially: a monomial reduced basis (minimal variable covers of the
/// supports) or a zero-dimensional ideal with linear reduced basis (the ideal
/// is itself maximal). nullopt when neither case applies.
std::optional<std::vector<RingIdeal>> decidable_minimal_primes(const RingIdeal& E) {
  const GroebnerBasis& B = E.lift.groebner(MonomialOrder::grevlex());
  bool monomial = !B.elements.empty();
  for (const auto& g : B.elements)
    if (g.terms().size() != 1) monomial = false;
  const CtxPtr& ctx = E.ring->ctx();
  if (monomial) {
    std::vector<std::vector<int>> supports;
    std::vector<int> used;
    for (const auto& g : B.elements) {
      std::vector<int> sup;
      for (int j = 0; j < ctx->arity(); ++j)
        if (g.leading_monomial().exps[j] > 0) sup.push_back(j);
      supports.push_back(sup);
      for (int j : sup)
        if (std::find(used.begin(), used.end(), j) == used.end()) used.push_back(j);
    }
    if (used.size() > 20) return std::nullopt;
    std::vector<std::uint32_t> hitters;
    for (std::uint32_t mask = 0; mask < (1u << used.size()); ++mask) {
      bool hits = true;
      for (const auto& sup : supports) {
        bool h = false;
        for (int j : sup) {
          int pos = (int)(std::find(used.begin(), used.end(), j) - used.begin());
          if (mask >> pos & 1) h = true;
        }
        if (!h) { hits = false; break; }
      }
      if (hits) hitters.push_back(mask);
    }
    std::vector<RingIdeal> mins;
    for (std::uint32_t m : hitters) {
      bool minimal = true;
      for (std::uint32_t o : hitters)
        if (o != m && (o & m) == o) minimal = false;
      if (!minimal) continue;
      std::vector<Polynomial> gens;
      for (size_t pos = 0; pos < used.size(); ++pos)
        if (m >> pos & 1) gens.push_back(Polynomial::variable(ctx, used[pos]));
      mins.push_back(RingIdeal::make(E.ring, std::move(gens)));
    }
    return mins;
  }
  // zero-dimensional with linear reduced basis: the ideal is maximal, hence
  // its own unique minimal prime
  bool linear = !B.elements.empty();
  for (const auto& g : B.elements)
    if (g.total_degree() > 1) linear = false;
  if (linear && krull_dim(E.lift) == 0) return std::vector<RingIdeal>{E};
  return std::nullopt;
}

}  // namespace

SubringKplusI::SubringKplusI(DomainPtr ambient, std::vector<Polynomial> ideal_gens)
    : ambient_(std::move(ambient)),
      ideal_(RingIdeal::make(ambient_, std::move(ideal_gens))) {
  bool nonzero = false;
  for (const auto& g : ideal_.lift.generators())
    if (!ambient_->defining().contains(g)) nonzero = true;
  if (!nonzero) throw error("the ideal defining R = k + I must be nonzero");
  if (!ideal_.is_proper()) throw error("the ideal defining R = k + I must be proper");
}

bool in_Z(const ContractedPrime& q) { return !q.smeared; }

DepictionScene::DepictionScene(SubringKplusI R, std::vector<DepictionEntry> depictions)
    : R_(std::move(R)), depictions_(std::move(depictions)) {
  bool has_ambient = false;
  for (const auto& d : depictions_)
    if (d.rel == DepictionEntry::Rel::ambient) has_ambient = true;
  if (!has_ambient)
    depictions_.insert(depictions_.begin(),
                       DepictionEntry{"S", R_.ambient(), DepictionEntry::Rel::ambient,
                                      {}, ""});
  const CtxPtr& actx = R_.ambient()->ctx();
  for (const auto& d : depictions_) {
    if (!d.ring && d.rel != DepictionEntry::Rel::literature)
      throw error("depiction entry without a ring: " + d.name);
    switch (d.rel) {
      case DepictionEntry::Rel::ambient:
        if (!d.ring->ctx()->same_as(*actx))
          throw error("ambient entry does not match R's ambient ring: " + d.name);
        break;
      case DepictionEntry::Rel::overring: {
        if ((int)d.inclusion_images.size() != actx->arity())
          throw error("overring entry needs one image per ambient variable: " + d.name);
        RingInclusion inc{R_.ambient(), d.ring, d.inclusion_images};
        if (!check_inclusion(inc))
          throw error("declared overring does not embed the ambient ring: " + d.name);
        break;
      }
      case DepictionEntry::Rel::subring: {
        if (!d.ring->realization())
          throw error("subring entry needs a realization: " + d.name);
        if (!d.ring->realization()->ambient_ctx->same_as(*actx))
          throw error("subring realization lives in a different ambient ring: " + d.name);
        RingInclusion inc{d.ring, R_.ambient(), d.ring->realization()->images};
        if (!check_inclusion(inc))
          throw error("declared realization does not embed the subring: " + d.name);
        break;
      }
      case DepictionEntry::Rel::literature:
        break;
    }
  }
}

const DepictionEntry& DepictionScene::ambient_entry() const {
  for (const auto& d : depictions_)
    if (d.rel == DepictionEntry::Rel::ambient) return d;
  throw error("no ambient depiction entry");  // unreachable: ctor inserts one
}

const DepictionEntry* DepictionScene::find(const std::string& name) const {
  for (const auto& d : depictions_)
    if (d.name == name) return &d;
  return nullptr;
}

std::optional<RingIdeal> DepictionScene::ideal_in(const DepictionEntry& dep) const {
  switch (dep.rel) {
    case DepictionEntry::Rel::literature:
      return std::nullopt;
    case DepictionEntry::Rel::ambient:
      return RingIdeal::make(dep.ring, R_.ideal().lift.generators());
    case DepictionEntry::Rel::overring:
      return extend_ideal(R_.ideal(),
                          RingInclusion{R_.ambient(), dep.ring, dep.inclusion_images});
    case DepictionEntry::Rel::subring:
      return contract_ideal(
          R_.ideal(),
          RingInclusion{dep.ring, R_.ambient(), dep.ring->realization()->images});
  }
  throw error("unknown depiction relation");
}

bool DepictionScene::check_depiction(const DepictionEntry& dep) const {
  auto I = ideal_in(dep);
  if (!I) throw error("literature depiction is declared, not computed: " + dep.name);
  if (!I->is_proper()) throw error("I extends to the unit ideal in " + dep.name);
  return quotient_dim(*I) >= 1;
}

LocusDescriptor DepictionScene::u_locus(const DepictionEntry& dep) const {
  // The descriptor only needs the extended ideal to be proper; overrings can
  // collapse I to a maximal ideal and still depict R faithfully off Z(I).
  auto I = ideal_in(dep);
  if (!I) throw error("literature depiction is declared, not computed: " + dep.name);
  if (!I->is_proper()) throw error("I extends to the unit ideal in " + dep.name);
  return LocusDescriptor{LocusDescriptor::Kind::open_complement, *I};
}

bool DepictionScene::noetherian_codim1(const DepictionEntry& dep) const {
  auto I = ideal_in(dep);
  if (!I) throw error("literature depiction is declared, not computed: " + dep.name);
  return ideal_height(*I) >= 2;
}

ContractedPrime DepictionScene::contracted_prime(
    const DepictionEntry& dep, std::vector<Polynomial> prime_gens) const {
  auto I = ideal_in(dep);
  if (!I) throw error("literature depiction is declared, not computed: " + dep.name);
  Primality prim = Primality::asserted;
  if (dep.ring->is_polynomial_ring()) {
    bool vars_only = !prime_gens.empty();
    for (const auto& g : prime_gens)
      if (!is_single_variable(g)) vars_only = false;
    if (vars_only || prime_gens.empty()) prim = Primality::verified_monomial;
  }
  ContractedPrime p;
  p.witness = RingIdeal::make(dep.ring, std::move(prime_gens));
  p.primality = prim;
  if (!p.witness.is_proper()) throw error("witness prime is the unit ideal");
  p.smeared = true;
  for (const auto& g : I->lift.generators())
    if (!p.witness.lift.contains(g)) p.smeared = false;
  return p;
}

ContractedPrime DepictionScene::smeared_prime(const DepictionEntry& dep) const {
  auto I = ideal_in(dep);
  if (!I) throw error("literature depiction is declared, not computed: " + dep.name);
  return ContractedPrime{*I, true, Primality::asserted};
}

DepictionReport DepictionScene::maximal_depiction(const DepictionEntry& base) const {
  DepictionReport rep;
  auto I = ideal_in(base);
  if (!I) throw error("literature depiction is declared, not computed: " + base.name);
  rep.is_depiction = quotient_dim(*I) >= 1;
  if (!rep.is_depiction) {
    rep.note = "not a depiction: the extended ideal has a zero-dimensional quotient";
    return rep;
  }
  rep.codim1 = ideal_height(*I) >= 2;
  if (!rep.codim1) {
    rep.note =
        "noetherian-in-codimension-1 criterion fails; "
        "maximal-depiction machinery inapplicable";
    return rep;
  }
  const AffineDomain& S = *base.ring;
  bool normal = S.is_polynomial_ring() ||
                (S.semigroup() && is_normal_semigroup(attached_semigroup(S)));
  if (normal) {
    rep.T = base;
    rep.T_is_base = true;
    rep.T_saturated = true;
    return rep;
  }
  if (S.semigroup() && S.realization()) {
    AffineSemigroup sat = saturate_semigroup(attached_semigroup(S));
    auto Tdom = toric_presentation(sat, {}, S.realization()->ambient_ctx->names,
                                   S.realization()->ambient_ctx->modulus);
    if (!check_realized_inclusion(S, *Tdom))
      throw error("saturation does not contain the base ring");  // cannot happen
    DepictionEntry Te{base.name + "-normalization", Tdom,
                      DepictionEntry::Rel::subring, {}, ""};
    auto IT = ideal_in(Te);
    if (!IT || !IT->is_proper() || quotient_dim(*IT) < 1) {
      rep.note = "normalization of the base ring is not a depiction";
      return rep;
    }
    rep.T = Te;
    rep.T_saturated = true;
    return rep;
  }
  rep.normalization_unavailable = true;
  rep.note = "normalization unavailable for this presentation";
  return rep;
}

GhtResult DepictionScene::geometric_height(const ContractedPrime& p) const {
  GhtResult g;
  if (!p.smeared) {
    int h = ideal_height(p.witness);
    g.lower = g.upper = h;
    g.exact = true;
    g.justification = GhtResult::Justification::z_membership;
    return g;
  }
  DepictionReport rep = maximal_depiction(ambient_entry());
  if (rep.codim1 && rep.T) {
    int h = ideal_height(*ideal_in(*rep.T));
    g.lower = g.upper = h;
    g.exact = true;
    g.justification = GhtResult::Justification::codim1_T;
    return g;
  }
  int ub = INT_MAX;
  for (const auto& d : depictions_) {
    auto I = ideal_in(d);
    if (I) ub = std::min(ub, ideal_height(*I));
  }
  g.lower = 1;
  g.upper = ub;
  g.exact = (ub == 1);
  g.justification = GhtResult::Justification::bounds_only;
  return g;
}

GhtResult DepictionScene::gdim_point(const ContractedPrime& p) const {
  GhtResult h = geometric_height(p);
  int dimR = R_.ambient()->dim();  // dim R = dim S
  GhtResult g;
  g.lower = dimR - h.upper;
  g.upper = dimR - h.lower;
  g.exact = h.exact;
  g.justification = h.justification;
  return g;
}

bool DepictionScene::contraction_equal(const ContractedPrime& a,
                                       const ContractedPrime& b) const {
  if (a.smeared && b.smeared) return true;  // both contract to I
  if (a.smeared != b.smeared) return false;
  if (!a.witness.ring->ctx()->same_as(*b.witness.ring->ctx()))
    throw error("witness primes live in different rings; no identification supplied");
  return ring_ideal_equal(a.witness, b.witness);
}

FiberResult DepictionScene::fiber_over(const ContractedPrime& p,
                                       const DepictionEntry& target) const {
  auto IT = ideal_in(target);
  if (!IT) throw error("literature depiction is declared, not computed: " + target.name);
  FiberResult r;
  if (p.smeared) {
    r.smeared = true;
    r.set_ideal = *IT;
    if (auto mins = decidable_minimal_primes(*IT); mins && mins->size() == 1) {
      r.minimal_element = (*mins)[0];
      r.unique_minimal = true;
    }
    return r;
  }
  const CtxPtr& actx = R_.ambient()->ctx();
  if (p.witness.ring->ctx()->same_as(*target.ring->ctx())) {
    r.set_ideal = p.witness;
    r.minimal_element = p.witness;
    r.unique_minimal = true;
    return r;
  }
  if (!p.witness.ring->ctx()->same_as(*actx))
    throw error("fiber computation needs the witness prime over the ambient ring");
  RingIdeal lift;
  switch (target.rel) {
    case DepictionEntry::Rel::overring: {
      RingInclusion inc{R_.ambient(), target.ring, target.inclusion_images};
      lift = extend_ideal(p.witness, inc);
      if (!lift.is_proper() ||
          !ring_ideal_equal(contract_ideal(lift, inc), p.witness))
        throw error("no lift of the prime exists in the target depiction");
      break;
    }
    case DepictionEntry::Rel::subring: {
      RingInclusion inc{target.ring, R_.ambient(), target.ring->realization()->images};
      lift = contract_ideal(p.witness, inc);
      bool smeared = true;
      for (const auto& g : IT->lift.generators())
        if (!lift.lift.contains(g)) smeared = false;
      if (!lift.is_proper() || smeared)
        throw error("no lift of the prime exists in the target depiction");
      break;
    }
    default:
      lift = p.witness;
      break;
  }
  r.set_ideal = lift;
  r.minimal_element = lift;
  r.unique_minimal = true;
  return r;
}

bool DepictionScene::is_saturated_on(
    const DepictionEntry& target,
    const std::vector<std::vector<Polynomial>>& test_primes) const {
  auto IT = ideal_in(target);
  if (!IT) throw error("literature depiction is declared, not computed: " + target.name);
  auto minimal = decidable_minimal_primes(*IT);
  for (const auto& gens : test_primes) {
    RingIdeal t = RingIdeal::make(target.ring, gens);
    if (!t.is_proper()) throw error("test prime is the unit ideal");
    bool smeared = true;
    for (const auto& g : IT->lift.generators())
      if (!t.lift.contains(g)) smeared = false;
    if (!smeared) continue;  // lies in the faithful locus; heights transfer
    if (minimal) {
      bool is_min = false;
      for (const auto& m : *minimal)
        if (ring_ideal_equal(t, m)) is_min = true;
      if (!is_min) throw error("test prime is not minimal over the extended ideal");
    }
    ContractedPrime p{t, true, Primality::asserted};
    GhtResult g = geometric_height(p);
    if (!g.exact || g.lower != ideal_height(t)) return false;
  }
  return true;
}

}  // namespace depict
