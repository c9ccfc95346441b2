#include "depict/groebner.hpp"

#include <algorithm>
#include <set>

namespace depict {

namespace {

void require_ctx(const CtxPtr& a, const CtxPtr& b) {
  if (!a || !b || !a->same_as(*b)) throw error("ideal context mismatch");
}

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  const auto& ctx = *f.ctx();
  Polynomial a = f.times_term(coeff_inverse(f.leading_coeff(), ctx),
                              l.div(f.leading_monomial()));
  Polynomial b = g.times_term(coeff_inverse(g.leading_coeff(), ctx),
                              l.div(g.leading_monomial()));
  return a - b;
}

// Full division remainder against a list of nonzero polynomials in ord.
Polynomial reduce_full(Polynomial f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord) {
  Polynomial rem = Polynomial::zero(f.ctx(), ord);
  while (!f.is_zero()) {
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(f.leading_monomial())) {
        const Rational c = f.leading_coeff() * coeff_inverse(g.leading_coeff(), *f.ctx());
        f = f - g.times_term(c, f.leading_monomial().div(g.leading_monomial()));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      // move leading term to remainder
      rem = rem + Polynomial::from_terms(f.ctx(), {f.leading()}, ord);
      f = f - Polynomial::from_terms(f.ctx(), {f.leading()}, ord);
    }
  }
  return rem;
}

struct Pair {
  int i, j;
  Monomial lcm;
};

}  // namespace

GroebnerBasis reduced_groebner(const std::vector<Polynomial>& gens,
                               const MonomialOrder& ord) {
  CtxPtr ctx;
  std::vector<Polynomial> G;
  for (const auto& g : gens) {
    if (!ctx)
      ctx = g.ctx();
    else
      require_ctx(ctx, g.ctx());
    Polynomial p = g.reordered(ord);
    if (!p.is_zero()) G.push_back(p.monic());
  }
  if (!ctx) throw error("reduced_groebner: no generators with context");

  auto pair_less = [&](const Pair& a, const Pair& b) {
    auto c = compare_monomials(a.lcm, b.lcm, ord);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };

  std::vector<Pair> pending;
  auto push_pair = [&](int i, int j) {
    pending.push_back({i, j, G[i].leading_monomial().lcm(G[j].leading_monomial())});
  };
  for (int i = 0; i < (int)G.size(); ++i)
    for (int j = i + 1; j < (int)G.size(); ++j) push_pair(i, j);

  auto is_pending = [&](int a, int b) {
    for (const auto& p : pending)
      if ((p.i == a && p.j == b) || (p.i == b && p.j == a)) return true;
    return false;
  };

  while (!pending.empty()) {
    auto it = std::min_element(pending.begin(), pending.end(), pair_less);
    Pair pr = *it;
    pending.erase(it);

    // Buchberger criterion 1: coprime leading terms
    if (G[pr.i].leading_monomial().coprime(G[pr.j].leading_monomial())) continue;
    // chain criterion
    bool skip = false;
    for (int k = 0; k < (int)G.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (G[k].leading_monomial().divides(pr.lcm) && !is_pending(pr.i, k) &&
          !is_pending(pr.j, k))
        skip = true;
    }
    if (skip) continue;

    Polynomial r = reduce_full(spoly(G[pr.i], G[pr.j]), G, ord);
    if (!r.is_zero()) {
      G.push_back(r.monic());
      const int idx = (int)G.size() - 1;
      for (int i = 0; i < idx; ++i) push_pair(i, idx);
    }
  }

  // Minimize: drop elements whose leading term is divisible by another's.
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      if (G[j].leading_monomial().divides(G[i].leading_monomial())) {
        if (!(G[i].leading_monomial() == G[j].leading_monomial()) || j < i)
          redundant = true;
      }
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  // Reduce: replace each element by its remainder modulo the others.
  std::vector<Polynomial> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = others.empty() ? minimal[i] : reduce_full(minimal[i], others, ord);
    if (!r.is_zero()) reduced.push_back(r.monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare_monomials(a.leading_monomial(), b.leading_monomial(), ord) ==
           std::strong_ordering::greater;
  });
  if (reduced.empty()) reduced.push_back(Polynomial::zero(ctx, ord));
  // normalize the zero ideal to an empty basis
  if (reduced.size() == 1 && reduced[0].is_zero()) reduced.clear();
  return GroebnerBasis{std::move(reduced), ord};
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& B) {
  Polynomial g = f.reordered(B.order);
  if (B.elements.empty()) return g;
  require_ctx(f.ctx(), B.elements.front().ctx());
  return reduce_full(g, B.elements, B.order);
}

IdealHandle::IdealHandle(CtxPtr ctx, std::vector<Polynomial> gens)
    : ctx_(std::move(ctx)), gens_(std::move(gens)) {
  if (!ctx_) throw error("ideal requires a context");
  for (const auto& g : gens_) require_ctx(ctx_, g.ctx());
}

const GroebnerBasis& IdealHandle::groebner(const MonomialOrder& ord) const {
  {
    std::scoped_lock lk(mu_);
    auto it = cache_.find(ord);
    if (it != cache_.end()) return it->second;
  }
  GroebnerBasis B = gens_.empty()
                        ? GroebnerBasis{{}, ord}
                        : reduced_groebner(gens_, ord);
  std::scoped_lock lk(mu_);
  auto [it, _] = cache_.try_emplace(ord, std::move(B));
  return it->second;
}

bool IdealHandle::contains(const Polynomial& f) const {
  return normal_form(f, groebner(MonomialOrder::grevlex())).is_zero();
}

bool IdealHandle::is_zero() const {
  return groebner(MonomialOrder::grevlex()).elements.empty();
}

bool IdealHandle::is_unit() const {
  const auto& B = groebner(MonomialOrder::grevlex());
  return !B.elements.empty() && B.elements.front().is_constant() &&
         !B.elements.front().is_zero();
}

bool ideal_member(const Polynomial& f, const IdealHandle& I) { return I.contains(f); }

bool ideal_equal(const IdealHandle& I, const IdealHandle& J) {
  for (const auto& g : I.generators())
    if (!J.contains(g)) return false;
  for (const auto& g : J.generators())
    if (!I.contains(g)) return false;
  return true;
}

Polynomial transplant(const Polynomial& f, const CtxPtr& new_ctx,
                      const std::vector<int>& var_map, MonomialOrder ord) {
  std::vector<Term> ts;
  ts.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Monomial m = Monomial::one(new_ctx->arity());
    for (int i = 0; i < t.mono.arity(); ++i) {
      if (t.mono.exps[i] == 0) continue;
      const int j = var_map[i];
      if (j < 0 || j >= new_ctx->arity())
        throw error("transplant: variable not present in target context");
      m.exps[j] += t.mono.exps[i];
    }
    ts.push_back({t.coeff, m});
  }
  return Polynomial::from_terms(new_ctx, std::move(ts), ord);
}

Polynomial substitute(const Polynomial& f, const CtxPtr& target_ctx,
                      const std::vector<Polynomial>& images) {
  if ((int)images.size() != f.ctx()->arity())
    throw error("substitute: one image required per variable");
  Polynomial acc = Polynomial::zero(target_ctx);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target_ctx, t.coeff);
    for (int i = 0; i < t.mono.arity(); ++i)
      if (t.mono.exps[i] > 0) term = term * images[i].pow(t.mono.exps[i]);
    acc = acc + term;
  }
  return acc;
}

IdealHandle eliminate(const IdealHandle& I, const std::vector<int>& drop_indices) {
  const auto& ctx = I.ctx();
  const int n = ctx->arity();
  std::vector<bool> drop(n, false);
  for (int d : drop_indices) {
    if (d < 0 || d >= n) throw error("eliminate: variable index out of range");
    drop[d] = true;
  }
  // permuted context: dropped variables first
  std::vector<std::string> perm_names;
  std::vector<int> var_map(n, -1);
  std::vector<int> kept;
  for (int i = 0; i < n; ++i)
    if (drop[i]) {
      var_map[i] = (int)perm_names.size();
      perm_names.push_back(ctx->names[i]);
    }
  const int split = (int)perm_names.size();
  for (int i = 0; i < n; ++i)
    if (!drop[i]) {
      var_map[i] = (int)perm_names.size();
      perm_names.push_back(ctx->names[i]);
      kept.push_back(i);
    }
  if (kept.empty()) throw error("eliminate: cannot drop every variable");

  CtxPtr perm_ctx = VarContext::make(perm_names, ctx->modulus);
  const MonomialOrder ord = MonomialOrder::block(split);
  std::vector<Polynomial> perm_gens;
  for (const auto& g : I.generators())
    perm_gens.push_back(transplant(g, perm_ctx, var_map, ord));

  const GroebnerBasis B = perm_gens.empty() ? GroebnerBasis{{}, ord}
                                            : reduced_groebner(perm_gens, ord);

  std::vector<std::string> kept_names;
  for (int i : kept) kept_names.push_back(ctx->names[i]);
  CtxPtr kept_ctx = VarContext::make(kept_names, ctx->modulus);
  std::vector<int> down_map(perm_ctx->arity(), -1);
  for (int k = 0; k < (int)kept.size(); ++k) down_map[split + k] = k;

  std::vector<Polynomial> out;
  for (const auto& e : B.elements) {
    bool free_of_dropped = true;
    for (const auto& t : e.terms())
      for (int i = 0; i < split && free_of_dropped; ++i)
        if (t.mono.exps[i] > 0) free_of_dropped = false;
    if (free_of_dropped) out.push_back(transplant(e, kept_ctx, down_map));
  }
  return IdealHandle(kept_ctx, std::move(out));
}

namespace {

// Context extended by one fresh auxiliary variable in front.
std::pair<CtxPtr, std::string> extend_ctx_front(const CtxPtr& ctx) {
  std::string aux = "_t";
  while (ctx->index_of(aux) >= 0) aux += "_";
  std::vector<std::string> names;
  names.push_back(aux);
  names.insert(names.end(), ctx->names.begin(), ctx->names.end());
  return {VarContext::make(names, ctx->modulus), aux};
}

std::vector<int> shift_map(int n) {
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = i + 1;
  return m;
}

}  // namespace

IdealHandle intersect(const IdealHandle& I, const IdealHandle& J) {
  require_ctx(I.ctx(), J.ctx());
  auto [ext, aux] = extend_ctx_front(I.ctx());
  const auto up = shift_map(I.ctx()->arity());
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(t * transplant(f, ext, up));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * transplant(g, ext, up));
  IdealHandle aux_ideal(ext, std::move(gens));
  IdealHandle down = eliminate(aux_ideal, {0});
  // eliminate() returns the ideal over the retained variables, which form
  // exactly the original context.
  std::vector<int> id_map(I.ctx()->arity());
  for (size_t i = 0; i < id_map.size(); ++i) id_map[i] = (int)i;
  std::vector<Polynomial> out;
  for (const auto& f : down.generators()) out.push_back(transplant(f, I.ctx(), id_map));
  return IdealHandle(I.ctx(), std::move(out));
}

IdealHandle saturate(const IdealHandle& I, const Polynomial& f) {
  require_ctx(I.ctx(), f.ctx());
  if (f.is_zero()) throw error("saturate: f must be nonzero");
  auto [ext, aux] = extend_ctx_front(I.ctx());
  const auto up = shift_map(I.ctx()->arity());
  Polynomial w = Polynomial::variable(ext, 0);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(transplant(g, ext, up));
  gens.push_back(w * transplant(f, ext, up) - Polynomial::constant(ext, 1));
  IdealHandle aux_ideal(ext, std::move(gens));
  IdealHandle down = eliminate(aux_ideal, {0});
  std::vector<int> id_map(I.ctx()->arity());
  for (size_t i = 0; i < id_map.size(); ++i) id_map[i] = (int)i;
  std::vector<Polynomial> out;
  for (const auto& g : down.generators()) out.push_back(transplant(g, I.ctx(), id_map));
  return IdealHandle(I.ctx(), std::move(out));
}

int krull_dim(const IdealHandle& I) {
  if (I.is_unit()) throw error("krull_dim: unit ideal");
  const auto& B = I.groebner(MonomialOrder::grevlex());
  const int n = I.ctx()->arity();
  if (n > 24) throw error("krull_dim: too many variables");
  std::vector<std::uint32_t> supports;
  for (const auto& e : B.elements) {
    std::uint32_t mask = 0;
    for (int i = 0; i < n; ++i)
      if (e.leading_monomial().exps[i] > 0) mask |= 1u << i;
    supports.push_back(mask);
  }
  int best = 0;
  for (std::uint32_t sub = 0; sub < (1u << n); ++sub) {
    bool independent = true;
    for (auto m : supports)
      if ((m & ~sub) == 0) {
        independent = false;
        break;
      }
    if (independent) best = std::max(best, __builtin_popcount(sub));
  }
  return best;
}

int height_in_domain(const IdealHandle& q, const IdealHandle& P) {
  require_ctx(q.ctx(), P.ctx());
  if (q.is_unit()) throw error("height_in_domain: q is the unit ideal");
  for (const auto& g : P.generators())
    if (!q.contains(g)) throw error("height_in_domain: q does not contain P");
  return krull_dim(P) - krull_dim(q);
}

namespace {

// Graph-ideal setup shared by subalgebra membership and expression.
struct SubalgebraGraph {
  CtxPtr ext;      // [original vars | tags]
  int n;           // number of original vars
  GroebnerBasis B; // graph ideal basis under the elimination order
};

SubalgebraGraph subalgebra_graph(const CtxPtr& ctx,
                                 const std::vector<Polynomial>& gens) {
  const int n = ctx->arity();
  std::vector<std::string> names = ctx->names;
  for (size_t i = 0; i < gens.size(); ++i) {
    std::string tag = "_g" + std::to_string(i + 1);
    while (std::find(names.begin(), names.end(), tag) != names.end()) tag += "_";
    names.push_back(tag);
  }
  CtxPtr ext = VarContext::make(names, ctx->modulus);
  const MonomialOrder ord = MonomialOrder::block(n);
  std::vector<int> up(n);
  for (int i = 0; i < n; ++i) up[i] = i;
  std::vector<Polynomial> graph;
  for (size_t i = 0; i < gens.size(); ++i)
    graph.push_back(transplant(gens[i], ext, up, ord) -
                    Polynomial::variable(ext, n + (int)i, ord));
  return {ext, n, reduced_groebner(graph, ord)};
}

}  // namespace

bool subalgebra_member(const Polynomial& f, const std::vector<Polynomial>& algebra_gens) {
  if (algebra_gens.empty()) return f.is_constant();
  const auto g = subalgebra_graph(f.ctx(), algebra_gens);
  std::vector<int> up(g.n);
  for (int i = 0; i < g.n; ++i) up[i] = i;
  Polynomial r = normal_form(transplant(f, g.ext, up, g.B.order), g.B);
  for (const auto& t : r.terms())
    for (int i = 0; i < g.n; ++i)
      if (t.mono.exps[i] > 0) return false;
  return true;
}

std::optional<Polynomial> subalgebra_express(const Polynomial& f,
                                             const std::vector<Polynomial>& algebra_gens,
                                             const CtxPtr& tag_ctx) {
  if ((int)algebra_gens.size() != tag_ctx->arity())
    throw error("subalgebra_express: one tag variable per generator required");
  if (algebra_gens.empty()) return std::nullopt;
  const auto g = subalgebra_graph(f.ctx(), algebra_gens);
  std::vector<int> up(g.n);
  for (int i = 0; i < g.n; ++i) up[i] = i;
  Polynomial r = normal_form(transplant(f, g.ext, up, g.B.order), g.B);
  for (const auto& t : r.terms())
    for (int i = 0; i < g.n; ++i)
      if (t.mono.exps[i] > 0) return std::nullopt;
  std::vector<int> down(g.ext->arity(), -1);
  for (int i = 0; i < tag_ctx->arity(); ++i) down[g.n + i] = i;
  return transplant(r, tag_ctx, down);
}

}  // namespace depict
