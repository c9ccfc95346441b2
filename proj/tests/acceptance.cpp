// Acceptance suite: one pass/fail line per criterion, exit nonzero on any
// failure. Each criterion is independent; a thrown exception fails only the
// criterion that raised it.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "depict/scenario.hpp"
#include "oracles.hpp"

using namespace depict;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int n, const std::string& what, const std::function<void()>& body) {
  auto t0 = Clock::now();
  std::string verdict = "PASS";
  std::string detail;
  try {
    body();
  } catch (const std::exception& e) {
    verdict = "FAIL";
    detail = std::string(" (") + e.what() + ")";
    ++failures;
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::ostringstream line;
  line << "criterion " << n << ": " << verdict << " - " << what << " ["
       << secs << "s]" << detail;
  std::cout << line.str() << std::endl;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw error(msg);
}

const std::vector<std::vector<long long>> kS2 = {
    {1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
const std::vector<std::vector<long long>> kS3 = {
    {1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 0, 2}, {0, 1, 2}, {0, 0, 3}};

DepictionScene family_scene() {
  auto S1 = AffineDomain::polynomial_ring(VarContext::make({"x", "y", "z"}));
  auto S2 = toric_presentation(AffineSemigroup::make(3, kS2),
                               {"x", "y", "a", "b", "c"}, {"x", "y", "z"});
  auto S3 = toric_presentation(AffineSemigroup::make(3, kS3),
                               {"x", "y", "a", "b", "c", "d", "e"}, {"x", "y", "z"});
  SubringKplusI R(S1, {parse_poly("x", S1->ctx()), parse_poly("y", S1->ctx())});
  return DepictionScene(
      R, {{"S_1", S1, DepictionEntry::Rel::ambient, {}, ""},
          {"S_2", S2, DepictionEntry::Rel::subring, {}, ""},
          {"S_3", S3, DepictionEntry::Rel::subring, {}, ""}});
}

DepictionScene localization_scene() {
  auto S = AffineDomain::polynomial_ring(VarContext::make({"x", "y"}));
  auto tctx = VarContext::make({"x", "y", "w"});
  auto T = AffineDomain::presented(tctx, {parse_poly("x*w - 1", tctx)},
                                   Primality::asserted);
  SubringKplusI R(S, {parse_poly("x^2 - x", S->ctx()), parse_poly("x*y", S->ctx())});
  return DepictionScene(
      R, {{"S", S, DepictionEntry::Rel::ambient, {}, ""},
          {"T", T, DepictionEntry::Rel::overring,
           {parse_poly("x", tctx), parse_poly("y", tctx)}, ""}});
}

bool spolys_reduce_to_zero(const GroebnerBasis& B) {
  for (size_t i = 0; i < B.elements.size(); ++i)
    for (size_t j = i + 1; j < B.elements.size(); ++j) {
      const Polynomial &f = B.elements[i], &g = B.elements[j];
      Monomial l = f.leading_monomial().lcm(g.leading_monomial());
      Polynomial s =
          f.times_term(coeff_inverse(f.leading_coeff(), *f.ctx()),
                       l.div(f.leading_monomial())) -
          g.times_term(coeff_inverse(g.leading_coeff(), *g.ctx()),
                       l.div(g.leading_monomial()));
      if (!normal_form(s, B).is_zero()) return false;
    }
  return true;
}

}  // namespace

int main() {
  criterion(1, "maximal depiction of the monomial-algebra family", [] {
    auto t0 = Clock::now();
    auto scene = family_scene();
    for (const auto* name : {"S_1", "S_2", "S_3"}) {
      const auto& e = *scene.find(name);
      auto rep = scene.maximal_depiction(e);
      require(rep.codim1, std::string(name) + ": codim1 should hold");
      require(rep.T.has_value(), std::string(name) + ": no T computed");
      const AffineDomain& T = *rep.T->ring;
      require(T.ctx()->arity() == 3 && T.defining().generators().empty(),
              std::string(name) + ": T is not a polynomial ring in 3 variables");
      require(T.realization().has_value(), "T has no realization");
      std::vector<std::string> imgs;
      for (const auto& f : T.realization()->images) imgs.push_back(f.to_string());
      std::sort(imgs.begin(), imgs.end());
      require(imgs == std::vector<std::string>{"x", "y", "z"},
              std::string(name) + ": realized generators differ from {x,y,z}");
    }
    auto g = scene.gdim_point(scene.smeared_prime(scene.ambient_entry()));
    require(g.exact && g.value() == 1, "gdim of the smeared prime is not 1");
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    require(secs < 10.0, "runtime budget of 10s exceeded");
  });

  criterion(2, "principal monomial ideal in three variables", [] {
    auto ctx = VarContext::make({"x", "y", "z"});
    auto S = AffineDomain::polynomial_ring(ctx);
    SubringKplusI R(S, {parse_poly("x*y", ctx)});
    DepictionScene scene(R, {});
    require(!scene.noetherian_codim1(scene.ambient_entry()),
            "codim1 should fail for a principal ideal");
    require(scene.check_depiction(scene.ambient_entry()),
            "the ambient ring should depict R");
  });

  criterion(3, "localization overring: glued point, bounds-only height", [] {
    auto scene = localization_scene();
    const auto& amb = scene.ambient_entry();
    const auto& Te = *scene.find("T");
    auto S = amb.ring;
    auto T = Te.ring;
    RingIdeal t0 = RingIdeal::make(T, {parse_poly("x - 1", T->ctx()),
                                       parse_poly("y", T->ctx())});

    auto u = scene.u_locus(Te);
    require(u.kind == LocusDescriptor::Kind::open_complement &&
                ring_ideal_equal(u.vanishing, t0),
            "faithful locus in T is not the complement of the expected point");

    auto f = scene.fiber_over(scene.smeared_prime(amb), Te);
    require(f.smeared && f.unique_minimal &&
                ring_ideal_equal(*f.minimal_element, t0),
            "fiber of the smeared prime lacks the expected minimal element");

    auto g = scene.geometric_height(scene.smeared_prime(amb));
    require(g.exact && g.value() == 1 &&
                g.justification == GhtResult::Justification::bounds_only,
            "geometric height should be exactly 1 via bounds");
    require(ideal_height(t0) == 2, "height of the point upstairs should be 2");
    require(!scene.is_saturated_on(Te, {{parse_poly("x - 1", T->ctx()),
                                         parse_poly("y", T->ctx())}}),
            "the overring should not be saturated");
    auto p1 = scene.contracted_prime(amb, {parse_poly("x", S->ctx())});
    auto p2 = scene.contracted_prime(amb, {parse_poly("x - 1", S->ctx()),
                                           parse_poly("y", S->ctx())});
    require(scene.contraction_equal(p1, p2),
            "the line and the point should contract to the same prime");
  });

  criterion(4, "principal ideal in the plane: saturated depiction", [] {
    auto T = AffineDomain::polynomial_ring(VarContext::make({"x", "y"}));
    SubringKplusI R(T, {parse_poly("x", T->ctx())});
    DepictionScene scene(R, {});
    const auto& amb = scene.ambient_entry();
    require(scene.is_saturated_on(amb, {{parse_poly("x", T->ctx())}}),
            "the base ring should be saturated");
    auto g = scene.geometric_height(scene.smeared_prime(amb));
    require(g.exact && g.value() == 1, "geometric height should be exactly 1");
    require(ideal_height(RingIdeal::make(T, {parse_poly("x", T->ctx())})) == 1,
            "height of the principal prime should be 1");
  });

  criterion(5, "semigroup saturation and normality", [] {
    auto sat = saturate_semigroup(AffineSemigroup::make(3, kS2));
    require(sat.gens == std::vector<std::vector<long long>>{
                            {0, 0, 1}, {0, 1, 0}, {1, 0, 0}},
            "saturation should be the three unit vectors");
    require(is_normal_semigroup(AffineSemigroup::make(
                3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})),
            "the free semigroup should be normal");
    require(!is_normal_semigroup(AffineSemigroup::make(3, kS2)),
            "the restricted semigroup should not be normal");
    require(!is_normal_semigroup(AffineSemigroup::make(2, {{2, 0}, {3, 0}})),
            "the numerical semigroup <2,3> should not be normal");
  });

  criterion(6, "random-ideal property suite against the linear-algebra oracle", [] {
    auto t0 = Clock::now();
    testing::PolyGen gen(20260823);
    auto ctx = VarContext::make({"x", "y", "z"});
    std::uniform_int_distribution<int> ngens(1, 3);
    int checked = 0;
    for (int iter = 0; iter < 200; ++iter) {
      std::vector<Polynomial> gens;
      int k = ngens(gen.rng);
      for (int i = 0; i < k; ++i) gens.push_back(gen.poly(ctx, 3, 3));
      IdealHandle I(ctx, gens);
      const GroebnerBasis& B = I.groebner(MonomialOrder::grevlex());
      require(spolys_reduce_to_zero(B), "an S-polynomial fails to reduce to zero");
      // membership agreement on random candidates and a known member
      for (int j = 0; j < 2; ++j) {
        Polynomial f = gen.poly(ctx, 3, 3);
        int bound = (int)f.total_degree() + 4;
        require(ideal_member(f, I) == testing::macaulay_member(f, gens, bound),
                "membership disagrees with the oracle");
        ++checked;
      }
      Polynomial member = Polynomial::zero(ctx);
      for (const auto& g : gens) member = member + g * gen.poly(ctx, 1, 2);
      require(ideal_member(member, I), "a constructed member is rejected");
    }
    require(checked >= 200, "not enough oracle comparisons");
    // dimension-height duality on a corpus of primes of k[x,y,z]
    std::vector<std::vector<const char*>> primes = {
        {"x"},          {"x - 1"},       {"x", "y"},     {"x - 1", "y + 1"},
        {"x", "y", "z"}, {"x - 1", "y", "z - 2"}, {"x^2 - y"}, {"x*z - y"}};
    auto S = AffineDomain::polynomial_ring(ctx);
    for (const auto& gens : primes) {
      std::vector<Polynomial> ps;
      for (const auto* g : gens) ps.push_back(parse_poly(g, ctx));
      RingIdeal q = RingIdeal::make(S, ps);
      require(ideal_height(q) + quotient_dim(q) == 3,
              "height + dimension should equal 3");
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    require(secs < 60.0, "runtime budget of 60s exceeded");
  });

  criterion(7, "depiction independence and chain containment", [] {
    auto scene = family_scene();
    bool base = scene.noetherian_codim1(scene.ambient_entry());
    for (const auto* name : {"S_2", "S_3"})
      require(scene.noetherian_codim1(*scene.find(name)) == base,
              "codim1 differs between depictions");
    // chain: S_n inside T inside the saturation ring (which equals T here)
    for (const auto* name : {"S_2", "S_3"}) {
      const auto& e = *scene.find(name);
      auto rep = scene.maximal_depiction(e);
      require(rep.T.has_value(), "no maximal depiction computed");
      require(check_realized_inclusion(*e.ring, *rep.T->ring),
              "base ring not contained in T");
      auto satring = toric_presentation(
          saturate_semigroup(AffineSemigroup::make(e.ring->semigroup()->rank,
                                                   e.ring->semigroup()->gens)),
          {}, e.ring->realization()->ambient_ctx->names);
      require(check_realized_inclusion(*rep.T->ring, *satring),
              "T not contained in the normalization");
    }
  });

  criterion(8, "byte-identical reports for every bundled example", [] {
    for (const auto& id : Scenario::bundled_ids()) {
      auto a = run_queries(Scenario::bundled(id)).report.dump(2);
      auto b = run_queries(Scenario::bundled(id)).report.dump(2);
      require(a == b, id + ": reports differ between runs");
      require(!a.empty(), id + ": empty report");
    }
  });

  if (failures == 0) {
    std::cout << "acceptance: all criteria passed" << std::endl;
    return 0;
  }
  std::cout << "acceptance: " << failures << " criterion(s) failed" << std::endl;
  return 1;
}
