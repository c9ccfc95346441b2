#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "depict/semigroup.hpp"
#include "oracles.hpp"

using namespace depict;

namespace {
const std::vector<std::vector<long long>> kS2 = {
    {1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
const std::vector<std::vector<long long>> kS3 = {
    {1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 0, 2}, {0, 1, 2}, {0, 0, 3}};
}  // namespace

TEST_CASE("cone facets") {
  auto quad = AffineSemigroup::make(2, {{1, 0}, {0, 1}});
  auto C = cone_facets(quad);
  CHECK(C.facet_normals == std::vector<std::vector<long long>>{{0, 1}, {1, 0}});

  auto s2 = AffineSemigroup::make(3, kS2);
  auto C2 = cone_facets(s2);
  CHECK(C2.facet_normals ==
        std::vector<std::vector<long long>>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  for (const auto& n : C2.facet_normals)
    for (const auto& g : kS2) {
      long long s = 0;
      for (int j = 0; j < 3; ++j) s += n[j] * g[j];
      CHECK(s >= 0);
    }

  // same cone generated inside a sublattice
  auto sub = AffineSemigroup::make(2, {{2, 0}, {1, 1}, {0, 2}});
  auto C3 = cone_facets(sub);
  CHECK(C3.facet_normals == std::vector<std::vector<long long>>{{0, 1}, {1, 0}});
}

TEST_CASE("semigroup saturation") {
  auto quad = AffineSemigroup::make(2, {{1, 0}, {0, 1}});
  auto sat = saturate_semigroup(quad);
  CHECK(sat.gens == std::vector<std::vector<long long>>{{0, 1}, {1, 0}});

  auto s2 = AffineSemigroup::make(3, kS2);
  auto sat2 = saturate_semigroup(s2);
  CHECK(sat2.gens ==
        std::vector<std::vector<long long>>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});

  auto numeric = AffineSemigroup::make(2, {{2, 0}, {3, 0}});
  auto sat3 = saturate_semigroup(numeric);
  CHECK(sat3.gens == std::vector<std::vector<long long>>{{1, 0}});
  // gap enumeration: 1 is the only gap of <2,3> inside N
  for (long long v = 2; v <= 10; ++v)
    CHECK(testing::semigroup_member_oracle({v, 0}, {{2, 0}, {3, 0}}));
  CHECK_FALSE(testing::semigroup_member_oracle({1, 0}, {{2, 0}, {3, 0}}));
}

TEST_CASE("saturation properties") {
  std::vector<AffineSemigroup> corpus = {
      AffineSemigroup::make(3, kS2), AffineSemigroup::make(3, kS3),
      AffineSemigroup::make(2, {{2, 0}, {3, 0}}),
      AffineSemigroup::make(2, {{2, 0}, {1, 1}, {0, 2}}),
      AffineSemigroup::make(2, {{1, 0}, {1, 2}, {1, 3}})};
  for (const auto& A : corpus) {
    auto sat = saturate_semigroup(A);
    // contains the input semigroup
    for (const auto& g : A.gens) CHECK(semigroup_member(g, sat));
    // idempotent
    auto sat2 = saturate_semigroup(sat);
    CHECK(sat2.gens == sat.gens);
    // every Hilbert basis element is irreducible in the saturation
    for (size_t i = 0; i < sat.gens.size(); ++i)
      for (size_t j = 0; j < sat.gens.size(); ++j) {
        std::vector<long long> diff = sat.gens[i];
        for (size_t k = 0; k < diff.size(); ++k) diff[k] -= sat.gens[j][k];
        bool zero = std::all_of(diff.begin(), diff.end(),
                                [](long long c) { return c == 0; });
        if (!zero) CHECK_FALSE(semigroup_member(sat.gens[i], sat) == false);
      }
  }
}

TEST_CASE("normality") {
  CHECK(is_normal_semigroup(
      AffineSemigroup::make(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
  CHECK_FALSE(is_normal_semigroup(AffineSemigroup::make(3, kS2)));
  CHECK_FALSE(is_normal_semigroup(AffineSemigroup::make(2, {{2, 0}, {3, 0}})));
  CHECK_FALSE(is_normal_semigroup(AffineSemigroup::make(1, {{2}, {3}})));
  CHECK(is_normal_semigroup(AffineSemigroup::make(1, {{2}, {3}, {1}})));
}

TEST_CASE("membership matches the exhaustive oracle") {
  auto s2 = AffineSemigroup::make(3, kS2);
  for (long long a = 0; a <= 2; ++a)
    for (long long b = 0; b <= 2; ++b)
      for (long long c = 0; c <= 3; ++c)
        CHECK(semigroup_member({a, b, c}, s2) ==
              testing::semigroup_member_oracle({a, b, c}, kS2));
  CHECK_FALSE(semigroup_member({-1, 0, 0}, s2));
}

TEST_CASE("toric presentations") {
  auto free2 = toric_presentation(AffineSemigroup::make(2, {{1, 0}, {0, 1}}));
  CHECK(free2->defining().generators().empty());
  CHECK(free2->dim() == 2);

  auto cusp = toric_presentation(AffineSemigroup::make(1, {{2}, {3}}), {"a", "b"});
  REQUIRE(cusp->defining().generators().size() == 1);
  CHECK(cusp->defining().contains(parse_poly("a^3 - b^2", cusp->ctx())));
  CHECK(cusp->dim() == 1);
  // kernel generators vanish under the monomial map a -> x^2, b -> x^3
  REQUIRE(cusp->realization().has_value());
  for (const auto& g : cusp->defining().generators())
    CHECK(substitute(g, cusp->realization()->ambient_ctx, cusp->realization()->images)
              .is_zero());

  auto s2 = toric_presentation(AffineSemigroup::make(3, kS2),
                               {"x", "y", "a", "b", "c"}, {"x", "y", "z"});
  CHECK(s2->ctx()->arity() == 5);
  CHECK(s2->dim() == 3);
  CHECK(s2->primality() == Primality::verified_toric);
  for (const auto& g : s2->defining().generators())
    CHECK(substitute(g, s2->realization()->ambient_ctx, s2->realization()->images)
              .is_zero());
  // dimension equals the rank of the generated group
  CHECK(lattice_rank(AffineSemigroup::make(3, kS2)) == 3);
  CHECK(lattice_rank(AffineSemigroup::make(2, {{2, 0}, {3, 0}})) == 1);
}

TEST_CASE("normalization chain as algebras") {
  auto s2 = toric_presentation(AffineSemigroup::make(3, kS2),
                               {"x", "y", "a", "b", "c"}, {"x", "y", "z"});
  auto sat = saturate_semigroup(AffineSemigroup::make(3, kS2));
  auto s2bar = toric_presentation(sat, {"z", "y", "x"}, {"x", "y", "z"});
  CHECK(check_realized_inclusion(*s2, *s2bar));
  CHECK_FALSE(check_realized_inclusion(*s2bar, *s2));
}

TEST_CASE("validation and unsupported shapes") {
  CHECK_THROWS_AS(AffineSemigroup::make(5, {{1, 0, 0, 0, 0}}), error);
  CHECK_THROWS_AS(AffineSemigroup::make(2, {{0, 0}}), error);
  CHECK_THROWS_AS(AffineSemigroup::make(2, {{1}}), error);
  // non-pointed cone: saturation refuses
  auto line = AffineSemigroup::make(1, {{1}, {-1}});
  CHECK_THROWS_AS(saturate_semigroup(line), error);
}
