#pragma once

#include "depict/affine_ring.hpp"

namespace depict {

/// Affine semigroup: finitely many nonzero integer vectors in Z^rank.
/// Saturation is computed inside the group the generators span.
struct AffineSemigroup {
  int rank = 0;
  std::vector<std::vector<long long>> gens;

  static AffineSemigroup make(int rank, std::vector<std::vector<long long>> gens);
};

/// Minimal cone containing the generators, as primitive facet normals in Z^rank.
struct RationalCone {
  std::vector<std::vector<long long>> facet_normals;
};

RationalCone cone_facets(const AffineSemigroup& A);

/// Hilbert basis of cone(gens) intersected with the group generated by gens.
/// Requires the cone pointed. Output sorted lexicographically; idempotent.
AffineSemigroup saturate_semigroup(const AffineSemigroup& A);

bool is_normal_semigroup(const AffineSemigroup& A);

/// v a nonnegative integer combination of the generators?
bool semigroup_member(const std::vector<long long>& v, const AffineSemigroup& A);

/// Rank of the group generated by the generators.
int lattice_rank(const AffineSemigroup& A);

/// Presented semigroup ring k[t_1..t_s]/ker(monomial map), with primality
/// verified-toric, the semigroup attached, and (for nonnegative generators)
/// a monomial realization into k[x_1..x_rank].
DomainPtr toric_presentation(const AffineSemigroup& A,
                             std::vector<std::string> tag_names = {},
                             std::vector<std::string> ambient_names = {},
                             std::optional<std::uint64_t> modulus = std::nullopt);

}  // namespace depict
