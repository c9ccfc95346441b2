#pragma once

#include <optional>

#include "depict/groebner.hpp"

namespace depict {

enum class Primality { asserted, verified_toric, verified_monomial };

/// Optional embedding of a presented ring into a polynomial ambient: one
/// image polynomial (over ambient_ctx) per presentation variable. Used to
/// compare subalgebras of a common polynomial ring.
struct Realization {
  CtxPtr ambient_ctx;
  std::vector<Polynomial> images;
};

/// Semigroup data attached to a toric presentation (exponent vectors of the
/// generator monomials).
struct SemigroupData {
  int rank = 0;
  std::vector<std::vector<long long>> gens;
};

class AffineDomain;
using DomainPtr = std::shared_ptr<const AffineDomain>;

/// A presented finitely generated domain S = k[x_1..x_m]/P with P prime.
class AffineDomain {
 public:
  static DomainPtr polynomial_ring(CtxPtr ctx);
  static DomainPtr presented(CtxPtr ctx, std::vector<Polynomial> defining_gens,
                             Primality primality,
                             std::optional<Realization> realization = std::nullopt,
                             std::optional<SemigroupData> semigroup = std::nullopt);

  const CtxPtr& ctx() const { return ctx_; }
  const IdealHandle& defining() const { return defining_; }
  Primality primality() const { return primality_; }
  const std::optional<Realization>& realization() const { return realization_; }
  const std::optional<SemigroupData>& semigroup() const { return semigroup_; }
  bool is_polynomial_ring() const { return defining_.generators().empty(); }

  int dim() const;  // Krull dimension, cached

 private:
  AffineDomain() = default;
  CtxPtr ctx_;
  IdealHandle defining_;
  Primality primality_ = Primality::asserted;
  std::optional<Realization> realization_;
  std::optional<SemigroupData> semigroup_;
  mutable std::optional<int> dim_cache_;
  mutable std::mutex mu_;
};

/// Ideal of a presented ring, stored as its full ambient lift (contains the
/// defining ideal).
struct RingIdeal {
  DomainPtr ring;
  IdealHandle lift;

  static RingIdeal make(DomainPtr ring, std::vector<Polynomial> gens);
  bool is_proper() const { return !lift.is_unit(); }
  bool contains_ring_ideal() const;  // lift contains all defining generators
};

int ring_dim(const AffineDomain& S);
/// dim S/q for q an ideal of S (lift includes P).
int quotient_dim(const RingIdeal& q);
/// ht_S(q) = dim S - dim S/q; requires the defining ideal prime (asserted).
int ideal_height(const RingIdeal& q);
bool ring_ideal_equal(const RingIdeal& a, const RingIdeal& b);

/// Inclusion small -> big determined by the image in big of each presentation
/// variable of small.
struct RingInclusion {
  DomainPtr small;
  DomainPtr big;
  std::vector<Polynomial> images;  // over big's presentation context
};

/// Preimage of J under the inclusion, via graph ideal + elimination of big's
/// variables.
RingIdeal contract_ideal(const RingIdeal& J, const RingInclusion& inc);

/// Image of J's generators in big, plus big's defining ideal.
RingIdeal extend_ideal(const RingIdeal& J, const RingInclusion& inc);

/// Kernel of the inclusion map as an ideal of small's presentation ring.
IdealHandle inclusion_kernel(const RingInclusion& inc);

/// True iff the map determined by `images` has kernel exactly small's
/// defining ideal (i.e. it embeds small into big).
bool check_inclusion(const RingInclusion& inc);

/// Subalgebra inclusion via realizations over a common polynomial ambient:
/// every realized generator of small lies in the algebra generated by big's
/// realized generators, and small's presentation kernel matches.
bool check_realized_inclusion(const AffineDomain& small, const AffineDomain& big);

}  // namespace depict
