#pragma once

#include "depict/semigroup.hpp"

namespace depict {

/// The nonnoetherian ring R = k + I, given by an ambient finitely generated
/// domain S and a nonzero proper ideal I of S.
class SubringKplusI {
 public:
  SubringKplusI(DomainPtr ambient, std::vector<Polynomial> ideal_gens);
  const DomainPtr& ambient() const { return ambient_; }
  const RingIdeal& ideal() const { return ideal_; }

 private:
  DomainPtr ambient_;
  RingIdeal ideal_;
};

struct LocusDescriptor {
  enum class Kind { open_complement, closed };
  Kind kind = Kind::open_complement;
  RingIdeal vanishing;
};

/// A prime of a witness depiction together with its contraction behaviour:
/// smeared primes (those containing I) all contract to the single prime I
/// of R; the rest lie in the Z locus and contract injectively.
struct ContractedPrime {
  RingIdeal witness;
  bool smeared = false;
  Primality primality = Primality::asserted;
};

struct GhtResult {
  enum class Justification { z_membership, codim1_T, bounds_only };
  int lower = 1;
  int upper = 0;
  bool exact = false;
  Justification justification = Justification::bounds_only;
  int value() const {
    if (!exact) throw error("geometric height is not exact");
    return lower;
  }
};

/// How a depiction ring relates to R's ambient ring.
struct DepictionEntry {
  enum class Rel {
    ambient,    // the ambient ring itself
    overring,   // ambient included via images of the ambient variables
    subring,    // realized subalgebra of the same polynomial ambient
    literature  // declared, not computed; carries a citation key
  };
  std::string name;
  DomainPtr ring;
  Rel rel = Rel::ambient;
  std::vector<Polynomial> inclusion_images;  // Rel::overring only
  std::string fact;                          // Rel::literature only
};

struct DepictionReport {
  bool is_depiction = false;
  bool codim1 = false;
  std::optional<DepictionEntry> T;  // the unique maximal depiction, when computed
  bool T_is_base = false;
  bool T_saturated = false;
  bool normalization_unavailable = false;
  std::string note;
};

struct FiberResult {
  bool smeared = false;
  RingIdeal set_ideal;  // unique lift (singleton) or V(I*T) closure ideal
  std::optional<RingIdeal> minimal_element;
  bool unique_minimal = false;
};

/// R together with its declared depictions.
class DepictionScene {
 public:
  DepictionScene(SubringKplusI R, std::vector<DepictionEntry> depictions);

  const SubringKplusI& R() const { return R_; }
  const std::vector<DepictionEntry>& depictions() const { return depictions_; }
  const DepictionEntry& ambient_entry() const;
  const DepictionEntry* find(const std::string& name) const;

  /// I as an ideal of the entry's ring (contraction for realized subrings,
  /// extension for overrings); nullopt for literature-only entries.
  std::optional<RingIdeal> ideal_in(const DepictionEntry& dep) const;

  bool check_depiction(const DepictionEntry& dep) const;  // dim S'/I' >= 1
  LocusDescriptor u_locus(const DepictionEntry& dep) const;
  bool noetherian_codim1(const DepictionEntry& dep) const;  // ht(I') >= 2

  ContractedPrime contracted_prime(const DepictionEntry& dep,
                                   std::vector<Polynomial> prime_gens) const;
  ContractedPrime smeared_prime(const DepictionEntry& dep) const;  // p = I

  DepictionReport maximal_depiction(const DepictionEntry& base) const;

  GhtResult geometric_height(const ContractedPrime& p) const;
  GhtResult gdim_point(const ContractedPrime& p) const;  // dim R - ght, as interval

  bool contraction_equal(const ContractedPrime& a, const ContractedPrime& b) const;

  FiberResult fiber_over(const ContractedPrime& p, const DepictionEntry& target) const;

  bool is_saturated_on(const DepictionEntry& target,
                       const std::vector<std::vector<Polynomial>>& test_primes) const;

 private:
  SubringKplusI R_;
  std::vector<DepictionEntry> depictions_;
};

bool in_Z(const ContractedPrime& q);

}  // namespace depict
