#include "depict/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace depict {

namespace {

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>;

constexpr int kMaxRank = 4;
constexpr long long kMaxBoxPoints = 2'000'000;

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

Vec primitive(Vec v) {
  long long g = 0;
  for (auto c : v) g = gcd_ll(g, std::llabs(c));
  if (g > 1)
    for (auto& c : v) c /= g;
  return v;
}

bool all_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](long long c) { return c == 0; });
}

long long dot(const Vec& a, const Vec& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

// Row-echelon basis of the integer row lattice (Hermite-style reduction).
Mat lattice_basis_rows(Mat rows) {
  Mat basis;
  size_t d = rows.empty() ? 0 : rows[0].size();
  size_t col = 0;
  while (col < d) {
    // repeatedly reduce entries in this column until at most one row is nonzero
    for (;;) {
      int pivot = -1;
      for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (pivot < 0 || std::llabs(rows[i][col]) < std::llabs(rows[pivot][col]))
          pivot = (int)i;
      }
      if (pivot < 0) break;
      bool others = false;
      for (size_t i = 0; i < rows.size(); ++i) {
        if ((int)i == pivot || rows[i][col] == 0) continue;
        long long q = rows[i][col] / rows[pivot][col];
        for (size_t j = 0; j < d; ++j) rows[i][j] -= q * rows[pivot][j];
        if (rows[i][col] != 0) others = true;
      }
      if (!others) {
        Vec b = rows[pivot];
        if (b[col] < 0)
          for (auto& c : b) c = -c;
        basis.push_back(b);
        rows.erase(rows.begin() + pivot);
        break;
      }
    }
    ++col;
  }
  return basis;  // echelon: pivot columns strictly increasing
}

// Coordinates of v in the echelon basis; empty optional if v outside lattice.
std::optional<Vec> coords_in(const Mat& basis, Vec v) {
  Vec c(basis.size(), 0);
  for (size_t i = 0; i < basis.size(); ++i) {
    size_t p = 0;
    while (p < basis[i].size() && basis[i][p] == 0) ++p;
    if (v[p] % basis[i][p] != 0) return std::nullopt;
    c[i] = v[p] / basis[i][p];
    for (size_t j = 0; j < v.size(); ++j) v[j] -= c[i] * basis[i][j];
  }
  if (!all_zero(v)) return std::nullopt;
  return c;
}

Vec from_coords(const Mat& basis, const Vec& c) {
  Vec v(basis.empty() ? 0 : basis[0].size(), 0);
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) v[j] += c[i] * basis[i][j];
  return v;
}

long long det_ll(Mat m) {
  // fraction-free elimination; matrices here are at most 3x3
  const size_t n = m.size();
  long long det = 1, denom = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = -det;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / denom;
    denom = m[k][k];
  }
  return det * m[n - 1][n - 1];
}

int mat_rank(Mat m) { return (int)lattice_basis_rows(std::move(m)).size(); }

// Facet normals of cone(gens) for full-dimensional gens in Z^r.
Mat facets_full_dim(const Mat& gens, int r) {
  std::set<Vec> out;
  if (r == 1) {
    bool pos = false, neg = false;
    for (const auto& g : gens) (g[0] > 0 ? pos : neg) = true;
    if (pos && !neg) out.insert({1});
    if (neg && !pos) out.insert({-1});
    return Mat(out.begin(), out.end());
  }
  const int n = (int)gens.size();
  std::vector<int> idx(r - 1);
  // iterate over (r-1)-subsets of generators
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == r - 1) {
      Mat m;
      for (int i : idx) m.push_back(gens[i]);
      // normal via cofactor expansion
      Vec nvec(r, 0);
      for (int j = 0; j < r; ++j) {
        Mat minor;
        for (auto& row : m) {
          Vec rr;
          for (int c = 0; c < r; ++c)
            if (c != j) rr.push_back(row[c]);
          minor.push_back(rr);
        }
        nvec[j] = ((j % 2 == 0) ? 1 : -1) * det_ll(minor);
      }
      if (all_zero(nvec)) return;
      nvec = primitive(nvec);
      bool ge = true, le = true;
      for (const auto& g : gens) {
        long long s = dot(nvec, g);
        if (s < 0) ge = false;
        if (s > 0) le = false;
      }
      if (ge)
        out.insert(nvec);
      else if (le) {
        for (auto& c : nvec) c = -c;
        out.insert(nvec);
      }
      return;
    }
    for (int i = start; i < n; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return Mat(out.begin(), out.end());
}

struct ConeData {
  Mat basis;        // lattice basis rows (echelon), in Z^d
  int r = 0;        // lattice rank
  Mat gen_coords;   // generators in basis coordinates
  Mat facets;       // facet normals in coordinates
  bool pointed = false;
};

ConeData cone_data(const AffineSemigroup& A) {
  ConeData cd;
  cd.basis = lattice_basis_rows(A.gens);
  cd.r = (int)cd.basis.size();
  for (const auto& g : A.gens) {
    auto c = coords_in(cd.basis, g);
    if (!c) throw error("internal: generator outside its own lattice");
    cd.gen_coords.push_back(*c);
  }
  cd.facets = facets_full_dim(cd.gen_coords, cd.r);
  cd.pointed = mat_rank(cd.facets) == cd.r;
  return cd;
}

bool in_cone(const ConeData& cd, const Vec& c) {
  for (const auto& n : cd.facets)
    if (dot(n, c) < 0) return false;
  return true;
}

Mat extreme_rays(const ConeData& cd) {
  std::set<Vec> rays;
  for (const auto& g : cd.gen_coords) {
    Mat active;
    for (const auto& n : cd.facets)
      if (dot(n, g) == 0) active.push_back(n);
    if (cd.r == 1 || mat_rank(active) == cd.r - 1) rays.insert(primitive(g));
  }
  return Mat(rays.begin(), rays.end());
}

// Hilbert basis in coordinate space.
Mat hilbert_basis(const ConeData& cd) {
  if (!cd.pointed)
    throw error("saturation unsupported: the cone of the semigroup is not pointed");
  Mat rays = extreme_rays(cd);
  Vec lo(cd.r, 0), hi(cd.r, 0);
  for (const auto& ray : rays)
    for (int j = 0; j < cd.r; ++j) {
      lo[j] += std::min(0ll, ray[j]);
      hi[j] += std::max(0ll, ray[j]);
    }
  long long points = 1;
  for (int j = 0; j < cd.r; ++j) {
    points *= (hi[j] - lo[j] + 1);
    if (points > kMaxBoxPoints) throw error("saturation enumeration box too large");
  }
  // every lattice point of the cone inside the zonotope box of the extreme
  // rays; the Hilbert basis is contained in this set
  Mat candidates;
  Vec cur(cd.r, 0);
  std::function<void(int)> enumerate = [&](int pos) {
    if (pos == cd.r) {
      if (!all_zero(cur) && in_cone(cd, cur)) candidates.push_back(cur);
      return;
    }
    for (long long v = lo[pos]; v <= hi[pos]; ++v) {
      cur[pos] = v;
      enumerate(pos + 1);
    }
  };
  enumerate(0);
  // x is reducible iff x = y + z with y a candidate and z nonzero in the cone
  Mat hb;
  for (const auto& x : candidates) {
    bool reducible = false;
    for (const auto& y : candidates) {
      Vec z = sub(x, y);
      if (all_zero(z)) continue;
      if (in_cone(cd, z)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) hb.push_back(x);
  }
  return hb;
}

bool member_coords(const ConeData& cd, const Vec& v,
                   std::set<Vec>& failed) {
  if (all_zero(v)) return true;
  if (failed.count(v)) return false;
  for (const auto& g : cd.gen_coords) {
    Vec w = sub(v, g);
    if (!in_cone(cd, w)) continue;
    if (member_coords(cd, w, failed)) return true;
  }
  failed.insert(v);
  return false;
}

}  // namespace

AffineSemigroup AffineSemigroup::make(int rank, std::vector<std::vector<long long>> gens) {
  if (rank < 1 || rank > kMaxRank)
    throw error("semigroup rank must be between 1 and " + std::to_string(kMaxRank));
  if (gens.empty()) throw error("semigroup needs at least one generator");
  for (const auto& g : gens) {
    if ((int)g.size() != rank) throw error("generator length does not match rank");
    if (all_zero(g)) throw error("semigroup generators must be nonzero");
  }
  return AffineSemigroup{rank, std::move(gens)};
}

int lattice_rank(const AffineSemigroup& A) {
  return (int)lattice_basis_rows(A.gens).size();
}

RationalCone cone_facets(const AffineSemigroup& A) {
  ConeData cd = cone_data(A);
  // lift coordinate-space normals back to Z^rank: solve basis * n = normal
  RationalCone cone;
  for (const auto& n : cd.facets) {
    // rational solve on the echelon basis (pivot columns), free vars = 0
    std::vector<Rational> x(A.rank, 0);
    std::vector<Rational> rhs;
    for (int i = 0; i < cd.r; ++i) rhs.push_back(Rational(n[i]));
    // basis rows are echelon with increasing pivot columns: back-substitute
    for (int i = cd.r - 1; i >= 0; --i) {
      size_t p = 0;
      while (p < cd.basis[i].size() && cd.basis[i][p] == 0) ++p;
      Rational acc = rhs[i];
      for (size_t j = p + 1; j < cd.basis[i].size(); ++j)
        acc -= Rational(cd.basis[i][j]) * x[j];
      x[p] = acc / Rational(cd.basis[i][p]);
    }
    Int lcm_den = 1;
    for (const auto& c : x) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c));
    Vec lifted(A.rank);
    for (int j = 0; j < A.rank; ++j)
      lifted[j] = Int(numerator(x[j]) * (lcm_den / denominator(x[j])))
                      .convert_to<long long>();
    cone.facet_normals.push_back(primitive(lifted));
  }
  std::sort(cone.facet_normals.begin(), cone.facet_normals.end());
  return cone;
}

AffineSemigroup saturate_semigroup(const AffineSemigroup& A) {
  ConeData cd = cone_data(A);
  Mat hb = hilbert_basis(cd);
  Mat out;
  for (const auto& c : hb) out.push_back(from_coords(cd.basis, c));
  std::sort(out.begin(), out.end());
  return AffineSemigroup::make(A.rank, std::move(out));
}

bool semigroup_member(const std::vector<long long>& v, const AffineSemigroup& A) {
  if ((int)v.size() != A.rank) throw error("vector length does not match rank");
  ConeData cd = cone_data(A);
  if (!cd.pointed)
    throw error("membership unsupported: the cone of the semigroup is not pointed");
  auto c = coords_in(cd.basis, v);
  if (!c) return false;
  if (!in_cone(cd, *c)) return false;
  std::set<Vec> failed;
  return member_coords(cd, *c, failed);
}

bool is_normal_semigroup(const AffineSemigroup& A) {
  AffineSemigroup sat = saturate_semigroup(A);
  for (const auto& h : sat.gens)
    if (!semigroup_member(h, A)) return false;
  return true;
}

DomainPtr toric_presentation(const AffineSemigroup& A,
                             std::vector<std::string> tag_names,
                             std::vector<std::string> ambient_names,
                             std::optional<std::uint64_t> modulus) {
  const int s = (int)A.gens.size();
  if (tag_names.empty())
    for (int i = 0; i < s; ++i) tag_names.push_back("t" + std::to_string(i + 1));
  if ((int)tag_names.size() != s) throw error("one tag name per generator required");
  if (ambient_names.empty())
    for (int j = 0; j < A.rank; ++j) ambient_names.push_back("x" + std::to_string(j + 1));
  if ((int)ambient_names.size() != A.rank) throw error("one ambient name per coordinate");

  // combined context [ambient | tags]; internal ambient copies are renamed
  // when a tag reuses an ambient name
  std::vector<std::string> names;
  for (const auto& a : ambient_names) {
    std::string nn = a;
    while (std::find(tag_names.begin(), tag_names.end(), nn) != tag_names.end() ||
           std::find(names.begin(), names.end(), nn) != names.end())
      nn = "_" + nn;
    names.push_back(nn);
  }
  for (const auto& t : tag_names) {
    if (std::find(names.begin(), names.end(), t) != names.end())
      throw error("duplicate tag name: " + t);
    names.push_back(t);
  }
  CtxPtr comb = VarContext::make(names, modulus);
  const int d = A.rank;

  auto mono = [&](const Vec& e, bool positive_part) {
    Monomial m = Monomial::one(comb->arity());
    for (int j = 0; j < d; ++j) {
      long long v = positive_part ? std::max(0ll, e[j]) : std::max(0ll, -e[j]);
      m.exps[j] = (std::uint32_t)v;
    }
    return m;
  };

  std::vector<Polynomial> gens;
  for (int i = 0; i < s; ++i) {
    Monomial neg = mono(A.gens[i], false);
    neg.exps[d + i] += 1;  // t_i * x^(a_i^-)
    Polynomial bin =
        Polynomial::from_terms(comb, {{Rational(1), neg}, {Rational(-1), mono(A.gens[i], true)}});
    gens.push_back(bin);
  }
  IdealHandle graph(comb, gens);
  Polynomial prod = Polynomial::constant(comb, 1);
  for (int j = 0; j < d; ++j) prod = prod * Polynomial::variable(comb, j);
  IdealHandle sat = saturate(graph, prod);
  std::vector<int> drop;
  for (int j = 0; j < d; ++j) drop.push_back(j);
  IdealHandle ker = eliminate(sat, drop);

  CtxPtr tag_ctx = VarContext::make(tag_names, modulus);
  std::vector<int> id(s);
  for (int i = 0; i < s; ++i) id[i] = i;
  std::vector<Polynomial> ker_gens;
  for (const auto& g : ker.generators()) ker_gens.push_back(transplant(g, tag_ctx, id));

  std::optional<Realization> real;
  bool nonneg = true;
  for (const auto& g : A.gens)
    for (auto c : g)
      if (c < 0) nonneg = false;
  if (nonneg) {
    Realization r;
    r.ambient_ctx = VarContext::make(ambient_names, modulus);
    for (int i = 0; i < s; ++i) {
      Monomial m = Monomial::one(d);
      for (int j = 0; j < d; ++j) m.exps[j] = (std::uint32_t)A.gens[i][j];
      r.images.push_back(
          Polynomial::from_terms(r.ambient_ctx, {{Rational(1), m}}));
    }
    real = std::move(r);
  }
  return AffineDomain::presented(tag_ctx, std::move(ker_gens), Primality::verified_toric,
                                 std::move(real), SemigroupData{A.rank, A.gens});
}

}  // namespace depict
