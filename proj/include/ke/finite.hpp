#pragma once

#include <vector>

#include "ke/homology.hpp"

namespace ke {

// Finite classical reflection-group machinery on explicit coefficient
// vectors. Used by the Kostant baseline (standard positive systems) and by
// the direct finite-rank route (negative-level positive systems). Roots are
// integer vectors in the coordinates of the weight window; elements are
// signed permutations of the coordinates.

using IVec = std::vector<long long>;

inline Rat dot(const IVec& a, const std::vector<Rat>& b) {
  Rat s(0);
  for (size_t t = 0; t < a.size(); ++t) s += Rat(a[t]) * b[t];
  return s;
}
inline long long idot(const IVec& a, const IVec& b) {
  long long s = 0;
  for (size_t t = 0; t < a.size(); ++t) s += a[t] * b[t];
  return s;
}

// w(eps_t) = sign[t] * eps_{perm[t]}.
struct FinWeyl {
  std::vector<int> perm;
  std::vector<int> sign;

  static FinWeyl id(int n);
  IVec apply_root(const IVec& r) const;
  std::vector<Rat> apply_vec(const std::vector<Rat>& v) const;
  FinWeyl after(const FinWeyl& first) const;  // this o first
  FinWeyl inv() const;
  friend bool operator<(const FinWeyl& x, const FinWeyl& y) {
    if (x.perm != y.perm) return x.perm < y.perm;
    return x.sign < y.sign;
  }
  friend bool operator==(const FinWeyl& x, const FinWeyl& y) {
    return x.perm == y.perm && x.sign == y.sign;
  }
};

// Reflection in the root r (coordinates of the same window).
FinWeyl reflection(const IVec& r);

// Hermitian-symmetric finite baseline cases, standard conventions: upper
// triangular Borel, Levi gl(m) x gl(n) / gl(n).
enum class HSType { gl, sp, so };
struct HSCase {
  HSType type;
  long long m = 0;  // gl only
  long long n = 0;
  long long dim() const { return type == HSType::gl ? m + n : n; }
};

std::vector<IVec> positive_roots(const HSCase& c);
std::vector<IVec> compact_positive_roots(const HSCase& c);
std::vector<IVec> noncompact_positive_roots(const HSCase& c);
std::vector<Rat> rho_halfsum(const HSCase& c);
std::vector<FinWeyl> full_weyl_group(const HSCase& c);
bool is_dominant(const HSCase& c, const std::vector<Rat>& wt);

// Classical Kostant at finite rank for a dominant integral weight: the
// degree-k piece is the multiset {w o lambda : w minimal coset rep,
// length(w) = k}. Character-verified baseline, nothing more.
struct KostantSummand {
  std::vector<Rat> weight;  // Levi-dominant
};
std::vector<KostantSummand> kostant_finite(const HSCase& c, const std::vector<Rat>& lambda,
                                           long long k);

// Direct finite-rank route in the negative-level convention: Phi(xi) from
// psi_phi at finite rank, the root subsystem generated by its reflections,
// and the Enright sum over minimal representatives of length k. Independent
// of the truncation path.
HomologyDecomposition enright_direct_finite(const WeightLabel& label, long long m,
                                            long long n, long long k,
                                            long long det_twist);

}  // namespace ke
