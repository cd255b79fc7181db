#pragma once

#include "ke/weights.hpp"

namespace ke {

// Root of one of the three ambient families, in the kinds that actually
// occur: eps_diff(i,j) = e_i - e_j, neg_sum(i,j) = -e_i - e_j (i < j),
// neg_double(i) = -2e_i, and their positive counterparts.
struct Root {
  enum class Kind { eps_diff, neg_sum, neg_double, pos_sum, pos_double };
  Kind kind;
  long long i = 0, j = 0;

  std::string to_string() const;  // "e(i)-e(j)", "-e(i)-e(j)", "-2e(i)"

  friend bool operator==(const Root& x, const Root& y) {
    return x.kind == y.kind && x.i == y.i && x.j == y.j;
  }
  friend bool operator<(const Root& x, const Root& y) {
    if (x.kind != y.kind) return x.kind < y.kind;
    if (x.i != y.i) return x.i < y.i;
    return x.j < y.j;
  }
};

// Noncompact positive roots of the given algebra within the index window:
//   a: {e_i - e_j : i <= 0 < j},  c: {-e_i-e_j (i<j), -2e_i},  d: {-e_i-e_j (i<j)}.
// Finite tags use their own window; infinite tags use [1-bound..bound]/[1..bound].
std::vector<Root> noncompact_positive_roots(const AlgebraTag& tag, long long bound);

struct PsiPhi {
  std::vector<Root> psi;  // complete (Psi is finite)
  std::vector<Root> phi;  // restricted to the index window
};

// Enright's Psi/Phi sets of a bar-side weight xi:
//   Psi(xi) = {alpha noncompact positive : (xi+rho | alpha) = 0}
//   Phi(xi) = {beta : <xi+rho, beta^vee> in N, beta orthogonal to Psi,
//              beta short if Psi contains a long root}.
// Coroot pairings absorb the central term: they are evaluated on the
// zbar-normalized coefficients, which at finite rank is just xi + rho.
PsiPhi psi_phi(const WeightVector& xi, long long bound);

// The root subsystem Delta(lambda,d) attached to a label, in closed form:
//   a: type a on J_- u J_+;  c: type d on J0;
//   d: type d on J unless (J0 = J and d even), in which case type c on J.
struct RootSubsystem {
  AlgebraTag ambient;          // bar side, infinite rank
  Family abstract_type;
  CofiniteSet support_pos;     // index support (family a: the J_+ part)
  std::optional<CofiniteSet> support_neg;  // family a: J_- mirrored at 1 - i
};

RootSubsystem delta_subsystem(const WeightLabel& label);

// Minimal coset representatives of length k of the subsystem, realized as
// ambient Weyl elements through the increasing enumeration of the support.
std::vector<WeylElement> subsystem_w0(const RootSubsystem& sub, long long k);

}  // namespace ke
