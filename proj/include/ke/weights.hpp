#pragma once

#include <optional>
#include <variant>

#include "ke/weyl.hpp"

namespace ke {

// Identifies the algebra a weight lives over: the family of the input side g,
// whether we are on the bar side (the algebra is then bar_family(family)),
// and the rank (infinite, or the finite truncation window).
struct AlgebraTag {
  Family family = Family::c;
  bool bar = false;
  bool finite = false;
  long long m = 0;  // used by family a only
  long long n = 0;

  Family algebra() const { return bar ? bar_family(family) : family; }
  // <theta, K> of the actual algebra: 1 for a and c, 1/2 for d.
  Rat theta_k() const { return algebra() == Family::d ? Rat(1, 2) : Rat(1); }
  // rho coefficient at epsilon_i of the actual algebra (infinite-rank
  // normalization; the finite truncations use the same values restricted,
  // which for gl(m+n) differs from the half-sum by a harmless constant).
  Rat rho_coeff(long long i) const {
    return algebra() == Family::d ? Rat(-i + 1) : Rat(-i);
  }

  static AlgebraTag infinite(Family f, bool bar_side = false) {
    return AlgebraTag{f, bar_side, false, 0, 0};
  }
  static AlgebraTag truncated(Family f, bool bar_side, long long m, long long n) {
    return AlgebraTag{f, bar_side, true, m, n};
  }
  friend bool operator==(const AlgebraTag& x, const AlgebraTag& y) {
    return x.family == y.family && x.bar == y.bar && x.finite == y.finite &&
           x.m == y.m && x.n == y.n;
  }
};

// Highest-weight label (lambda, d): a partition for families c/d, a pair for
// family a. d is the level parameter; integral labels subject to the domain
// inequalities feed the infinite-rank machinery, rational d is admitted only
// for the finite-rank generic regime.
struct WeightLabel {
  Family family = Family::c;
  std::variant<Partition, PartitionPair> lam;
  Rat d;

  const Partition& lam_p() const { return std::get<Partition>(lam); }
  const PartitionPair& lam_pair() const { return std::get<PartitionPair>(lam); }

  // (lambda, d) in D(g): d a nonnegative integer with
  //   c: lambda'_1 <= d,  d: lambda'_1 + lambda'_2 <= d,
  //   a: (lambda^-)'_1 + (lambda^+)'_1 <= d.
  bool in_domain() const;
  void require_domain() const;  // throws std::invalid_argument otherwise

  std::string lam_string() const;
  std::string to_string() const;

  static WeightLabel make(Family f, const Partition& p, const Rat& d) {
    return WeightLabel{f, p, d};
  }
  static WeightLabel make(Family f, const PartitionPair& p, const Rat& d) {
    return WeightLabel{f, p, d};
  }
};

// Weight in epsilon/theta coordinates. pos covers indices >= 1; family-a
// algebras also carry the block of indices <= 0 (stored at j = 1 - i).
// Finite-rank weights keep their full coefficient window in the heads.
struct WeightVector {
  AlgebraTag tag;
  LinSeq pos;
  std::optional<LinSeq> neg;
  Rat theta = Rat(0);

  Rat coeff(long long i) const {
    if (i >= 1) return pos.value(i);
    if (!neg) throw std::invalid_argument("WeightVector: no negative block");
    return neg->value(1 - i);
  }

  WeightVector canonicalized() const;
  std::string to_text() const;

  friend bool operator==(const WeightVector& x, const WeightVector& y);
  friend bool operator<(const WeightVector& x, const WeightVector& y);
};

WeightVector weight_add(const WeightVector& x, const WeightVector& y);
WeightVector weight_sub(const WeightVector& x, const WeightVector& y);

// Cofinite subset of {from, from+1, ...}: everything except a finite
// exclusion list. J-type index sets are kept in this form, never materialized.
struct CofiniteSet {
  long long from = 1;
  std::vector<long long> excluded;  // sorted, all >= from

  bool contains(long long x) const;
  // k-th element, 1-based, in increasing order.
  long long kth(long long k) const;
  std::vector<long long> first(long long count) const;
};

// The zeta / zeta-bar data of a label, together with the zero-sum pair set N
// and the J-type index sets. For families c/d the sequences live on N; for
// family a they are two-sided (zeta strictly decreasing over all of Z).
//   c: zeta_i = lambda'_i - i - d,        zbar_i = lambda_i - i + 1 + d
//   d: zeta_i = lambda'_i - i + 1 - d/2,  zbar_i = lambda_i - i + d/2
//   a: zeta_i  = (lam+)'_i - i + 1 (i>=1),  -(lam-)'_{1-i} - i + d + 1 (i<=0)
//      zbar_i  = lam+_i - i (i>=1),         -lam-_{1-i} - i - d (i<=0)
struct ZetaData {
  WeightLabel label;

  // families c/d
  LinSeq zeta, zbar;
  std::vector<std::pair<long long, long long>> n_pairs;
  CofiniteSet j_set;                  // c/d: J; a: J_+ (subset of N)
  std::optional<CofiniteSet> j0_set;  // c/d: J0 = J + the zbar zero index
  std::optional<long long> zbar_zero_index;  // c/d: the j with zbar_j = 0, if any

  // family a (two-sided); n_pairs holds (i, j) with i <= 0 < j, zbar_i = zbar_j
  std::optional<ZSeq> zeta_a, zbar_a;
  std::optional<CofiniteSet> j_minus;  // J_- stored mirrored at j = 1 - i

  bool zeta_has_zero() const;  // the 0-in-S branch (family d, lambda'_1 = d/2)
};

ZetaData zeta_data(const WeightLabel& label);

// Weight constructors.
WeightVector lambda_weight(const WeightLabel& label);       // Lambda^g(lambda,d)
WeightVector bar_lambda_weight(const WeightLabel& label);   // bar-Lambda^g(lambda,d)
// Same formula without the domain gate; homology summand labels (mu, d) may
// fall outside D(g).
WeightVector bar_lambda_weight_raw(const WeightLabel& label);
// Finite-rank Gamma weight; requires the label to fit the truncation window.
WeightVector gamma_weight(const WeightLabel& label, long long m, long long n);
WeightVector rho_vector(const AlgebraTag& tag);

// The Weyl action on weights. Not a plain coefficient permutation: the level
// shifts through phi, so the action is normalize -> permute -> denormalize,
// where the normalized coefficients are exactly the zeta-type sequences.
WeightVector act_on_weight(const WeylElement& w, const WeightVector& v);

// Coefficients sorted into the Levi-dominant representative (non-increasing
// per block); theta unchanged; idempotent.
WeightVector dominant_rep(const WeightVector& v);

// The unique mu with Lambda^g(mu,d) = w^{-1} o Lambda^g(lambda,d), for w in
// W0_g; computed from the permuted zeta sequence.
std::variant<Partition, PartitionPair> dot_action_mu(const WeylElement& w,
                                                     const WeightLabel& label);

}  // namespace ke
