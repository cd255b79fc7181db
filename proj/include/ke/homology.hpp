#pragma once

#include "ke/roots.hpp"

namespace ke {

// One irreducible Levi constituent of a homology group: the dominant bar-side
// weight, plus its (mu, d) label when the weight is bar-Lambda^g(mu, d) /
// Gamma(mu, d).
struct HomologySummand {
  WeightVector weight;  // canonical dominant form
  std::optional<std::variant<Partition, PartitionPair>> mu;

  std::string mu_string() const;
  friend bool operator<(const HomologySummand& x, const HomologySummand& y) {
    return x.weight < y.weight;
  }
  friend bool operator==(const HomologySummand& x, const HomologySummand& y) {
    return x.weight == y.weight;
  }
};

// Degree-k piece of the u^- homology, as a canonically sorted summand list.
// At infinite rank distinct Weyl elements give distinct weights, so the list
// is duplicate-free (checked; a violation is a bug).
struct HomologyDecomposition {
  long long degree = 0;
  std::vector<HomologySummand> summands;

  void canonicalize(bool allow_duplicates = false);
  friend bool operator==(const HomologyDecomposition& x, const HomologyDecomposition& y);
  friend bool operator!=(const HomologyDecomposition& x, const HomologyDecomposition& y) {
    return !(x == y);
  }
};

// Route A: enumerate w in W0_{g,k}; mu = dot_action_mu(w, label); the summand
// is bar-Lambda^g(mu, d).
HomologyDecomposition h_route_g(const WeightLabel& label, long long k);

// Route B: place the untouched zbar values at N \ J and the sigma-permuted
// values along the J enumeration, take the dominant representative, and read
// mu off the sorted sequence. When 0 lies in S (family d with lambda'_1 = d/2)
// the placement uses sigma^0 = bar_map_inverse(sigma).
HomologyDecomposition h_route_relabel(const WeightLabel& label, long long k);

// Route C: enumerate w in the relabeled subsystem W0_{gbar,k}(lambda,d); the
// summand is [w^{-1}(bar-Lambda + rho)]^+ - rho.
HomologyDecomposition h_route_bar(const WeightLabel& label, long long k);

// Finite-rank homology of the unitarizable module with highest weight
// Gamma(lambda, d) (+ det_twist * sum(eps) for family a) over gl(m+n) /
// sp(2n) / so(2n) in the negative-level convention.
//  - d a nonnegative integer in D(g): truncation of the infinite-rank answer;
//    with verify=true the independent finite-subsystem route is run alongside
//    and must agree.
//  - d non-integral in the unitarizable range: free-module regime, H_0 only.
// Errors: non-unitarizable weights; so(2n) weights outside the equal-last-
// coordinates hypothesis; truncation-window violations.
HomologyDecomposition h_enright_finite(const WeightLabel& label, long long m,
                                       long long n, long long k,
                                       long long det_twist = 0,
                                       bool verify = false);

// The truncation filter by itself: does the infinite-rank summand mu survive
// restriction to the (m, n) window?
bool truncation_survives(const std::variant<Partition, PartitionPair>& mu,
                         Family family, long long m, long long n);

}  // namespace ke
