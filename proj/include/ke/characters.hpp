#pragma once

#include <map>

#include "ke/finite.hpp"

namespace ke {

// Exact integer Laurent polynomial in the weight-window variables: terms map
// an exponent vector to its coefficient. All identities are checked exactly.
struct FormalCharacter {
  std::map<IVec, long long> terms;

  void add(const IVec& e, long long c) {
    auto it = terms.find(e);
    if (it == terms.end()) {
      if (c != 0) terms.emplace(e, c);
    } else if ((it->second += c) == 0) {
      terms.erase(it);
    }
  }
  friend bool operator==(const FormalCharacter& x, const FormalCharacter& y) {
    return x.terms == y.terms;
  }
};

FormalCharacter ch_mul(const FormalCharacter& x, const FormalCharacter& y);
// Exact division by (1 - e^{-alpha}): suffix sums along the alpha-rays of the
// support. The quotient of an exact division never leaves the support box.
FormalCharacter ch_div_one_minus(const FormalCharacter& f, const IVec& alpha);

// Weyl character formula, alternating sum over W divided by the denominator.
// Guarded: |W| <= 2*10^4. Weight must be dominant integral.
FormalCharacter weyl_character(const HSCase& c, const std::vector<Rat>& lambda);

// Product of Laurent-Schur characters over the gl blocks of the Levi, each by
// the bialternant (alternating sum over the block symmetric group divided by
// the block Vandermonde).
FormalCharacter levi_character(const HSCase& c, const std::vector<Rat>& weight);

// Exact Euler-Poincare verification of the Kostant baseline:
//   sum_k (-1)^k sum_{summands} ch L(l, .) = ch L(g, lambda) * prod (1 - e^{-alpha})
// over the noncompact positive roots.
bool euler_check_kostant(const HSCase& c, const std::vector<Rat>& lambda);

// Same identity evaluated on an explicitly supplied summand table (used for
// corruption controls).
bool euler_check_summands(
    const HSCase& c, const std::vector<Rat>& lambda,
    const std::vector<std::vector<KostantSummand>>& summands_by_degree);

// Weyl dimension formula, for spot-checking characters.
long long weyl_dimension(const HSCase& c, const std::vector<Rat>& lambda);

}  // namespace ke
