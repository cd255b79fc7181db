#pragma once

#include <map>
#include <string>
#include <vector>

#include "ke/seq.hpp"

namespace ke {

enum class Family { a, c, d };

char family_char(Family f);
Family family_of_char(char c);
// ā = a, c̄ = d, d̄ = c
Family bar_family(Family f);

// Finite-support element of the Weyl group in its permutation model:
// family a acts on Z, families c/d act on Z* through signed permutations
// (sigma(-i) = -sigma(i); only positive-index entries are stored). Family d
// additionally requires an even number of positive indices mapped to
// negatives; violating that is a construction error.
class WeylElement {
public:
  static WeylElement identity(Family f) { return WeylElement(f, {}); }
  // entries: i -> sigma(i); fixed points may be included and are dropped.
  static WeylElement make(Family f, const std::map<long long, long long>& entries);

  Family family() const { return fam_; }
  long long apply(long long i) const;
  bool is_identity() const { return map_.empty(); }
  // Largest index magnitude occurring among moved indices and their images.
  long long support_bound() const;
  const std::map<long long, long long>& entries() const { return map_; }

  std::string to_string() const;               // e.g. "c:1->-2,2->-1"
  static WeylElement parse(const std::string&);

  friend bool operator==(const WeylElement& x, const WeylElement& y) {
    return x.fam_ == y.fam_ && x.map_ == y.map_;
  }
  friend bool operator!=(const WeylElement& x, const WeylElement& y) { return !(x == y); }
  friend bool operator<(const WeylElement& x, const WeylElement& y) {
    if (x.fam_ != y.fam_) return x.fam_ < y.fam_;
    return x.map_ < y.map_;
  }

private:
  WeylElement(Family f, std::map<long long, long long> m) : fam_(f), map_(std::move(m)) {}
  Family fam_;
  std::map<long long, long long> map_;
};

// (s1 o s2)(i) = s1(s2(i)); throws on family mismatch.
WeylElement compose(const WeylElement& s1, const WeylElement& s2);
WeylElement inverse(const WeylElement& s);

// Minimal coset representative test: family a -- increasing on {i <= 0} and
// on {i >= 1}; families c/d -- increasing on N.
bool is_min_coset_rep(const WeylElement& s);

// Inversion-count length, defined on minimal coset representatives only:
//   a: #{(i,j) in ZxZ   : i <  j, sigma(i)  > sigma(j)}
//   c: #{(i,j) in NxN   : i <= j, sigma(-i) > sigma(j)}
//   d: #{(i,j) in NxN   : i <  j, sigma(-i) > sigma(j)}
long long length(const WeylElement& s);

// The complete set W0_{g,k} of minimal coset representatives of length k.
// Family a elements are generated from partitions of k, families c/d from
// partitions of k into distinct parts (d through the bar bijection).
std::vector<WeylElement> enumerate_w0(Family f, long long k);

// The length-preserving bijection W0_c -> W0_d of the c/d comparison:
// with j = #{i : sigma(i) < 0},
//   bar(i) = sigma(i)-1 for i <= j; bar(j+1) = +1 (j even) / -1 (j odd);
//   bar(i) = sigma(i-1)+1 for i >= j+2.
WeylElement bar_map(const WeylElement& s);
WeylElement bar_map_inverse(const WeylElement& s);

// {xi_{sigma(i)}} for sigma in W0_c and xi strictly decreasing negative,
// with the sign convention xi_{-i} = -xi_i.
LinSeq relabel_seq(const WeylElement& s, const LinSeq& xs);

}  // namespace ke
