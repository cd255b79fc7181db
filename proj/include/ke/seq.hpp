#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ke/partition.hpp"
#include "ke/rational.hpp"

namespace ke {

// Eventually-linear sequence over indices {origin, origin+1, ...}:
// an explicit head followed by the affine tail
//     value(i) = tail_intercept + tail_slope * i.
// Canonical form keeps the head minimal (its last entry disagrees with the
// tail formula, or the head is empty).
//
// The strictly monotone instances with slope -1/+1 carry the zeta-type data;
// weight coefficient sequences reuse the same storage with slope 0 tails.
struct LinSeq {
  long long origin = 1;
  std::vector<Rat> head;
  Rat tail_intercept = Rat(0);
  Rat tail_slope = Rat(0);

  Rat value(long long i) const {
    if (i < origin) throw std::invalid_argument("LinSeq::value: index below origin");
    long long off = i - origin;
    if (off < (long long)head.size()) return head[off];
    return tail_intercept + tail_slope * Rat(i);
  }
  long long head_end() const { return origin + (long long)head.size() - 1; }

  void canonicalize();
  LinSeq canonicalized() const {
    LinSeq s = *this;
    s.canonicalize();
    return s;
  }

  // Strict monotonicity in the direction of tail_slope (which must be +-1),
  // testable on the head plus the first tail value.
  bool strictly_monotone() const;

  // Every value lies in Z (returns 1) or in 1/2+Z (returns 2); nullopt if mixed.
  std::optional<int> lattice() const;

  // x == value(i) for some i >= origin?  Requires strict monotonicity.
  bool contains(const Rat& x) const;

  std::string to_string() const;

  friend bool operator==(const LinSeq& a, const LinSeq& b) {
    LinSeq x = a.canonicalized(), y = b.canonicalized();
    return x.origin == y.origin && x.head == y.head &&
           x.tail_intercept == y.tail_intercept && x.tail_slope == y.tail_slope;
  }
  friend bool operator!=(const LinSeq& a, const LinSeq& b) { return !(a == b); }
};

// Builds a LinSeq from explicitly sampled values at origin..origin+n-1 plus the
// declared tail; canonicalizes. Throws if the last samples disagree with the tail.
LinSeq linseq_from_samples(long long origin, const std::vector<Rat>& samples,
                           const Rat& tail_intercept, const Rat& tail_slope);

// {p_i - i + shift} (or {p'_i - i + shift}), strictly decreasing over i >= 1.
LinSeq rho_shifted_seq(const Partition& p, const Rat& shift, bool use_transpose);

// For strictly decreasing s with values in Z or 1/2+Z: the strictly decreasing
// enumeration of {x in the same lattice : -x not in image(s)}. Involution.
LinSeq dual_partner(const LinSeq& s);

// Window certified to decide dual-pairness of (s1, s2).
long long dual_pair_window(const LinSeq& s1, const LinSeq& s2);

// True iff image(s1) and -image(s2) tile the lattice exactly once. The check
// runs on [-window, window]; throws if the window is too small to certify.
bool is_dual_pair(const LinSeq& s1, const LinSeq& s2, long long window);

// Two-sided sequence over Z used by the type-a data: pos holds indices >= 1,
// neg holds indices <= 0 re-indexed by j = 1 - i (both blocks extend to +inf
// in storage order).
struct ZSeq {
  LinSeq pos;  // value at i >= 1
  LinSeq neg;  // value at i <= 0 stored at index 1 - i

  Rat value_at(long long i) const { return i >= 1 ? pos.value(i) : neg.value(1 - i); }

  friend bool operator==(const ZSeq& a, const ZSeq& b) {
    return a.pos == b.pos && a.neg == b.neg;
  }
};

}  // namespace ke
