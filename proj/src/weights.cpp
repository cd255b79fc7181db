#include "ke/weights.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ke {

namespace {

long long abs_ceil(const Rat& v) {
  long long a = v.num() < 0 ? -v.num() : v.num();
  return a / v.den() + 1;
}

LinSeq ls_shift(const LinSeq& s, const Rat& c) {
  LinSeq out = s;
  for (Rat& v : out.head) v += c;
  out.tail_intercept += c;
  return out;
}

LinSeq ls_add(const LinSeq& a, const LinSeq& b) {
  if (a.origin != b.origin) throw std::logic_error("ls_add: origin mismatch");
  LinSeq out;
  out.origin = a.origin;
  long long end = std::max(a.head_end(), b.head_end());
  for (long long i = a.origin; i <= end; ++i) out.head.push_back(a.value(i) + b.value(i));
  out.tail_intercept = a.tail_intercept + b.tail_intercept;
  out.tail_slope = a.tail_slope + b.tail_slope;
  out.canonicalize();
  return out;
}

LinSeq ls_sub(const LinSeq& a, const LinSeq& b) {
  LinSeq nb = b;
  for (Rat& v : nb.head) v = -v;
  nb.tail_intercept = -nb.tail_intercept;
  nb.tail_slope = -nb.tail_slope;
  return ls_add(a, nb);
}

}  // namespace

bool WeightLabel::in_domain() const {
  if (!d.is_integer() || d < Rat(0)) return false;
  if (family == Family::a) {
    const PartitionPair& p = lam_pair();
    return Rat(p.minus.transpose().part(1) + p.plus.transpose().part(1)) <= d;
  }
  const Partition& p = lam_p();
  Partition t = p.transpose();
  if (family == Family::c) return Rat(t.part(1)) <= d;
  return Rat(t.part(1) + t.part(2)) <= d;
}

void WeightLabel::require_domain() const {
  if (!in_domain())
    throw std::invalid_argument("label " + to_string() + " lies outside D(g)");
}

std::string WeightLabel::lam_string() const {
  if (family == Family::a) return lam_pair().to_string();
  return lam_p().to_string();
}

std::string WeightLabel::to_string() const {
  std::ostringstream os;
  os << family_char(family) << ":(" << lam_string() << "),d=" << d.to_string();
  return os.str();
}

WeightVector WeightVector::canonicalized() const {
  WeightVector v = *this;
  v.pos.canonicalize();
  if (v.neg) v.neg->canonicalize();
  return v;
}

std::string WeightVector::to_text() const {
  std::ostringstream os;
  if (tag.finite) {
    os << "(";
    bool first = true;
    for (long long i = 1 - tag.m; i <= tag.n; ++i) {
      if (tag.family != Family::a && i < 1) continue;
      if (!first) os << ",";
      first = false;
      os << coeff(i).to_string();
    }
    os << ")";
    return os.str();
  }
  if (neg) os << "neg" << neg->to_string() << " ";
  os << "eps" << pos.to_string() << " theta=" << theta.to_string();
  return os.str();
}

bool operator==(const WeightVector& x, const WeightVector& y) {
  WeightVector a = x.canonicalized(), b = y.canonicalized();
  if (!(a.tag == b.tag) || a.theta != b.theta) return false;
  if (a.pos != b.pos) return false;
  if (a.neg.has_value() != b.neg.has_value()) return false;
  return !a.neg || *a.neg == *b.neg;
}

bool operator<(const WeightVector& x, const WeightVector& y) {
  WeightVector a = x.canonicalized(), b = y.canonicalized();
  auto key = [](const LinSeq& s) {
    return std::make_tuple(s.origin, s.head, s.tail_intercept, s.tail_slope);
  };
  auto ka = std::make_tuple(a.neg ? key(*a.neg) : key(LinSeq{}), key(a.pos), a.theta);
  auto kb = std::make_tuple(b.neg ? key(*b.neg) : key(LinSeq{}), key(b.pos), b.theta);
  return ka < kb;
}

WeightVector weight_add(const WeightVector& x, const WeightVector& y) {
  if (!(x.tag == y.tag)) throw std::logic_error("weight_add: tag mismatch");
  WeightVector out = x;
  out.pos = ls_add(x.pos, y.pos);
  if (x.neg) out.neg = ls_add(*x.neg, *y.neg);
  out.theta = x.theta + y.theta;
  return out;
}

WeightVector weight_sub(const WeightVector& x, const WeightVector& y) {
  if (!(x.tag == y.tag)) throw std::logic_error("weight_sub: tag mismatch");
  WeightVector out = x;
  out.pos = ls_sub(x.pos, y.pos);
  if (x.neg) out.neg = ls_sub(*x.neg, *y.neg);
  out.theta = x.theta - y.theta;
  return out;
}

bool CofiniteSet::contains(long long x) const {
  if (x < from) return false;
  return !std::binary_search(excluded.begin(), excluded.end(), x);
}

long long CofiniteSet::kth(long long k) const {
  if (k < 1) throw std::invalid_argument("CofiniteSet::kth: 1-based");
  long long x = from;
  long long seen = 0;
  while (true) {
    if (contains(x)) {
      if (++seen == k) return x;
    }
    ++x;
  }
}

std::vector<long long> CofiniteSet::first(long long count) const {
  std::vector<long long> out;
  long long x = from;
  while ((long long)out.size() < count) {
    if (contains(x)) out.push_back(x);
    ++x;
  }
  return out;
}

bool ZetaData::zeta_has_zero() const {
  if (label.family == Family::a) return false;
  return zeta.contains(Rat(0));
}

ZetaData zeta_data(const WeightLabel& label) {
  label.require_domain();
  ZetaData z;
  z.label = label;
  const Rat d = label.d;

  if (label.family != Family::a) {
    const Partition& lam = label.lam_p();
    Partition lamt = lam.transpose();
    LinSeq zeta, zbar;
    zeta.origin = zbar.origin = 1;
    zeta.tail_slope = zbar.tail_slope = Rat(-1);
    if (label.family == Family::c) {
      for (long long i = 1; i <= lamt.length(); ++i)
        zeta.head.push_back(Rat(lamt.part(i) - i) - d);
      zeta.tail_intercept = -d;
      for (long long i = 1; i <= lam.length(); ++i)
        zbar.head.push_back(Rat(lam.part(i) - i + 1) + d);
      zbar.tail_intercept = Rat(1) + d;
    } else {
      Rat half = d * Rat(1, 2);
      for (long long i = 1; i <= lamt.length(); ++i)
        zeta.head.push_back(Rat(lamt.part(i) - i + 1) - half);
      zeta.tail_intercept = Rat(1) - half;
      for (long long i = 1; i <= lam.length(); ++i)
        zbar.head.push_back(Rat(lam.part(i) - i) + half);
      zbar.tail_intercept = half;
    }
    zeta.canonicalize();
    zbar.canonicalize();
    z.zeta = zeta;
    z.zbar = zbar;

    // Zero-sum pairs of zbar. Beyond B the tail is below -zbar_1 and no
    // partner can exist; B is derived from the sequence, then checked.
    Rat top = zbar.value(1);
    long long B = std::max<long long>(zbar.head_end(),
                                      abs_ceil(zbar.tail_intercept) + abs_ceil(top)) + 2;
    if (!(zbar.value(B + 1) < -top) || !(zbar.value(B + 1) < Rat(0)))
      throw std::logic_error("zeta_data: pair window bound failed");
    std::set<long long> matched;
    for (long long i = 1; i <= B; ++i) {
      for (long long j = i; j <= B; ++j) {
        if ((zbar.value(i) + zbar.value(j)).is_zero()) {
          z.n_pairs.emplace_back(i, j);
          if (i != j) z.n_pairs.emplace_back(j, i);
          matched.insert(i);
          matched.insert(j);
        }
      }
    }
    std::sort(z.n_pairs.begin(), z.n_pairs.end());
    z.j_set = CofiniteSet{1, {matched.begin(), matched.end()}};
    for (long long i = 1; i <= B + 1; ++i) {
      if (zbar.value(i).is_zero()) {
        z.zbar_zero_index = i;
        break;
      }
    }
    CofiniteSet j0 = z.j_set;
    if (z.zbar_zero_index) {
      auto it = std::find(j0.excluded.begin(), j0.excluded.end(), *z.zbar_zero_index);
      if (it == j0.excluded.end())
        throw std::logic_error("zeta_data: zbar zero index should be matched by (i,i)");
      j0.excluded.erase(it);
    }
    z.j0_set = j0;
    return z;
  }

  // family a: two-sided data
  const PartitionPair& lam = label.lam_pair();
  Partition lpt = lam.plus.transpose();
  Partition lmt = lam.minus.transpose();

  ZSeq zeta, zbar;
  zeta.pos.origin = zeta.neg.origin = zbar.pos.origin = zbar.neg.origin = 1;
  // zeta_i = (lam+)'_i - i + 1 (i >= 1); zeta_{1-j} = -(lam-)'_j + j + d
  for (long long i = 1; i <= lpt.length(); ++i)
    zeta.pos.head.push_back(Rat(lpt.part(i) - i + 1));
  zeta.pos.tail_intercept = Rat(1);
  zeta.pos.tail_slope = Rat(-1);
  for (long long j = 1; j <= lmt.length(); ++j)
    zeta.neg.head.push_back(Rat(-lmt.part(j) + j) + d);
  zeta.neg.tail_intercept = d;
  zeta.neg.tail_slope = Rat(1);
  // zbar_i = lam+_i - i (i >= 1); zbar_{1-j} = -lam-_j + j - 1 - d
  for (long long i = 1; i <= lam.plus.length(); ++i)
    zbar.pos.head.push_back(Rat(lam.plus.part(i) - i));
  zbar.pos.tail_intercept = Rat(0);
  zbar.pos.tail_slope = Rat(-1);
  for (long long j = 1; j <= lam.minus.length(); ++j)
    zbar.neg.head.push_back(Rat(-lam.minus.part(j) + j - 1) - d);
  zbar.neg.tail_intercept = Rat(-1) - d;
  zbar.neg.tail_slope = Rat(1);
  zeta.pos.canonicalize();
  zeta.neg.canonicalize();
  zbar.pos.canonicalize();
  zbar.neg.canonicalize();
  z.zeta_a = zeta;
  z.zbar_a = zbar;

  // Cross-block collisions zbar_i = zbar_j (i <= 0 < j). The pos block is
  // bounded above by zbar_1, the neg block below by its j = 1 value.
  Rat pos_top = zbar.pos.value(1);
  Rat neg_bot = zbar.neg.value(1);
  long long Bpos = std::max<long long>(zbar.pos.head_end(),
                                       abs_ceil(zbar.pos.tail_intercept) + abs_ceil(neg_bot)) + 2;
  long long Bneg = std::max<long long>(zbar.neg.head_end(),
                                       abs_ceil(zbar.neg.tail_intercept) + abs_ceil(pos_top)) + 2;
  if (!(zbar.pos.value(Bpos + 1) < neg_bot) || !(zbar.neg.value(Bneg + 1) > pos_top))
    throw std::logic_error("zeta_data: collision window bound failed");
  std::set<long long> matched_pos, matched_negj;
  for (long long j = 1; j <= Bneg; ++j) {
    for (long long i = 1; i <= Bpos; ++i) {
      if (zbar.neg.value(j) == zbar.pos.value(i)) {
        z.n_pairs.emplace_back(1 - j, i);  // (index <= 0, index >= 1)
        matched_negj.insert(j);
        matched_pos.insert(i);
      }
    }
  }
  std::sort(z.n_pairs.begin(), z.n_pairs.end());
  z.j_set = CofiniteSet{1, {matched_pos.begin(), matched_pos.end()}};          // J_+
  z.j_minus = CofiniteSet{1, {matched_negj.begin(), matched_negj.end()}};      // J_- at j = 1-i
  return z;
}

WeightVector lambda_weight(const WeightLabel& label) {
  label.require_domain();
  WeightVector v;
  v.tag = AlgebraTag::infinite(label.family, false);
  v.pos.origin = 1;
  v.theta = label.d;
  if (label.family == Family::a) {
    const PartitionPair& lam = label.lam_pair();
    Partition lpt = lam.plus.transpose();
    Partition lmt = lam.minus.transpose();
    for (long long i = 1; i <= lpt.length(); ++i) v.pos.head.push_back(Rat(lpt.part(i)));
    LinSeq neg;
    neg.origin = 1;
    for (long long j = 1; j <= lmt.length(); ++j) neg.head.push_back(Rat(-lmt.part(j)));
    v.neg = neg;
  } else {
    Partition lamt = label.lam_p().transpose();
    for (long long i = 1; i <= lamt.length(); ++i) v.pos.head.push_back(Rat(lamt.part(i)));
  }
  return v.canonicalized();
}

WeightVector bar_lambda_weight_raw(const WeightLabel& label) {
  WeightVector v;
  v.tag = AlgebraTag::infinite(label.family, true);
  v.pos.origin = 1;
  if (label.family == Family::a) {
    const PartitionPair& lam = label.lam_pair();
    for (long long i = 1; i <= lam.plus.length(); ++i)
      v.pos.head.push_back(Rat(lam.plus.part(i)));
    LinSeq neg;
    neg.origin = 1;
    for (long long j = 1; j <= lam.minus.length(); ++j)
      neg.head.push_back(Rat(-lam.minus.part(j)));
    v.neg = neg;
    v.theta = -label.d;
  } else {
    const Partition& lam = label.lam_p();
    for (long long i = 1; i <= lam.length(); ++i) v.pos.head.push_back(Rat(lam.part(i)));
    // theta coefficient: -d <theta_g,K> / <theta_gbar,K>
    Rat rg = label.family == Family::d ? Rat(1, 2) : Rat(1);
    Rat rbar = bar_family(label.family) == Family::d ? Rat(1, 2) : Rat(1);
    v.theta = -label.d * rg / rbar;
  }
  return v.canonicalized();
}

WeightVector bar_lambda_weight(const WeightLabel& label) {
  label.require_domain();
  return bar_lambda_weight_raw(label);
}

WeightVector gamma_weight(const WeightLabel& label, long long m, long long n) {
  if (n < 1 || (label.family == Family::a && m < 1))
    throw std::invalid_argument("gamma_weight: rank must be positive");
  const Rat d = label.d;
  WeightVector v;
  v.tag = AlgebraTag::truncated(label.family, true, label.family == Family::a ? m : 0, n);
  v.pos.origin = 1;
  if (label.family == Family::a) {
    const PartitionPair& lam = label.lam_pair();
    if (lam.plus.part(n + 1) != 0 || lam.minus.part(m + 1) != 0)
      throw std::invalid_argument("gamma_weight: label does not fit the (m,n) window");
    for (long long i = 1; i <= n; ++i) v.pos.head.push_back(Rat(lam.plus.part(i)));
    LinSeq neg;
    neg.origin = 1;
    for (long long j = 1; j <= m; ++j) neg.head.push_back(-d - Rat(lam.minus.part(j)));
    v.neg = neg;
  } else {
    const Partition& lam = label.lam_p();
    if (lam.part(n + 1) != 0)
      throw std::invalid_argument("gamma_weight: label does not fit the rank-n window");
    Rat add = label.family == Family::c ? d : d * Rat(1, 2);  // gbar = d resp. c
    for (long long i = 1; i <= n; ++i) v.pos.head.push_back(Rat(lam.part(i)) + add);
  }
  return v;
}

WeightVector rho_vector(const AlgebraTag& tag) {
  WeightVector v;
  v.tag = tag;
  v.pos.origin = 1;
  v.theta = Rat(0);
  if (tag.finite) {
    for (long long i = 1; i <= tag.n; ++i) v.pos.head.push_back(tag.rho_coeff(i));
    if (tag.algebra() == Family::a) {
      LinSeq neg;
      neg.origin = 1;
      for (long long j = 1; j <= tag.m; ++j) neg.head.push_back(tag.rho_coeff(1 - j));
      v.neg = neg;
    }
    return v;
  }
  if (tag.algebra() == Family::d) {
    v.pos.tail_intercept = Rat(1);
  }
  v.pos.tail_slope = Rat(-1);
  if (tag.algebra() == Family::a) {
    LinSeq neg;  // value at i <= 0 is -i = j - 1 with j = 1 - i
    neg.origin = 1;
    neg.tail_intercept = Rat(-1);
    neg.tail_slope = Rat(1);
    v.neg = neg;
  }
  return v;
}

WeightVector act_on_weight(const WeylElement& w, const WeightVector& v) {
  if (v.tag.finite)
    throw std::invalid_argument("act_on_weight: infinite-rank weights only");
  if (w.family() != v.tag.algebra())
    throw std::invalid_argument("act_on_weight: family mismatch");
  const Rat q = v.theta;
  WeylElement winv = inverse(w);
  WeightVector out = v;

  if (v.tag.algebra() != Family::a) {
    const Rat shift = q * v.tag.theta_k();
    auto eta = [&](long long i) -> Rat {
      return i >= 1 ? v.pos.value(i) - shift : -(v.pos.value(-i) - shift);
    };
    long long B = std::max(w.support_bound(), v.pos.head_end()) + 1;
    LinSeq pos;
    pos.origin = 1;
    for (long long i = 1; i <= B; ++i) pos.head.push_back(eta(winv.apply(i)) + shift);
    pos.tail_intercept = v.pos.tail_intercept;
    pos.tail_slope = v.pos.tail_slope;
    pos.canonicalize();
    out.pos = pos;
    return out;
  }

  if (!v.neg) throw std::logic_error("act_on_weight: family-a weight without negative block");
  auto eta = [&](long long i) -> Rat { return v.coeff(i) + (i <= 0 ? q : Rat(0)); };
  long long B = std::max({w.support_bound(), v.pos.head_end(), v.neg->head_end()}) + 1;
  LinSeq pos, neg;
  pos.origin = neg.origin = 1;
  for (long long i = 1; i <= B; ++i) pos.head.push_back(eta(winv.apply(i)));
  for (long long j = 1; j <= B + 1; ++j) neg.head.push_back(eta(winv.apply(1 - j)) - q);
  pos.tail_intercept = v.pos.tail_intercept;
  pos.tail_slope = v.pos.tail_slope;
  neg.tail_intercept = v.neg->tail_intercept;
  neg.tail_slope = v.neg->tail_slope;
  pos.canonicalize();
  neg.canonicalize();
  out.pos = pos;
  out.neg = neg;
  return out;
}

namespace {

// Sort an eventually-linear block into weakly monotone order. increasing =
// false sorts non-increasing (the positive blocks); true sorts non-decreasing
// (the family-a negative block in its j coordinate). The affine tail already
// sits beyond every head value, so only a finite window needs sorting.
LinSeq sort_block(const LinSeq& s, bool increasing) {
  if (s.tail_slope.is_zero()) {
    // eventually-constant block (finite-rank windows): the head must stay on
    // the correct side of the constant
    LinSeq out = s;
    std::sort(out.head.begin(), out.head.end());
    if (!increasing) std::reverse(out.head.begin(), out.head.end());
    if (!out.head.empty()) {
      const Rat& boundary = out.head.back();
      if (increasing ? boundary > s.tail_intercept : boundary < s.tail_intercept)
        throw std::logic_error("dominant_rep: head crosses a constant tail");
    }
    out.canonicalize();
    return out;
  }
  if ((increasing && s.tail_slope != Rat(1)) || (!increasing && s.tail_slope != Rat(-1)))
    throw std::logic_error("dominant_rep: tail slope incompatible with sort direction");
  long long W = s.head_end();
  if (W < s.origin) return s;  // pure tail, already sorted
  auto cmp_tail_safe = [&](long long candidate) {
    // all head values must precede tail values beyond the window
    Rat next = s.value(candidate + 1);
    for (const Rat& h : s.head)
      if (increasing ? h > next : h < next) return false;
    return true;
  };
  while (!cmp_tail_safe(W)) ++W;
  LinSeq out;
  out.origin = s.origin;
  for (long long i = s.origin; i <= W; ++i) out.head.push_back(s.value(i));
  std::sort(out.head.begin(), out.head.end());
  if (!increasing) std::reverse(out.head.begin(), out.head.end());
  out.tail_intercept = s.tail_intercept;
  out.tail_slope = s.tail_slope;
  out.canonicalize();
  return out;
}

}  // namespace

WeightVector dominant_rep(const WeightVector& v) {
  WeightVector out = v;
  out.pos = sort_block(v.pos, false);
  if (v.neg) out.neg = sort_block(*v.neg, true);
  return out;
}

std::variant<Partition, PartitionPair> dot_action_mu(const WeylElement& w,
                                                     const WeightLabel& label) {
  label.require_domain();
  if (w.family() != label.family)
    throw std::invalid_argument("dot_action_mu: family mismatch");
  if (!is_min_coset_rep(w))
    throw std::invalid_argument("dot_action_mu: w must be a minimal coset representative");
  ZetaData z = zeta_data(label);
  const Rat d = label.d;

  auto build_partition = [](std::vector<Rat>& vals, const char* what) {
    std::vector<long long> parts;
    for (const Rat& v : vals) {
      if (!v.is_integer() || v < Rat(0))
        throw std::logic_error(std::string("dot_action_mu: non-partition ") + what);
      parts.push_back(v.as_integer());
    }
    return Partition(parts);  // validates weak decrease
  };

  if (label.family != Family::a) {
    auto zeta_hat = [&](long long i) -> Rat {
      return i >= 1 ? z.zeta.value(i) : -z.zeta.value(-i);
    };
    long long B = std::max(w.support_bound(), z.zeta.head_end()) + 2;
    std::vector<Rat> mupt;
    for (long long i = 1; i <= B; ++i) {
      Rat offset = label.family == Family::c ? Rat(i) + d : Rat(i - 1) + d * Rat(1, 2);
      mupt.push_back(zeta_hat(w.apply(i)) + offset);
    }
    Partition mu_t = build_partition(mupt, "transpose");
    return mu_t.transpose();
  }

  if (!z.zeta_a) throw std::logic_error("dot_action_mu: missing family-a data");
  long long B = std::max({w.support_bound(), z.zeta_a->pos.head_end(),
                          z.zeta_a->neg.head_end()}) + 2;
  std::vector<Rat> plus_t, minus_t;
  for (long long i = 1; i <= B; ++i)
    plus_t.push_back(z.zeta_a->value_at(w.apply(i)) + Rat(i - 1));
  for (long long j = 1; j <= B; ++j)
    minus_t.push_back(Rat(j) + d - z.zeta_a->value_at(w.apply(1 - j)));
  Partition mu_plus = build_partition(plus_t, "plus transpose").transpose();
  Partition mu_minus = build_partition(minus_t, "minus transpose").transpose();
  return PartitionPair{mu_minus, mu_plus};
}

}  // namespace ke
