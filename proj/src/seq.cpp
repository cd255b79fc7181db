#include "ke/seq.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ke {

namespace {

// Smallest integer bound B with |v| <= B.
long long abs_bound(const Rat& v) {
  long long a = v.num() < 0 ? -v.num() : v.num();
  return a / v.den() + 1;
}

// Lattice class of a value: den must be 1 or 2; returns 1 for Z, 2 for 1/2+Z.
std::optional<int> lattice_of(const Rat& v) {
  if (v.den() == 1) return 1;
  if (v.den() == 2) return 2;
  return std::nullopt;
}

}  // namespace

void LinSeq::canonicalize() {
  while (!head.empty()) {
    long long i = head_end();
    if (head.back() != tail_intercept + tail_slope * Rat(i)) break;
    head.pop_back();
  }
}

bool LinSeq::strictly_monotone() const {
  if (tail_slope != Rat(1) && tail_slope != Rat(-1)) return false;
  bool inc = tail_slope == Rat(1);
  for (size_t t = 0; t + 1 < head.size(); ++t) {
    if (inc ? !(head[t] < head[t + 1]) : !(head[t] > head[t + 1])) return false;
  }
  if (!head.empty()) {
    Rat first_tail = tail_intercept + tail_slope * Rat(head_end() + 1);
    if (inc ? !(head.back() < first_tail) : !(head.back() > first_tail)) return false;
  }
  return true;
}

std::optional<int> LinSeq::lattice() const {
  std::optional<int> l = lattice_of(tail_intercept);
  for (const Rat& v : head) {
    auto lv = lattice_of(v);
    if (!lv) return std::nullopt;
    if (!l) l = lv;
    if (*lv != *l) return std::nullopt;
  }
  return l;
}

bool LinSeq::contains(const Rat& x) const {
  if (!strictly_monotone())
    throw std::logic_error("LinSeq::contains requires a strictly monotone sequence");
  for (const Rat& v : head) {
    if (v == x) return true;
  }
  // solve tail_intercept + slope*i = x
  Rat i = (x - tail_intercept) / tail_slope;
  if (!i.is_integer()) return false;
  return i.as_integer() >= std::max(origin, head_end() + 1);
}

std::string LinSeq::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t t = 0; t < head.size(); ++t) {
    if (t) os << ",";
    os << head[t].to_string();
  }
  if (!head.empty()) os << ",";
  os << "... " << tail_intercept.to_string();
  if (tail_slope == Rat(1)) os << "+i";
  else if (tail_slope == Rat(-1)) os << "-i";
  else if (!tail_slope.is_zero()) os << (tail_slope.to_string()) << "*i";
  os << " @i>=" << std::max(origin, head_end() + 1) << ")";
  return os.str();
}

LinSeq linseq_from_samples(long long origin, const std::vector<Rat>& samples,
                           const Rat& tail_intercept, const Rat& tail_slope) {
  LinSeq s;
  s.origin = origin;
  s.head = samples;
  s.tail_intercept = tail_intercept;
  s.tail_slope = tail_slope;
  s.canonicalize();
  return s;
}

LinSeq rho_shifted_seq(const Partition& p, const Rat& shift, bool use_transpose) {
  Partition q = use_transpose ? p.transpose() : p;
  LinSeq s;
  s.origin = 1;
  for (long long i = 1; i <= q.length(); ++i) s.head.push_back(Rat(q.part(i) - i) + shift);
  s.tail_intercept = shift;
  s.tail_slope = Rat(-1);
  s.canonicalize();
  return s;
}

LinSeq dual_partner(const LinSeq& s) {
  if (s.tail_slope != Rat(-1) || !s.strictly_monotone())
    throw std::invalid_argument("dual_partner: sequence must be strictly decreasing");
  auto lat = s.lattice();
  if (!lat) throw std::invalid_argument("dual_partner: mixed integer/half-integer values");

  // Tail of s covers every lattice point <= intercept - t0 consecutively, so
  // b = { x < t0 - intercept : -x not a head value }, eventually consecutive.
  long long t0 = std::max(s.origin, s.head_end() + 1);
  Rat cut = Rat(t0) - s.tail_intercept;  // b elements are the lattice points < cut
  long long head_abs = 1;
  for (const Rat& v : s.head) head_abs = std::max(head_abs, abs_bound(v));

  // First lattice point strictly below cut.
  Rat x = cut - Rat(1);
  if (*lat == 2 && x.den() != 2) x = cut - Rat(1, 2);
  if (*lat == 1 && x.den() != 1) throw std::logic_error("dual_partner: lattice misalignment");

  Rat floor_val = Rat(-head_abs - 2);
  std::vector<Rat> vals;
  for (; !(x < floor_val); x = x - Rat(1)) {
    bool excluded = false;
    for (const Rat& v : s.head) {
      if (v == -x) {
        excluded = true;
        break;
      }
    }
    if (!excluded) vals.push_back(x);
  }
  if (vals.empty()) throw std::logic_error("dual_partner: empty window");

  LinSeq b;
  b.origin = 1;
  b.head = vals;
  long long last_index = (long long)vals.size();
  b.tail_intercept = vals.back() + Rat(last_index);
  b.tail_slope = Rat(-1);
  b.canonicalize();
  if (!b.strictly_monotone()) throw std::logic_error("dual_partner: result not decreasing");
  return b;
}

long long dual_pair_window(const LinSeq& s1, const LinSeq& s2) {
  long long w = 2;
  for (const LinSeq* s : {&s1, &s2}) {
    long long t0 = std::max(s->origin, s->head_end() + 1);
    w = std::max(w, abs_bound(s->value(s->origin)) + 2);
    w = std::max(w, abs_bound(s->value(t0)) + 2);
  }
  return w;
}

bool is_dual_pair(const LinSeq& s1, const LinSeq& s2, long long window) {
  if (s1.tail_slope != Rat(-1) || s2.tail_slope != Rat(-1) || !s1.strictly_monotone() ||
      !s2.strictly_monotone())
    throw std::invalid_argument("is_dual_pair: sequences must be strictly decreasing");
  if (s1.origin != 1 || s2.origin != 1)
    throw std::invalid_argument("is_dual_pair: sequences must be indexed from 1");
  auto l1 = s1.lattice(), l2 = s2.lattice();
  if (!l1 || !l2) throw std::invalid_argument("is_dual_pair: mixed parity");
  long long needed = dual_pair_window(s1, s2);
  if (window < needed)
    throw std::invalid_argument("is_dual_pair: window " + std::to_string(window) +
                                " too small to certify (need " + std::to_string(needed) + ")");
  if (*l1 != *l2) return false;

  // Outside [-window, window] the patterns are pure complementary tails, so
  // the windowed exact-cover check certifies the whole lattice.
  Rat x = *l1 == 2 ? Rat(2 * window - 1, 2) : Rat(window);
  for (; !(x < Rat(-window)); x = x - Rat(1)) {
    int cover = (s1.contains(x) ? 1 : 0) + (s2.contains(-x) ? 1 : 0);
    if (cover != 1) return false;
  }
  return true;
}

}  // namespace ke
