#include "ke/weyl.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ke {

char family_char(Family f) {
  switch (f) {
    case Family::a: return 'a';
    case Family::c: return 'c';
    case Family::d: return 'd';
  }
  return '?';
}

Family family_of_char(char c) {
  switch (c) {
    case 'a': return Family::a;
    case 'c': return Family::c;
    case 'd': return Family::d;
  }
  throw std::invalid_argument(std::string("unknown family '") + c + "'");
}

Family bar_family(Family f) {
  switch (f) {
    case Family::a: return Family::a;
    case Family::c: return Family::d;
    case Family::d: return Family::c;
  }
  return f;
}

WeylElement WeylElement::make(Family f, const std::map<long long, long long>& entries) {
  std::map<long long, long long> m;
  std::set<long long> keys, images;
  for (auto [i, v] : entries) {
    if (i == v) continue;
    if (f != Family::a) {
      if (i < 1) throw std::invalid_argument("WeylElement: store positive indices only");
      if (v == 0) throw std::invalid_argument("WeylElement: 0 is not a valid image");
    }
    m[i] = v;
    keys.insert(i);
    images.insert(f == Family::a ? v : (v < 0 ? -v : v));
  }
  if (keys != images)
    throw std::invalid_argument("WeylElement: support map is not a bijection");
  if (f == Family::d) {
    long long negs = 0;
    for (auto [i, v] : m)
      if (v < 0) ++negs;
    if (negs % 2 != 0)
      throw std::invalid_argument("WeylElement: family d requires an even number of sign changes");
  }
  return WeylElement(f, std::move(m));
}

long long WeylElement::apply(long long i) const {
  if (fam_ != Family::a) {
    if (i == 0) throw std::invalid_argument("WeylElement: index 0 invalid for c/d");
    if (i < 0) return -apply(-i);
  }
  auto it = map_.find(i);
  return it == map_.end() ? i : it->second;
}

long long WeylElement::support_bound() const {
  long long b = 0;
  for (auto [i, v] : map_) {
    b = std::max(b, i < 0 ? -i : i);
    b = std::max(b, v < 0 ? -v : v);
  }
  return b;
}

std::string WeylElement::to_string() const {
  std::ostringstream os;
  os << family_char(fam_) << ':';
  bool first = true;
  for (auto [i, v] : map_) {
    if (!first) os << ',';
    first = false;
    os << i << "->" << v;
  }
  return os.str();
}

WeylElement WeylElement::parse(const std::string& s) {
  if (s.size() < 2 || s[1] != ':')
    throw std::invalid_argument("WeylElement: expected 'f:i->j,...' in '" + s + "'");
  Family f = family_of_char(s[0]);
  std::map<long long, long long> m;
  std::string body = s.substr(2);
  if (!body.empty()) {
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      auto arrow = tok.find("->");
      if (arrow == std::string::npos)
        throw std::invalid_argument("WeylElement: bad entry '" + tok + "'");
      m[std::stoll(tok.substr(0, arrow))] = std::stoll(tok.substr(arrow + 2));
    }
  }
  return make(f, m);
}

WeylElement compose(const WeylElement& s1, const WeylElement& s2) {
  if (s1.family() != s2.family())
    throw std::invalid_argument("compose: family mismatch");
  std::set<long long> candidates;
  for (const auto& s : {s1, s2}) {
    for (auto [i, v] : s.entries()) {
      candidates.insert(i);
      candidates.insert(s.family() == Family::a ? v : (v < 0 ? -v : v));
    }
  }
  std::map<long long, long long> m;
  for (long long i : candidates) m[i] = s1.apply(s2.apply(i));
  return WeylElement::make(s1.family(), m);
}

WeylElement inverse(const WeylElement& s) {
  std::map<long long, long long> m;
  for (auto [i, v] : s.entries()) {
    if (s.family() == Family::a || v > 0)
      m[v] = i;
    else
      m[-v] = -i;
  }
  return WeylElement::make(s.family(), m);
}

bool is_min_coset_rep(const WeylElement& s) {
  long long b = s.support_bound() + 1;
  if (s.family() == Family::a) {
    for (long long i = -b; i < 0; ++i)
      if (s.apply(i) >= s.apply(i + 1)) return false;
    for (long long i = 1; i < b; ++i)
      if (s.apply(i) >= s.apply(i + 1)) return false;
    return true;
  }
  for (long long i = 1; i < b; ++i)
    if (s.apply(i) >= s.apply(i + 1)) return false;
  return true;
}

long long length(const WeylElement& s) {
  if (!is_min_coset_rep(s))
    throw std::invalid_argument("length: defined on minimal coset representatives only");
  long long b = s.support_bound() + 1;
  long long count = 0;
  if (s.family() == Family::a) {
    for (long long i = -b; i <= b; ++i)
      for (long long j = i + 1; j <= b; ++j)
        if (s.apply(i) > s.apply(j)) ++count;
    return count;
  }
  bool strict = s.family() == Family::d;
  for (long long i = 1; i <= b; ++i)
    for (long long j = strict ? i + 1 : i; j <= b; ++j)
      if (s.apply(-i) > s.apply(j)) ++count;
  return count;
}

namespace {

// Family-a element of length |beta|: the unique descent sits at position 0,
// with sigma(1-t) = beta_t - t + 1 on the top of the nonpositive block.
WeylElement encode_a(const Partition& beta) {
  std::map<long long, long long> m;
  long long r = beta.length();
  std::set<long long> taken;
  for (long long t = 1; t <= r; ++t) {
    m[1 - t] = beta.part(t) - t + 1;
    taken.insert(beta.part(t) - t + 1);
  }
  // positive block: the complement, increasing
  long long x = -r;  // smallest candidate value not fixed below
  for (long long i = 1; i <= beta.part(1); ++i) {
    ++x;
    while (taken.count(x)) ++x;
    m[i] = x;
  }
  return WeylElement::make(Family::a, m);
}

// Family-c element of length |T| for a strict partition T: negate exactly the
// values of T, keep the positive values increasing.
WeylElement encode_c(const Partition& T) {
  std::map<long long, long long> m;
  long long j = T.length();
  std::set<long long> negated(T.parts().begin(), T.parts().end());
  for (long long t = 1; t <= j; ++t) m[t] = -T.part(t);
  long long x = 0;
  for (long long i = j + 1; i <= T.part(1); ++i) {
    ++x;
    while (negated.count(x)) ++x;
    m[i] = x;
  }
  return WeylElement::make(Family::c, m);
}

}  // namespace

std::vector<WeylElement> enumerate_w0(Family f, long long k) {
  if (k < 0) throw std::invalid_argument("enumerate_w0: k must be nonnegative");
  std::vector<WeylElement> out;
  if (k == 0) {
    out.push_back(WeylElement::identity(f));
    return out;
  }
  if (f == Family::a) {
    for (const Partition& beta : partitions_of(k)) out.push_back(encode_a(beta));
  } else if (f == Family::c) {
    for (const Partition& T : strict_partitions_of(k)) out.push_back(encode_c(T));
  } else {
    for (const Partition& T : strict_partitions_of(k)) out.push_back(bar_map(encode_c(T)));
  }
  for (const WeylElement& w : out) {
    if (!is_min_coset_rep(w) || length(w) != k)
      throw std::logic_error("enumerate_w0: encoding produced a wrong element");
  }
  std::sort(out.begin(), out.end());
  return out;
}

WeylElement bar_map(const WeylElement& s) {
  if (s.family() != Family::c || !is_min_coset_rep(s))
    throw std::invalid_argument("bar_map: argument must lie in W0_c");
  long long b = s.support_bound();
  long long j = 0;
  while (s.apply(j + 1) < 0) ++j;
  std::map<long long, long long> m;
  for (long long i = 1; i <= j; ++i) m[i] = s.apply(i) - 1;
  m[j + 1] = (j % 2 == 0) ? 1 : -1;
  for (long long i = j + 2; i <= b + 2; ++i) m[i] = s.apply(i - 1) + 1;
  return WeylElement::make(Family::d, m);
}

WeylElement bar_map_inverse(const WeylElement& s) {
  if (s.family() != Family::d || !is_min_coset_rep(s))
    throw std::invalid_argument("bar_map_inverse: argument must lie in W0_d");
  long long b = s.support_bound() + 1;
  long long p = 0;  // the unique positive index with |image| = 1
  for (long long i = 1; i <= b + 1; ++i) {
    long long v = s.apply(i);
    if (v == 1 || v == -1) {
      p = i;
      break;
    }
  }
  long long j = p - 1;
  std::map<long long, long long> m;
  for (long long i = 1; i <= j; ++i) m[i] = s.apply(i) + 1;
  for (long long i = j + 1; i <= b + 1; ++i) m[i] = s.apply(i + 1) - 1;
  WeylElement result = WeylElement::make(Family::c, m);
  if (!is_min_coset_rep(result) || bar_map(result) != s)
    throw std::logic_error("bar_map_inverse: round trip failed");
  return result;
}

LinSeq relabel_seq(const WeylElement& s, const LinSeq& xs) {
  if (s.family() != Family::c || !is_min_coset_rep(s))
    throw std::invalid_argument("relabel_seq: element must lie in W0_c");
  if (xs.origin != 1 || xs.tail_slope != Rat(-1) || !xs.strictly_monotone() ||
      !(xs.value(1) < Rat(0)))
    throw std::invalid_argument("relabel_seq: sequence must be strictly decreasing and negative");
  long long b = std::max(s.support_bound(), xs.head_end()) + 1;
  LinSeq out;
  out.origin = 1;
  for (long long i = 1; i <= b; ++i) {
    long long v = s.apply(i);
    out.head.push_back(v > 0 ? xs.value(v) : -xs.value(-v));
  }
  out.tail_intercept = xs.tail_intercept;
  out.tail_slope = xs.tail_slope;
  out.canonicalize();
  return out;
}

}  // namespace ke
