#include "ke/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ke {

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

long long Partition::sum() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition Partition::transpose() const {
  std::vector<long long> t;
  if (!parts_.empty()) {
    t.assign(parts_[0], 0);
    for (long long j = 1; j <= parts_[0]; ++j) {
      long long cnt = 0;
      for (long long p : parts_) {
        if (p >= j) ++cnt;
      }
      t[j - 1] = cnt;
    }
  }
  return Partition(std::move(t));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

Partition Partition::parse(const std::string& s) {
  std::vector<long long> parts;
  if (!s.empty()) {
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      try {
        parts.push_back(std::stoll(tok));
      } catch (const std::exception&) {
        throw std::invalid_argument("Partition: cannot parse '" + s + "'");
      }
    }
  }
  return Partition(std::move(parts));
}

PartitionPair PartitionPair::parse(const std::string& s) {
  auto bar = s.find('|');
  if (bar == std::string::npos)
    throw std::invalid_argument("PartitionPair: expected 'minus|plus' in '" + s + "'");
  return PartitionPair{Partition::parse(s.substr(0, bar)),
                       Partition::parse(s.substr(bar + 1))};
}

namespace {
void gen_partitions(long long remaining, long long max_part, std::vector<long long>& cur,
                    std::vector<Partition>& out, bool distinct) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  long long top = std::min(remaining, max_part);
  for (long long p = top; p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, distinct ? p - 1 : p, cur, out, distinct);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(long long n) {
  std::vector<Partition> out;
  std::vector<long long> cur;
  gen_partitions(n, n, cur, out, false);
  return out;
}

std::vector<Partition> strict_partitions_of(long long n) {
  std::vector<Partition> out;
  std::vector<long long> cur;
  gen_partitions(n, n, cur, out, true);
  return out;
}

}  // namespace ke
