#pragma once

#include <string>
#include <vector>

namespace ke {

// Integer partition in canonical form: weakly decreasing positive parts,
// no trailing zeros stored. part(i) is 1-based and returns 0 beyond the
// stored length, so partitions behave as infinite weakly-decreasing
// sequences that are eventually zero.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<long long> parts);

  long long part(long long i) const {  // 1-based
    if (i < 1) throw std::invalid_argument("Partition::part: index must be >= 1");
    return i <= (long long)parts_.size() ? parts_[i - 1] : 0;
  }
  long long length() const { return (long long)parts_.size(); }
  long long sum() const;
  bool empty() const { return parts_.empty(); }
  const std::vector<long long>& parts() const { return parts_; }

  Partition transpose() const;

  std::string to_string() const;              // "3,1"; "" for the empty partition
  static Partition parse(const std::string&); // inverse of to_string

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

private:
  std::vector<long long> parts_;
};

inline Partition transpose(const Partition& p) { return p.transpose(); }

// Pair (lambda^-, lambda^+) labelling type-a highest weights.
struct PartitionPair {
  Partition minus;
  Partition plus;

  long long sum() const { return minus.sum() + plus.sum(); }
  std::string to_string() const { return minus.to_string() + "|" + plus.to_string(); }
  static PartitionPair parse(const std::string&);  // "minus|plus", e.g. "2,1|3"

  friend bool operator==(const PartitionPair& a, const PartitionPair& b) {
    return a.minus == b.minus && a.plus == b.plus;
  }
  friend bool operator!=(const PartitionPair& a, const PartitionPair& b) { return !(a == b); }
  friend bool operator<(const PartitionPair& a, const PartitionPair& b) {
    if (a.minus != b.minus) return a.minus < b.minus;
    return a.plus < b.plus;
  }
};

// All partitions of n, and all partitions of n into distinct parts.
std::vector<Partition> partitions_of(long long n);
std::vector<Partition> strict_partitions_of(long long n);

}  // namespace ke
