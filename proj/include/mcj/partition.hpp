#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace mcj {

// Weakly decreasing vector of nonnegative integers, zero-padded to the arity.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // Zero-padded to r parts; throws if length() > r.
  Partition padded(int r) const;

  int size() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return i < size() ? parts_[i] : 0; }
  const std::vector<int>& parts() const { return parts_; }

  int weight() const;
  int length() const;  // number of nonzero parts
  bool empty() const { return weight() == 0; }

  std::string to_string() const;  // "2,1,0"
  static Partition parse(std::string_view s, int r);

  bool operator==(const Partition& other) const;

 private:
  std::vector<int> parts_;
};

// Graded reverse-lex order: lower weight first, then lexicographically larger first.
struct GradedRevLex {
  bool operator()(const Partition& a, const Partition& b) const;
};

std::vector<Partition> enumerate_partitions(int max_weight, int r);

// Partitions of exactly `weight` with at most r parts, reverse-lex (dominance top first).
std::vector<Partition> partitions_of(int weight, int r);

bool contains(const Partition& m, const Partition& k);

// Throws std::invalid_argument when weights differ.
bool dominance_leq(const Partition& a, const Partition& b);

}  // namespace mcj
