#include <mcj/partition.hpp>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace mcj {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); i++) {
    if (parts_[i] < 0) {
      throw std::invalid_argument("partition parts must be nonnegative");
    }
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
}

Partition Partition::padded(int r) const {
  if (length() > r) {
    throw std::invalid_argument("partition " + to_string() + " has more than " +
                                std::to_string(r) + " parts");
  }
  std::vector<int> p(r, 0);
  for (int i = 0; i < r; i++) {
    p[i] = (*this)[i];
  }
  return Partition(std::move(p));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::length() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int x) { return x > 0; }));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); i++) {
    if (i > 0) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition Partition::parse(std::string_view s, int r) {
  std::vector<int> parts;
  while (!s.empty()) {
    auto comma = s.find(',');
    auto tok = s.substr(0, comma);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("bad partition token '" + std::string(tok) + "'");
    }
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts)).padded(r);
}

bool Partition::operator==(const Partition& other) const {
  int n = std::max(size(), other.size());
  for (int i = 0; i < n; i++) {
    if ((*this)[i] != other[i]) return false;
  }
  return true;
}

bool GradedRevLex::operator()(const Partition& a, const Partition& b) const {
  int wa = a.weight();
  int wb = b.weight();
  if (wa != wb) return wa < wb;
  int n = std::max(a.size(), b.size());
  for (int i = 0; i < n; i++) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

namespace {

void fill(int remaining, int max_part, int slot, std::vector<int>& cur,
          std::vector<Partition>& out) {
  if (slot == static_cast<int>(cur.size())) {
    if (remaining == 0) out.emplace_back(cur);
    return;
  }
  int slots_left = static_cast<int>(cur.size()) - slot;
  for (int v = std::min(remaining, max_part); v >= 0; v--) {
    if (v * slots_left < remaining) break;
    cur[slot] = v;
    fill(remaining - v, v, slot + 1, cur, out);
  }
  cur[slot] = 0;
}

}  // namespace

std::vector<Partition> partitions_of(int weight, int r) {
  if (weight < 0 || r < 1) throw std::invalid_argument("partitions_of: bad arguments");
  std::vector<Partition> out;
  std::vector<int> cur(r, 0);
  fill(weight, weight, 0, cur, out);
  return out;
}

std::vector<Partition> enumerate_partitions(int max_weight, int r) {
  if (max_weight < 0 || r < 1) throw std::invalid_argument("enumerate_partitions: bad arguments");
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; w++) {
    auto level = partitions_of(w, r);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

bool contains(const Partition& m, const Partition& k) {
  int n = std::max(m.size(), k.size());
  for (int i = 0; i < n; i++) {
    if (k[i] > m[i]) return false;
  }
  return true;
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) {
    throw std::invalid_argument("dominance order undefined for partitions of different weight");
  }
  int n = std::max(a.size(), b.size());
  int sa = 0;
  int sb = 0;
  for (int i = 0; i < n; i++) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return true;
}

}  // namespace mcj
