#include "sn/multi_index.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <string>

namespace sn {

DimensionError::DimensionError(int expected, int got)
    : Error("dimension mismatch: expected n=" + std::to_string(expected) +
            ", got n=" + std::to_string(got)) {}

NotStabilized::NotStabilized(int cap, int last_value)
    : Error("not stabilized: truncated kernel dimension still changing at degree cap " +
            std::to_string(cap) + " (last value " + std::to_string(last_value) + ")") {}

FactorizationError::FactorizationError(std::string step, const std::string& detail)
    : Error("factorization failed at step '" + step + "': " + detail), step_(std::move(step)) {}

void check_arity(int n) {
  if (n < 0 || n > kMaxVars) {
    throw ArgumentError("ambient variable count " + std::to_string(n) + " outside [0, " +
                        std::to_string(kMaxVars) + "]");
  }
}

MultiIndex::MultiIndex(int size) {
  check_arity(size);
  size_ = static_cast<std::int8_t>(size);
}

MultiIndex::MultiIndex(std::initializer_list<int> values)
    : MultiIndex(std::span<const int>(values.begin(), values.size())) {}

MultiIndex::MultiIndex(std::span<const int> values) : MultiIndex(static_cast<int>(values.size())) {
  std::copy(values.begin(), values.end(), v_.begin());
}

int MultiIndex::total() const {
  int s = 0;
  for (int i = 0; i < size_; ++i) s += v_[i];
  return s;
}

int MultiIndex::max_entry() const {
  int m = 0;
  for (int i = 0; i < size_; ++i) m = std::max(m, v_[i]);
  return m;
}

bool MultiIndex::is_zero() const {
  for (int i = 0; i < size_; ++i)
    if (v_[i] != 0) return false;
  return true;
}

bool MultiIndex::nonnegative() const {
  for (int i = 0; i < size_; ++i)
    if (v_[i] < 0) return false;
  return true;
}

bool MultiIndex::dominated_by(const MultiIndex& other) const {
  for (int i = 0; i < size_; ++i)
    if (v_[i] > other.v_[i]) return false;
  return true;
}

std::vector<int> MultiIndex::to_vector() const { return {v_.begin(), v_.begin() + size_}; }

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r = a;
  for (int i = 0; i < a.size_; ++i) r.v_[i] += b.v_[i];
  return r;
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r = a;
  for (int i = 0; i < a.size_; ++i) r.v_[i] -= b.v_[i];
  return r;
}

MultiIndex operator-(const MultiIndex& a) {
  MultiIndex r = a;
  for (int i = 0; i < a.size_; ++i) r.v_[i] = -r.v_[i];
  return r;
}

bool operator==(const MultiIndex& a, const MultiIndex& b) {
  if (a.size_ != b.size_) return false;
  return std::equal(a.v_.begin(), a.v_.begin() + a.size_, b.v_.begin());
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  for (int i = 0; i < a.size_; ++i) {
    if (auto c = a.v_[i] <=> b.v_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& m) {
  os << '(';
  for (int i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
  return os << ')';
}

MultiIndex unit_index(int n, int i) {
  MultiIndex e(n);
  e[i - 1] = 1;
  return e;
}

CoordSet::CoordSet(std::initializer_list<int> coords)
    : CoordSet(std::span<const int>(coords.begin(), coords.size())) {}

CoordSet::CoordSet(std::span<const int> coords) {
  for (int c : coords) {
    if (c < 1 || c > kMaxVars) throw ArgumentError("coordinate " + std::to_string(c) + " out of range");
    bits_ |= 1u << (c - 1);
  }
}

CoordSet CoordSet::full(int n) { return from_bits(n >= 32 ? ~0u : ((1u << n) - 1u)); }

CoordSet CoordSet::single(int i) { return from_bits(1u << (i - 1)); }

int CoordSet::size() const { return std::popcount(bits_); }

int CoordSet::max() const { return bits_ == 0 ? 0 : 32 - std::countl_zero(bits_); }

int CoordSet::min() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

std::vector<int> CoordSet::elements() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if ((bits_ >> i) & 1u) out.push_back(i + 1);
  return out;
}

std::strong_ordering operator<=>(const CoordSet& a, const CoordSet& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  auto ea = a.elements();
  auto eb = b.elements();
  return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
}

std::ostream& operator<<(std::ostream& os, const CoordSet& s) {
  os << '{';
  bool first = true;
  for (int c : s.elements()) {
    os << (first ? "" : ",") << c;
    first = false;
  }
  return os << '}';
}

std::vector<CoordSet> subsets_of_size(int n, int k) {
  std::vector<CoordSet> out;
  for (std::uint32_t b = 0; b < (1u << n); ++b) {
    if (std::popcount(b) == k) out.push_back(CoordSet::from_bits(b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sn
