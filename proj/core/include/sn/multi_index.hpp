#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "sn/errors.hpp"

namespace sn {

/// Largest ambient variable count supported by the inline index storage.
inline constexpr int kMaxVars = 8;

/// Fixed-capacity integer vector used for exponent vectors.
///
/// Entries are signed so the same storage serves Laurent exponents; the
/// nonnegativity required for monomials of S_n is enforced by the factory
/// functions of MultiIndex users (Monomial, PolyElement).
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(int size);
  MultiIndex(std::initializer_list<int> values);
  explicit MultiIndex(std::span<const int> values);

  [[nodiscard]] int size() const { return size_; }
  [[nodiscard]] int operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return v_[static_cast<std::size_t>(i)]; }

  [[nodiscard]] int total() const;
  [[nodiscard]] int max_entry() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool nonnegative() const;
  /// Componentwise `*this <= other`.
  [[nodiscard]] bool dominated_by(const MultiIndex& other) const;

  [[nodiscard]] std::vector<int> to_vector() const;

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
  friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);
  friend MultiIndex operator-(const MultiIndex& a);

  friend bool operator==(const MultiIndex& a, const MultiIndex& b);
  /// Lexicographic on entries (sizes compared first).
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

 private:
  std::array<std::int32_t, kMaxVars> v_{};
  std::int8_t size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const MultiIndex& m);

/// Unit vector e_i (1-based coordinate) of length n.
MultiIndex unit_index(int n, int i);

/// A subset of the coordinates {1..n}, stored as a bit mask (bit i-1 <-> i).
class CoordSet {
 public:
  constexpr CoordSet() = default;
  CoordSet(std::initializer_list<int> coords);
  explicit CoordSet(std::span<const int> coords);
  static constexpr CoordSet from_bits(std::uint32_t bits) {
    CoordSet s;
    s.bits_ = bits;
    return s;
  }
  static CoordSet full(int n);
  static CoordSet single(int i);

  [[nodiscard]] constexpr std::uint32_t bits() const { return bits_; }
  [[nodiscard]] bool contains(int i) const { return ((bits_ >> (i - 1)) & 1u) != 0; }
  [[nodiscard]] int size() const;
  [[nodiscard]] bool empty() const { return bits_ == 0; }
  [[nodiscard]] int max() const;
  [[nodiscard]] int min() const;
  /// Sorted 1-based coordinates.
  [[nodiscard]] std::vector<int> elements() const;

  [[nodiscard]] CoordSet with(int i) const { return from_bits(bits_ | (1u << (i - 1))); }
  [[nodiscard]] CoordSet without(int i) const { return from_bits(bits_ & ~(1u << (i - 1))); }
  [[nodiscard]] CoordSet complement(int n) const { return from_bits(full(n).bits_ & ~bits_); }
  [[nodiscard]] bool subset_of(const CoordSet& other) const { return (bits_ & ~other.bits_) == 0; }
  [[nodiscard]] bool within(int n) const { return subset_of(full(n)); }

  friend CoordSet operator|(CoordSet a, CoordSet b) { return from_bits(a.bits_ | b.bits_); }
  friend CoordSet operator&(CoordSet a, CoordSet b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr bool operator==(CoordSet a, CoordSet b) = default;
  /// Orders by size, then by sorted element list.
  friend std::strong_ordering operator<=>(const CoordSet& a, const CoordSet& b);

 private:
  std::uint32_t bits_ = 0;
};

std::ostream& operator<<(std::ostream& os, const CoordSet& s);

/// All subsets of {1..n} with exactly k elements, in CoordSet order.
std::vector<CoordSet> subsets_of_size(int n, int k);

void check_arity(int n);

}  // namespace sn
