#pragma once

#include <bit>
#include <compare>
#include <cstdint>

namespace graphoid {

// Set of variable indices over a universe of at most 64 variables,
// stored as one machine word. All operations are exact bit algebra.
class VarSet {
 public:
  constexpr VarSet() = default;

  static constexpr VarSet from_bits(std::uint64_t bits) { return VarSet(bits); }
  static constexpr VarSet single(int index) { return VarSet(std::uint64_t{1} << index); }
  static constexpr VarSet first_n(int n) {
    return VarSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int index) const { return (bits_ >> index) & 1; }
  constexpr bool contains_all(VarSet other) const { return (other.bits_ & ~bits_) == 0; }
  constexpr bool subset_of(VarSet other) const { return other.contains_all(*this); }
  constexpr bool intersects(VarSet other) const { return (bits_ & other.bits_) != 0; }
  constexpr bool disjoint_from(VarSet other) const { return !intersects(other); }

  // Index of the lowest member; undefined on the empty set.
  constexpr int lowest() const { return std::countr_zero(bits_); }

  constexpr VarSet with(int index) const { return VarSet(bits_ | (std::uint64_t{1} << index)); }
  constexpr VarSet without(int index) const { return VarSet(bits_ & ~(std::uint64_t{1} << index)); }

  friend constexpr VarSet operator|(VarSet a, VarSet b) { return VarSet(a.bits_ | b.bits_); }
  friend constexpr VarSet operator&(VarSet a, VarSet b) { return VarSet(a.bits_ & b.bits_); }
  friend constexpr VarSet operator-(VarSet a, VarSet b) { return VarSet(a.bits_ & ~b.bits_); }
  VarSet& operator|=(VarSet b) { bits_ |= b.bits_; return *this; }
  VarSet& operator&=(VarSet b) { bits_ &= b.bits_; return *this; }
  VarSet& operator-=(VarSet b) { bits_ &= ~b.bits_; return *this; }

  friend constexpr bool operator==(VarSet, VarSet) = default;
  friend constexpr auto operator<=>(VarSet a, VarSet b) { return a.bits_ <=> b.bits_; }

  // Iterates member indices in ascending order.
  class iterator {
   public:
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr bool operator!=(const iterator& other) const { return rest_ != other.rest_; }

   private:
    std::uint64_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  constexpr explicit VarSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

}  // namespace graphoid
