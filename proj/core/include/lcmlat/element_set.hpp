#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>

namespace lcmlat {

inline constexpr int kMaxElements = 64;

/// A subset of the elements {0, ..., 63} of a structure, stored as one word.
class ElementSet {
 public:
  using Word = std::uint64_t;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr Iterator() = default;
    constexpr explicit Iterator(Word rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    Word rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(Word bits) : bits_(bits) {}
  constexpr ElementSet(std::initializer_list<int> elements) {
    for (int e : elements) insert(e);
  }

  static constexpr ElementSet single(int e) { return ElementSet(Word{1} << e); }
  /// {0, ..., n-1}
  static constexpr ElementSet first(int n) {
    return ElementSet(n >= 64 ? ~Word{0} : (Word{1} << n) - 1);
  }

  constexpr Word bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
  constexpr bool is_subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  /// Smallest index; undefined on the empty set.
  constexpr int lowest() const { return std::countr_zero(bits_); }
  /// Largest index; undefined on the empty set.
  constexpr int highest() const { return 63 - std::countl_zero(bits_); }

  constexpr void insert(int e) { bits_ |= Word{1} << e; }
  constexpr void erase(int e) { bits_ &= ~(Word{1} << e); }

  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  /// Set difference.
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator-=(ElementSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr auto operator<=>(const ElementSet&) const = default;

 private:
  Word bits_ = 0;
};

}  // namespace lcmlat
