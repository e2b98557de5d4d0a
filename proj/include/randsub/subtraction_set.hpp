#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace randsub {

// A finite set of move sizes S = {k_1 < ... < k_t}, each k_i >= 1.
//
// Instances are immutable and always valid; construct them with make_set().
// Derived metadata (gcd, parity, offsets) is computed once on construction.
class SubtractionSet {
 public:
  using Element = std::uint32_t;

  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  Element max() const noexcept { return elements_.back(); }
  Element min() const noexcept { return elements_.front(); }
  Element gcd() const noexcept { return gcd_; }
  bool all_odd() const noexcept { return all_odd_; }
  std::uint64_t sum() const noexcept;

  // Exponent offsets: d_i = k_max - k_i for i < t, and d_t = k_max.
  std::vector<Element> d_values() const;

  // S - {k_max}. Requires size() >= 2.
  SubtractionSet without_max() const;
  // The first `count` elements. Requires 1 <= count <= size().
  SubtractionSet prefix(std::size_t count) const;
  // {m * k : k in S}.
  SubtractionSet scaled(Element m) const;

  bool contains(Element k) const;

  // "{3,5}"
  std::string to_string() const;

  friend bool operator==(const SubtractionSet&, const SubtractionSet&) = default;
  friend auto operator<=>(const SubtractionSet& a, const SubtractionSet& b) {
    return a.elements_ <=> b.elements_;
  }

 private:
  friend SubtractionSet make_set(std::span<const std::int64_t> elems);
  explicit SubtractionSet(std::vector<Element> sorted_unique);

  std::vector<Element> elements_;
  Element gcd_ = 0;
  bool all_odd_ = false;
};

// Validates, sorts and deduplicates. Throws ValidationError on empty input
// or on any entry that is not a positive 32-bit value.
SubtractionSet make_set(std::span<const std::int64_t> elems);
SubtractionSet make_set(std::initializer_list<std::int64_t> elems);

// Parses a comma-separated list such as "3,5". Throws ValidationError.
SubtractionSet parse_set(const std::string& text);

}  // namespace randsub
