#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace sidon {

using Int = std::uint64_t;

/// Finite, strictly increasing set of positive integers.
///
/// Every constructor validates the ordering invariant, so any IntegerSet that
/// exists is sorted, duplicate-free and contains no zero.
class IntegerSet {
 public:
  IntegerSet() = default;
  IntegerSet(std::initializer_list<Int> elements);

  /// Takes ownership of an already sorted vector. Throws std::invalid_argument
  /// if the elements are not strictly increasing or contain 0.
  explicit IntegerSet(std::vector<Int> sorted_elements);

  /// Sorts and deduplicates arbitrary input; 0 is still rejected.
  static IntegerSet from_unsorted(std::vector<Int> elements);

  std::span<const Int> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  Int max() const;  // throws std::out_of_range on empty set
  bool contains(Int value) const noexcept;

  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }
  Int operator[](std::size_t i) const noexcept { return elements_[i]; }

  /// Elements <= limit.
  IntegerSet truncated(Int limit) const;
  /// Set difference, order preserved.
  IntegerSet without(const IntegerSet& other) const;
  bool is_subset_of(const IntegerSet& other) const;

  friend bool operator==(const IntegerSet&, const IntegerSet&) = default;

 private:
  std::vector<Int> elements_;
};

// Newline-delimited decimal text, one element per line.
std::string to_text(const IntegerSet& set);
IntegerSet parse_text(const std::string& text);

// JSON array of integers.
std::string to_json(const IntegerSet& set);
IntegerSet parse_json(const std::string& text);

std::ostream& operator<<(std::ostream& os, const IntegerSet& set);

}  // namespace sidon
