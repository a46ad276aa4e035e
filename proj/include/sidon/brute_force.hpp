#pragma once

#include <cstdint>
#include <vector>

#include "sidon/integer_set.hpp"

// Exhaustive reference implementations. They share no code with the optimized
// routines and exist only to check them.
namespace sidon::brute {

std::uint64_t rep_count(const IntegerSet& a, int h, Int n);
std::uint64_t rep_count_two_sets(const IntegerSet& a, const IntegerSet& b, Int n);
bool is_sidon(const IntegerSet& a);
IntegerSet sumset(const std::vector<IntegerSet>& sets, Int horizon);
IntegerSet extract_T(const IntegerSet& s);
std::uint64_t z_statistic(const IntegerSet& s, Int horizon);
IntegerSet greedy_sidon(std::size_t k);

}  // namespace sidon::brute
