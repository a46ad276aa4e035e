#include "sidon/integer_set.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sidon {

namespace {

void validate(const std::vector<Int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) throw std::invalid_argument("IntegerSet: elements must be >= 1");
    if (i > 0 && v[i - 1] >= v[i]) {
      throw std::invalid_argument("IntegerSet: elements must be strictly increasing (" +
                                  std::to_string(v[i - 1]) + " then " + std::to_string(v[i]) + ")");
    }
  }
}

}  // namespace

IntegerSet::IntegerSet(std::initializer_list<Int> elements) : elements_(elements) {
  validate(elements_);
}

IntegerSet::IntegerSet(std::vector<Int> sorted_elements) : elements_(std::move(sorted_elements)) {
  validate(elements_);
}

IntegerSet IntegerSet::from_unsorted(std::vector<Int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return IntegerSet(std::move(elements));
}

Int IntegerSet::max() const {
  if (elements_.empty()) throw std::out_of_range("IntegerSet::max on empty set");
  return elements_.back();
}

bool IntegerSet::contains(Int value) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), value);
}

IntegerSet IntegerSet::truncated(Int limit) const {
  auto end = std::upper_bound(elements_.begin(), elements_.end(), limit);
  IntegerSet out;
  out.elements_.assign(elements_.begin(), end);
  return out;
}

IntegerSet IntegerSet::without(const IntegerSet& other) const {
  IntegerSet out;
  std::set_difference(elements_.begin(), elements_.end(), other.elements_.begin(),
                      other.elements_.end(), std::back_inserter(out.elements_));
  return out;
}

bool IntegerSet::is_subset_of(const IntegerSet& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

std::string to_text(const IntegerSet& set) {
  std::string out;
  out.reserve(set.size() * 8);
  for (Int v : set) {
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

IntegerSet parse_text(const std::string& text) {
  std::vector<Int> values;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Int v = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
    if (ec != std::errc{} || ptr != line.data() + line.size()) {
      throw std::invalid_argument("parse_text: bad integer on line " + std::to_string(line_no));
    }
    values.push_back(v);
  }
  return IntegerSet(std::move(values));
}

std::string to_json(const IntegerSet& set) {
  return nlohmann::json(std::vector<Int>(set.begin(), set.end())).dump();
}

IntegerSet parse_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("parse_json: expected a JSON array");
  std::vector<Int> values;
  values.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number_unsigned()) {
      throw std::invalid_argument("parse_json: elements must be positive integers");
    }
    values.push_back(e.get<Int>());
  }
  return IntegerSet(std::move(values));
}

std::ostream& operator<<(std::ostream& os, const IntegerSet& set) {
  os << '{';
  bool first = true;
  for (Int v : set) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os << '}';
}

}  // namespace sidon
