#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cfdim/cf/word.hpp"
#include "cfdim/support/errors.hpp"

namespace cfdim::pressure {

using cf::Digit;

/// Finite digit set: either {1..M} or an explicit set of positive integers.
class Alphabet {
 public:
  static Alphabet full(Digit m) {
    if (m < 1) throw validation_error("alphabet bound M must be >= 1");
    std::vector<Digit> d(m);
    for (Digit i = 0; i < m; ++i) d[i] = i + 1;
    return Alphabet(std::move(d), true);
  }

  static Alphabet of(std::vector<Digit> digits) {
    std::sort(digits.begin(), digits.end());
    digits.erase(std::unique(digits.begin(), digits.end()), digits.end());
    if (digits.empty()) throw validation_error("alphabet must be non-empty");
    if (digits.front() < 1) throw validation_error("alphabet digits must be >= 1");
    return Alphabet(std::move(digits), false);
  }

  const std::vector<Digit>& digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  Digit max() const noexcept { return digits_.back(); }
  bool is_full_range() const noexcept { return full_; }

  std::string str() const {
    if (full_) return "1.." + std::to_string(digits_.size());
    std::string s = "{";
    for (std::size_t i = 0; i < digits_.size(); ++i) s += (i ? "," : "") + std::to_string(digits_[i]);
    return s + "}";
  }

 private:
  Alphabet(std::vector<Digit> d, bool full) : digits_(std::move(d)), full_(full) {}

  std::vector<Digit> digits_;
  bool full_ = false;
};

}  // namespace cfdim::pressure
