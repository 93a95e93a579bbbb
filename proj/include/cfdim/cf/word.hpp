#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cfdim/support/errors.hpp"

namespace cfdim::cf {

using Digit = std::uint64_t;

/// A finite sequence of partial quotients a_1..a_n, each >= 1.
/// The empty word stands for the whole unit interval.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Digit> digits) : digits_(digits) { validate(); }
  explicit Word(std::vector<Digit> digits) : digits_(std::move(digits)) { validate(); }

  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }
  /// 1-based access, matching the usual a_k indexing.
  Digit at(std::size_t k) const { return digits_.at(k - 1); }
  Digit operator[](std::size_t i) const { return digits_[i]; }
  std::span<const Digit> digits() const noexcept { return digits_; }

  auto begin() const noexcept { return digits_.begin(); }
  auto end() const noexcept { return digits_.end(); }

  Word extended(Digit a) const {
    Word w = *this;
    w.push_back(a);
    return w;
  }

  void push_back(Digit a) {
    if (a == 0) throw validation_error("partial quotients must be >= 1");
    digits_.push_back(a);
  }

  /// First k digits.
  Word prefix(std::size_t k) const {
    if (k > size()) throw validation_error("prefix longer than word");
    return Word(std::vector<Digit>(digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(k)));
  }

  /// The word with a_k (1-based) removed.
  Word without(std::size_t k) const {
    if (k == 0 || k > size()) throw validation_error("deletion position out of range");
    std::vector<Digit> d = digits_;
    d.erase(d.begin() + static_cast<std::ptrdiff_t>(k - 1));
    return Word(std::move(d));
  }

  friend Word concat(const Word& u, const Word& v) {
    std::vector<Digit> d = u.digits_;
    d.insert(d.end(), v.digits_.begin(), v.digits_.end());
    return Word(std::move(d));
  }

  friend bool operator==(const Word&, const Word&) = default;

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(digits_[i]);
    }
    return out + ")";
  }

 private:
  void validate() const {
    for (Digit a : digits_)
      if (a == 0) throw validation_error("partial quotients must be >= 1");
  }

  std::vector<Digit> digits_;
};

/// Gap function f(n) = d*n + t with d >= 1, t >= 0.
struct LinearIndex {
  std::uint64_t d = 1;
  std::uint64_t t = 0;

  LinearIndex() = default;
  LinearIndex(std::uint64_t d_, std::uint64_t t_) : d(d_), t(t_) {
    if (d == 0) throw validation_error("linear index requires d >= 1");
  }

  std::uint64_t operator()(std::uint64_t n) const { return d * n + t; }
  friend bool operator==(const LinearIndex&, const LinearIndex&) = default;
};

}  // namespace cfdim::cf
