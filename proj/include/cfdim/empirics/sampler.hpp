#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "cfdim/cf/expand.hpp"
#include "cfdim/support/parallel.hpp"

namespace cfdim::empirics {

using cf::Digit;

struct SampleConfig {
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  std::size_t digits_per_sample = 100;
  std::size_t precision_bits = 0;  // 0: 4 bits per digit + 256

  std::size_t bits() const { return precision_bits ? precision_bits : 4 * digits_per_sample + 256; }

  void validate() const {
    if (samples < 1) throw validation_error("samples must be >= 1");
    if (digits_per_sample < 1) throw validation_error("digits_per_sample must be >= 1");
    if (bits() < 8) throw validation_error("precision_bits must be >= 8");
  }
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Stream seed for one sample; depends only on (seed, index).
inline std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

/// Dyadic enclosure [k/2^b, (k+1)/2^b] of a uniform point, 0 < k < 2^b - 1.
inline cf::RationalInterval draw_enclosure(std::uint64_t seed, std::uint64_t index, std::size_t bits) {
  std::mt19937_64 rng(sample_seed(seed, index));
  const std::size_t limbs = (bits + 63) / 64;
  const std::size_t spare = limbs * 64 - bits;
  const BigInt scale = BigInt(1) << bits;
  std::vector<std::uint64_t> words(limbs);
  BigInt k;
  do {
    for (auto& w : words) w = rng();
    if (spare) words[0] >>= spare;  // words[0] is the most significant limb
    k = 0;
    for (auto w : words) k = (k << 64) | BigInt(w);
  } while (k == 0 || k + 1 >= scale);
  return {Rational(k, scale), Rational(k + 1, scale)};
}

/// First n digits of sample `index`, or nullopt when the enclosure cannot
/// certify them.
inline std::optional<std::vector<Digit>> draw_digits(const SampleConfig& cfg, std::uint64_t index, std::size_t n) {
  auto r = cf::expand_certified(draw_enclosure(cfg.seed, index, cfg.bits()), n);
  if (!r.complete) return std::nullopt;
  return std::move(r.digits);
}

/// All samples of a run; slot i depends only on (seed, i).
inline std::vector<std::optional<std::vector<Digit>>> draw_batch(const SampleConfig& cfg, std::size_t n,
                                                                  unsigned workers = 1) {
  cfg.validate();
  if (n > cfg.digits_per_sample)
    throw budget_exceeded("experiment needs " + std::to_string(n) + " digits per sample but the budget is " +
                          std::to_string(cfg.digits_per_sample));
  return parallel_map(cfg.samples, workers, [&](std::size_t i) { return draw_digits(cfg, i, n); });
}

}  // namespace cfdim::empirics
