#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace evote {

// Deterministic seeded randomness for simulations. All draws go through
// explicit rejection sampling so a given seed produces the same stream on
// every platform, independent of standard-library distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : base_seed_(seed), engine_(splitmix(seed)) {}

  std::uint64_t word() { return engine_(); }

  bool coin() { return (word() & 1u) != 0; }

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    if ((bound & (bound - 1)) == 0) return word() & (bound - 1);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = word();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform big integer in [0, bound). bound must be positive.
  mpz_class below(const mpz_class& bound) {
    if (bound <= 0) throw std::invalid_argument("Rng::below: bound must be positive");
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    const unsigned top_shift = static_cast<unsigned>(words * 64 - bits);
    std::vector<std::uint64_t> buf(words);
    mpz_class x;
    do {
      for (auto& w : buf) w = word();
      buf.back() >>= top_shift;
      mpz_import(x.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, buf.data());
    } while (x >= bound);
    return x;
  }

  // Independent child stream; deterministic in (seed, label) only, so forked
  // streams do not depend on how much the parent has been consumed.
  Rng fork(std::uint64_t label) const {
    return Rng(splitmix(base_seed_ + 0x9e3779b97f4a7c15ULL * (label + 1)));
  }

 private:
  static std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::uint64_t base_seed_;
  std::mt19937_64 engine_;
};

}  // namespace evote
