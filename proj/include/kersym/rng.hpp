// Portable seeded pseudo-random numbers.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. The standard distributions are implementation defined, so bounded
// draws are done here by rejection: raw outputs at or above the largest
// multiple of n are discarded and the remainder modulo n is returned.
// Any implementation following these two rules reproduces our fixtures.

#ifndef KERSYM_RNG_HPP_
#define KERSYM_RNG_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace kersym {

  inline constexpr std::string_view rng_algorithm = "mt19937_64-rejmod";

  class Rng {
   public:
    explicit Rng(std::uint64_t seed) : _engine(seed) {}

    std::uint64_t next() {
      return _engine();
    }

    // Uniform in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
      // 2^64 mod n, computed without 128-bit arithmetic.
      std::uint64_t const excess = (0 - n) % n;
      std::uint64_t const limit  = 0 - excess;  // largest multiple of n (mod 2^64)
      std::uint64_t       x      = next();
      while (excess != 0 && x >= limit) {
        x = next();
      }
      return x % n;
    }

    // Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
      return lo + below(hi - lo + 1);
    }

    bool coin() {
      return below(2) == 1;
    }

    template <typename T>
    T const& pick(std::vector<T> const& xs) {
      return xs[static_cast<std::size_t>(below(xs.size()))];
    }

    // Fisher-Yates, from the back.
    template <typename T>
    void shuffle(std::vector<T>& xs) {
      for (std::size_t i = xs.size(); i > 1; --i) {
        auto j = static_cast<std::size_t>(below(i));
        std::swap(xs[i - 1], xs[j]);
      }
    }

   private:
    std::mt19937_64 _engine;
  };

}  // namespace kersym

#endif  // KERSYM_RNG_HPP_
