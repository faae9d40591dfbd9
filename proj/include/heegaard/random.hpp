#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace heegaard {

/// mt19937_64 with explicit bounded sampling, so sequences do not depend on the
/// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return v % n;
  }

  int index(std::size_t n) { return static_cast<int>(below(n)); }
  bool coin() { return (engine_() >> 63) != 0; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t k = items.size(); k > 1; --k) {
      std::swap(items[k - 1], items[below(k)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace heegaard
