#pragma once

#include <cstdint>
#include <vector>

namespace toxspan {

// SplitMix64. Every seeded procedure in the toolkit (splits, synthesis,
// parameter init, epoch shuffling) draws from this generator so that results
// are identical across runs, platforms and standard libraries; std::shuffle
// and the std <random> distributions are implementation-defined and are
// deliberately not used.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) via fixed-point multiply.
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  // Uniform in [0, 1) with 53 bits of mantissa.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double next_in(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      using std::swap;
      swap(v[i - 1], v[j]);
    }
  }

private:
  std::uint64_t state_;
};

// Derives an independent stream seed, e.g. per SSL iteration.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 g(seed ^ (0xa0761d6478bd642full + stream * 0xe7037ed1a0b428dbull));
  return g.next();
}

} // namespace toxspan
