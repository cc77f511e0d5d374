#ifndef FROBSTAT_RNG_HPP
#define FROBSTAT_RNG_HPP

#include <cstdint>
#include <random>

namespace frobstat {

// Deterministic generator with manual uniform mapping. The distribution
// adapters in the standard library are implementation-defined, so seeds would
// not reproduce across standard libraries; (x >> 11) * 2^-53 does.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Inclusive bounds.
  int uniform_int(int lo, int hi) {
    const int span = hi - lo + 1;
    int v = lo + static_cast<int>(uniform01() * span);
    return v > hi ? hi : v;
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace frobstat

#endif
