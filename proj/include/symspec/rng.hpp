#pragma once

#include <cstdint>
#include <random>

namespace symspec {

/// Deterministic seeded stream. mt19937_64 is fully specified by the
/// standard, so campaigns reproduce bit-identically across platforms.
/// std::uniform_int_distribution is implementation-defined and is avoided.
class Rng {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here, the
  /// samplers only need reproducible small parameters.
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Derive an independent per-sample stream (verification campaigns run
  /// samples in parallel; each sample reseeds from (seed, index)).
  static Rng substream(std::uint64_t seed, std::uint64_t index) {
    return Rng(seed * 0x9e3779b97f4a7c15ULL + index * 0xbf58476d1ce4e5b9ULL + 1);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace symspec
