#pragma once

#include <cstdint>

namespace acop {

/// Reproducible random stream: xoshiro256++ seeded through SplitMix64 from
/// (seed, stream_id). Identical (seed, stream_id) reproduces identical
/// draws; distinct stream_ids get statistically independent states because
/// the full 256-bit state is re-derived from the hashed pair, not advanced.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64();

  /// Uniform on the open interval (0,1).
  double uniform();

  /// Uniform on (lo, hi).
  double uniform(double lo, double hi);

  /// Unit exponential.
  double exponential();

  /// Standard normal (polar method; second variate cached).
  double normal();

  /// Gamma(shape, 1), shape > 0 (Marsaglia-Tsang, with the power boost for
  /// shape < 1).
  double gamma(double shape);

 private:
  std::uint64_t s_[4];
  std::uint64_t seed_, stream_id_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace acop
