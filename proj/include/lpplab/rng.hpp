#pragma once

#include <cstdint>
#include <limits>

namespace lpplab {

/// Splittable random stream. The state is a pure function of
/// (master_seed, stream_id, lane), so replica k can own stream k and the
/// sample sequence does not depend on which thread runs it.
///
/// The engine is xoshiro256** seeded through SplitMix64. Variates are drawn
/// with explicit transforms (no std:: distributions) so that sequences are
/// identical across standard library implementations.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t master_seed, std::uint64_t stream_id,
            std::uint64_t lane = 0);

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_id() const { return stream_id_; }
  std::uint64_t lane() const { return lane_; }

  /// Independent child stream; forking the same lane twice gives the same
  /// child.
  RngStream fork(std::uint64_t sublane) const;

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() { return next(); }
  std::uint64_t next();

  /// Uniform on [0, 1) with 53 bits of resolution.
  double uniform();
  /// Uniform on (0, 1].
  double uniform_open0();
  /// Exponential with the given rate (mean 1/rate).
  double exponential(double rate);
  /// Standard normal (Box-Muller, no cached second value).
  double normal();

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_id_;
  std::uint64_t lane_;
  std::uint64_t s_[4];
};

std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace lpplab
