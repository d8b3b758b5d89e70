#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace cirldp {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
/// Satisfies UniformRandomBitGenerator with 64-bit output; each 128-bit
/// block yields two outputs. Streams with different keys are independent,
/// so a path can be regenerated from (seed, index) alone.
class Philox4x32 {
 public:
  using result_type = std::uint64_t;
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  explicit Philox4x32(std::uint64_t key, std::uint64_t stream_offset = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Raw bijection used by the generator: 10 rounds on one counter block.
  static Counter block(Counter ctr, Key key);

 private:
  void refill();

  Key key_{};
  Counter counter_{};
  std::array<std::uint64_t, 2> buffer_{};
  int next_ = 2;
};

/// SplitMix64 finalizer; a bijective 64-bit mixer.
std::uint64_t splitmix64(std::uint64_t x);

/// Key for the substream of one path: depends only on (master_seed, path_index).
std::uint64_t derive_stream_key(std::uint64_t master_seed, std::uint64_t path_index);

/// The generator owned by path `path_index` of an experiment seeded with `master_seed`.
inline Philox4x32 path_stream(std::uint64_t master_seed, std::uint64_t path_index) {
  return Philox4x32(derive_stream_key(master_seed, path_index));
}

}  // namespace cirldp
