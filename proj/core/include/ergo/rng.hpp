#pragma once

#include <array>
#include <cstdint>

namespace ergo {

/// Philox4x32-10 block cipher (Salmon et al., SC'11). Stateless: maps a
/// 128-bit counter and 64-bit key to 128 pseudo-random bits.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key);

/// Counter-based stream. Streams are keyed by (seed, stream, substream);
/// distinct keys give statistically independent sequences, and a stream's
/// output depends only on its key and how many values were drawn, never on
/// thread scheduling.
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint32_t substream = 0)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          stream_lo_(static_cast<std::uint32_t>(stream)),
          stream_hi_(static_cast<std::uint32_t>(stream >> 32)),
          substream_(substream) {}

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    /// Uniform double in [0,1) with 53 random bits.
    double uniform();
    /// Uniform double in (0,1] (safe for log()).
    double uniform_pos();
    /// Standard normal via Box-Muller (second value cached).
    double normal();

  private:
    void refill();

    std::array<std::uint32_t, 2> key_;
    std::uint32_t stream_lo_, stream_hi_, substream_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int pos_ = 4;  // buffer exhausted
    bool have_cached_normal_ = false;
    double cached_normal_ = 0.0;
};

}  // namespace ergo
