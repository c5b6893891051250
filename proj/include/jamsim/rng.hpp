#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <limits>

namespace jamsim {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
///
/// The 64-bit key selects an independent family of sequences and the 64-bit
/// stream id selects one sequence inside it; the remaining 64 counter bits
/// index blocks within the stream. Any (key, stream) pair can be constructed
/// directly, so results never depend on evaluation order.
class Philox4x32
{
  public:
    using result_type = std::uint64_t;

    Philox4x32(std::uint64_t key, std::uint64_t stream) noexcept;

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept;

    /// Raw block function, exposed for known-answer tests.
    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                              std::array<std::uint32_t, 2> key) noexcept;

  private:
    void refill() noexcept;

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> ctr_;
    std::array<std::uint32_t, 4> out_{};
    int next_ = 4;
};

using Rng = Philox4x32;

/// Tags separating the substreams drawn from one master seed.
enum class StreamPurpose : std::uint32_t
{
    Drop = 1,
    Blanking,
    Scheduling,
    Jammer,
    UeFading,
    JammerFading,
    Estimation,
    DetectionH1,
    DetectionH0,
    Calibration,
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Substream for (seed, purpose, a, b); a and b must fit in 32 bits.
Rng make_stream(std::uint64_t seed, StreamPurpose purpose, std::uint64_t a, std::uint64_t b = 0);

double standard_normal(Rng& rng);
double uniform01(Rng& rng);
/// Zero-mean circularly symmetric complex Gaussian with E|x|^2 = variance.
std::complex<double> complex_normal(Rng& rng, double variance);
/// Gamma(shape, scale).
double gamma_variate(Rng& rng, double shape, double scale);

}  // namespace jamsim
