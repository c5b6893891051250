#include "jamsim/rng.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/random/gamma_distribution.hpp>
#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_01.hpp>

namespace jamsim {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo)
{
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

}  // namespace

Philox4x32::Philox4x32(std::uint64_t key, std::uint64_t stream) noexcept
    : key_{static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)},
      ctr_{0u, 0u, static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)}
{
}

std::array<std::uint32_t, 4> Philox4x32::block(std::array<std::uint32_t, 4> ctr,
                                               std::array<std::uint32_t, 2> key) noexcept
{
    for (int round = 0; round < 10; ++round)
    {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, ctr[0], hi0, lo0);
        mulhilo(kMul1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

void Philox4x32::refill() noexcept
{
    out_ = block(ctr_, key_);
    if (++ctr_[0] == 0)
        ++ctr_[1];
    next_ = 0;
}

Philox4x32::result_type Philox4x32::operator()() noexcept
{
    if (next_ >= 4)
        refill();
    const std::uint64_t lo = out_[next_];
    const std::uint64_t hi = out_[next_ + 1];
    next_ += 2;
    return (hi << 32) | lo;
}

std::uint64_t mix64(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

Rng make_stream(std::uint64_t seed, StreamPurpose purpose, std::uint64_t a, std::uint64_t b)
{
    if (a > 0xFFFFFFFFull || b > 0xFFFFFFFFull)
        throw std::out_of_range("make_stream: stream coordinates must fit in 32 bits");
    const std::uint64_t key = mix64(seed ^ mix64(static_cast<std::uint64_t>(purpose)));
    return Rng(key, (a << 32) | b);
}

double standard_normal(Rng& rng)
{
    boost::random::normal_distribution<double> dist;
    return dist(rng);
}

double uniform01(Rng& rng)
{
    // 53 random mantissa bits, never returns 1.
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::complex<double> complex_normal(Rng& rng, double variance)
{
    const double s = std::sqrt(0.5 * variance);
    const double re = standard_normal(rng);
    const double im = standard_normal(rng);
    return {s * re, s * im};
}

double gamma_variate(Rng& rng, double shape, double scale)
{
    boost::random::gamma_distribution<double> dist(shape, scale);
    return dist(rng);
}

}  // namespace jamsim
