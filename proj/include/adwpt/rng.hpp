#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

namespace adwpt::rng {

using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

/// One Philox4x32-10 block: a keyed bijection of the 128-bit counter.
Counter philox4x32_10(Counter counter, Key key) noexcept;

/// Independent random stream identified by (seed, trial, substream).
///
/// Block i of the stream is philox(counter = {i, substream, trial_lo, trial_hi},
/// key = seed). Streams never share counters, so the values drawn by a trial
/// do not depend on which thread runs it or in what order.
class Stream {
public:
    using result_type = std::uint32_t;

    Stream(std::uint64_t seed, std::uint64_t trial, std::uint32_t substream) noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() noexcept {
        if (index_ == 4) refill();
        return buffer_[index_++];
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept {
        const std::uint64_t hi = (*this)() >> 5;
        const std::uint64_t lo = (*this)() >> 6;
        return static_cast<double>(hi * 67108864u + lo) * 0x1.0p-53;
    }

    /// Uniform on (0, 1], safe for log().
    double uniform_positive() noexcept { return 1.0 - uniform(); }

    /// Uniform on [0, 1) with 32 random bits.
    double uniform32() noexcept { return static_cast<double>((*this)()) * 0x1.0p-32; }

    /// Unit-rate exponential variate.
    double exponential() noexcept;

    /// Uniform integer in [0, n).
    std::uint32_t below(std::uint32_t n) noexcept;

private:
    void refill() noexcept;

    Key key_;
    Counter counter_;
    Counter buffer_{};
    int index_ = 4;
};

/// Substream ids used by the simulator.
enum Substream : std::uint32_t {
    kPbCore = 0,
    kSnCore = 1,
    kOrientation = 2,
    kOuterField = 3,
    kTieBreak = 4,
};

/// Poisson sampler by inversion of a precomputed CDF table, for small means.
class PoissonTable {
public:
    explicit PoissonTable(double mean);

    double mean() const noexcept { return mean_; }

    /// Inverse CDF at u in [0, 1).
    int quantile(double u) const noexcept;

    int operator()(Stream& stream) const noexcept { return quantile(stream.uniform()); }

    /// Draw conditioned on the value being at least one.
    int positive(Stream& stream) const noexcept;

private:
    double mean_;
    std::vector<double> cdf_;
};

/// Poisson count for arbitrary means (std::poisson_distribution behind the stream).
std::int64_t poisson(Stream& stream, double mean);

}  // namespace adwpt::rng
