#include "adwpt/rng.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "adwpt/error.hpp"

namespace adwpt::rng {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(product >> 32);
    lo = static_cast<std::uint32_t>(product);
}

inline Counter round(const Counter& c, const Key& k) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, c[0], hi0, lo0);
    mulhilo(kMul1, c[2], hi1, lo1);
    return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

Counter philox4x32_10(Counter counter, Key key) noexcept {
    for (int r = 0; r < 10; ++r) {
        if (r > 0) {
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        counter = round(counter, key);
    }
    return counter;
}

Stream::Stream(std::uint64_t seed, std::uint64_t trial, std::uint32_t substream) noexcept
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      counter_{0u, substream, static_cast<std::uint32_t>(trial),
               static_cast<std::uint32_t>(trial >> 32)} {}

void Stream::refill() noexcept {
    buffer_ = philox4x32_10(counter_, key_);
    // Upper 16 bits of the substream word extend the block counter.
    if (++counter_[0] == 0) counter_[1] += 0x10000u;
    index_ = 0;
}

double Stream::exponential() noexcept { return -std::log(uniform_positive()); }

std::uint32_t Stream::below(std::uint32_t n) noexcept {
    std::uint64_t m = static_cast<std::uint64_t>((*this)()) * n;
    auto low = static_cast<std::uint32_t>(m);
    if (low < n) {
        const std::uint32_t threshold = (0u - n) % n;
        while (low < threshold) {
            m = static_cast<std::uint64_t>((*this)()) * n;
            low = static_cast<std::uint32_t>(m);
        }
    }
    return static_cast<std::uint32_t>(m >> 32);
}

PoissonTable::PoissonTable(double mean) : mean_(mean) {
    if (!(mean >= 0.0) || !std::isfinite(mean)) {
        throw DomainError("PoissonTable: mean must be nonnegative and finite");
    }
    if (mean == 0.0) {
        cdf_.push_back(1.0);
        return;
    }
    const double log_mean = std::log(mean);
    const auto last = static_cast<int>(std::ceil(mean + 40.0 * std::sqrt(mean) + 40.0));
    cdf_.reserve(static_cast<std::size_t>(last) + 1);
    double acc = 0.0;
    for (int k = 0; k <= last; ++k) {
        acc += std::exp(k * log_mean - mean - std::lgamma(k + 1.0));
        cdf_.push_back(std::min(acc, 1.0));
    }
    cdf_.back() = 1.0;
}

int PoissonTable::quantile(double u) const noexcept {
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    return static_cast<int>(std::min<std::ptrdiff_t>(it - cdf_.begin(),
                                                      static_cast<std::ptrdiff_t>(cdf_.size()) - 1));
}

int PoissonTable::positive(Stream& stream) const noexcept {
    const double p0 = cdf_.front();
    const int k = quantile(p0 + stream.uniform() * (1.0 - p0));
    return std::max(k, 1);
}

std::int64_t poisson(Stream& stream, double mean) {
    if (!(mean >= 0.0) || !std::isfinite(mean)) {
        throw DomainError("poisson: mean must be nonnegative and finite");
    }
    if (mean == 0.0) return 0;
    std::poisson_distribution<std::int64_t> dist(mean);
    return dist(stream);
}

}  // namespace adwpt::rng
