#ifndef MAXLAYERS_STATS_HPP
#define MAXLAYERS_STATS_HPP

#include <cmath>
#include <cstddef>
#include <span>

namespace maxlayers {

struct Estimate {
    double mean = 0.0;
    double standard_error = 0.0;
    std::size_t samples = 0;
};

// Welford accumulator.
class RunningStats {
public:
    void add(double x) noexcept
    {
        ++n_;
        double const delta = x - mean_;
        mean_ += delta / static_cast<double>(n_);
        m2_ += delta * (x - mean_);
    }

    [[nodiscard]] auto count() const noexcept -> std::size_t { return n_; }
    [[nodiscard]] auto mean() const noexcept -> double { return mean_; }
    [[nodiscard]] auto variance() const noexcept -> double
    {
        return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0;
    }
    [[nodiscard]] auto standard_error() const noexcept -> double
    {
        return n_ > 1 ? std::sqrt(variance() / static_cast<double>(n_)) : 0.0;
    }
    [[nodiscard]] auto estimate() const noexcept -> Estimate { return {mean(), standard_error(), n_}; }

private:
    std::size_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

// Least-squares slope of log(y) against log(x).
[[nodiscard]] auto loglog_slope(std::span<double const> x, std::span<double const> y) -> double;

} // namespace maxlayers

#endif
