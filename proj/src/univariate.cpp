#include "riskgeom/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "riskgeom/errors.hpp"

namespace riskgeom {

RiskValue RiskValue::of(double v) {
    if (!std::isfinite(v)) throw ConfigError("risk value is not finite");
    return RiskValue{v};
}

namespace {

std::vector<std::size_t> ascending_order(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    return order;
}

void check_alpha(double alpha, bool allow_one, const char* what) {
    const bool ok = alpha > 0.0 && (allow_one ? alpha <= 1.0 : alpha < 1.0);
    if (!std::isfinite(alpha) || !ok) throw ConfigError(std::string(what) + ": level out of range");
}

}  // namespace

double tail_mean(std::span<const double> values, std::span<const double> weights, double alpha) {
    check_alpha(alpha, /*allow_one=*/true, "tail_mean");
    if (values.size() != weights.size() || values.empty())
        throw ConfigError("tail_mean: bad value/weight arrays");

    auto order = ascending_order(values);
    double remaining = alpha;
    double taken = 0.0;
    double acc = 0.0;
    for (auto it = order.rbegin(); it != order.rend() && remaining > 0.0; ++it) {
        const double take = std::min(weights[*it], remaining);
        acc += take * values[*it];
        taken += take;
        remaining -= take;
    }
    // taken == alpha except when total mass rounds slightly under alpha.
    return acc / taken;
}

double spectral_min(std::span<const double> values, std::span<const double> weights, double p) {
    if (!(std::isfinite(p)) || p < 1.0) throw ConfigError("spectral_min: exponent must be >= 1");
    if (values.size() != weights.size() || values.empty())
        throw ConfigError("spectral_min: bad value/weight arrays");

    auto order = ascending_order(values);
    double cum = 0.0;
    double prev_pow = 1.0;  // (1 - F_0)^p
    double acc = 0.0;
    for (std::size_t k : order) {
        cum += weights[k];
        const double surv = std::max(0.0, 1.0 - cum);
        const double cur_pow = std::pow(surv, p);
        acc += values[k] * (prev_pow - cur_pow);
        prev_pow = cur_pow;
    }
    return acc;
}

double power_max(std::span<const double> values, std::span<const double> weights, int n) {
    if (n < 1) throw ConfigError("power_max: need n >= 1");
    if (values.size() != weights.size() || values.empty())
        throw ConfigError("power_max: bad value/weight arrays");

    auto order = ascending_order(values);
    double cum = 0.0;
    double prev_pow = 0.0;  // F_0^n
    double acc = 0.0;
    for (std::size_t k : order) {
        cum += weights[k];
        const double cur_pow = std::pow(std::min(1.0, cum), static_cast<double>(n));
        acc += values[k] * (cur_pow - prev_pow);
        prev_pow = cur_pow;
    }
    return acc;
}

RiskValue var(const EmpiricalDist& dist, double alpha) {
    check_alpha(alpha, /*allow_one=*/false, "var");
    return RiskValue::of(-quantile(dist, alpha, QuantileKind::Strict));
}

RiskValue es(const EmpiricalDist& dist, double alpha) {
    check_alpha(alpha, /*allow_one=*/true, "es");
    const auto values = dist.scalar_values();
    std::vector<double> neg(values.size());
    for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -values[i];
    return RiskValue::of(tail_mean(neg, dist.weights(), alpha));
}

RiskValue em(const EmpiricalDist& dist, int n) {
    if (n < 1) throw ConfigError("em: need n >= 1");
    return RiskValue::of(
        -spectral_min(dist.scalar_values(), dist.weights(), static_cast<double>(n)));
}

RiskValue em_alpha(const EmpiricalDist& dist, double alpha) {
    check_alpha(alpha, /*allow_one=*/true, "em_alpha");
    return RiskValue::of(-spectral_min(dist.scalar_values(), dist.weights(), 1.0 / alpha));
}

RiskValue entropic(const EmpiricalDist& dist, double gamma) {
    if (!(std::isfinite(gamma)) || gamma <= 0.0)
        throw ConfigError("entropic: gamma must be positive");
    const auto values = dist.scalar_values();
    const auto weights = dist.weights();
    // gamma log E exp(-X/gamma), shifted by the max exponent.
    double shift = -values[0] / gamma;
    for (std::size_t i = 1; i < values.size(); ++i)
        shift = std::max(shift, -values[i] / gamma);
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
        acc += weights[i] * std::exp(-values[i] / gamma - shift);
    return RiskValue::of(gamma * (shift + std::log(acc)));
}

Interval cd_interval(const EmpiricalDist& dist, double alpha) {
    check_alpha(alpha, /*allow_one=*/true, "cd_interval");
    const auto values = dist.scalar_values();
    std::vector<double> neg(values.size());
    for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -values[i];
    const double p = 1.0 / alpha;
    const Interval iv{spectral_min(values, dist.weights(), p),
                      -spectral_min(neg, dist.weights(), p)};
    if (iv.lo > iv.hi + 1e-9) throw ConfigError("cd_interval: degenerate interval");
    return iv;
}

}  // namespace riskgeom
