#include "eppinn/kinetics.hpp"

#include <algorithm>
#include <cmath>

namespace eppinn::kinetics {

TimeSeries::TimeSeries(std::vector<double> t, std::vector<double> v)
    : times(std::move(t)), values(std::move(v))
{
    if (times.size() != values.size())
        throw std::invalid_argument("time-series: times/values length mismatch");
    if (times.size() < 2)
        throw std::invalid_argument("time-series: need at least 2 samples");
    for (std::size_t i = 0; i < times.size(); ++i)
    {
        if (!std::isfinite(times[i]) || !std::isfinite(values[i]))
            throw std::invalid_argument("time-series: non-finite sample");
        if (i > 0 && times[i] <= times[i - 1])
            throw std::invalid_argument("time-series: times not strictly increasing");
    }
}

double derive_cbf(double cbv, double mtt)
{
    if (!(cbv >= 0.0) || !(mtt > 0.0))
        throw std::invalid_argument("invalid-params: cbv >= 0 and mtt > 0 required");
    return kUnitK * cbv / (mtt + kEpsCbf);
}

double derive_tmax(double delay, double mtt)
{
    return delay + 0.5 * mtt;
}

VoxelParams VoxelParams::from_primary(double cbv, double mtt, double delay)
{
    if (!std::isfinite(cbv) || !std::isfinite(mtt) || !std::isfinite(delay))
        throw std::invalid_argument("invalid-params: non-finite parameter");
    if (cbv < 0.0 || mtt <= 0.0)
        throw std::invalid_argument("invalid-params: cbv >= 0 and mtt > 0 required");
    VoxelParams p;
    p.cbv = cbv;
    p.mtt = mtt;
    p.delay = delay;
    p.cbf = derive_cbf(cbv, mtt);
    p.tmax = derive_tmax(delay, mtt);
    return p;
}

PiecewiseLinearAif::PiecewiseLinearAif(const TimeSeries& ts)
    : times_(ts.times), values_(ts.values)
{
    if (times_.size() < 2)
        throw std::invalid_argument("singular-aif: need at least 2 samples");
    cum_.resize(times_.size());
    cum_[0] = 0.0;
    for (std::size_t i = 1; i < times_.size(); ++i)
        cum_[i] = cum_[i - 1] +
                  0.5 * (values_[i] + values_[i - 1]) * (times_[i] - times_[i - 1]);
}

double PiecewiseLinearAif::value(double t) const
{
    if (t < times_.front() || t > times_.back())
        return 0.0;
    auto it = std::upper_bound(times_.begin(), times_.end(), t);
    std::size_t hi = std::min<std::size_t>(it - times_.begin(), times_.size() - 1);
    if (hi == 0)
        return values_[0];
    std::size_t lo = hi - 1;
    double w = (t - times_[lo]) / (times_[hi] - times_[lo]);
    return values_[lo] + w * (values_[hi] - values_[lo]);
}

double PiecewiseLinearAif::cumulative(double u) const
{
    if (u <= times_.front())
        return 0.0;
    if (u >= times_.back())
        return cum_.back();
    auto it = std::upper_bound(times_.begin(), times_.end(), u);
    std::size_t hi = it - times_.begin();
    std::size_t lo = hi - 1;
    // partial trapezoid: linear integrand integrates to a quadratic
    double v_u = value(u);
    return cum_[lo] + 0.5 * (values_[lo] + v_u) * (u - times_[lo]);
}

double PiecewiseLinearAif::integral(double lo, double hi) const
{
    if (hi <= lo)
        return 0.0;
    return cumulative(hi) - cumulative(lo);
}

double tissue_curve_box(const PiecewiseLinearAif& aif, const VoxelParams& p, double t)
{
    if (!std::isfinite(p.cbv) || !std::isfinite(p.mtt) || !std::isfinite(p.delay) ||
        !std::isfinite(t))
        throw std::invalid_argument("invalid-params: non-finite input");
    double hi = std::max(0.0, t - p.delay);
    double lo = std::max(0.0, t - p.delay - p.mtt);
    return p.cbf_rate() * aif.integral(lo, hi);
}

double physics_residual(double dCdt, const PiecewiseLinearAif& aif, const VoxelParams& p,
                        double t)
{
    if (!std::isfinite(dCdt))
        throw std::invalid_argument("invalid-params: non-finite dCdt");
    double rate = p.cbf_rate();
    return dCdt - rate * (aif.value(t - p.delay) - aif.value(t - p.delay - p.mtt));
}

} // namespace eppinn::kinetics
