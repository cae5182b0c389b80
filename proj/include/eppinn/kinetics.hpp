/* kinetics.hpp - tracer-kinetic forward model with box residue function.
 *
 * Concentration curves follow the convolution model
 *   C(t) = CBF_rate * integral of C_a over the window [t-delay-MTT, t-delay],
 * where CBF_rate = cbv/(mtt + eps_cbf) in 1/s. CBF is derived from CBV and
 * MTT (central volume principle), Tmax from delay and MTT.
 */
#ifndef EPPINN_KINETICS_HPP
#define EPPINN_KINETICS_HPP

#include <stdexcept>
#include <vector>

namespace eppinn::kinetics {

// Seconds-to-minutes conversion for CBF. The only place /min enters.
inline constexpr double kUnitK = 60.0;
// Regularizer in CBF = UNIT_K * CBV / (MTT + eps).
inline constexpr double kEpsCbf = 1e-3;

/// Sampled concentration curve. Times strictly increasing, seconds.
struct TimeSeries
{
    std::vector<double> times;
    std::vector<double> values;

    TimeSeries() = default;
    TimeSeries(std::vector<double> t, std::vector<double> v);

    std::size_t size() const { return times.size(); }
};

/// CBF in ml/100g/min from CBV (ml/100g) and MTT (s).
double derive_cbf(double cbv, double mtt);

/// Tmax (s) of the box impulse response: delay + MTT/2.
double derive_tmax(double delay, double mtt);

/// Per-voxel perfusion parameters. cbf/tmax are always kept consistent
/// with (cbv, mtt, delay); construct through from_primary.
struct VoxelParams
{
    double cbv = 0;   // ml/100g
    double mtt = 1;   // s
    double delay = 0; // s
    double cbf = 0;   // ml/100g/min, derived
    double tmax = 0;  // s, derived

    static VoxelParams from_primary(double cbv, double mtt, double delay);

    /// CBF_rate = cbv/(mtt+eps) in 1/s, the rate constant of the forward model.
    double cbf_rate() const { return cbv / (mtt + kEpsCbf); }
};

/// Box residue function: R(s) = 1 on [0, mtt], 0 elsewhere.
struct ResidueModel
{
    enum class Kind { Box };
    Kind kind = Kind::Box;
    double support = 0; // s (== mtt)
};

/// Piecewise-linear view of a sampled AIF, evaluable on all of R.
/// Zero before the first sample and after the last one (bolus baseline),
/// linear interpolation in between. The running integral is closed-form.
class PiecewiseLinearAif
{
public:
    explicit PiecewiseLinearAif(const TimeSeries& ts);

    double value(double t) const;

    /// Exact integral of the piecewise-linear curve over [lo, hi], hi >= lo.
    double integral(double lo, double hi) const;

    double first_time() const { return times_.front(); }
    double last_time() const { return times_.back(); }

private:
    /// Running integral from times_.front() to u (clamped outside support).
    double cumulative(double u) const;

    std::vector<double> times_;
    std::vector<double> values_;
    std::vector<double> cum_; // trapezoid cumulative at breakpoints
};

/// Tissue concentration at time t under the box-residue convolution model.
/// Exact quadrature of the piecewise-linear AIF; no sampling error.
double tissue_curve_box(const PiecewiseLinearAif& aif, const VoxelParams& p, double t);

/// Physics residual r = dC/dt - CBF_rate * [C_a(t-delay) - C_a(t-delay-mtt)].
/// dCdt is supplied by the caller (network derivative or analytic oracle).
double physics_residual(double dCdt, const PiecewiseLinearAif& aif, const VoxelParams& p,
                        double t);

} // namespace eppinn::kinetics

#endif
