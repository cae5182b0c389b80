/* phantom.hpp - synthetic 4D CTP cases with known ground truth.
 *
 * Tissue curves are box-residue convolutions of a gamma-variate AIF sampled
 * at the acquisition times, so every bundle is exactly consistent with the
 * forward model it will be fitted with. Noise is Gaussian in attenuation
 * units at a requested PSNR; the per-voxel RNG is counter-based.
 */
#ifndef EPPINN_PHANTOM_HPP
#define EPPINN_PHANTOM_HPP

#include "eppinn/case_bundle.hpp"
#include "eppinn/kinetics.hpp"

#include <map>

namespace eppinn::phantom {

struct AifParams
{
    double amplitude = 100.0; // peak value, a.u.
    double onset = 5.0;       // t0, s
    double shape = 3.0;
    double scale = 1.5; // s
};

struct RoiParams
{
    double cbv;   // ml/100g
    double mtt;   // s
    double delay; // s
};

struct PhantomSpec
{
    Dims dims{16, 16, 4};
    std::array<double, 3> spacing{12.5, 12.5, 10.0}; // mm
    double duration = 60.0;                          // s
    double dt = 1.0;                                 // s
    double psnr_db = 24.0;
    bool noiseless = false;
    std::uint64_t seed = 0;
    AifParams aif;
    std::map<RoiLabel, RoiParams> roi_table = default_roi_table();

    static std::map<RoiLabel, RoiParams> default_roi_table();
};

/// Gamma-variate bolus, peak normalized to `amplitude`.
double aif_value(const AifParams& p, double t);

/// Noise sigma from peak signal and PSNR: sigma = peak / 10^(psnr/20).
double noise_sigma(double peak_signal, double psnr_db);

struct PhantomCase
{
    CaseBundle bundle;
    double noise_sigma = 0.0; // sigma actually applied to tissue voxels
};

/// Generate a case with ground truth attached. Throws "invalid-spec" on a
/// malformed spec.
PhantomCase generate(const PhantomSpec& spec);

/// Keep every (new_dt/dt)-th frame. new_dt must be an integer multiple of
/// the bundle's dt; otherwise throws "resample-unsupported".
CaseBundle resample_dt(const CaseBundle& in, double new_dt);

} // namespace eppinn::phantom

#endif
