/* metrics.hpp - NMAE, empirical coverage, and infarct-core detection. */
#ifndef EPPINN_METRICS_HPP
#define EPPINN_METRICS_HPP

#include "eppinn/volume.hpp"

#include <span>
#include <stdexcept>

namespace eppinn::metrics {

inline constexpr double kCoreCbfThreshold = 25.0; // ml/100g/min
inline constexpr double kTauCase = 0.1;           // case detected if voxel sens >= tau

/// Mean absolute error over the mask, normalized by the ground-truth mask mean.
double nmae(std::span<const float> est, std::span<const float> gt,
            std::span<const std::uint8_t> mask);

/// Fraction of samples with |r| <= k * sigma.
double coverage(std::span<const double> residuals, std::span<const double> sigmas,
                double k);

struct DetectionResult
{
    double voxel_sensitivity = 0;
    bool case_detected = false;
    long true_positives = 0;
    long false_negatives = 0;
    long false_positives_healthy_gm = 0; // inside HealthyGM only
    bool gt_core_empty = false;
};

/// Threshold the CBF map at `threshold` inside the brain mask and score it
/// against the ground-truth core. `roi` is optional (pass empty to skip the
/// HealthyGM false-positive count).
DetectionResult detect_core(const VolumeF& cbf, const VolumeU8& core_gt,
                            const VolumeU8& brain, std::span<const std::uint8_t> roi = {},
                            double threshold = kCoreCbfThreshold,
                            double tau_case = kTauCase);

} // namespace eppinn::metrics

#endif
