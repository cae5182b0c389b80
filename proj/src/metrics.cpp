#include "eppinn/metrics.hpp"

#include <cmath>

namespace eppinn {

const char* roi_name(RoiLabel label)
{
    switch (label)
    {
    case RoiLabel::Background: return "Background";
    case RoiLabel::HealthyGM: return "HealthyGM";
    case RoiLabel::HealthyWM: return "HealthyWM";
    case RoiLabel::GMR: return "GMR";
    case RoiLabel::GMSR: return "GMSR";
    case RoiLabel::WMR: return "WMR";
    case RoiLabel::WMSR: return "WMSR";
    }
    return "?";
}

} // namespace eppinn

namespace eppinn::metrics {

double nmae(std::span<const float> est, std::span<const float> gt,
            std::span<const std::uint8_t> mask)
{
    if (est.size() != gt.size() || est.size() != mask.size())
        throw std::invalid_argument("nmae: size mismatch");
    double abs_err = 0.0, gt_sum = 0.0;
    long n = 0;
    for (std::size_t i = 0; i < est.size(); ++i)
    {
        if (!mask[i])
            continue;
        abs_err += std::abs(static_cast<double>(est[i]) - gt[i]);
        gt_sum += gt[i];
        ++n;
    }
    if (n == 0)
        throw std::invalid_argument("degenerate-roi: empty mask");
    if (gt_sum <= 0.0)
        throw std::invalid_argument("degenerate-roi: ground-truth mean not positive");
    return (abs_err / n) / (gt_sum / n);
}

double coverage(std::span<const double> residuals, std::span<const double> sigmas, double k)
{
    if (residuals.empty())
        throw std::invalid_argument("no-samples: empty residual set");
    if (residuals.size() != sigmas.size())
        throw std::invalid_argument("no-samples: residual/sigma length mismatch");
    long in = 0;
    for (std::size_t i = 0; i < residuals.size(); ++i)
        if (std::abs(residuals[i]) <= k * sigmas[i])
            ++in;
    return static_cast<double>(in) / residuals.size();
}

DetectionResult detect_core(const VolumeF& cbf, const VolumeU8& core_gt,
                            const VolumeU8& brain, std::span<const std::uint8_t> roi,
                            double threshold, double tau_case)
{
    if (cbf.dims != core_gt.dims || cbf.dims != brain.dims)
        throw std::invalid_argument("detect_core: shape mismatch");
    DetectionResult res;
    long gt_total = 0;
    for (long i = 0; i < cbf.dims.voxels(); ++i)
    {
        if (!brain.v[i])
            continue;
        bool pred = cbf.v[i] < threshold;
        if (core_gt.v[i])
        {
            ++gt_total;
            if (pred)
                ++res.true_positives;
            else
                ++res.false_negatives;
        }
        else if (pred && !roi.empty() &&
                 roi[i] == static_cast<std::uint8_t>(RoiLabel::HealthyGM))
        {
            ++res.false_positives_healthy_gm;
        }
    }
    if (gt_total == 0)
    {
        res.gt_core_empty = true;
        return res;
    }
    res.voxel_sensitivity = static_cast<double>(res.true_positives) / gt_total;
    res.case_detected = res.voxel_sensitivity >= tau_case;
    return res;
}

} // namespace eppinn::metrics
