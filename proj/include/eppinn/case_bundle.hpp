/* case_bundle.hpp - in-memory 4D CTP case with optional ground truth. */
#ifndef EPPINN_CASE_BUNDLE_HPP
#define EPPINN_CASE_BUNDLE_HPP

#include "eppinn/volume.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eppinn {

struct GroundTruth
{
    PerfusionMaps maps;
    VolumeU8 roi;    // RoiLabel values
    VolumeU8 lesion; // true CBF < 25 ml/100g/min
};

struct CaseBundle
{
    Dims dims;                       // spatial
    int frames = 0;                  // T
    std::array<double, 3> spacing{}; // mm
    std::vector<double> frame_times; // s, strictly increasing
    std::uint64_t seed = 0;
    std::string provenance;

    std::vector<float> ctp; // t-major: index = ((t*Z + z)*Y + y)*X + x
    std::vector<float> aif; // T samples
    VolumeU8 brain;

    std::optional<GroundTruth> gt;

    long frame_stride() const { return dims.voxels(); }
    float& ctp_at(int t, long voxel) { return ctp[t * frame_stride() + voxel]; }
    float ctp_at(int t, long voxel) const { return ctp[t * frame_stride() + voxel]; }

    std::array<double, 3> fov_mm() const
    {
        return {dims.x * spacing[0], dims.y * spacing[1], dims.z * spacing[2]};
    }
};

} // namespace eppinn

#endif
