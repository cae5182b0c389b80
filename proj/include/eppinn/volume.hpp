/* volume.hpp - voxel grid containers shared across modules. */
#ifndef EPPINN_VOLUME_HPP
#define EPPINN_VOLUME_HPP

#include <cstdint>
#include <vector>

namespace eppinn {

struct Dims
{
    int x = 0, y = 0, z = 0;
    long voxels() const { return static_cast<long>(x) * y * z; }
    bool operator==(const Dims&) const = default;
};

/// 3D scalar grid, row-major with x fastest: index = (z*Y + y)*X + x.
struct VolumeF
{
    Dims dims;
    std::vector<float> v;

    VolumeF() = default;
    explicit VolumeF(Dims d, float fill = 0.f) : dims(d), v(d.voxels(), fill) {}
    float& at(int x, int y, int z)
    {
        return v[(static_cast<long>(z) * dims.y + y) * dims.x + x];
    }
    float at(int x, int y, int z) const
    {
        return v[(static_cast<long>(z) * dims.y + y) * dims.x + x];
    }
};

struct VolumeU8
{
    Dims dims;
    std::vector<std::uint8_t> v;

    VolumeU8() = default;
    explicit VolumeU8(Dims d, std::uint8_t fill = 0) : dims(d), v(d.voxels(), fill) {}
    std::uint8_t& at(int x, int y, int z)
    {
        return v[(static_cast<long>(z) * dims.y + y) * dims.x + x];
    }
    std::uint8_t at(int x, int y, int z) const
    {
        return v[(static_cast<long>(z) * dims.y + y) * dims.x + x];
    }
};

/// Per-voxel perfusion parameter maps with units as named.
struct PerfusionMaps
{
    VolumeF cbv;   // ml/100g
    VolumeF mtt;   // s
    VolumeF delay; // s
    VolumeF cbf;   // ml/100g/min
    VolumeF tmax;  // s
};

/// Evidential parameter field and derived uncertainty maps (variance units).
struct NigField
{
    VolumeF alpha, beta, nu;
    VolumeF aleatoric, epistemic, total;
};

enum class RoiLabel : std::uint8_t
{
    Background = 0,
    HealthyGM = 1,
    HealthyWM = 2,
    GMR = 3,  // gray matter reduced
    GMSR = 4, // gray matter severely reduced
    WMR = 5,  // white matter reduced
    WMSR = 6, // white matter severely reduced
};

const char* roi_name(RoiLabel label);

} // namespace eppinn

#endif
