#include "eppinn/phantom.hpp"

#include "eppinn/metrics.hpp"
#include "eppinn/rng.hpp"

#include <cmath>
#include <sstream>

namespace eppinn::phantom {

using kinetics::PiecewiseLinearAif;
using kinetics::TimeSeries;
using kinetics::VoxelParams;

std::map<RoiLabel, RoiParams> PhantomSpec::default_roi_table()
{
    // CBF (derived) straddles the 25 ml/100g/min core threshold:
    // GM 60, GMR 30, GMSR 10, WM 25.5, WMR 15, WMSR 5.
    return {
        {RoiLabel::HealthyGM, {4.0, 4.0, 1.0}},
        {RoiLabel::HealthyWM, {2.0, 4.7, 1.5}},
        {RoiLabel::GMR, {3.0, 6.0, 2.5}},
        {RoiLabel::GMSR, {1.5, 9.0, 4.0}},
        {RoiLabel::WMR, {1.5, 6.0, 3.0}},
        {RoiLabel::WMSR, {0.8, 9.6, 5.0}},
    };
}

double aif_value(const AifParams& p, double t)
{
    if (t <= p.onset)
        return 0.0;
    double u = (t - p.onset) / p.scale;
    double peak = std::pow(p.shape, p.shape) * std::exp(-p.shape);
    return p.amplitude / peak * std::pow(u, p.shape) * std::exp(-u);
}

double noise_sigma(double peak_signal, double psnr_db)
{
    return peak_signal / std::pow(10.0, psnr_db / 20.0);
}

namespace {

// In-plane layout in normalized coordinates: an elliptical brain with four
// rectangular lesion blocks in the quadrants, healthy GM/WM elsewhere.
RoiLabel classify(double u, double v)
{
    double du = u - 0.5, dv = v - 0.5;
    if (du * du + dv * dv > 0.48 * 0.48)
        return RoiLabel::Background;
    auto in = [](double a, double lo, double hi) { return a >= lo && a <= hi; };
    if (in(u, 0.10, 0.42) && in(v, 0.10, 0.42))
        return RoiLabel::GMR;
    if (in(u, 0.58, 0.90) && in(v, 0.10, 0.42))
        return RoiLabel::GMSR;
    if (in(u, 0.10, 0.42) && in(v, 0.58, 0.90))
        return RoiLabel::WMR;
    if (in(u, 0.58, 0.90) && in(v, 0.58, 0.90))
        return RoiLabel::WMSR;
    return v < 0.5 ? RoiLabel::HealthyGM : RoiLabel::HealthyWM;
}

void validate(const PhantomSpec& spec)
{
    if (spec.dims.x < 4 || spec.dims.y < 4 || spec.dims.z < 1)
        throw std::invalid_argument("invalid-spec: grid too small");
    if (!(spec.dt > 0.0) || !(spec.duration > spec.dt))
        throw std::invalid_argument("invalid-spec: bad timing");
    if (!std::isfinite(spec.psnr_db))
        throw std::invalid_argument("invalid-spec: psnr not finite");
    for (const auto& [label, rp] : spec.roi_table)
        if (!(rp.mtt > 0.0) || rp.cbv < 0.0)
            throw std::invalid_argument("invalid-spec: bad roi params");
    for (double s : spec.spacing)
        if (!(s > 0.0))
            throw std::invalid_argument("invalid-spec: bad spacing");
}

} // namespace

PhantomCase generate(const PhantomSpec& spec)
{
    validate(spec);

    const int T = static_cast<int>(std::lround(spec.duration / spec.dt));
    const Dims d = spec.dims;
    const long nvox = d.voxels();

    CaseBundle b;
    b.dims = d;
    b.frames = T;
    b.spacing = spec.spacing;
    b.seed = spec.seed;
    b.frame_times.resize(T);
    for (int k = 0; k < T; ++k)
        b.frame_times[k] = k * spec.dt;

    std::ostringstream prov;
    prov << "phantom psnr=" << (spec.noiseless ? std::string("inf")
                                               : std::to_string(spec.psnr_db))
         << " dt=" << spec.dt;
    b.provenance = prov.str();

    // AIF sampled at the acquisition times; tissue curves are generated from
    // this sampled curve so each bundle is exactly box-model consistent.
    std::vector<double> aif_clean(T);
    for (int k = 0; k < T; ++k)
        aif_clean[k] = aif_value(spec.aif, b.frame_times[k]);
    PiecewiseLinearAif aif(TimeSeries(b.frame_times, aif_clean));

    // labels and ground-truth maps
    b.brain = VolumeU8(d, 0);
    GroundTruth gt;
    gt.roi = VolumeU8(d, 0);
    gt.lesion = VolumeU8(d, 0);
    gt.maps.cbv = VolumeF(d);
    gt.maps.mtt = VolumeF(d);
    gt.maps.delay = VolumeF(d);
    gt.maps.cbf = VolumeF(d);
    gt.maps.tmax = VolumeF(d);

    std::map<RoiLabel, VoxelParams> roi_params;
    std::map<RoiLabel, std::vector<double>> roi_curves;
    for (const auto& [label, rp] : spec.roi_table)
    {
        auto p = VoxelParams::from_primary(rp.cbv, rp.mtt, rp.delay);
        roi_params[label] = p;
        auto& curve = roi_curves[label];
        curve.resize(T);
        for (int k = 0; k < T; ++k)
            curve[k] = kinetics::tissue_curve_box(aif, p, b.frame_times[k]);
    }

    double peak = 0.0;
    for (const auto& [label, curve] : roi_curves)
        for (double c : curve)
            peak = std::max(peak, c);

    for (int z = 0; z < d.z; ++z)
        for (int y = 0; y < d.y; ++y)
            for (int x = 0; x < d.x; ++x)
            {
                double u = (x + 0.5) / d.x;
                double v = (y + 0.5) / d.y;
                RoiLabel label = classify(u, v);
                gt.roi.at(x, y, z) = static_cast<std::uint8_t>(label);
                if (label == RoiLabel::Background)
                    continue;
                b.brain.at(x, y, z) = 1;
                const auto& p = roi_params.at(label);
                gt.maps.cbv.at(x, y, z) = static_cast<float>(p.cbv);
                gt.maps.mtt.at(x, y, z) = static_cast<float>(p.mtt);
                gt.maps.delay.at(x, y, z) = static_cast<float>(p.delay);
                gt.maps.cbf.at(x, y, z) = static_cast<float>(p.cbf);
                gt.maps.tmax.at(x, y, z) = static_cast<float>(p.tmax);
                if (p.cbf < metrics::kCoreCbfThreshold)
                    gt.lesion.at(x, y, z) = 1;
            }

    const double sigma = spec.noiseless ? 0.0 : noise_sigma(peak, spec.psnr_db);

    b.ctp.assign(static_cast<std::size_t>(T) * nvox, 0.f);
    for (long vox = 0; vox < nvox; ++vox)
    {
        auto label = static_cast<RoiLabel>(gt.roi.v[vox]);
        if (label == RoiLabel::Background)
            continue;
        const auto& curve = roi_curves.at(label);
        for (int k = 0; k < T; ++k)
        {
            double val = curve[k];
            if (sigma > 0.0)
                val += sigma * rng::gaussian(spec.seed, (1ULL << 32) | vox, k);
            b.ctp[static_cast<std::size_t>(k) * nvox + vox] = static_cast<float>(val);
        }
    }

    b.aif.resize(T);
    for (int k = 0; k < T; ++k)
    {
        double val = aif_clean[k];
        if (sigma > 0.0)
            val += 0.25 * sigma * rng::gaussian(spec.seed, 2ULL << 32, k);
        b.aif[k] = static_cast<float>(val);
    }

    b.gt = std::move(gt);

    PhantomCase out;
    out.bundle = std::move(b);
    out.noise_sigma = sigma;
    return out;
}

CaseBundle resample_dt(const CaseBundle& in, double new_dt)
{
    if (in.frames < 2)
        throw std::invalid_argument("resample-unsupported: too few frames");
    double dt = in.frame_times[1] - in.frame_times[0];
    double ratio = new_dt / dt;
    long factor = std::lround(ratio);
    if (factor < 1 || std::abs(ratio - factor) > 1e-9)
        throw std::invalid_argument("resample-unsupported: new_dt not a multiple of dt");
    if (factor == 1)
        return in;

    CaseBundle out = in;
    int new_T = (in.frames + factor - 1) / factor;
    out.frames = new_T;
    out.frame_times.resize(new_T);
    out.aif.resize(new_T);
    out.ctp.assign(static_cast<std::size_t>(new_T) * in.dims.voxels(), 0.f);
    for (int k = 0; k < new_T; ++k)
    {
        long src = k * factor;
        out.frame_times[k] = in.frame_times[src];
        out.aif[k] = in.aif[src];
        std::copy(in.ctp.begin() + src * in.dims.voxels(),
                  in.ctp.begin() + (src + 1) * in.dims.voxels(),
                  out.ctp.begin() + static_cast<long>(k) * in.dims.voxels());
    }
    return out;
}

} // namespace eppinn::phantom
