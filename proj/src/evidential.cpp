#include "eppinn/evidential.hpp"

#include <cmath>

namespace eppinn::evidential {

double softplus(double x)
{
    if (x > 30.0)
        return x;
    if (x < -30.0)
        return std::exp(x);
    return std::log1p(std::exp(x));
}

double sigmoid(double x)
{
    if (x >= 0.0)
        return 1.0 / (1.0 + std::exp(-x));
    double e = std::exp(x);
    return e / (1.0 + e);
}

double digamma(double x)
{
    // recurrence psi(x) = psi(x+1) - 1/x until the asymptotic series is accurate
    double acc = 0.0;
    while (x < 6.0)
    {
        acc -= 1.0 / x;
        x += 1.0;
    }
    double inv = 1.0 / x;
    double inv2 = inv * inv;
    // psi(x) ~ ln x - 1/2x - sum B_2n / (2n x^2n)
    return acc + std::log(x) - 0.5 * inv -
           inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 - inv2 / 240.0)));
}

NigParams transform(double raw_alpha, double raw_beta, double raw_nu)
{
    NigParams p;
    p.alpha = 1.0 + softplus(raw_alpha) + kEpsEdl;
    p.beta = softplus(raw_beta) + kEpsEdl;
    p.nu = softplus(raw_nu) + kEpsEdl;
    return p;
}

double nig_nll(double r, const NigParams& p)
{
    double q = p.beta + 0.5 * p.nu * r * r;
    double c = 0.5 * std::log(M_PI / p.nu) + std::lgamma(p.alpha) -
               std::lgamma(p.alpha + 0.5);
    return -p.alpha * std::log(p.beta) + (p.alpha + 0.5) * std::log(q) + c;
}

NigNllGrad nig_nll_grad(double r, const NigParams& p)
{
    double q = p.beta + 0.5 * p.nu * r * r;
    NigNllGrad g;
    g.d_r = (p.alpha + 0.5) * p.nu * r / q;
    g.d_alpha = -std::log(p.beta) + std::log(q) + digamma(p.alpha) - digamma(p.alpha + 0.5);
    g.d_beta = -p.alpha / p.beta + (p.alpha + 0.5) / q;
    g.d_nu = (p.alpha + 0.5) * (0.5 * r * r) / q - 0.5 / p.nu;
    return g;
}

double nig_reg(double r, const NigParams& p)
{
    return std::abs(r) * (2.0 * p.nu + p.alpha);
}

Uncertainty decompose(const NigParams& p)
{
    if (!(p.alpha > 1.0))
        throw std::invalid_argument("invalid-alpha: decompose requires alpha > 1");
    Uncertainty u;
    u.aleatoric = p.beta / (p.alpha - 1.0);
    u.epistemic = u.aleatoric / p.nu;
    u.total = u.aleatoric + u.epistemic;
    return u;
}

double coverage_interval(const NigParams& p, double k)
{
    return k * std::sqrt(decompose(p).total);
}

} // namespace eppinn::evidential
