/* evidential.hpp - Normal-Inverse-Gamma head over the physics residual.
 *
 * The predictive mean is fixed at zero (the governing constraint wants
 * r = 0), so the head carries only (alpha, beta, nu). Raw network outputs
 * are mapped to the valid domain with softplus transforms.
 */
#ifndef EPPINN_EVIDENTIAL_HPP
#define EPPINN_EVIDENTIAL_HPP

#include <stdexcept>

namespace eppinn::evidential {

inline constexpr double kEpsEdl = 1e-3;

struct NigParams
{
    double alpha = 2.0; // > 1
    double beta = 1.0;  // > 0
    double nu = 1.0;    // > 0
};

struct Uncertainty
{
    double aleatoric = 0;
    double epistemic = 0;
    double total = 0;
};

double softplus(double x);
double sigmoid(double x);
/// Derivative of lgamma; Bernoulli asymptotic series with upward recurrence.
double digamma(double x);

/// Raw head outputs -> valid NIG domain:
/// alpha = 1 + softplus(a) + eps, beta = softplus(b) + eps, nu = softplus(n) + eps.
NigParams transform(double raw_alpha, double raw_beta, double raw_nu);

/// NIG negative log-likelihood of residual r at predictive mean zero:
/// -alpha log beta + (alpha+1/2) log(beta + nu r^2/2) + C(alpha, nu),
/// with the full Student-t normalizer C = log(pi/nu)/2 + lgamma(alpha) - lgamma(alpha+1/2).
double nig_nll(double r, const NigParams& p);

/// Gradients of nig_nll wrt (r, alpha, beta, nu); used by the trainer backward pass.
struct NigNllGrad
{
    double d_r, d_alpha, d_beta, d_nu;
};
NigNllGrad nig_nll_grad(double r, const NigParams& p);

/// Anti-degeneracy regularizer |r| (2 nu + alpha).
double nig_reg(double r, const NigParams& p);

/// Closed-form decomposition: ale = beta/(alpha-1), epi = ale/nu, total = sum.
Uncertainty decompose(const NigParams& p);

/// Half-width of the +-k sigma interval around zero: k * sqrt(total variance).
double coverage_interval(const NigParams& p, double k);

} // namespace eppinn::evidential

#endif
