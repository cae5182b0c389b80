#include <doctest.h>

#include "eppinn/evidential.hpp"

#include <cmath>
#include <random>

using namespace eppinn::evidential;

TEST_CASE("transform maps raw outputs into the valid domain")
{
    auto p = transform(0.0, 0.0, 0.0);
    double ln2 = std::log(2.0);
    CHECK(p.alpha == doctest::Approx(1.0 + ln2 + 1e-3).epsilon(1e-9));
    CHECK(p.beta == doctest::Approx(ln2 + 1e-3).epsilon(1e-9));
    CHECK(p.nu == doctest::Approx(ln2 + 1e-3).epsilon(1e-9));

    auto lo = transform(-1e4, -1e4, -1e4);
    CHECK(lo.alpha == doctest::Approx(1.0 + 1e-3));
    CHECK(lo.beta == doctest::Approx(1e-3));

    auto hi = transform(2.0, 2.0, 2.0);
    CHECK(hi.alpha == doctest::Approx(1.0 + std::log1p(std::exp(2.0)) + 1e-3).epsilon(1e-9));
    CHECK(hi.alpha == doctest::Approx(3.1279).epsilon(1e-4));
}

TEST_CASE("transform never leaves the domain (property)")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> d(-1e6, 1e6);
    for (int i = 0; i < 20000; ++i)
    {
        auto p = transform(d(rng), d(rng), d(rng));
        CHECK(p.alpha >= 1.0 + kEpsEdl);
        CHECK(p.beta >= kEpsEdl);
        CHECK(p.nu >= kEpsEdl);
        CHECK(std::isfinite(p.alpha));
        CHECK(std::isfinite(p.beta));
        CHECK(std::isfinite(p.nu));
    }
}

TEST_CASE("nig_nll values and symmetry")
{
    NigParams p{2.0, 1.0, 1.0};
    double c = 0.5 * std::log(M_PI) + std::lgamma(2.0) - std::lgamma(2.5);
    CHECK(nig_nll(0.0, p) == doctest::Approx(c).epsilon(1e-12));

    // r-dependent part at r=0 reduces to 0.5*log(beta)
    NigParams pb{2.0, 3.7, 1.0};
    double c_b = 0.5 * std::log(M_PI / pb.nu) + std::lgamma(pb.alpha) -
                 std::lgamma(pb.alpha + 0.5);
    CHECK(nig_nll(0.0, pb) - c_b == doctest::Approx(0.5 * std::log(pb.beta)).epsilon(1e-12));

    CHECK(nig_nll(0.3, p) == doctest::Approx(nig_nll(-0.3, p)).epsilon(1e-12));
    CHECK(nig_nll_grad(0.0, p).d_r == doctest::Approx(0.0));
}

TEST_CASE("nig_nll is non-decreasing in |r|")
{
    NigParams p{1.7, 0.4, 2.3};
    double prev = nig_nll(0.0, p);
    for (double r = 0.05; r < 5.0; r += 0.05)
    {
        double cur = nig_nll(r, p);
        CHECK(cur >= prev - 1e-12);
        prev = cur;
    }
}

TEST_CASE("nig_nll_grad matches finite differences")
{
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> rd(-2.0, 2.0), ad(1.1, 5.0), bd(0.1, 4.0),
        nd(0.1, 4.0);
    for (int i = 0; i < 200; ++i)
    {
        double r = rd(rng);
        NigParams p{ad(rng), bd(rng), nd(rng)};
        auto g = nig_nll_grad(r, p);
        double h = 1e-6;
        auto fd = [&](auto f) { return f; };
        (void)fd;
        double d_r = (nig_nll(r + h, p) - nig_nll(r - h, p)) / (2 * h);
        NigParams pa1 = p, pa2 = p;
        pa1.alpha += h;
        pa2.alpha -= h;
        double d_a = (nig_nll(r, pa1) - nig_nll(r, pa2)) / (2 * h);
        NigParams pb1 = p, pb2 = p;
        pb1.beta += h;
        pb2.beta -= h;
        double d_b = (nig_nll(r, pb1) - nig_nll(r, pb2)) / (2 * h);
        NigParams pn1 = p, pn2 = p;
        pn1.nu += h;
        pn2.nu -= h;
        double d_n = (nig_nll(r, pn1) - nig_nll(r, pn2)) / (2 * h);
        CHECK(g.d_r == doctest::Approx(d_r).epsilon(1e-5));
        CHECK(g.d_alpha == doctest::Approx(d_a).epsilon(1e-5));
        CHECK(g.d_beta == doctest::Approx(d_b).epsilon(1e-5));
        CHECK(g.d_nu == doctest::Approx(d_n).epsilon(1e-5));
    }
}

TEST_CASE("digamma reference values")
{
    const double euler = 0.57721566490153286;
    CHECK(digamma(1.0) == doctest::Approx(-euler).epsilon(1e-12));
    CHECK(digamma(0.5) == doctest::Approx(-euler - 2.0 * std::log(2.0)).epsilon(1e-12));
    CHECK(digamma(2.0) == doctest::Approx(1.0 - euler).epsilon(1e-12));
    CHECK(digamma(10.0) == doctest::Approx(2.2517525890667211).epsilon(1e-12));
}

TEST_CASE("nig_reg")
{
    CHECK(nig_reg(0.5, NigParams{2.0, 1.0, 1.0}) == doctest::Approx(2.0));
    CHECK(nig_reg(0.0, NigParams{2.0, 1.0, 1.0}) == doctest::Approx(0.0));
    // homogeneity in r
    NigParams p{3.0, 2.0, 0.5};
    CHECK(nig_reg(1.4, p) == doctest::Approx(2.0 * nig_reg(0.7, p)).epsilon(1e-12));
}

TEST_CASE("decompose")
{
    auto u = decompose(NigParams{2.0, 1.0, 1.0});
    CHECK(u.aleatoric == doctest::Approx(1.0));
    CHECK(u.epistemic == doctest::Approx(1.0));
    CHECK(u.total == doctest::Approx(2.0));
    CHECK(u.total - u.aleatoric - u.epistemic == 0.0);

    auto u2 = decompose(NigParams{3.0, 4.0, 2.0});
    CHECK(u2.aleatoric == doctest::Approx(2.0));
    CHECK(u2.epistemic == doctest::Approx(1.0));
    CHECK(u2.total == doctest::Approx(3.0));

    auto u3 = decompose(NigParams{2.0, 1.0, 1e12});
    CHECK(u3.epistemic < 1e-11);

    CHECK_THROWS_AS(decompose(NigParams{1.0, 1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("coverage_interval")
{
    NigParams p{2.0, 2.0, 1.0}; // ale=2, epi=2, total=4
    CHECK(coverage_interval(p, 1.0) == doctest::Approx(2.0));
    CHECK(coverage_interval(p, 2.0) == doctest::Approx(4.0));
    NigParams q{2.0, 1.0, 1.0}; // total=2
    CHECK(coverage_interval(q, 2.0) == doctest::Approx(2.0 * std::sqrt(2.0)));
}

TEST_CASE("anti-degeneracy: gradient flow does not collapse beta at fixed r")
{
    // descend nll + 1e-3*reg over raw params at fixed r > 0
    double ra = 0.0, rb = 0.0, rn = 0.0;
    const double r = 0.8, lr = 1e-2, lambda_reg = 1e-3;
    double alpha = 0, beta = 0;
    for (int i = 0; i < 10000; ++i)
    {
        auto p = transform(ra, rb, rn);
        auto g = nig_nll_grad(r, p);
        double ga = g.d_alpha + lambda_reg * std::abs(r);
        double gb = g.d_beta;
        double gn = g.d_nu + lambda_reg * std::abs(r) * 2.0;
        ra -= lr * ga * sigmoid(ra);
        rb -= lr * gb * sigmoid(rb);
        rn -= lr * gn * sigmoid(rn);
        alpha = p.alpha;
        beta = p.beta;
    }
    CHECK(std::isfinite(alpha));
    CHECK(alpha < 50.0); // no unbounded growth
    CHECK(beta > 1e-3);  // beta not pinned at the floor with alpha exploding
}
