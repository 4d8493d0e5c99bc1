#ifndef FSC_BOUNDS_HPP
#define FSC_BOUNDS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "fsc/bigint.hpp"

namespace fsc::bounds {

// Scalar quantities of the trade-off analysis: binary entropy, binomial loss
// tails, the three classical rate curves, the limiting multinomial distance
// constant, quantum-rate thresholds, Kraus counts, and the conversions
// between guarantees for the truncated and the full loss channel.

struct ChannelParams {
    double gamma = 0.0;   // per-mode loss probability, in (0, 1]; 0 allowed as an exact edge
    std::int64_t N = 0;   // total excitation
    std::int64_t t = 0;   // loss budget, >= 0

    ChannelParams(double gamma_, std::int64_t N_, std::int64_t t_);
};

struct RateCurvePoint {
    double delta = 0.0;
    double alpha = 0.0;
    double value = 0.0;  // bits per photon (log2 scale, normalized by N)
};

// Binary entropy with the 0*log(0) = 0 convention. Domain [0,1].
double h2(double x);

// P[Binomial(N, gamma) <= t]. Log-domain terms with compensated summation;
// exact 1 when t >= N or gamma == 0, and exact {0,1} when gamma == 1.
double p_loss(const ChannelParams& params);

// Classical rate curves (fixed alpha > 0, relative distance delta).
double rate_gv(double delta, double alpha);
double rate_u(double delta, double alpha);
double rate_m(double delta, double alpha);

// Limiting normalized mean pairwise distance of the multinomial ensemble,
// via two independent routes that must agree:
//   quadrature:  (1/pi) * integral_0^pi exp(-2(1-cos t)/alpha) (1+cos t) dt
//   closed form: exp(-2/alpha) * (I0(2/alpha) + I1(2/alpha))
double delta_alpha_quadrature(double alpha, double abs_tol = 1e-12);
double delta_alpha_bessel(double alpha);
// Quadrature value after checking both routes agree to `agree_tol`.
double delta_alpha(double alpha, double agree_tol = 1e-8);

// Scaled modified Bessel functions exp(-x) * I0(x), exp(-x) * I1(x), x >= 0.
// Power series up to x = 20, scaled asymptotic series beyond.
double bessel_i0_scaled(double x);
double bessel_i1_scaled(double x);

enum class Ensemble { uniform, multinomial };

// Certifiable supremum of the quantum rate for the random construction:
//   (1/3) * Rbar(delta) - (2/3) * (1 + delta) * h2(1/(1+delta))
// with Rbar = rate_u or rate_m. When `alpha_exponent` is true the Kraus-count
// exponent uses (alpha + delta) * h2(alpha/(alpha+delta)) instead; both
// variants are reported in diagnostics since the crossing they imply differs.
double quantum_rate_bound(double delta, double alpha, Ensemble ensemble,
                          bool alpha_exponent = false);

// Rate of the derandomized exact construction:
//   rate_gv(delta, alpha) - (alpha + delta) * h2(alpha/(alpha+delta)).
double exact_quantum_rate(double delta, double alpha);

// Number of loss patterns of weight at most t on q modes:
//   sum_{r<=t} binomial(r+q-1, q-1). Exact.
BigUint kraus_count(int q, std::int64_t t);

// Guarantee conversions between the truncated and full loss channel.
//   eps_to_ad:   eps' = sqrt(1 - (1 - eps^2) * p)
//   eps_from_ad: eps' = eps / sqrt(p)
double eps_to_ad(double eps, double p);
double eps_from_ad(double eps, double p);

// Bisection root of a scalar curve; requires a sign change on [lo, hi].
double zero_crossing(const std::function<double(double)>& curve, double lo, double hi,
                     double tol = 1e-10);

// Writes "delta,value" rows (12 significant digits) for curve(delta) over the
// grid. Reruns are byte-identical.
void emit_curve(const std::function<double(double)>& curve, const std::vector<double>& grid,
                std::ostream& out);

}  // namespace fsc::bounds

#endif
