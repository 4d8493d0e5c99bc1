#include "fsc/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "fsc/errors.hpp"

namespace fsc::bounds {

ChannelParams::ChannelParams(double gamma_, std::int64_t N_, std::int64_t t_)
    : gamma(gamma_), N(N_), t(t_) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw ValidationError("ChannelParams: gamma outside [0,1]");
    if (N < 0) throw ValidationError("ChannelParams: N must be >= 0");
    if (t < 0) throw ValidationError("ChannelParams: t must be >= 0");
}

double h2(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw ValidationError("h2: argument outside [0,1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double p_loss(const ChannelParams& params) {
    const auto [gamma, N, t] = params;
    if (t >= N) return 1.0;
    if (gamma == 0.0) return 1.0;
    if (gamma == 1.0) return 0.0;  // all N photons are lost, and t < N here
    const double lg = std::log(gamma);
    const double l1g = std::log1p(-gamma);
    // Kahan summation over the log-domain binomial terms.
    double sum = 0.0, comp = 0.0;
    for (std::int64_t r = 0; r <= t; ++r) {
        const double lbinom = std::lgamma((double)N + 1.0) - std::lgamma((double)r + 1.0) -
                              std::lgamma((double)(N - r) + 1.0);
        const double term = std::exp(lbinom + r * lg + (N - r) * l1g);
        const double y = term - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    return std::min(sum, 1.0);
}

namespace {

void check_rate_domain(double delta, double alpha) {
    if (!(alpha > 0.0)) throw ValidationError("rate: alpha must be > 0");
    if (!(delta >= 0.0 && delta < 1.0)) throw ValidationError("rate: delta outside [0,1)");
}

}  // namespace

double rate_gv(double delta, double alpha) {
    check_rate_domain(delta, alpha);
    return (1.0 + alpha) * h2(1.0 / (1.0 + alpha)) -
           (alpha / (1.0 + alpha) + delta) * h2(alpha / (alpha + (1.0 + alpha) * delta)) -
           (alpha + delta) * h2(alpha / (alpha + delta));
}

double rate_u(double delta, double alpha) {
    check_rate_domain(delta, alpha);
    return 0.5 * (1.0 + alpha) * h2(1.0 / (1.0 + alpha)) -
           (alpha + delta) * h2(alpha / (alpha + delta));
}

double rate_m(double delta, double alpha) {
    if (!(alpha > 0.0)) throw ValidationError("rate_m: alpha must be > 0");
    if (!(delta >= 0.0)) throw ValidationError("rate_m: delta must be >= 0");
    const double gap = delta_alpha_bessel(alpha) - delta;
    return gap * gap / (8.0 * std::log(2.0));
}

double bessel_i0_scaled(double x) {
    if (!(x >= 0.0)) throw ValidationError("bessel_i0_scaled: x must be >= 0");
    if (x <= 20.0) {
        // I0(x) = sum_k (x^2/4)^k / (k!)^2; at x = 20 the largest term is
        // ~8e6, so the unscaled sum stays well inside double range.
        const double z = x * x / 4.0;
        double term = 1.0, sum = 1.0;
        for (int k = 1; k < 200; ++k) {
            term *= z / ((double)k * k);
            sum += term;
            if (term < sum * 1e-18) break;
        }
        return sum * std::exp(-x);
    }
    // exp(-x) I0(x) ~ (2 pi x)^{-1/2} [1 + 1/(8x) + 9/(2(8x)^2) + ...].
    // Terms shrink until k ~ 2x; stopping at the smallest term leaves an
    // error ~e^(-2x), far below double precision for x > 20.
    const double ix = 1.0 / (8.0 * x);
    double term = 1.0, sum = 1.0, prev = 1.0;
    for (int k = 1; k <= (int)(2.0 * x); ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= odd * odd * ix / (double)k;
        if (std::abs(term) >= std::abs(prev) || std::abs(term) < sum * 1e-17) break;
        sum += term;
        prev = term;
    }
    return sum / std::sqrt(2.0 * M_PI * x);
}

double bessel_i1_scaled(double x) {
    if (!(x >= 0.0)) throw ValidationError("bessel_i1_scaled: x must be >= 0");
    if (x <= 20.0) {
        // I1(x) = (x/2) sum_k (x^2/4)^k / (k! (k+1)!).
        const double z = x * x / 4.0;
        double term = 1.0, sum = 1.0;
        for (int k = 1; k < 200; ++k) {
            term *= z / ((double)k * (k + 1.0));
            sum += term;
            if (term < sum * 1e-18) break;
        }
        return 0.5 * x * sum * std::exp(-x);
    }
    // exp(-x) I1(x) ~ (2 pi x)^{-1/2} [1 - 3/(8x) - 15/(2(8x)^2) - ...],
    // truncated at the smallest term as above.
    const double ix = 1.0 / (8.0 * x);
    double term = 1.0, sum = 1.0, prev = 1.0;
    for (int k = 1; k <= (int)(2.0 * x); ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (odd * odd - 4.0) * ix / (double)k;
        if (std::abs(term) >= std::abs(prev) || std::abs(term) < sum * 1e-17) break;
        sum += term;
        prev = term;
    }
    return sum / std::sqrt(2.0 * M_PI * x);
}

double delta_alpha_bessel(double alpha) {
    if (!(alpha > 0.0)) throw ValidationError("delta_alpha: alpha must be > 0");
    const double x = 2.0 / alpha;
    return bessel_i0_scaled(x) + bessel_i1_scaled(x);
}

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double fa, double b,
                        double fb, double fm, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (depth <= 0) throw OracleViolation("adaptive_simpson: max depth, residual " +
                                          std::to_string(std::abs(delta)));
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson(f, a, fa, m, fm, flm, left, tol / 2.0, depth - 1) +
           adaptive_simpson(f, m, fm, b, fb, frm, right, tol / 2.0, depth - 1);
}

}  // namespace

double delta_alpha_quadrature(double alpha, double abs_tol) {
    if (!(alpha > 0.0)) throw ValidationError("delta_alpha: alpha must be > 0");
    const auto integrand = [alpha](double theta) {
        const double c = std::cos(theta);
        return std::exp(-2.0 * (1.0 - c) / alpha) * (1.0 + c) / M_PI;
    };
    const double a = 0.0, b = M_PI;
    const double fa = integrand(a), fb = integrand(b), fm = integrand(0.5 * (a + b));
    const double whole = simpson(a, fa, b, fb, fm);
    return adaptive_simpson(integrand, a, fa, b, fb, fm, whole, abs_tol, 60);
}

double delta_alpha(double alpha, double agree_tol) {
    const double quad = delta_alpha_quadrature(alpha);
    const double bes = delta_alpha_bessel(alpha);
    if (std::abs(quad - bes) > agree_tol)
        throw OracleViolation("delta_alpha: evaluation routes disagree by " +
                              std::to_string(std::abs(quad - bes)));
    return quad;
}

double quantum_rate_bound(double delta, double alpha, Ensemble ensemble, bool alpha_exponent) {
    check_rate_domain(delta, alpha);
    const double rbar =
        ensemble == Ensemble::uniform ? rate_u(delta, alpha) : rate_m(delta, alpha);
    const double kraus_exp = alpha_exponent
                                 ? (alpha + delta) * h2(alpha / (alpha + delta))
                                 : (1.0 + delta) * h2(1.0 / (1.0 + delta));
    return rbar / 3.0 - 2.0 / 3.0 * kraus_exp;
}

double exact_quantum_rate(double delta, double alpha) {
    check_rate_domain(delta, alpha);
    return rate_gv(delta, alpha) - (alpha + delta) * h2(alpha / (alpha + delta));
}

BigUint kraus_count(int q, std::int64_t t) {
    if (q < 1) throw ValidationError("kraus_count: q must be >= 1");
    if (t < 0) throw ValidationError("kraus_count: t must be >= 0");
    BigUint total;
    for (std::int64_t r = 0; r <= t; ++r)
        total += BigUint::binomial((std::uint64_t)(r + q - 1), (std::uint64_t)(q - 1));
    return total;
}

double eps_to_ad(double eps, double p) {
    if (!(eps >= 0.0 && eps <= 1.0)) throw ValidationError("eps_to_ad: eps outside [0,1]");
    if (!(p > 0.0 && p <= 1.0)) throw ValidationError("eps_to_ad: p outside (0,1]");
    return std::sqrt(std::max(0.0, 1.0 - (1.0 - eps * eps) * p));
}

double eps_from_ad(double eps, double p) {
    if (!(eps >= 0.0)) throw ValidationError("eps_from_ad: eps must be >= 0");
    if (!(p > 0.0 && p <= 1.0)) throw ValidationError("eps_from_ad: p outside (0,1]");
    return eps / std::sqrt(p);
}

double zero_crossing(const std::function<double(double)>& curve, double lo, double hi,
                     double tol) {
    double flo = curve(lo), fhi = curve(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0) throw ValidationError("zero_crossing: no sign change on [lo, hi]");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = curve(mid);
        if (fm == 0.0) return mid;
        if (flo * fm < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

void emit_curve(const std::function<double(double)>& curve, const std::vector<double>& grid,
                std::ostream& out) {
    out << "delta,value\n";
    char buf[64];
    for (double d : grid) {
        const double v = curve(d);
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g\n", d, v);
        out << buf;
    }
}

}  // namespace fsc::bounds
