#include "fsc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fsc/bounds.hpp"
#include "fsc/certify.hpp"
#include "fsc/errors.hpp"
#include "fsc/rng.hpp"

namespace fsc::oracle {

GradedBasis::GradedBasis(int q, std::int64_t n_max, std::uint64_t cap) : q_(q), n_max_(n_max) {
    if (n_max < 0) throw ValidationError("GradedBasis: n_max must be >= 0");
    const BigUint total = pattern_count(q, n_max);  // same counting problem
    if (total > BigUint(cap))
        throw CapExceeded("GradedBasis: " + total.to_string() + " states exceed the cap of " +
                          std::to_string(cap));
    sector_offset_.push_back(0);
    for (std::int64_t m = 0; m <= n_max; ++m) {
        enumerate_simplex(SimplexShape(q, m), [&](const SimplexPoint& p) {
            index_.emplace(p.coords(), states_.size());
            states_.push_back(p);
        }, cap);
        sector_offset_.push_back(states_.size());
    }
}

std::size_t GradedBasis::index_of(const std::vector<std::int32_t>& coords) const {
    const auto it = index_.find(coords);
    if (it == index_.end()) throw ValidationError("GradedBasis: state outside the basis");
    return it->second;
}

std::pair<std::size_t, std::size_t> GradedBasis::sector(std::int64_t m) const {
    if (m < 0 || m > n_max_) throw ValidationError("GradedBasis: sector out of range");
    return {sector_offset_[(std::size_t)m], sector_offset_[(std::size_t)m + 1]};
}

double kraus_amplitude(const SimplexPoint& n, const LossPattern& r, double gamma) {
    if (n.q() != r.q()) throw ValidationError("kraus_amplitude: mode counts differ");
    double prod_binom = 1.0;
    for (int i = 0; i < n.q(); ++i) {
        if (r.r[i] > n[i]) return 0.0;
        double b = 1.0;
        for (std::int32_t k = 0; k < r.r[i]; ++k)
            b = b * (double)(n[i] - k) / (double)(k + 1);
        prod_binom *= b;
    }
    const double w = (double)r.weight;
    const double rest = (double)(n.total() - r.weight);
    return std::sqrt(prod_binom) * std::pow(1.0 - gamma, rest / 2.0) * std::pow(gamma, w / 2.0);
}

SparseKraus sparse_kraus(const GradedBasis& basis, const LossPattern& r, double gamma) {
    SparseKraus k;
    k.pattern = r;
    k.target.assign(basis.dim(), -1);
    k.amp.assign(basis.dim(), 0.0);
    std::vector<std::int32_t> shifted(basis.q());
    for (std::size_t src = 0; src < basis.dim(); ++src) {
        const auto& n = basis.state(src);
        bool alive = true;
        for (int i = 0; i < basis.q(); ++i) {
            shifted[i] = n[i] - r.r[i];
            if (shifted[i] < 0) {
                alive = false;
                break;
            }
        }
        if (!alive) continue;
        k.target[src] = (std::int64_t)basis.index_of(shifted);
        k.amp[src] = kraus_amplitude(n, r, gamma);
    }
    return k;
}

DenseOperator build_kraus(const GradedBasis& basis, const LossPattern& r, double gamma) {
    DenseOperator op;
    op.label = "A_r";
    op.dim = basis.dim();
    op.a.assign(op.dim * op.dim, cplx(0.0, 0.0));
    const SparseKraus k = sparse_kraus(basis, r, gamma);
    for (std::size_t src = 0; src < basis.dim(); ++src)
        if (k.target[src] >= 0) op.at((std::size_t)k.target[src], src) = k.amp[src];
    return op;
}

std::vector<cplx> apply_kraus(const SparseKraus& k, const std::vector<cplx>& in) {
    std::vector<cplx> out(in.size(), cplx(0.0, 0.0));
    for (std::size_t src = 0; src < in.size(); ++src)
        if (k.target[src] >= 0) out[(std::size_t)k.target[src]] += k.amp[src] * in[src];
    return out;
}

std::vector<std::vector<cplx>> code_states(const GradedBasis& basis, const FockCode& fc) {
    if (basis.q() != fc.shape().q || basis.n_max() < fc.shape().N)
        throw ValidationError("code_states: basis does not cover the code");
    std::vector<std::vector<cplx>> states(fc.K(), std::vector<cplx>(basis.dim(), cplx(0.0)));
    for (std::size_t w = 0; w < fc.classical.words.size(); ++w) {
        const std::int32_t b = fc.partition.block_of[w];
        if (b < 0) continue;
        states[b][basis.index_of(fc.classical.words[w].coords())] += fc.amplitudes[w];
    }
    return states;
}

namespace {

cplx inner(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

double norm2(const std::vector<cplx>& a) {
    double acc = 0.0;
    for (const auto& v : a) acc += std::norm(v);
    return acc;
}

std::vector<cplx> random_unit_state(std::size_t begin, std::size_t end, std::size_t dim,
                                    rng::Stream& stream) {
    std::vector<cplx> psi(dim, cplx(0.0, 0.0));
    for (std::size_t i = begin; i < end; ++i)
        psi[i] = cplx(stream.next_normal(), stream.next_normal());
    const double n = std::sqrt(norm2(psi));
    for (auto& v : psi) v /= n;
    return psi;
}

}  // namespace

cplx bruteforce_inner(const GradedBasis& basis, const FockCode& fc, int i, int j,
                      const LossPattern& r, const LossPattern& r2, double gamma) {
    const auto states = code_states(basis, fc);
    if (i < 0 || i >= fc.K() || j < 0 || j >= fc.K())
        throw ValidationError("bruteforce_inner: block out of range");
    const auto vi = apply_kraus(sparse_kraus(basis, r, gamma), states[(std::size_t)i]);
    const auto vj = apply_kraus(sparse_kraus(basis, r2, gamma), states[(std::size_t)j]);
    return inner(vi, vj);
}

TraceReport check_trace_preserving(const SimplexShape& shape, std::int64_t t, double gamma,
                                   std::uint64_t trials, std::uint64_t seed, bool inject_fault) {
    if (t < 0 || t > shape.N) throw ValidationError("check_trace_preserving: t outside [0, N]");
    GradedBasis basis(shape.q, shape.N);
    const auto patterns = enumerate_patterns(shape.q, t, kDefaultBasisCap);
    // |A_r psi|^2 needs only the squared amplitudes: basis states map to
    // distinct targets, so there are no cross terms.
    std::vector<std::vector<double>> amp2(patterns.size());
    const auto [lo, hi] = basis.sector(shape.N);
    for (std::size_t pi = 0; pi < patterns.size(); ++pi) {
        const SparseKraus k = sparse_kraus(basis, patterns[pi], gamma);
        amp2[pi].resize(hi - lo);
        for (std::size_t s = lo; s < hi; ++s) amp2[pi][s - lo] = k.amp[s] * k.amp[s];
    }
    if (inject_fault && !amp2.empty() && !amp2[0].empty()) amp2[0][0] += 1e-6;

    TraceReport report;
    report.trials = trials;
    report.p_reference = bounds::p_loss(bounds::ChannelParams(gamma, shape.N, t));
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        rng::Stream stream(seed, trial);
        const auto psi = random_unit_state(lo, hi, basis.dim(), stream);
        double total = 0.0;
        for (const auto& a2 : amp2) {
            double branch = 0.0;
            for (std::size_t s = lo; s < hi; ++s) branch += a2[s - lo] * std::norm(psi[s]);
            total += branch;
        }
        report.max_abs_deviation =
            std::max(report.max_abs_deviation, std::abs(total - report.p_reference));
    }
    return report;
}

IdentificationReport identification_sim(const FockCode& fc, std::int64_t t, double gamma,
                                        std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw ValidationError("identification_sim: trials must be >= 1");
    const auto ortho = cert::orthogonality_check(fc, t);
    if (ortho.verdict == cert::OrthoVerdict::failed)
        throw CertificationRefused("identification_sim: code fails orthogonality at t",
                                   ortho.witness->describe());

    const SimplexShape shape = fc.shape();
    GradedBasis basis(shape.q, shape.N);
    const auto states = code_states(basis, fc);
    const std::size_t dim = basis.dim();

    // Every branch up to the full excitation, so the >t remainder is sampled
    // exactly rather than lumped.
    const auto patterns = enumerate_patterns(shape.q, shape.N, kDefaultBasisCap);
    std::vector<SparseKraus> kraus;
    kraus.reserve(patterns.size());
    for (const auto& r : patterns) kraus.push_back(sparse_kraus(basis, r, gamma));

    // Orthonormal bases of the identified branch images A_r(Q), |r| <= t.
    std::vector<std::vector<std::vector<cplx>>> branch_basis;
    std::size_t n_identified = 0;
    for (std::size_t pi = 0; pi < patterns.size() && patterns[pi].weight <= t; ++pi) {
        ++n_identified;
        std::vector<std::vector<cplx>> cols;
        for (int i = 0; i < fc.K(); ++i) {
            auto v = apply_kraus(kraus[pi], states[(std::size_t)i]);
            for (const auto& q : cols) {
                const cplx c = inner(q, v);
                for (std::size_t s = 0; s < dim; ++s) v[s] -= c * q[s];
            }
            const double n = std::sqrt(norm2(v));
            if (n > 1e-12) {
                for (auto& x : v) x /= n;
                cols.push_back(std::move(v));
            }
        }
        branch_basis.push_back(std::move(cols));
    }

    IdentificationReport report;
    report.trials = trials;
    report.p_reference = bounds::p_loss(bounds::ChannelParams(gamma, shape.N, t));
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        rng::Stream stream(seed, trial);
        // Haar-like random code state: Gaussian coefficients over the
        // orthonormal code basis.
        std::vector<cplx> beta(fc.K());
        double bn = 0.0;
        for (auto& b : beta) {
            b = cplx(stream.next_normal(), stream.next_normal());
            bn += std::norm(b);
        }
        bn = std::sqrt(bn);
        std::vector<cplx> psi(dim, cplx(0.0, 0.0));
        for (int i = 0; i < fc.K(); ++i)
            for (std::size_t s = 0; s < dim; ++s) psi[s] += (beta[(std::size_t)i] / bn) * states[(std::size_t)i][s];

        // Sample the loss branch from its exact probability.
        double u = stream.next_double();
        std::size_t branch = patterns.size() - 1;
        for (std::size_t pi = 0; pi < patterns.size(); ++pi) {
            double prob = 0.0;
            for (std::size_t s = 0; s < dim; ++s)
                if (kraus[pi].target[s] >= 0) prob += kraus[pi].amp[s] * kraus[pi].amp[s] * std::norm(psi[s]);
            if (u < prob || pi + 1 == patterns.size()) {
                branch = pi;
                break;
            }
            u -= prob;
        }
        if (patterns[branch].weight > t) continue;  // counted via leq_t_fraction below
        ++report.leq_t_trials;

        auto phi = apply_kraus(kraus[branch], psi);
        const double pn = std::sqrt(norm2(phi));
        for (auto& v : phi) v /= pn;

        // Projective measurement over the identified branches plus the rest.
        double u2 = stream.next_double();
        std::size_t outcome = n_identified;  // the ">t" outcome
        for (std::size_t pi = 0; pi < n_identified; ++pi) {
            double prob = 0.0;
            for (const auto& q : branch_basis[pi]) prob += std::norm(inner(q, phi));
            if (u2 < prob) {
                outcome = pi;
                break;
            }
            u2 -= prob;
        }
        if (outcome == branch) ++report.correct_ids;
    }
    report.correct_rate_given_leq_t =
        report.leq_t_trials ? (double)report.correct_ids / (double)report.leq_t_trials : 0.0;
    report.leq_t_fraction = (double)report.leq_t_trials / (double)trials;
    return report;
}

namespace {

// Eigenvalues of a Hermitian matrix via the real symmetric embedding
// [[X, -Y], [Y, X]]; each eigenvalue of the input appears twice.
std::vector<double> hermitian_eigenvalues_doubled(const std::vector<cplx>& g, std::size_t k) {
    const std::size_t n = 2 * k;
    std::vector<double> a(n * n, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            a[i * n + j] = g[i * k + j].real();
            a[(i + k) * n + (j + k)] = g[i * k + j].real();
            a[i * n + (j + k)] = -g[i * k + j].imag();
            a[(i + k) * n + j] = g[i * k + j].imag();
        }
    }
    // Cyclic Jacobi sweeps.
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p * n + q] * a[p * n + q];
        if (off < 1e-26) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                const double sign = theta >= 0.0 ? 1.0 : -1.0;
                const double tt = sign / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(tt * tt + 1.0);
                const double s = tt * c;
                for (std::size_t i = 0; i < n; ++i) {
                    const double aip = a[i * n + p], aiq = a[i * n + q];
                    a[i * n + p] = c * aip - s * aiq;
                    a[i * n + q] = s * aip + c * aiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double api = a[p * n + i], aqi = a[q * n + i];
                    a[p * n + i] = c * api - s * aqi;
                    a[q * n + i] = s * api + c * aqi;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
    return eig;
}

}  // namespace

double recovery_fidelity(const FockCode& fc, std::int64_t t, double gamma) {
    const auto ortho = cert::orthogonality_check(fc, t);
    if (ortho.verdict == cert::OrthoVerdict::failed)
        throw CertificationRefused("recovery_fidelity: code fails orthogonality at t",
                                   ortho.witness->describe());
    const SimplexShape shape = fc.shape();
    GradedBasis basis(shape.q, shape.N);
    const auto states = code_states(basis, fc);
    const std::size_t k = (std::size_t)fc.K();
    const double p = bounds::p_loss(bounds::ChannelParams(gamma, shape.N, t));

    const auto patterns = enumerate_patterns(shape.q, t, kDefaultBasisCap);
    double fidelity = 0.0;
    for (const auto& r : patterns) {
        const SparseKraus kr = sparse_kraus(basis, r, gamma);
        std::vector<std::vector<cplx>> cols(k);
        for (std::size_t i = 0; i < k; ++i) cols[i] = apply_kraus(kr, states[i]);
        std::vector<cplx> gram(k * k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) gram[i * k + j] = inner(cols[i], cols[j]);
        double nuclear_doubled = 0.0;
        for (double ev : hermitian_eigenvalues_doubled(gram, k))
            if (ev > 0.0) nuclear_doubled += std::sqrt(ev);
        const double nuclear = nuclear_doubled / 2.0;  // embedding doubles each eigenvalue
        fidelity += nuclear * nuclear;
    }
    return fidelity / (p * (double)(k * k));
}

}  // namespace fsc::oracle
