#ifndef FSC_ORACLE_HPP
#define FSC_ORACLE_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fsc/fock.hpp"
#include "fsc/patterns.hpp"

namespace fsc::oracle {

// Ground-truth dense simulator on truncated multi-mode Fock spaces for tiny
// (q, N): explicit Kraus matrices, brute-force inner products, channel
// checks, error-identification runs, and a canonical-recovery fidelity.

using cplx = std::complex<double>;

constexpr std::uint64_t kDefaultBasisCap = 20'000;

// Basis of the union of the excitation-m sectors, m = 0..n_max, ordered
// excitation-major and canonically within each sector.
class GradedBasis {
  public:
    GradedBasis(int q, std::int64_t n_max, std::uint64_t cap = kDefaultBasisCap);

    int q() const { return q_; }
    std::int64_t n_max() const { return n_max_; }
    std::size_t dim() const { return states_.size(); }
    const SimplexPoint& state(std::size_t idx) const { return states_[idx]; }
    std::size_t index_of(const std::vector<std::int32_t>& coords) const;  // throws if absent
    // Half-open index range of the excitation-m sector.
    std::pair<std::size_t, std::size_t> sector(std::int64_t m) const;

  private:
    int q_;
    std::int64_t n_max_;
    std::vector<SimplexPoint> states_;
    std::map<std::vector<std::int32_t>, std::size_t> index_;
    std::vector<std::size_t> sector_offset_;  // size n_max + 2
};

struct DenseOperator {
    std::string label;
    std::size_t dim = 0;
    std::vector<cplx> a;  // row-major
    cplx& at(std::size_t row, std::size_t col) { return a[row * dim + col]; }
    const cplx& at(std::size_t row, std::size_t col) const { return a[row * dim + col]; }
};

// Amplitude of the loss operator on one basis state:
//   <n - r| A_r |n> = prod_i sqrt(binomial(n_i, r_i)) (1-g)^((n_i-r_i)/2) g^(r_i/2).
double kraus_amplitude(const SimplexPoint& n, const LossPattern& r, double gamma);

// Explicit matrix of A_r on the graded basis.
DenseOperator build_kraus(const GradedBasis& basis, const LossPattern& r, double gamma);

// Sparse action of A_r: per source index, target index and amplitude.
struct SparseKraus {
    LossPattern pattern;
    std::vector<std::int64_t> target;  // -1 when annihilated
    std::vector<double> amp;
};

SparseKraus sparse_kraus(const GradedBasis& basis, const LossPattern& r, double gamma);

std::vector<cplx> apply_kraus(const SparseKraus& k, const std::vector<cplx>& in);

// State vectors of the code basis over the graded basis.
std::vector<std::vector<cplx>> code_states(const GradedBasis& basis, const FockCode& fc);

// <c_i| A_r' A_r2 |c_j> by dense algebra (A_r' means the adjoint of A_r).
cplx bruteforce_inner(const GradedBasis& basis, const FockCode& fc, int i, int j,
                      const LossPattern& r, const LossPattern& r2, double gamma);

struct TraceReport {
    std::uint64_t trials = 0;
    double p_reference = 0.0;     // P[Binomial(N, gamma) <= t]
    double max_abs_deviation = 0.0;
};

// For random unit states of excitation N, compares sum_{|r|<=t} |A_r psi|^2
// against the binomial tail. The sum is state-independent; the simulator
// verifies that numerically.
TraceReport check_trace_preserving(const SimplexShape& shape, std::int64_t t, double gamma,
                                   std::uint64_t trials, std::uint64_t seed,
                                   bool inject_fault = false);

struct IdentificationReport {
    std::uint64_t trials = 0;
    std::uint64_t leq_t_trials = 0;
    std::uint64_t correct_ids = 0;
    double correct_rate_given_leq_t = 0.0;
    double leq_t_fraction = 0.0;
    double p_reference = 0.0;
};

// Samples a loss branch per trial (all weights up to N, exactly from their
// Kraus probabilities), applies the projective identification measurement
// built from orthonormalized images of the code, and scores the outcome.
// Refuses when the code fails orthogonality at t.
IdentificationReport identification_sim(const FockCode& fc, std::int64_t t, double gamma,
                                        std::uint64_t trials, std::uint64_t seed);

// Entanglement fidelity, on the maximally entangled code state, of the
// truncated channel followed by the canonical (polar-isometry) recovery:
//   F = (1/(p K^2)) sum_{|r|<=t} (nuclear norm of A_r P)^2.
// Zero branches are skipped. Requires orthogonality at t.
double recovery_fidelity(const FockCode& fc, std::int64_t t, double gamma);

}  // namespace fsc::oracle

#endif
