// Acceptance suite: one check per release criterion, each printing a single
// PASS/FAIL line. Run with no arguments for the whole battery or with a
// criterion number (1-13) for one check. Exit status is the number of
// failing criteria.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fsc/bounds.hpp"
#include "fsc/certify.hpp"
#include "fsc/classical.hpp"
#include "fsc/errors.hpp"
#include "fsc/fock.hpp"
#include "fsc/json_io.hpp"
#include "fsc/oracle.hpp"
#include "fsc/sha256.hpp"

namespace fs = std::filesystem;
using namespace fsc;

namespace {

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

FockCode explicit_fock(int q, std::int64_t N, std::vector<std::vector<std::int32_t>> words,
                       int K) {
    ClassicalCode code;
    code.shape = SimplexShape(q, N);
    for (auto& w : words) code.words.push_back(SimplexPoint::make(std::move(w)));
    return build_fock_code(code, make_partition(code, K));
}

// The maximal distance-3 code on S(3,6) found by the default greedy scan.
const std::vector<std::vector<std::int32_t>> kDistance3Words = {
    {0, 0, 6}, {0, 3, 3}, {0, 6, 0}, {3, 0, 3}, {3, 3, 0}, {6, 0, 0}};

// Deviation-based certified epsilon without the orthogonality gate; the
// concentration trend (criterion 9) runs on random codes whose distance is
// far below t+1, where certify() would rightly refuse.
double eps_certified_of(const FockCode& fc, std::int64_t t, double gamma,
                        cert::LambdaMode mode) {
    const auto stats = cert::deviation_stats(fc, t, gamma, mode);
    const double m = pattern_count(fc.shape().q, t).to_double();
    return std::sqrt((double)fc.K() * m * stats.eps_max);
}

bool criterion_1() {
    double worst = 0.0;
    for (int q : {2, 3}) {
        for (std::int64_t N = 1; N <= 6; ++N) {
            for (std::int64_t t = 0; t <= N; ++t) {
                for (double gamma : {0.05, 0.3}) {
                    const auto rep = oracle::check_trace_preserving(
                        SimplexShape(q, N), t, gamma, 100,
                        (std::uint64_t)(q * 1000 + N * 10 + t));
                    worst = std::max(worst, rep.max_abs_deviation);
                }
            }
        }
    }
    std::printf("  max |sum - p(N,t)| = %.3e\n", worst);
    return worst <= 1e-10;
}

bool criterion_2() {
    double worst_rel = 0.0;
    int built = 0;
    std::uint64_t seed = 500;
    while (built < 20) {
        const int q = 2 + built % 2;
        const std::int64_t N = 3 + built % 4;
        const std::int64_t t = std::min<std::int64_t>(1 + built % 3, N);
        const int K = 1 + built % 2;
        const std::int64_t T = 1 + (built / 2) % 3;
        const auto code = sample_uniform(SimplexShape(q, N), (std::size_t)(K * T), seed++);
        FockCode fc;
        try {
            fc = build_fock_code(code, make_partition(code, K));
        } catch (const ValidationError&) {
            continue;  // duplicate draw; try the next seed
        }
        ++built;
        const double gamma = 0.1 + 0.03 * (built % 7);
        const double p = bounds::p_loss(bounds::ChannelParams(gamma, N, t));
        const oracle::GradedBasis basis(q, N);
        for (const auto& r : enumerate_patterns(q, t, 100000)) {
            for (int b = 0; b < K; ++b) {
                const double closed = cert::diag_expectation(fc, b, r, gamma, p) * p;
                const double dense =
                    oracle::bruteforce_inner(basis, fc, b, b, r, r, gamma).real();
                const double scale = std::max({std::abs(closed), std::abs(dense), 1e-300});
                if (std::abs(closed) < 1e-250 && std::abs(dense) < 1e-250) continue;
                worst_rel = std::max(worst_rel, std::abs(closed - dense) / scale);
            }
        }
    }
    std::printf("  20 random codes, worst relative gap = %.3e\n", worst_rel);
    return worst_rel <= 1e-10;
}

bool criterion_3() {
    double worst = 0.0;
    struct Inst { int q; std::int64_t N, t; };
    for (const Inst inst : {Inst{2, 4, 1}, Inst{2, 6, 2}, Inst{3, 6, 2}, Inst{3, 6, 3}}) {
        const auto code =
            greedy_gv(SimplexShape(inst.q, inst.N), inst.t + 1, std::nullopt, std::nullopt);
        const int K = (int)std::min<std::size_t>(code.words.size(), 3);
        const auto fc = build_fock_code(code, make_partition(code, K));
        if (cert::orthogonality_check(fc, inst.t).verdict !=
            cert::OrthoVerdict::proved_by_distance)
            return false;
        const oracle::GradedBasis basis(inst.q, inst.N);
        const auto patterns = enumerate_patterns(inst.q, inst.t, 100000);
        for (int i = 0; i < K; ++i) {
            for (int j = 0; j < K; ++j) {
                for (const auto& ra : patterns) {
                    for (const auto& rb : patterns) {
                        if (i == j && ra == rb) continue;
                        worst = std::max(worst, std::abs(oracle::bruteforce_inner(
                                                    basis, fc, i, j, ra, rb, 0.25)));
                    }
                }
            }
        }
    }
    std::printf("  worst off-term magnitude = %.3e\n", worst);
    return worst <= 1e-12;
}

bool criterion_4() {
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const int q = 2 + (int)(seed % 2);
        const std::int64_t N = 4 + (std::int64_t)(seed % 3);
        const int K = 1 + (int)(seed % 2);
        ClassicalCode code;
        for (std::uint64_t s = seed * 37;; ++s) {
            code = sample_uniform(SimplexShape(q, N), (std::size_t)(2 * K), s);
            try {
                (void)build_fock_code(code, make_partition(code, K));
                break;
            } catch (const ValidationError&) {
            }
        }
        const auto fc = build_fock_code(code, make_partition(code, K));
        const double gamma = 0.1 + 0.05 * (double)(seed % 5);
        for (const std::int64_t t : {N / 2, N}) {  // including all weights up to N
            for (auto mode : {cert::LambdaMode::analytic_uniform,
                              cert::LambdaMode::analytic_multinomial,
                              cert::LambdaMode::empirical_code_mean}) {
                const auto stats = cert::deviation_stats(fc, t, gamma, mode);
                worst = std::max(worst, std::abs(stats.lambda_sum - 1.0));
            }
        }
    }
    std::printf("  worst |sum(lambda) - 1| = %.3e\n", worst);
    return worst <= 1e-9;
}

bool criterion_5() {
    double worst = 0.0;
    for (double alpha : {0.5, 1.0, 2.0, 5.0, 10.0})
        worst = std::max(worst, std::abs(bounds::delta_alpha_quadrature(alpha) -
                                         bounds::delta_alpha_bessel(alpha)));
    const double tail = std::abs(bounds::delta_alpha_quadrature(1e6) - 1.0);
    std::printf("  route gap = %.3e, |limit - 1| at alpha=1e6: %.3e\n", worst, tail);
    return worst <= 1e-8 && tail <= 1e-5;
}

bool criterion_6() {
    const std::int64_t N = 300;
    std::vector<double> means;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto code = sample_multinomial(SimplexShape((int)N, N), 200, seed);
        means.push_back(pairwise_distance_stats(code).normalized_mean);
    }
    const double gap = std::abs(median(means) - bounds::delta_alpha_bessel(1.0));
    std::printf("  |median normalized mean - Delta_1| = %.4f\n", gap);
    return gap <= 0.02;
}

bool criterion_7() {
    if (std::abs(bounds::rate_gv(0.0, 1.0) - 2.0) > 1e-12) return false;
    if (std::abs(bounds::rate_u(0.0, 1.0) - 1.0) > 1e-12) return false;
    for (int i = 0; i <= 100; ++i) {
        const double d = 0.2 * i / 100.0;
        if (bounds::rate_gv(d, 1.0) < bounds::rate_u(d, 1.0)) return false;
    }
    std::printf("  endpoints exact; rate_gv >= rate_u on [0, 0.2]\n");
    return true;
}

bool criterion_8() {
    if (bounds::eps_to_ad(0.0, 1.0) != 0.0) return false;
    for (double p = 0.05; p <= 1.0; p += 0.05)
        if (std::abs(bounds::eps_to_ad(0.0, p) - std::sqrt(1.0 - p)) > 1e-14) return false;
    for (double e = 0.0; e <= 1.0; e += 0.05)
        if (std::abs(bounds::eps_from_ad(e, 1.0) - e) > 1e-15) return false;
    for (double p : {0.2, 0.7, 1.0}) {
        double prev = -1.0;
        for (double e = 0.0; e <= 1.0; e += 0.01) {
            const double v = bounds::eps_to_ad(e, p);
            if (v < prev) return false;
            prev = v;
        }
    }
    for (double e : {0.1, 0.4}) {
        double prev = 2.0;
        for (double p = 0.05; p <= 1.0; p += 0.01) {
            const double v = bounds::eps_to_ad(e, p);
            if (v > prev + 1e-15) return false;
            prev = v;
        }
    }
    std::printf("  conversion identities and monotonicity hold\n");
    return true;
}

bool criterion_9() {
    const SimplexShape shape(12, 12);
    const std::int64_t t = 2;
    const double gamma = 0.1;
    const int K = 2;
    std::vector<double> medians;
    for (std::size_t L : {64u, 256u, 1024u, 4096u}) {
        std::vector<double> eps;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto code = sample_uniform(shape, L, 7700 + seed);
            const auto part = make_partition(code, K);
            FockCode fc;  // deviation path; random codes this dense cannot
            fc.classical = code;  // pass the distance gate
            fc.partition = part;
            fc.amplitudes.assign(code.words.size(), 1.0 / std::sqrt((double)part.T));
            eps.push_back(eps_certified_of(fc, t, gamma, cert::LambdaMode::analytic_uniform));
        }
        medians.push_back(median(eps));
    }
    std::printf("  median eps_certified by L: %.4f %.4f %.4f %.4f\n", medians[0], medians[1],
                medians[2], medians[3]);
    for (std::size_t i = 1; i < medians.size(); ++i)
        if (medians[i] > medians[i - 1]) return false;
    return medians[3] < medians[0] / 2.0;
}

bool criterion_10() {
    const auto fc = explicit_fock(3, 6, kDistance3Words, 2);
    const auto rep = oracle::identification_sim(fc, 2, 0.2, 10000, 42);
    const double sigma =
        std::sqrt(rep.p_reference * (1.0 - rep.p_reference) / (double)rep.trials);
    std::printf("  conditional id rate = %.6f, |fraction - p| = %.5f (3 sigma = %.5f)\n",
                rep.correct_rate_given_leq_t, std::abs(rep.leq_t_fraction - rep.p_reference),
                3.0 * sigma);
    return rep.correct_rate_given_leq_t == 1.0 &&
           std::abs(rep.leq_t_fraction - rep.p_reference) <= 3.0 * sigma;
}

bool criterion_11() {
    const auto fc = explicit_fock(3, 6, kDistance3Words, 2);
    const auto report = cert::certify(fc, 2, 0.2, cert::LambdaMode::empirical_code_mean);
    const double f = oracle::recovery_fidelity(fc, 2, 0.2);
    std::printf("  eps_certified = %.4f, recovery fidelity = %.8f\n", report.eps_certified, f);
    if (report.eps_certified <= 0.3 &&
        f < 1.0 - 2.0 * report.eps_certified * report.eps_certified)
        return false;

    const auto k1 = explicit_fock(3, 6, kDistance3Words, 1);
    const double f1 = oracle::recovery_fidelity(k1, 2, 0.2);
    std::printf("  K=1 fidelity = 1 - %.3e\n", 1.0 - f1);
    return f1 >= 1.0 - 1e-10;
}

bool criterion_12() {
    const std::int64_t N = 10000;
    const SimplexShape shape((int)N, N);
    const double cap_uniform = 2.0 * std::log2((double)N);
    const double cap_multinomial = 2.0 * std::log((double)N) / std::log(std::log((double)N));
    int pass_u = 0, pass_m = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto u = occupancy_stats(sample_uniform(shape, 100, seed), (int)N);
        if ((double)u.max_inf_norm <= cap_uniform) ++pass_u;
        const auto m = occupancy_stats(sample_multinomial(shape, 100, seed), (int)N);
        if ((double)m.max_inf_norm <= cap_multinomial) ++pass_m;
    }
    std::printf("  uniform: %d/20 seeds under 2 log2 N = %.2f; multinomial: %d/20 under "
                "2 ln N / ln ln N = %.2f\n",
                pass_u, cap_uniform, pass_m, cap_multinomial);
    return pass_u >= 19 && pass_m >= 19;
}

bool criterion_13() {
    const fs::path dir =
        fs::temp_directory_path() / ("fsc_accept_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string cli = FSC_CLI_PATH;
    auto run = [&](const std::string& args) {
        const std::string cmd = cli + " " + args + " >/dev/null 2>&1";
        return WEXITSTATUS(std::system(cmd.c_str()));
    };
    auto digest = [&](const fs::path& p) { return sha256_hex(io::read_text_file(p)); };

    bool ok = true;
    const std::string code1 = (dir / "u1.json").string();
    const std::string code2 = (dir / "u2.json").string();
    std::vector<std::pair<std::string, std::vector<std::string>>> commands = {
        {"sample --ensemble uniform --q 6 --N 6 --L 32 --seed 7 --out @", {"u"}},
        {"sample --ensemble multinomial --q 8 --N 8 --L 16 --seed 9 --out @", {"m"}},
        {"greedy --q 3 --N 6 --t 3 --no-typicality --out @", {"g"}},
        {"bounds --alpha 1 --delta-min 0 --delta-max 0.25 --steps 26 --curves gv,u --out @",
         {"rate_gv_alpha1.csv", "rate_u_alpha1.csv"}},
        {"", {}}};  // placeholder for certify below
    int idx = 0;
    for (const auto& [tmpl, outputs] : commands) {
        if (tmpl.empty()) break;
        ++idx;
        const fs::path out_a = dir / ("a" + std::to_string(idx));
        const fs::path out_b = dir / ("b" + std::to_string(idx));
        for (const fs::path& out : {out_a, out_b}) {
            std::string cmd = tmpl;
            const bool is_dir = tmpl.rfind("bounds", 0) == 0;
            const std::string target = is_dir ? out.string() : out.string() + ".json";
            cmd.replace(cmd.find('@'), 1, target);
            if (run(cmd) != 0) ok = false;
        }
        if (outputs[0].find(".csv") != std::string::npos) {
            for (const auto& f : outputs)
                if (digest(out_a / f) != digest(out_b / f)) ok = false;
        } else {
            if (digest(fs::path(out_a.string() + ".json")) !=
                digest(fs::path(out_b.string() + ".json")))
                ok = false;
        }
    }
    // certify (writes report, fock file, and PI descriptor)
    if (run("greedy --q 3 --N 6 --t 3 --no-typicality --out " + code1) != 0) ok = false;
    if (run("greedy --q 3 --N 6 --t 3 --no-typicality --out " + code2) != 0) ok = false;
    if (digest(code1) != digest(code2)) ok = false;
    for (const char* tag : {"x", "y"}) {
        const std::string base = (dir / tag).string();
        if (run("certify --in " + code1 + " --K 2 --t 2 --gamma 0.2 --lambda-mode empirical "
                "--out " + base + "rep.json --fock-out " + base + "fock.json --pi-out " +
                base + "pi.json") != 0)
            ok = false;
    }
    for (const char* f : {"rep.json", "fock.json", "pi.json"})
        if (digest(dir / (std::string("x") + f)) != digest(dir / (std::string("y") + f)))
            ok = false;

    std::error_code ec;
    fs::remove_all(dir, ec);
    std::printf("  5 commands rerun byte-identical: %s\n", ok ? "yes" : "no");
    return ok;
}

struct Criterion {
    int id;
    const char* name;
    std::function<bool()> fn;
};

const std::vector<Criterion> kCriteria = {
    {1, "constant-excitation fidelity identity", criterion_1},
    {2, "closed-form diagonals vs dense oracle", criterion_2},
    {3, "orthogonality of distance-protected codes", criterion_3},
    {4, "lambda normalization in all modes", criterion_4},
    {5, "Delta_alpha dual evaluation", criterion_5},
    {6, "empirical multinomial distance constant", criterion_6},
    {7, "rate endpoints and curve ordering", criterion_7},
    {8, "epsilon conversion algebra", criterion_8},
    {9, "concentration trend in L", criterion_9},
    {10, "error identification", criterion_10},
    {11, "recovery fidelity sanity", criterion_11},
    {12, "bounded occupancy", criterion_12},
    {13, "CLI reproducibility", criterion_13},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);
    int failures = 0;
    for (const auto& c : kCriteria) {
        if (only != 0 && c.id != only) continue;
        bool ok = false;
        try {
            ok = c.fn();
        } catch (const std::exception& e) {
            std::printf("  exception: %s\n", e.what());
        }
        std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", c.id, c.name);
        if (!ok) ++failures;
    }
    return failures;
}
