// Batch front door: sample or greedy-construct classical codes, build and
// certify Fock codes, emit bound curves, and run the dense oracle checks.
// Every command is a pure function of (flags, config file, input files,
// seeds); reruns write byte-identical outputs.
//
// Exit codes: 0 ok, 2 validation, 3 cap exceeded, 4 certification refusal,
// 5 oracle tolerance violation.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fsc/bounds.hpp"
#include "fsc/certify.hpp"
#include "fsc/classical.hpp"
#include "fsc/errors.hpp"
#include "fsc/fock.hpp"
#include "fsc/json_io.hpp"
#include "fsc/oracle.hpp"
#include "fsc/sha256.hpp"
#include "fsc/version.hpp"

namespace {

using fsc::io::ojson;

constexpr std::uint64_t kPairOpBudget = 200'000'000;  // L^2 q work for printed distances

struct SampleArgs {
    std::string ensemble = "uniform";
    int q = 0;
    double alpha = 0.0;
    std::int64_t N = 0;
    std::uint64_t L = 0;
    std::uint64_t seed = 0;
    std::string out;
};

struct GreedyArgs {
    int q = 0;
    double alpha = 0.0;
    std::int64_t N = 0;
    std::int64_t t = 1;
    std::uint64_t seed = 0;
    bool have_seed = false;
    bool no_typicality = false;
    double typ_eps = 1.0;
    double typ_xi = 0.25;
    std::uint64_t cap_enum = fsc::kDefaultEnumerationCap;
    bool sampled = false;
    std::uint64_t proposals = 100000;
    std::uint64_t max_words = 1024;
    std::string out;
};

struct CertifyArgs {
    std::string in;
    int K = 1;
    std::int64_t t = 0;
    double gamma = 0.1;
    std::string lambda_mode = "auto";
    std::string policy = "sequential";
    std::uint64_t partition_seed = 0;
    std::uint64_t cap_patterns = fsc::cert::kDefaultPatternCap;
    double typ_eps = 1.0;
    std::string out;
    std::string fock_out;
    std::string pi_out;
};

struct BoundsArgs {
    double alpha = 1.0;
    double delta_min = 0.0;
    double delta_max = 0.25;
    std::uint64_t steps = 26;
    std::vector<std::string> curves = {"gv", "u"};
    std::string out = ".";
};

struct OracleArgs {
    std::string check = "all";
    int q = 3;
    std::int64_t N = 6;
    std::int64_t t = 2;
    double gamma = 0.2;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::string fock;
    std::string out;
    bool inject_fault = false;
};

int resolve_q(int q, double alpha, std::int64_t N, const char* cmd) {
    if (q > 0) return q;
    if (alpha > 0.0) {
        const double qd = std::floor(alpha * (double)N);
        if (qd < 1.0) throw fsc::ValidationError(std::string(cmd) + ": floor(alpha*N) < 1");
        return (int)qd;
    }
    throw fsc::ValidationError(std::string(cmd) + ": give --q or --alpha");
}

void write_json_file(const std::string& path, const ojson& j) {
    fsc::io::write_text_file(path, fsc::io::dump(j));
}

void maybe_print_distance(const fsc::ClassicalCode& code) {
    const std::uint64_t work = (std::uint64_t)code.words.size() * code.words.size() *
                               (std::uint64_t)code.shape.q;
    if (code.words.size() >= 2 && work <= kPairOpBudget) {
        std::cout << "min_distance " << fsc::min_distance(code) << "\n";
    } else if (code.words.size() >= 2) {
        std::cout << "min_distance skipped (L^2 q above budget)\n";
    }
}

int cmd_sample(const SampleArgs& a) {
    if (a.L < 1) throw fsc::ValidationError("sample: --L must be >= 1");
    const int q = resolve_q(a.q, a.alpha, a.N, "sample");
    const fsc::SimplexShape shape(q, a.N);
    fsc::ClassicalCode code;
    if (a.ensemble == "uniform") {
        code = fsc::sample_uniform(shape, a.L, a.seed);
    } else if (a.ensemble == "multinomial") {
        code = fsc::sample_multinomial(shape, a.L, a.seed);
    } else {
        throw fsc::ValidationError("sample: ensemble must be uniform or multinomial");
    }
    if (a.alpha > 0.0) code.alpha = a.alpha;
    if (a.out.empty()) throw fsc::ValidationError("sample: --out is required");
    write_json_file(a.out, fsc::io::code_to_json(code));
    std::cout << "wrote " << a.out << " (" << code.words.size() << " words)\n";
    maybe_print_distance(code);
    return 0;
}

int cmd_greedy(const GreedyArgs& a) {
    const int q = resolve_q(a.q, a.alpha, a.N, "greedy");
    const fsc::SimplexShape shape(q, a.N);
    const double alpha = a.alpha > 0.0 ? a.alpha : (double)q / (double)a.N;
    std::optional<fsc::TypicalityParams> typ;
    if (!a.no_typicality) typ = fsc::TypicalityParams(alpha, a.typ_eps, a.typ_xi);

    fsc::ClassicalCode code;
    if (a.sampled) {
        if (!typ) throw fsc::ValidationError("greedy: the sampled fallback needs typicality");
        code = fsc::greedy_gv_sampled(shape, a.t, *typ, a.seed, a.proposals, a.max_words);
        std::cout << "sampled greedy accepted " << code.words.size() << " words\n";
        const std::uint64_t work = (std::uint64_t)code.words.size() * code.words.size() * q;
        if (code.words.size() >= 2 && work <= kPairOpBudget) {
            std::cout << "verified min_distance " << fsc::min_distance(code) << "\n";
        } else {
            std::cout << "distance unverified (L^2 q above budget)\n";
        }
    } else {
        std::optional<std::uint64_t> order_seed;
        if (a.have_seed) order_seed = a.seed;
        code = fsc::greedy_gv(shape, a.t, typ, order_seed, a.cap_enum);
        // Scan-maximality gives |code| * max ball bound >= |typical set|.
        std::uint64_t typical = 0;
        int max_support = 0;
        fsc::enumerate_simplex(shape, [&](const fsc::SimplexPoint& p) {
            if (!typ || fsc::typicality_check(p, *typ)) {
                ++typical;
                max_support = std::max(max_support, fsc::support_size(p));
            }
        }, a.cap_enum);
        const fsc::BigUint total = fsc::simplex_size(shape);
        std::cout << "typical points " << typical << " of " << total.to_string() << "\n";
        if (typical > 0 && a.t >= 1) {
            std::vector<std::int32_t> rep(q, 0);
            for (int i = 0; i < max_support; ++i) rep[i] = 1;
            std::int64_t rest = a.N - max_support;
            if (rest > 0) rep[0] += (std::int32_t)rest;
            const fsc::BigUint ball =
                fsc::ball_volume_bound(fsc::SimplexPoint::make(rep), a.t - 1);
            std::cout << "accepted " << code.words.size() << " words; counting bound "
                      << typical << "/" << ball.to_string() << "\n";
        } else {
            std::cout << "accepted " << code.words.size() << " words\n";
        }
    }
    if (a.alpha > 0.0) code.alpha = a.alpha;
    if (a.out.empty()) throw fsc::ValidationError("greedy: --out is required");
    write_json_file(a.out, fsc::io::code_to_json(code));
    std::cout << "wrote " << a.out << "\n";
    return 0;
}

int cmd_certify(const CertifyArgs& a) {
    if (a.in.empty()) throw fsc::ValidationError("certify: --in is required");
    const std::string in_bytes = fsc::io::read_text_file(a.in);
    const fsc::ClassicalCode code = fsc::io::code_from_json(nlohmann::json::parse(in_bytes));

    const fsc::PartitionPolicy policy = a.policy == "shuffled"
                                            ? fsc::PartitionPolicy::shuffled
                                            : fsc::PartitionPolicy::sequential;
    if (a.policy != "sequential" && a.policy != "shuffled")
        throw fsc::ValidationError("certify: --policy must be sequential or shuffled");
    const fsc::Partition part = fsc::make_partition(code, a.K, policy, a.partition_seed);

    fsc::FockCode fc;
    try {
        fc = fsc::build_fock_code(code, part, a.t);
    } catch (const fsc::ValidationError& e) {
        // Duplicate words are an orthogonality failure in disguise.
        throw fsc::CertificationRefused(std::string("certify: ") + e.what());
    }

    fsc::cert::LambdaMode mode;
    if (a.lambda_mode == "auto") {
        mode = code.ensemble == fsc::EnsembleTag::uniform
                   ? fsc::cert::LambdaMode::analytic_uniform
               : code.ensemble == fsc::EnsembleTag::multinomial
                   ? fsc::cert::LambdaMode::analytic_multinomial
                   : fsc::cert::LambdaMode::empirical_code_mean;
    } else {
        mode = fsc::cert::lambda_mode_from_string(a.lambda_mode);
    }

    const fsc::cert::CertReport report = fsc::cert::certify(fc, a.t, a.gamma, mode,
                                                            a.cap_patterns);
    if (a.out.empty()) throw fsc::ValidationError("certify: --out is required");
    write_json_file(a.out, fsc::io::cert_report_to_json(
                               report, {{a.in, fsc::sha256_hex(in_bytes)}}));
    if (!a.fock_out.empty()) write_json_file(a.fock_out, fsc::io::fock_to_json(fc));
    if (!a.pi_out.empty()) write_json_file(a.pi_out, fsc::io::pi_to_json(fsc::export_pi(fc)));

    const double alpha = code.alpha ? *code.alpha
                                    : (double)code.shape.q / (double)code.shape.N;
    std::cout << "eps_certified " << report.eps_certified << "\n";
    std::cout << "eps_ad " << report.eps_ad << "\n";
    std::cout << "quantum_rate " << fsc::quantum_rate(report.K, code.shape) << "\n";
    if (code.shape.N >= 2) {
        const std::int32_t B = (std::int32_t)fsc::TypicalityParams(alpha, a.typ_eps, 0.25)
                                   .inf_norm_cap(code.shape.N);
        std::cout << "local_excitation_overlap(B=" << B << ") "
                  << fsc::local_excitation_overlap(fc, B) << "\n";
    }
    if (!report.orthogonality.min_distance) {
        std::cout << "classical_min_distance n/a\n";
    } else {
        std::cout << "classical_min_distance " << *report.orthogonality.min_distance << "\n";
    }
    if (!fc.partition.discarded.empty())
        std::cout << "discarded " << fc.partition.discarded.size()
                  << " trailing words (K does not divide L)\n";
    std::cout << "wrote " << a.out << "\n";
    return 0;
}

int cmd_bounds(const BoundsArgs& a) {
    if (a.steps < 2) throw fsc::ValidationError("bounds: --steps must be >= 2");
    if (!(a.delta_max > a.delta_min))
        throw fsc::ValidationError("bounds: need delta_max > delta_min");
    std::vector<double> grid(a.steps);
    for (std::uint64_t i = 0; i < a.steps; ++i)
        grid[i] = a.delta_min +
                  (a.delta_max - a.delta_min) * (double)i / (double)(a.steps - 1);

    const double alpha = a.alpha;
    std::filesystem::create_directories(a.out);
    for (const std::string& name : a.curves) {
        std::function<double(double)> curve;
        if (name == "gv") curve = [alpha](double d) { return fsc::bounds::rate_gv(d, alpha); };
        else if (name == "u") curve = [alpha](double d) { return fsc::bounds::rate_u(d, alpha); };
        else if (name == "m") curve = [alpha](double d) { return fsc::bounds::rate_m(d, alpha); };
        else if (name == "qu")
            curve = [alpha](double d) {
                return fsc::bounds::quantum_rate_bound(d, alpha, fsc::bounds::Ensemble::uniform);
            };
        else if (name == "qm")
            curve = [alpha](double d) {
                return fsc::bounds::quantum_rate_bound(d, alpha,
                                                       fsc::bounds::Ensemble::multinomial);
            };
        else if (name == "exact")
            curve = [alpha](double d) { return fsc::bounds::exact_quantum_rate(d, alpha); };
        else
            throw fsc::ValidationError("bounds: unknown curve '" + name + "'");
        std::ostringstream csv;
        fsc::bounds::emit_curve(curve, grid, csv);
        std::ostringstream fname;
        fname << a.out << "/rate_" << name << "_alpha" << alpha << ".csv";
        fsc::io::write_text_file(fname.str(), csv.str());
        std::cout << "wrote " << fname.str() << "\n";
    }

    // Positivity-crossing diagnostics for the random-construction bound,
    // under both candidate Kraus-count exponents.
    for (auto ensemble : {fsc::bounds::Ensemble::uniform, fsc::bounds::Ensemble::multinomial}) {
        const char* ens_name = ensemble == fsc::bounds::Ensemble::uniform ? "uniform"
                                                                          : "multinomial";
        for (bool alpha_exp : {false, true}) {
            auto f = [&](double d) {
                return fsc::bounds::quantum_rate_bound(d, alpha, ensemble, alpha_exp);
            };
            const double lo = 1e-9, hi = 0.999;
            if (f(lo) > 0.0 && f(hi) < 0.0) {
                std::cout << "quantum rate crossing (" << ens_name
                          << (alpha_exp ? ", alpha exponent" : ", plain exponent")
                          << "): delta = " << fsc::bounds::zero_crossing(f, lo, hi) << "\n";
            } else {
                std::cout << "quantum rate crossing (" << ens_name
                          << (alpha_exp ? ", alpha exponent" : ", plain exponent")
                          << "): none in (0,1)\n";
            }
        }
    }
    return 0;
}

int cmd_oracle(const OracleArgs& a) {
    bool violated = false;
    ojson out;
    out["tool_version"] = fsc::kToolVersion;

    std::optional<fsc::FockCode> fc;
    std::map<std::string, std::string> digests;
    if (!a.fock.empty()) {
        const std::string bytes = fsc::io::read_text_file(a.fock);
        fc = fsc::io::fock_from_json(nlohmann::json::parse(bytes));
        digests[a.fock] = fsc::sha256_hex(bytes);
    }

    if (a.check == "trace" || a.check == "all") {
        const auto rep = fsc::oracle::check_trace_preserving(
            fsc::SimplexShape(a.q, a.N), a.t, a.gamma, a.trials, a.seed, a.inject_fault);
        ojson jt;
        jt["trials"] = rep.trials;
        jt["p_reference"] = rep.p_reference;
        jt["max_abs_deviation"] = rep.max_abs_deviation;
        jt["pass"] = rep.max_abs_deviation <= 1e-10;
        out["trace_preserving"] = jt;
        if (rep.max_abs_deviation > 1e-10) violated = true;
    }
    if ((a.check == "identify" || a.check == "all") && fc) {
        const auto rep = fsc::oracle::identification_sim(*fc, a.t, a.gamma, a.trials, a.seed);
        ojson ji;
        ji["trials"] = rep.trials;
        ji["leq_t_trials"] = rep.leq_t_trials;
        ji["correct_rate_given_leq_t"] = rep.correct_rate_given_leq_t;
        ji["leq_t_fraction"] = rep.leq_t_fraction;
        ji["p_reference"] = rep.p_reference;
        const bool pass = rep.leq_t_trials == 0 || rep.correct_rate_given_leq_t == 1.0;
        ji["pass"] = pass;
        out["identification"] = ji;
        if (!pass) violated = true;
    }
    if ((a.check == "recovery" || a.check == "all") && fc) {
        const double f = fsc::oracle::recovery_fidelity(*fc, a.t, a.gamma);
        ojson jr;
        jr["fidelity"] = f;
        const bool pass = f >= -1e-12 && f <= 1.0 + 1e-9;
        jr["pass"] = pass;
        out["recovery"] = jr;
        if (!pass) violated = true;
    }
    out["input_digests"] = digests;

    if (!a.out.empty()) write_json_file(a.out, out);
    std::cout << out.dump(2) << "\n";
    if (violated) throw fsc::OracleViolation("oracle: tolerance violated");
    return 0;
}

// Config file support: --config names a JSON object of long-option defaults;
// explicit flags win. Implemented by prepending synthesized tokens, with a
// take-last policy so the command line overrides them.
std::vector<std::string> merge_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string config_path;
    for (std::size_t i = 0; i + 1 < args.size(); ++i) {
        if (args[i] == "--config") {
            config_path = args[i + 1];
            args.erase(args.begin() + (std::ptrdiff_t)i, args.begin() + (std::ptrdiff_t)i + 2);
            break;
        }
    }
    if (config_path.empty()) return args;
    if (args.empty()) throw fsc::ValidationError("--config needs a subcommand");
    const nlohmann::json j = nlohmann::json::parse(fsc::io::read_text_file(config_path));
    if (!j.is_object()) throw fsc::ValidationError("config: top level must be an object");
    std::vector<std::string> merged;
    merged.push_back(args[0]);  // subcommand first
    for (auto it = j.begin(); it != j.end(); ++it) {
        merged.push_back("--" + it.key());
        if (it.value().is_string()) {
            merged.push_back(it.value().get<std::string>());
        } else if (it.value().is_boolean()) {
            if (!it.value().get<bool>()) merged.pop_back();
        } else {
            merged.push_back(it.value().dump());
        }
    }
    merged.insert(merged.end(), args.begin() + 1, args.end());
    return merged;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fock-state code construction and loss-channel certification"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.set_version_flag("--version", fsc::kToolVersion);
    app.require_subcommand(1);

    SampleArgs sa;
    auto* sample = app.add_subcommand("sample", "Sample a random classical code");
    sample->add_option("--ensemble", sa.ensemble, "uniform | multinomial");
    sample->add_option("--q", sa.q, "number of modes");
    sample->add_option("--alpha", sa.alpha, "mode ratio; q = floor(alpha N)");
    sample->add_option("--N", sa.N, "total excitation")->required();
    sample->add_option("--L", sa.L, "number of words")->required();
    sample->add_option("--seed", sa.seed, "RNG seed");
    sample->add_option("--out", sa.out, "output code file")->required();

    GreedyArgs ga;
    auto* greedy = app.add_subcommand("greedy", "Greedy distance-d construction");
    greedy->add_option("--q", ga.q, "number of modes");
    greedy->add_option("--alpha", ga.alpha, "mode ratio; q = floor(alpha N)");
    greedy->add_option("--N", ga.N, "total excitation")->required();
    greedy->add_option("--t", ga.t, "pairwise distance target")->required();
    auto* seed_opt = greedy->add_option("--seed", ga.seed, "scan-order shuffle seed");
    greedy->add_flag("--no-typicality", ga.no_typicality, "scan the whole simplex");
    greedy->add_option("--typ-eps", ga.typ_eps, "inf-norm slack");
    greedy->add_option("--typ-xi", ga.typ_xi, "support-window exponent");
    greedy->add_option("--cap-enum", ga.cap_enum, "enumeration cap");
    greedy->add_flag("--sampled", ga.sampled, "rejection-sampling fallback");
    greedy->add_option("--proposals", ga.proposals, "fallback proposal budget");
    greedy->add_option("--max-words", ga.max_words, "fallback size target");
    greedy->add_option("--out", ga.out, "output code file")->required();

    CertifyArgs ca;
    auto* certify = app.add_subcommand("certify", "Build and certify a Fock code");
    certify->add_option("--in", ca.in, "classical code file")->required();
    certify->add_option("--K", ca.K, "code dimension (block count)")->required();
    certify->add_option("--t", ca.t, "loss budget")->required();
    certify->add_option("--gamma", ca.gamma, "per-mode loss probability")->required();
    certify->add_option("--lambda-mode", ca.lambda_mode,
                        "auto | uniform | multinomial | empirical");
    certify->add_option("--policy", ca.policy, "sequential | shuffled partition");
    certify->add_option("--partition-seed", ca.partition_seed, "shuffle seed");
    certify->add_option("--cap-patterns", ca.cap_patterns, "pattern enumeration cap");
    certify->add_option("--typ-eps", ca.typ_eps, "slack for the reported overlap bound");
    certify->add_option("--out", ca.out, "report file")->required();
    certify->add_option("--fock-out", ca.fock_out, "also write the Fock code file");
    certify->add_option("--pi-out", ca.pi_out, "also write the PI descriptor");

    BoundsArgs ba;
    auto* boundscmd = app.add_subcommand("bounds", "Emit rate curves as CSV");
    boundscmd->add_option("--alpha", ba.alpha, "mode ratio");
    boundscmd->add_option("--delta-min", ba.delta_min, "grid start");
    boundscmd->add_option("--delta-max", ba.delta_max, "grid end");
    boundscmd->add_option("--steps", ba.steps, "grid size");
    boundscmd->add_option("--curves", ba.curves, "gv u m qu qm exact")
        ->delimiter(',')
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    boundscmd->add_option("--out", ba.out, "output directory");

    OracleArgs oa;
    auto* oraclecmd = app.add_subcommand("oracle", "Dense ground-truth checks");
    oraclecmd->add_option("--check", oa.check, "trace | identify | recovery | all");
    oraclecmd->add_option("--q", oa.q, "modes");
    oraclecmd->add_option("--N", oa.N, "excitation");
    oraclecmd->add_option("--t", oa.t, "loss budget");
    oraclecmd->add_option("--gamma", oa.gamma, "loss probability");
    oraclecmd->add_option("--trials", oa.trials, "simulation trials");
    oraclecmd->add_option("--seed", oa.seed, "RNG seed");
    oraclecmd->add_option("--fock", oa.fock, "Fock code file (identify/recovery)");
    oraclecmd->add_option("--out", oa.out, "report file");
    oraclecmd->add_flag("--inject-fault", oa.inject_fault,
                        "corrupt one amplitude to exercise the violation path");

    try {
        const std::vector<std::string> merged = merge_config(argc, argv);
        std::vector<const char*> cargs;
        cargs.push_back(argv[0]);
        for (const auto& s : merged) cargs.push_back(s.c_str());
        app.parse((int)cargs.size(), cargs.data());

        if (*sample) return cmd_sample(sa);
        if (*greedy) {
            ga.have_seed = seed_opt->count() > 0;
            return cmd_greedy(ga);
        }
        if (*certify) return cmd_certify(ca);
        if (*boundscmd) return cmd_bounds(ba);
        if (*oraclecmd) return cmd_oracle(oa);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const fsc::CertificationRefused& e) {
        std::cerr << "refused: " << e.what() << "\n";
        if (!e.witness.empty()) std::cerr << "witness: " << e.witness << "\n";
        return 4;
    } catch (const fsc::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const fsc::OracleViolation& e) {
        std::cerr << e.what() << "\n";
        return 5;
    } catch (const fsc::ValidationError& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
