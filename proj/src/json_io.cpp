#include "fsc/json_io.hpp"

#include <fstream>
#include <set>

#include "fsc/errors.hpp"
#include "fsc/version.hpp"

namespace fsc::io {

namespace {

void reject_unknown(const nlohmann::json& j, const std::set<std::string>& known,
                    const std::string& what) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key()))
            throw ValidationError(what + ": unknown field '" + it.key() + "'");
}

std::vector<SimplexPoint> words_from_json(const nlohmann::json& j, const SimplexShape& shape) {
    std::vector<SimplexPoint> words;
    for (const auto& arr : j) {
        std::vector<std::int32_t> coords = arr.get<std::vector<std::int32_t>>();
        if ((int)coords.size() != shape.q)
            throw ValidationError("code file: word length differs from q");
        SimplexPoint p = SimplexPoint::make(std::move(coords));
        if (p.total() != shape.N)
            throw ValidationError("code file: word excitation differs from N");
        words.push_back(std::move(p));
    }
    return words;
}

void append_classical_fields(ojson& j, const ClassicalCode& code) {
    j["q"] = code.shape.q;
    j["N"] = code.shape.N;
    if (code.alpha) j["alpha"] = *code.alpha;
    j["ensemble"] = to_string(code.ensemble);
    if (code.seed) j["seed"] = *code.seed;
    if (code.claimed_distance) j["claimed_distance"] = *code.claimed_distance;
    ojson words = ojson::array();
    for (const auto& w : code.words) words.push_back(w.coords());
    j["words"] = std::move(words);
}

ClassicalCode classical_from_fields(const nlohmann::json& j) {
    ClassicalCode code;
    code.shape = SimplexShape(j.at("q").get<int>(), j.at("N").get<std::int64_t>());
    if (j.contains("alpha")) code.alpha = j.at("alpha").get<double>();
    code.ensemble = ensemble_from_string(j.at("ensemble").get<std::string>());
    if (j.contains("seed")) code.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("claimed_distance"))
        code.claimed_distance = j.at("claimed_distance").get<std::int64_t>();
    code.words = words_from_json(j.at("words"), code.shape);
    return code;
}

const std::set<std::string> kClassicalFields = {"q",    "N",    "alpha",           "ensemble",
                                                "seed", "claimed_distance", "words"};

}  // namespace

ojson code_to_json(const ClassicalCode& code) {
    ojson j;
    append_classical_fields(j, code);
    return j;
}

ClassicalCode code_from_json(const nlohmann::json& j) {
    reject_unknown(j, kClassicalFields, "code file");
    return classical_from_fields(j);
}

ojson fock_to_json(const FockCode& fc) {
    ojson j;
    append_classical_fields(j, fc.classical);
    j["K"] = fc.partition.K;
    j["T"] = fc.partition.T;
    j["block_of"] = fc.partition.block_of;
    j["discarded"] = fc.partition.discarded;
    if (fc.t_target) j["t_target"] = *fc.t_target;
    return j;
}

FockCode fock_from_json(const nlohmann::json& j) {
    std::set<std::string> known = kClassicalFields;
    known.insert({"K", "T", "block_of", "discarded", "t_target"});
    reject_unknown(j, known, "fock file");
    const ClassicalCode code = classical_from_fields(j);
    Partition part;
    part.K = j.at("K").get<int>();
    part.T = j.at("T").get<std::int64_t>();
    part.block_of = j.at("block_of").get<std::vector<std::int32_t>>();
    part.discarded = j.at("discarded").get<std::vector<std::int64_t>>();
    std::optional<std::int64_t> t_target;
    if (j.contains("t_target")) t_target = j.at("t_target").get<std::int64_t>();
    return build_fock_code(code, part, t_target);
}

ojson pi_to_json(const PiDescriptor& pi) {
    ojson j;
    j["kind"] = "permutation_invariant";
    j["length"] = pi.length;
    j["alphabet"] = pi.alphabet;
    ojson basis = ojson::array();
    for (const auto& b : pi.basis) {
        ojson entry;
        entry["block"] = b.block;
        entry["compositions"] = b.compositions;
        entry["amplitudes"] = b.amplitudes;
        basis.push_back(std::move(entry));
    }
    j["basis"] = std::move(basis);
    return j;
}

PiDescriptor pi_from_json(const nlohmann::json& j) {
    reject_unknown(j, {"kind", "length", "alphabet", "basis"}, "pi descriptor");
    if (j.at("kind").get<std::string>() != "permutation_invariant")
        throw ValidationError("pi descriptor: unexpected kind");
    PiDescriptor pi;
    pi.length = j.at("length").get<std::int64_t>();
    pi.alphabet = j.at("alphabet").get<int>();
    for (const auto& entry : j.at("basis")) {
        reject_unknown(entry, {"block", "compositions", "amplitudes"}, "pi basis entry");
        PiBlock b;
        b.block = entry.at("block").get<int>();
        b.compositions = entry.at("compositions").get<std::vector<std::vector<std::int32_t>>>();
        b.amplitudes = entry.at("amplitudes").get<std::vector<double>>();
        pi.basis.push_back(std::move(b));
    }
    return pi;
}

ojson cert_report_to_json(const cert::CertReport& report,
                          const std::map<std::string, std::string>& input_digests) {
    ojson j;
    j["K"] = report.K;
    j["T"] = report.T;
    j["q"] = report.q;
    j["N"] = report.N;
    j["t"] = report.t;
    j["gamma"] = report.gamma;
    // M can exceed 64 bits in principle; stored as a decimal string.
    j["M"] = report.M.to_string();
    j["orthogonality"] = cert::to_string(report.orthogonality.verdict);
    if (report.orthogonality.witness)
        j["orthogonality_witness"] = report.orthogonality.witness->describe();
    if (report.orthogonality.min_distance)
        j["classical_min_distance"] = *report.orthogonality.min_distance;
    j["lambda_mode"] = cert::to_string(report.lambda_mode);
    j["lambda_sum"] = report.lambda_sum;
    j["eps_max"] = report.eps_max;
    j["eps_certified"] = report.eps_certified;
    j["p_loss"] = report.p_loss;
    j["eps_ad"] = report.eps_ad;
    j["patterns_enumerated"] = report.patterns_enumerated;
    j["discarded_words"] = report.discarded_words;
    j["tool_version"] = kToolVersion;
    ojson digests;
    for (const auto& [name, hex] : input_digests) digests[name] = hex;
    j["input_digests"] = std::move(digests);
    return j;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(bytes.data(), (std::streamsize)bytes.size());
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return bytes;
}

}  // namespace fsc::io
