#include "fsc/fock.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "fsc/errors.hpp"
#include "fsc/rng.hpp"

namespace fsc {

Partition make_partition(const ClassicalCode& code, int K, PartitionPolicy policy,
                         std::uint64_t seed) {
    const std::size_t L = code.words.size();
    if (K < 1) throw ValidationError("make_partition: K must be >= 1");
    if ((std::size_t)K > L) throw ValidationError("make_partition: K exceeds the code size");

    std::vector<std::size_t> order(L);
    std::iota(order.begin(), order.end(), 0);
    if (policy == PartitionPolicy::shuffled) {
        rng::Stream stream(seed, 0);
        for (std::size_t i = L; i > 1; --i)
            std::swap(order[i - 1], order[stream.bounded(i)]);
    }

    Partition part;
    part.K = K;
    part.T = (std::int64_t)(L / (std::size_t)K);
    part.block_of.assign(L, -1);
    const std::size_t used = (std::size_t)part.T * (std::size_t)K;
    for (std::size_t pos = 0; pos < L; ++pos) {
        if (pos < used) {
            part.block_of[order[pos]] = (std::int32_t)(pos / (std::size_t)part.T);
        } else {
            part.discarded.push_back((std::int64_t)order[pos]);
        }
    }
    return part;
}

std::vector<std::size_t> FockCode::block_members(int block) const {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < partition.block_of.size(); ++i)
        if (partition.block_of[i] == block) members.push_back(i);
    return members;
}

FockCode build_fock_code(const ClassicalCode& code, const Partition& partition,
                         std::optional<std::int64_t> t_target,
                         const std::optional<std::vector<double>>& amplitude_override) {
    const std::size_t L = code.words.size();
    if (partition.block_of.size() != L)
        throw ValidationError("build_fock_code: partition does not match the code size");
    if (partition.K < 1 || partition.T < 1)
        throw ValidationError("build_fock_code: empty partition");

    // Blocks must be disjoint as point sets; equal retained words anywhere
    // (same block or not) break the orthogonality the construction relies on.
    std::map<SimplexPoint, std::size_t> seen;
    std::vector<std::int64_t> block_count(partition.K, 0);
    for (std::size_t i = 0; i < L; ++i) {
        const std::int32_t b = partition.block_of[i];
        if (b < 0) continue;
        if (b >= partition.K) throw ValidationError("build_fock_code: block index out of range");
        ++block_count[b];
        auto [it, inserted] = seen.emplace(code.words[i], i);
        if (!inserted)
            throw ValidationError("build_fock_code: duplicate word at indices " +
                                  std::to_string(it->second) + " and " + std::to_string(i));
    }
    for (int b = 0; b < partition.K; ++b) {
        if (block_count[b] == 0) throw ValidationError("build_fock_code: empty block");
        if (block_count[b] != partition.T)
            throw ValidationError("build_fock_code: block sizes differ from T");
    }

    FockCode fc;
    fc.classical = code;
    fc.partition = partition;
    fc.t_target = t_target;
    if (amplitude_override) {
        if (amplitude_override->size() != L)
            throw ValidationError("build_fock_code: amplitude override has wrong length");
        std::vector<double> norms(partition.K, 0.0);
        for (std::size_t i = 0; i < L; ++i) {
            const std::int32_t b = partition.block_of[i];
            const double a = (*amplitude_override)[i];
            if (b < 0) continue;
            if (a < 0.0) throw ValidationError("build_fock_code: amplitudes must be >= 0");
            norms[b] += a * a;
        }
        for (double n : norms)
            if (std::abs(n - 1.0) > 1e-12)
                throw ValidationError("build_fock_code: block amplitudes are not normalized");
        fc.amplitudes = *amplitude_override;
        for (std::size_t i = 0; i < L; ++i)
            if (partition.block_of[i] < 0) fc.amplitudes[i] = 0.0;
    } else {
        fc.amplitudes.assign(L, 0.0);
        const double a = 1.0 / std::sqrt((double)partition.T);
        for (std::size_t i = 0; i < L; ++i)
            if (partition.block_of[i] >= 0) fc.amplitudes[i] = a;
    }
    return fc;
}

double quantum_rate(int K, const SimplexShape& shape) {
    if (K < 1) throw ValidationError("quantum_rate: K must be >= 1");
    const BigUint dim = simplex_size(shape);
    if (dim == BigUint(1)) throw ValidationError("quantum_rate: one-dimensional space");
    return (double)(std::log2((long double)K) / dim.log2l());
}

double local_excitation_overlap(const FockCode& fc, std::int32_t B) {
    if (B < 0) throw ValidationError("local_excitation_overlap: B must be >= 0");
    std::vector<double> mass(fc.partition.K, 0.0);
    for (std::size_t i = 0; i < fc.classical.words.size(); ++i) {
        const std::int32_t b = fc.partition.block_of[i];
        if (b < 0) continue;
        if (inf_norm(fc.classical.words[i]) <= B)
            mass[b] += fc.amplitudes[i] * fc.amplitudes[i];
    }
    double lo = 1.0;
    for (double m : mass) lo = std::min(lo, m);
    return lo;
}

bool PiDescriptor::operator==(const PiDescriptor& o) const {
    if (length != o.length || alphabet != o.alphabet || basis.size() != o.basis.size())
        return false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].block != o.basis[i].block ||
            basis[i].compositions != o.basis[i].compositions ||
            basis[i].amplitudes != o.basis[i].amplitudes)
            return false;
    }
    return true;
}

PiDescriptor export_pi(const FockCode& fc) {
    PiDescriptor pi;
    pi.length = fc.shape().N;
    pi.alphabet = fc.shape().q;
    for (int b = 0; b < fc.partition.K; ++b) {
        PiBlock block;
        block.block = b;
        for (std::size_t i : fc.block_members(b)) {
            block.compositions.push_back(fc.classical.words[i].coords());
            block.amplitudes.push_back(fc.amplitudes[i]);
        }
        pi.basis.push_back(std::move(block));
    }
    return pi;
}

}  // namespace fsc
