#ifndef FSC_FOCK_HPP
#define FSC_FOCK_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "fsc/classical.hpp"

namespace fsc {

// Fock-state quantum codes: an equal-block partition of a classical code,
// one basis state per block as the uniform superposition of the block's
// Fock words.

struct Partition {
    std::vector<std::int32_t> block_of;    // word index -> block in [K]; -1 = discarded
    int K = 0;                             // block count
    std::int64_t T = 0;                    // common block size
    std::vector<std::int64_t> discarded;   // trailing indices dropped when K does not divide L
};

enum class PartitionPolicy { sequential, shuffled };

// Equal blocks of size T = floor(L/K); the trailing L mod K indices of the
// scan order are discarded and listed. `shuffled` permutes indices first
// (deterministically from `seed`).
Partition make_partition(const ClassicalCode& code, int K,
                         PartitionPolicy policy = PartitionPolicy::sequential,
                         std::uint64_t seed = 0);

struct FockCode {
    ClassicalCode classical;
    Partition partition;
    std::vector<double> amplitudes;  // per word index; 0 for discarded words
    std::optional<std::int64_t> t_target;

    int K() const { return partition.K; }
    std::int64_t T() const { return partition.T; }
    const SimplexShape& shape() const { return classical.shape; }
    // Word indices of one block, in scan order.
    std::vector<std::size_t> block_members(int block) const;
};

// Builds the quantum code with uniform amplitudes 1/sqrt(T) (or the given
// override, normalized per block to 1 within 1e-12). Rejects duplicate words
// within a block and across blocks: basis states must be unit-norm
// superpositions of distinct Fock states and blocks must be disjoint as sets.
FockCode build_fock_code(const ClassicalCode& code, const Partition& partition,
                         std::optional<std::int64_t> t_target = std::nullopt,
                         const std::optional<std::vector<double>>& amplitude_override =
                             std::nullopt);

// log2(K) / log2 |S(q, N)|. Throws for the degenerate one-dimensional space.
double quantum_rate(int K, const SimplexShape& shape);

// Guaranteed lower bound on the occupancy-measurement success probability
// over all code states: min over blocks of the amplitude mass carried by
// words with inf-norm <= B.
double local_excitation_overlap(const FockCode& fc, std::int32_t B);

// Permutation-invariant export: each Fock word of composition n maps to the
// Dicke state of length N over a q-letter alphabet with that composition.
struct PiBlock {
    int block = 0;
    std::vector<std::vector<std::int32_t>> compositions;
    std::vector<double> amplitudes;
};

struct PiDescriptor {
    std::int64_t length = 0;  // N
    int alphabet = 0;         // q
    std::vector<PiBlock> basis;

    bool operator==(const PiDescriptor& o) const;
};

PiDescriptor export_pi(const FockCode& fc);

}  // namespace fsc

#endif
