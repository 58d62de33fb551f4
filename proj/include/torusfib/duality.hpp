#pragma once

// Fibration-level duality: swapping the two codimension-2 stratum types,
// replacing every monodromy matrix by its inverse transpose (with vertex
// triples reversed so they stay consistent), and verifying that a candidate
// pair of fibrations is mirror-dual under a given vertex correspondence.

#include <string>
#include <vector>

#include "torusfib/assembly.hpp"
#include "torusfib/monodromy.hpp"

namespace tfib {

// II <-> III and III5 <-> II5x5; Generic and I are self-dual.
FibreType dual_fibre_type(FibreType t);

// Inverse transpose of every matrix, in reversed order: if T1 T2 T3 = 1 then
// the dual triple satisfies the same identity.
MonodromyTriple dualize(const MonodromyTriple& t);

// The dual fibration over the same base locus: types swapped, all monodromy
// dualized.  Involutive, and negates the Euler characteristic.  Throws
// InconsistentInput when the datum is malformed (size mismatches, missing or
// inconsistent triples, non-unimodular matrices).
FibrationDatum dualize_fibration(const FibrationDatum& F);

struct MirrorReport {
    bool ok = false;
    long long structure_violations = 0;
    long long type_violations = 0;
    long long monodromy_violations = 0;
    std::vector<std::string> messages;  // human-readable, capped
};

// Checks that iso (F vertex id -> G vertex id) is a bijection matching the
// two locus graphs edge for edge, every fibre type to its dual, and every
// vertex triple to a GL(3,Z)-conjugate of the dualized one (searched within
// a bounded word length; skipped where the type already disagrees).  Collects
// defects instead of throwing.
MirrorReport verify_mirror_pair(const FibrationDatum& F, const FibrationDatum& G,
                                const std::vector<int>& iso);

}  // namespace tfib
