#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hmg/hm_pair.hpp"

namespace hmg {

enum class NucleusKind { Simplex, DisjointSimplices, DualDisjoint };

const char* to_string(NucleusKind k);

// The starting complex of a nuclear decomposition. For Simplex, `left`
// holds all nucleus vertices and m = left.size() - 1 (m = -1 is the empty
// simplex, the base of ghost-only complexes). For the other kinds, `left`
// and `right` are the two simplex parts, m = left.size() - 1 and
// n = right.size() - 1.
struct Nucleus {
    NucleusKind kind;
    std::vector<std::string> left;
    std::vector<std::string> right;

    int m() const { return static_cast<int>(left.size()) - 1; }
    int n() const { return static_cast<int>(right.size()) - 1; }

    SimplicialComplex build() const;  // on ground left + right

    bool operator==(const Nucleus&) const = default;
};

struct NuclearStep {
    VertexKind op;  // Cone, Ghost or Lawrence
    std::string vertex;
    Int weight;
    bool operator==(const NuclearStep&) const = default;
};

enum class WeightCase {
    Unchecked,             // complex-only certificate
    BinaryLawrence,        // weight 2 on every Lawrence step (and, for a
                           // dual nucleus, on every nucleus vertex)
    SingleWeight3Lawrence  // disjoint nucleus with a single-vertex side of
                           // weight 2; Lawrence weights <= 3, one 3 at most
};

const char* to_string(WeightCase c);

// Replaying `steps` from `nucleus` (in order) reproduces the complex.
struct NuclearCertificate {
    Nucleus nucleus;
    std::vector<NuclearStep> steps;
    WeightCase weight_case = WeightCase::Unchecked;
};

SimplicialComplex replay(const NuclearCertificate& cert);
bool replays_to(const NuclearCertificate& cert, const SimplicialComplex& c);

// All decompositions of `pair`'s complex, collapsed to the weight-relevant
// data: distinct (nucleus incl. role orientation, set of Lawrence-step
// vertices), each with one representative step sequence. The enumeration
// peels cone/ghost/Lawrence vertices in every possible way, memoized on the
// remaining labeled state, so the collection is exhaustive.
std::vector<NuclearCertificate> nuclear_decompositions(const HMPair& pair);

// Complex-only decomposition (weights ignored); absent iff not nuclear.
std::optional<NuclearCertificate> nuclear_decompose(const SimplicialComplex& c);

}  // namespace hmg
