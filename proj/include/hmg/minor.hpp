#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hmg/hm_pair.hpp"

namespace hmg {

struct ReductionStep {
    enum Op { Delete, Link } op;
    std::string vertex;
    bool operator==(const ReductionStep&) const = default;
};

// Witness that `pattern` is a minor of `target`: the reduction steps, the
// per-vertex weight reduction on the survivors, and the relabeling onto the
// pattern. `forbidden_id` identifies the catalog entry when the pattern
// came from the forbidden catalog.
struct MinorWitness {
    std::string forbidden_id;
    std::vector<ReductionStep> steps;
    std::map<std::string, Int> weight_reduction;      // surviving vertex -> reduced weight
    std::map<std::string, std::string> isomorphism;   // surviving vertex -> pattern vertex
};

// Exhaustive backtracking over per-vertex deletions and links, memoized on
// canonical forms; weight reduction is folded into the final matching.
std::optional<MinorWitness> embed_as_minor(const HMPair& target, const HMPair& pattern);

// Replays the witness against the target and checks the result is the
// pattern on the nose (after relabeling).
bool validate_witness(const HMPair& target, const HMPair& pattern, const MinorWitness& w);

}  // namespace hmg
