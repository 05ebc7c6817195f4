#pragma once

#include <map>
#include <optional>
#include <string>

#include "hmg/hm_pair.hpp"

namespace hmg {

// Canonical key for memoization: equal keys imply isomorphic pairs (same
// facet structure and the same weight on corresponding vertices). Vertices
// are grouped by a local signature and the minimal encoding over the
// signature-compatible relabelings is taken; if that permutation space is
// unreasonably large the exact labeled encoding is used instead, which is
// still sound for memoization, merely less sharing.
std::string canonical_pair_key(const HMPair& pair);

// Exact labeled encoding (labels, facets, weights).
std::string labeled_state_key(const HMPair& pair);
std::string labeled_state_key(const SimplicialComplex& c);

// Bijection pattern vertex -> target vertex mapping facets onto facets
// exactly. Weight condition per vertex: pattern == target when
// `exact_weights`, else pattern <= target (minor embedding).
std::optional<std::map<std::string, std::string>> find_isomorphism(
    const HMPair& pattern, const HMPair& target, bool exact_weights);

bool pairs_isomorphic(const HMPair& a, const HMPair& b);

}  // namespace hmg
