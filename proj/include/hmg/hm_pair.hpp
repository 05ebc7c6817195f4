#pragma once

#include <string>
#include <vector>

#include "hmg/arith.hpp"
#include "hmg/simplicial_complex.hpp"

namespace hmg {

// A simplicial complex together with an integer weight >= 2 per ground-set
// vertex. Weights are stored aligned with the ground order.
class HMPair {
public:
    HMPair(SimplicialComplex complex, std::vector<Int> weights);

    static HMPair uniform(SimplicialComplex complex, Int weight);

    const SimplicialComplex& complex() const { return complex_; }
    const std::vector<Int>& weights() const { return weights_; }
    Int weight(std::size_t v) const { return weights_[v]; }
    Int weight_of(const std::string& label) const {
        return weights_[complex_.index_of(label)];
    }
    std::size_t vertex_count() const { return complex_.vertex_count(); }

    HMPair delete_vertex(std::size_t v) const;
    HMPair link_vertex(std::size_t v) const;
    HMPair extend(VertexKind kind, const std::string& fresh_label, Int weight) const;
    HMPair with_weight(std::size_t v, Int weight) const;

    // Label-keyed equality: same complex, same weight on each vertex.
    bool operator==(const HMPair& other) const;

private:
    SimplicialComplex complex_;
    std::vector<Int> weights_;
};

// Face-merging rewrite: replaces the face `merged` (which must meet every
// facet either trivially or as a subset) by a fresh vertex carrying the
// product of the merged weights. The design matrices of input and output
// have equal integer kernels.
HMPair merge_face_rewrite(const HMPair& pair, Face merged,
                          const std::string& fresh_label = "");

std::string to_string(const HMPair& pair);

}  // namespace hmg
