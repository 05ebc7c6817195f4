#include "hmg/hm_pair.hpp"

#include <algorithm>
#include <stdexcept>

namespace hmg {

HMPair::HMPair(SimplicialComplex complex, std::vector<Int> weights)
    : complex_(std::move(complex)), weights_(std::move(weights)) {
    if (weights_.size() != complex_.vertex_count())
        throw std::invalid_argument("one weight per vertex required");
    for (Int w : weights_)
        if (w < 2) throw std::invalid_argument("vertex weights must be >= 2");
}

HMPair HMPair::uniform(SimplicialComplex complex, Int weight) {
    std::vector<Int> w(complex.vertex_count(), weight);
    return HMPair(std::move(complex), std::move(w));
}

namespace {
std::vector<Int> erase_weight(const std::vector<Int>& w, std::size_t v) {
    std::vector<Int> out(w);
    out.erase(out.begin() + v);
    return out;
}
}  // namespace

HMPair HMPair::delete_vertex(std::size_t v) const {
    return HMPair(complex_.delete_vertex(v), erase_weight(weights_, v));
}

HMPair HMPair::link_vertex(std::size_t v) const {
    return HMPair(complex_.link_vertex(v), erase_weight(weights_, v));
}

HMPair HMPair::extend(VertexKind kind, const std::string& fresh_label, Int weight) const {
    std::vector<Int> w(weights_);
    w.push_back(weight);
    return HMPair(complex_.extend(kind, fresh_label), std::move(w));
}

HMPair HMPair::with_weight(std::size_t v, Int weight) const {
    std::vector<Int> w(weights_);
    w.at(v) = weight;
    return HMPair(complex_, std::move(w));
}

bool HMPair::operator==(const HMPair& other) const {
    if (!(complex_ == other.complex_)) return false;
    for (std::size_t i = 0; i < complex_.vertex_count(); ++i)
        if (weights_[i] != other.weight_of(complex_.label(i))) return false;
    return true;
}

HMPair merge_face_rewrite(const HMPair& pair, Face merged, const std::string& fresh_label) {
    const SimplicialComplex& c = pair.complex();
    if (merged == 0 || !c.is_face(merged))
        throw std::invalid_argument("merge_face_rewrite: not a nonempty face");
    for (Face f : c.facets())
        if ((f & merged) != 0 && !face_subset(merged, f))
            throw std::invalid_argument(
                "merge_face_rewrite: a facet meets the face without containing it");

    std::string label = fresh_label;
    if (label.empty()) {
        bool first = true;
        for (const auto& lab : c.face_labels(merged)) {
            if (!first) label += "*";
            first = false;
            label += lab;
        }
    }
    while (std::find(c.ground().begin(), c.ground().end(), label) != c.ground().end())
        label += "'";

    // New ground: survivors in original order, fresh vertex appended.
    std::vector<std::string> new_ground;
    std::vector<Int> new_weights;
    std::vector<int> survivor_index(c.vertex_count(), -1);
    for (std::size_t i = 0; i < c.vertex_count(); ++i) {
        if (merged & (Face(1) << i)) continue;
        survivor_index[i] = static_cast<int>(new_ground.size());
        new_ground.push_back(c.label(i));
        new_weights.push_back(pair.weight(i));
    }
    const std::size_t fresh = new_ground.size();
    new_ground.push_back(label);
    Int prod = 1;
    for (std::size_t i = 0; i < c.vertex_count(); ++i)
        if (merged & (Face(1) << i)) prod = checked_mul(prod, pair.weight(i));
    new_weights.push_back(prod);

    std::vector<Face> new_facets;
    for (Face f : c.facets()) {
        Face g = 0;
        for (std::size_t i = 0; i < c.vertex_count(); ++i)
            if ((f & (Face(1) << i)) && survivor_index[i] >= 0)
                g |= Face(1) << survivor_index[i];
        if (face_subset(merged, f)) g |= Face(1) << fresh;
        new_facets.push_back(g);
    }
    return HMPair(SimplicialComplex(std::move(new_ground), std::move(new_facets)),
                  std::move(new_weights));
}

std::string to_string(const HMPair& pair) {
    std::string out = to_string(pair.complex());
    out += " d=(";
    for (std::size_t i = 0; i < pair.vertex_count(); ++i) {
        if (i) out += ",";
        out += std::to_string(pair.weight(i));
    }
    out += ")";
    return out;
}

}  // namespace hmg
