#include "hmg/simplicial_complex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hmg {

const char* to_string(VertexKind k) {
    switch (k) {
        case VertexKind::Cone: return "cone";
        case VertexKind::Ghost: return "ghost";
        case VertexKind::Lawrence: return "lawrence";
        case VertexKind::Ordinary: return "ordinary";
    }
    return "?";
}

namespace {

// Keep only inclusion-maximal faces; empty input normalizes to {emptyset}.
std::vector<Face> antichain(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> maximal;
    for (Face f : faces) {
        bool dominated = false;
        for (Face g : faces)
            if (f != g && face_subset(f, g)) { dominated = true; break; }
        if (!dominated) maximal.push_back(f);
    }
    if (maximal.empty()) maximal.push_back(0);
    return maximal;
}

bool face_order(Face a, Face b) {
    if (face_size(a) != face_size(b)) return face_size(a) < face_size(b);
    // Lexicographic on the sorted vertex index sequences: compare from the
    // lowest index upward.
    while (a != 0 && b != 0) {
        int ia = __builtin_ctz(a), ib = __builtin_ctz(b);
        if (ia != ib) return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> ground, std::vector<Face> facets)
    : ground_(std::move(ground)) {
    if (ground_.size() > 31)
        throw std::invalid_argument("ground set too large (limit 31 vertices)");
    {
        auto sorted = ground_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("duplicate vertex label");
    }
    const Face full = full_mask();
    for (Face f : facets)
        if (!face_subset(f, full))
            throw std::invalid_argument("facet outside the ground set");
    facets_ = antichain(std::move(facets));
}

SimplicialComplex SimplicialComplex::from_labels(
    std::vector<std::string> ground,
    const std::vector<std::vector<std::string>>& facet_labels) {
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < ground.size(); ++i) pos[ground[i]] = i;
    std::vector<Face> facets;
    for (const auto& fl : facet_labels) {
        Face f = 0;
        for (const auto& lab : fl) {
            auto it = pos.find(lab);
            if (it == pos.end())
                throw std::invalid_argument("facet references unknown vertex: " + lab);
            f |= Face(1) << it->second;
        }
        facets.push_back(f);
    }
    return SimplicialComplex(std::move(ground), std::move(facets));
}

namespace {
std::vector<std::string> numbered_labels(int count) {
    std::vector<std::string> labels;
    for (int i = 1; i <= count; ++i) labels.push_back(std::to_string(i));
    return labels;
}
}  // namespace

SimplicialComplex SimplicialComplex::simplex(int m) {
    auto labels = numbered_labels(m + 1);
    Face full = (Face(1) << (m + 1)) - 1;
    return SimplicialComplex(std::move(labels), {full});
}

SimplicialComplex SimplicialComplex::disjoint_simplices(int m, int n) {
    auto labels = numbered_labels(m + n + 2);
    Face left = (Face(1) << (m + 1)) - 1;
    Face right = ((Face(1) << (m + n + 2)) - 1) & ~left;
    return SimplicialComplex(std::move(labels), {left, right});
}

SimplicialComplex SimplicialComplex::dual_disjoint(int m, int n) {
    return disjoint_simplices(m, n).alexander_dual();
}

std::size_t SimplicialComplex::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < ground_.size(); ++i)
        if (ground_[i] == label) return i;
    throw std::invalid_argument("unknown vertex: " + label);
}

std::vector<std::string> SimplicialComplex::face_labels(Face f) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < ground_.size(); ++i)
        if (f & (Face(1) << i)) out.push_back(ground_[i]);
    return out;
}

bool SimplicialComplex::is_face(Face f) const {
    return std::any_of(facets_.begin(), facets_.end(),
                       [f](Face g) { return face_subset(f, g); });
}

std::vector<Face> SimplicialComplex::faces() const {
    std::set<Face> all;
    for (Face f : facets_) {
        // All subsets of f.
        Face sub = f;
        while (true) {
            all.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    std::vector<Face> out(all.begin(), all.end());
    std::sort(out.begin(), out.end(), face_order);
    return out;
}

bool SimplicialComplex::is_full_simplex() const {
    return !ground_.empty() && facets_.size() == 1 && facets_[0] == full_mask();
}

std::optional<std::pair<Face, Face>> SimplicialComplex::as_disjoint_simplices() const {
    if (facets_.size() != 2) return std::nullopt;
    Face a = facets_[0], b = facets_[1];
    if (a == 0 || b == 0) return std::nullopt;
    if ((a & b) != 0 || (a | b) != full_mask()) return std::nullopt;
    return std::make_pair(a, b);
}

namespace {
std::vector<std::string> erase_index(const std::vector<std::string>& v, std::size_t i) {
    std::vector<std::string> out(v);
    out.erase(out.begin() + i);
    return out;
}

// Drop bit v and compact the higher bits down by one.
Face squeeze(Face f, std::size_t v) {
    Face low = f & ((Face(1) << v) - 1);
    Face high = f >> (v + 1);
    return low | (high << v);
}
}  // namespace

SimplicialComplex SimplicialComplex::delete_vertex(std::size_t v) const {
    if (v >= ground_.size()) throw std::invalid_argument("vertex index out of range");
    const Face bit = Face(1) << v;
    std::vector<Face> candidates;
    for (Face f : facets_) candidates.push_back(squeeze(f & ~bit, v));
    return SimplicialComplex(erase_index(ground_, v), std::move(candidates));
}

SimplicialComplex SimplicialComplex::link_vertex(std::size_t v) const {
    if (v >= ground_.size()) throw std::invalid_argument("vertex index out of range");
    const Face bit = Face(1) << v;
    std::vector<Face> candidates;
    for (Face f : facets_)
        if (f & bit) candidates.push_back(squeeze(f & ~bit, v));
    // Link of a ghost vertex: no face F has F+v a face, normalized to the
    // {emptyset} complex on the reduced ground set.
    return SimplicialComplex(erase_index(ground_, v), std::move(candidates));
}

std::vector<Face> SimplicialComplex::minimal_nonfaces() const {
    const Face full = full_mask();
    std::vector<Face> minimal;
    // Scan subsets in cardinality order; a non-face all of whose
    // one-element-smaller subsets are faces is inclusion-minimal.
    std::vector<Face> by_card;
    for (Face s = 0; s <= full; ++s) by_card.push_back(s);
    std::sort(by_card.begin(), by_card.end(),
              [](Face a, Face b) { return face_size(a) < face_size(b); });
    for (Face s : by_card) {
        if (is_face(s)) continue;
        bool all_sub_faces = true;
        for (Face t = s; t != 0; t &= t - 1) {
            Face sub = s & ~(t & (~t + 1));
            if (!is_face(sub)) { all_sub_faces = false; break; }
        }
        if (all_sub_faces) minimal.push_back(s);
    }
    return minimal;
}

SimplicialComplex SimplicialComplex::alexander_dual() const {
    if (is_full_simplex())
        throw std::invalid_argument("Alexander dual of a full simplex is undefined (no non-faces)");
    const Face full = full_mask();
    std::vector<Face> duals;
    for (Face nf : minimal_nonfaces()) duals.push_back(full & ~nf);
    return SimplicialComplex(ground_, std::move(duals));
}

SimplicialComplex SimplicialComplex::extend(VertexKind kind, const std::string& fresh_label) const {
    for (const auto& lab : ground_)
        if (lab == fresh_label)
            throw std::invalid_argument("vertex label collision: " + fresh_label);
    std::vector<std::string> new_ground(ground_);
    new_ground.push_back(fresh_label);
    const Face bit = Face(1) << ground_.size();
    std::vector<Face> new_facets;
    switch (kind) {
        case VertexKind::Cone:
            for (Face f : facets_) new_facets.push_back(f | bit);
            break;
        case VertexKind::Ghost:
            new_facets = facets_;
            break;
        case VertexKind::Lawrence:
            new_facets.push_back(full_mask());
            for (Face f : facets_) new_facets.push_back(f | bit);
            break;
        case VertexKind::Ordinary:
            throw std::invalid_argument("extend: kind must be cone, ghost or lawrence");
    }
    return SimplicialComplex(std::move(new_ground), std::move(new_facets));
}

bool SimplicialComplex::is_cone_vertex(std::size_t v) const {
    const Face bit = Face(1) << v;
    return std::all_of(facets_.begin(), facets_.end(),
                       [bit](Face f) { return (f & bit) != 0; });
}

bool SimplicialComplex::is_ghost_vertex(std::size_t v) const {
    const Face bit = Face(1) << v;
    return std::none_of(facets_.begin(), facets_.end(),
                        [bit](Face f) { return (f & bit) != 0; });
}

bool SimplicialComplex::is_lawrence_vertex(std::size_t v) const {
    const Face complement = full_mask() & ~(Face(1) << v);
    return std::find(facets_.begin(), facets_.end(), complement) != facets_.end();
}

std::set<VertexKind> SimplicialComplex::classify_vertex(std::size_t v) const {
    if (v >= ground_.size()) throw std::invalid_argument("vertex index out of range");
    std::set<VertexKind> kinds;
    if (is_cone_vertex(v)) kinds.insert(VertexKind::Cone);
    if (is_ghost_vertex(v)) kinds.insert(VertexKind::Ghost);
    if (is_lawrence_vertex(v)) kinds.insert(VertexKind::Lawrence);
    if (kinds.empty()) kinds.insert(VertexKind::Ordinary);
    return kinds;
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
    if (ground_.size() != other.ground_.size()) return false;
    std::vector<std::size_t> map_to_other(ground_.size());
    for (std::size_t i = 0; i < ground_.size(); ++i) {
        bool found = false;
        for (std::size_t j = 0; j < other.ground_.size(); ++j)
            if (ground_[i] == other.ground_[j]) {
                map_to_other[i] = j;
                found = true;
                break;
            }
        if (!found) return false;
    }
    std::vector<Face> mapped;
    for (Face f : facets_) {
        Face g = 0;
        for (std::size_t i = 0; i < ground_.size(); ++i)
            if (f & (Face(1) << i)) g |= Face(1) << map_to_other[i];
        mapped.push_back(g);
    }
    std::sort(mapped.begin(), mapped.end());
    return mapped == other.facets_;
}

std::string to_string(const SimplicialComplex& c) {
    std::string out = "{";
    bool first_facet = true;
    for (Face f : c.facets()) {
        if (!first_facet) out += ", ";
        first_facet = false;
        out += "{";
        bool first = true;
        for (const auto& lab : c.face_labels(f)) {
            if (!first) out += ",";
            first = false;
            out += lab;
        }
        out += "}";
    }
    out += "} on {";
    bool first = true;
    for (const auto& lab : c.ground()) {
        if (!first) out += ",";
        first = false;
        out += lab;
    }
    out += "}";
    return out;
}

}  // namespace hmg
