#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hmg {

// A face is a bitmask over the dense vertex indices of a complex's ground
// set. Ground sets stay small (the minor/decomposition searches brute-force
// over vertex permutations), so 32 bits is plenty.
using Face = std::uint32_t;

inline int face_size(Face f) { return __builtin_popcount(f); }
inline bool face_subset(Face a, Face b) { return (a & ~b) == 0; }

enum class VertexKind { Cone, Ghost, Lawrence, Ordinary };

const char* to_string(VertexKind k);

// Simplicial complex: an ordered ground set of opaque string labels plus the
// antichain of facets. The empty face is always a face; facets may be
// exactly {emptyset}, in which case every vertex is a ghost.
class SimplicialComplex {
public:
    // Facets are deduplicated, dominated ones dropped; {} normalizes to
    // {emptyset}. Throws std::invalid_argument on duplicate labels or faces
    // outside the ground set.
    SimplicialComplex(std::vector<std::string> ground, std::vector<Face> facets);

    static SimplicialComplex from_labels(
        std::vector<std::string> ground,
        const std::vector<std::vector<std::string>>& facet_labels);

    static SimplicialComplex simplex(int m);                  // facets {ground}, m+1 vertices
    static SimplicialComplex disjoint_simplices(int m, int n);
    static SimplicialComplex dual_disjoint(int m, int n);     // Alexander dual of the above

    std::size_t vertex_count() const { return ground_.size(); }
    const std::vector<std::string>& ground() const { return ground_; }
    const std::vector<Face>& facets() const { return facets_; }
    Face full_mask() const { return ground_.empty() ? 0 : (Face(1) << ground_.size()) - 1; }

    const std::string& label(std::size_t index) const { return ground_[index]; }
    std::size_t index_of(const std::string& label) const;  // throws on unknown label
    std::vector<std::string> face_labels(Face f) const;

    bool is_face(Face f) const;
    // Downward closure of the facets, by (cardinality, index-lexicographic).
    std::vector<Face> faces() const;

    bool is_full_simplex() const;
    // Two disjoint nonempty facets covering the ground set; returns the pair.
    std::optional<std::pair<Face, Face>> as_disjoint_simplices() const;

    SimplicialComplex delete_vertex(std::size_t v) const;
    SimplicialComplex link_vertex(std::size_t v) const;
    SimplicialComplex alexander_dual() const;  // throws on a full simplex
    std::vector<Face> minimal_nonfaces() const;

    SimplicialComplex extend(VertexKind kind, const std::string& fresh_label) const;

    std::set<VertexKind> classify_vertex(std::size_t v) const;
    bool is_cone_vertex(std::size_t v) const;
    bool is_ghost_vertex(std::size_t v) const;
    bool is_lawrence_vertex(std::size_t v) const;

    // Ground sets compared as sets, facets as label sets; the presentation
    // order of the ground set is not part of the value.
    bool operator==(const SimplicialComplex& other) const;

private:
    std::vector<std::string> ground_;
    std::vector<Face> facets_;  // sorted, antichain
};

std::string to_string(const SimplicialComplex& c);

}  // namespace hmg
