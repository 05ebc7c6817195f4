#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hmg/design_matrix.hpp"
#include "hmg/graver.hpp"
#include "hmg/hm_pair.hpp"

namespace hmg::testing {

inline HMPair make_pair(const std::vector<std::string>& ground,
                        const std::vector<std::vector<std::string>>& facets,
                        const std::vector<Int>& weights) {
    return HMPair(SimplicialComplex::from_labels(ground, facets), weights);
}

inline HMPair binary_pair(const std::vector<std::string>& ground,
                          const std::vector<std::vector<std::string>>& facets) {
    return HMPair::uniform(SimplicialComplex::from_labels(ground, facets), 2);
}

// Independent face oracle: downward closure computed on label sets.
inline std::set<std::set<std::string>> label_face_closure(
    const std::vector<std::vector<std::string>>& facets) {
    std::set<std::set<std::string>> faces;
    faces.insert({});
    for (const auto& facet : facets) {
        std::vector<std::string> f(facet);
        const std::size_t n = f.size();
        for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
            std::set<std::string> sub;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t(1) << i)) sub.insert(f[i]);
            faces.insert(std::move(sub));
        }
    }
    return faces;
}

inline std::set<std::set<std::string>> faces_as_label_sets(const SimplicialComplex& c) {
    std::set<std::set<std::string>> out;
    for (Face f : c.faces()) {
        auto labels = c.face_labels(f);
        out.insert(std::set<std::string>(labels.begin(), labels.end()));
    }
    return out;
}

// Independent Graver oracle for unimodular matrices: the Graver basis then
// equals the set of circuits, and circuits are found by scanning column
// subsets for one-dimensional kernels with full support. Exponential in the
// column count; keep inputs small.
inline GraverBasis circuits_by_rank(const IntMatrix& a) {
    GraverBasis out;
    const std::size_t n = a.cols();
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        std::vector<std::size_t> cols;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i)) cols.push_back(i);
        auto basis = integer_kernel_basis(a.select_columns(cols));
        if (basis.size() != 1) continue;
        SignedVector g = SignedVector::from_dense(basis[0]);
        if (g.support_size() != cols.size()) continue;  // not full support
        SignedVector full;
        for (const auto& [idx, v] : g.entries) full.entries.emplace_back(cols[idx], v);
        out.push_back(full.canonical());
    }
    return canonicalize(std::move(out));
}

// No element of the set is a conformal sum of two nonzero kernel vectors
// drawn from the set itself (pairwise soundness check).
inline bool conformally_irreducible_pairwise(const GraverBasis& basis) {
    std::vector<SignedVector> all;
    for (const auto& v : basis) {
        all.push_back(v);
        all.push_back(v.negated());
    }
    for (const auto& u : basis)
        for (const auto& v : all) {
            if (v == u || v.negated() == u) continue;
            if (conformal_leq(v, u)) {
                SignedVector rest = subtract(u, v);
                if (!rest.entries.empty()) return false;
            }
        }
    return true;
}

inline SignedVector sv(std::vector<std::pair<std::size_t, Int>> entries) {
    SignedVector v;
    v.entries = std::move(entries);
    std::sort(v.entries.begin(), v.entries.end());
    return v;
}

inline IntMatrix from_rows(const std::vector<std::vector<Int>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

// All simplicial complexes on the ground set {"1",...,"n"} (every facet
// antichain, including the {emptyset} complex).
std::vector<SimplicialComplex> all_complexes(std::size_t n);

}  // namespace hmg::testing
