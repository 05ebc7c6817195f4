#include "hmg/unimodularity.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>

#include "hmg/design_matrix.hpp"

namespace hmg {

namespace {

HMPair binary(const std::vector<std::vector<std::string>>& facets,
              std::vector<std::string> ground) {
    return HMPair::uniform(SimplicialComplex::from_labels(std::move(ground), facets), 2);
}

// Boundary of the m-simplex, disjoint union with one isolated vertex.
HMPair boundary_simplex_plus_point(int m) {
    std::vector<std::string> ground;
    for (int i = 1; i <= m + 2; ++i) ground.push_back(std::to_string(i));
    std::vector<Face> facets;
    Face bd = (Face(1) << (m + 1)) - 1;
    for (int v = 0; v <= m; ++v) facets.push_back(bd & ~(Face(1) << v));
    facets.push_back(Face(1) << (m + 1));
    return HMPair::uniform(SimplicialComplex(std::move(ground), std::move(facets)), 2);
}

// Boundary of the octahedron: vertices i and i' are antipodal; facets are
// the triangles avoiding all three antipodal pairs.
HMPair octahedron_boundary() {
    std::vector<std::string> ground = {"1", "2", "3", "1'", "2'", "3'"};
    std::vector<std::vector<std::string>> facets;
    for (const auto& a : {"1", "1'"})
        for (const auto& b : {"2", "2'"})
            for (const auto& c : {"3", "3'"})
                facets.push_back({a, b, c});
    return binary(facets, ground);
}

std::vector<CatalogEntry> build_catalog(std::size_t max_vertices) {
    std::vector<CatalogEntry> cat;
    auto add = [&](std::string id, HMPair pair) {
        if (pair.vertex_count() <= max_vertices)
            cat.push_back({std::move(id), std::move(pair)});
    };

    // Binary forbidden complexes.
    for (int m = 1; m + 2 <= static_cast<int>(max_vertices); ++m)
        add("boundary_simplex_" + std::to_string(m) + "_plus_point",
            boundary_simplex_plus_point(m));
    add("path_on_four_vertices",
        binary({{"1", "2"}, {"2", "3"}, {"3", "4"}}, {"1", "2", "3", "4"}));
    add("octahedron_boundary", octahedron_boundary());
    if (octahedron_boundary().vertex_count() <= max_vertices)
        add("octahedron_boundary_dual",
            HMPair::uniform(octahedron_boundary().complex().alexander_dual(), 2));
    add("five_vertex_a",
        binary({{"1", "2"}, {"1", "5"}, {"2", "3", "4"}, {"3", "4", "5"}},
               {"1", "2", "3", "4", "5"}));
    add("five_vertex_b",
        binary({{"1", "3", "4"}, {"2", "3", "5"}, {"2", "4", "5"}},
               {"1", "2", "3", "4", "5"}));
    add("five_vertex_c",
        binary({{"1", "2"}, {"2", "3", "5"}, {"3", "4"}, {"1", "4", "5"}},
               {"1", "2", "3", "4", "5"}));

    // Weighted minimal pairs.
    auto weighted = [](const std::vector<std::vector<std::string>>& facets,
                       std::vector<std::string> ground, std::vector<Int> w) {
        return HMPair(SimplicialComplex::from_labels(std::move(ground), facets), std::move(w));
    };
    add("triangle_333",
        weighted({{"1", "2"}, {"2", "3"}, {"1", "3"}}, {"1", "2", "3"}, {3, 3, 3}));
    add("lawrence3_disjoint_edges",
        weighted({{"1", "2", "5"}, {"3", "4", "5"}, {"1", "2", "3", "4"}},
                 {"1", "2", "3", "4", "5"}, {2, 2, 2, 2, 3}));
    add("lawrence3_edge_point",
        weighted({{"1", "2", "4"}, {"3", "4"}, {"1", "2", "3"}},
                 {"1", "2", "3", "4"}, {2, 2, 3, 3}));
    add("four_cycle_2223",
        weighted({{"1", "2"}, {"2", "3"}, {"3", "4"}, {"1", "4"}},
                 {"1", "2", "3", "4"}, {2, 2, 2, 3}));
    add("lawrence4_over_ghost",
        weighted({{"1", "2"}, {"1", "3"}, {"2", "3", "4"}},
                 {"1", "2", "3", "4"}, {4, 2, 2, 2}));
    add("lawrence3_four_cycle",
        weighted({{"1", "2", "3", "4"}, {"1", "2", "5"}, {"2", "3", "5"},
                  {"3", "4", "5"}, {"1", "4", "5"}},
                 {"1", "2", "3", "4", "5"}, {2, 2, 2, 2, 3}));
    add("double_lawrence3_over_ghost",
        weighted({{"1", "2", "3", "4"}, {"1", "2", "3", "5"}, {"1", "4", "5"}, {"2", "4", "5"}},
                 {"1", "2", "3", "4", "5"}, {2, 2, 2, 3, 3}));
    return cat;
}

}  // namespace

const std::vector<CatalogEntry>& forbidden_catalog(std::size_t max_vertices) {
    static std::mutex mutex;
    static std::map<std::size_t, std::vector<CatalogEntry>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(max_vertices);
    if (it == cache.end())
        it = cache.emplace(max_vertices, build_catalog(max_vertices)).first;
    return it->second;
}

bool is_unimodular_by_minors(const IntMatrix& a, std::size_t max_cols) {
    if (a.cols() > max_cols)
        throw guard_error("minor test guarded to " + std::to_string(max_cols) + " columns");
    const std::size_t r = rank(a);
    if (r == 0) return true;
    IntMatrix rows = IntMatrix(r, a.cols());
    {
        auto idx = independent_rows(a);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t c = 0; c < a.cols(); ++c)
                rows.at(i, c) = a.at(idx[i], c);
    }
    // All size-r column subsets.
    std::vector<std::size_t> pick(r);
    for (std::size_t i = 0; i < r; ++i) pick[i] = i;
    Int magnitude = 0;
    while (true) {
        Int d = bareiss_determinant(rows.select_columns(pick));
        if (d < 0) d = -d;
        if (d != 0) {
            if (magnitude == 0) magnitude = d;
            else if (magnitude != d) return false;
        }
        std::size_t t = r;
        bool advanced = false;
        while (t > 0) {
            --t;
            if (pick[t] + 1 <= a.cols() - (r - t)) {
                ++pick[t];
                for (std::size_t s = t + 1; s < r; ++s) pick[s] = pick[s - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return true;
}

namespace {

// Weight clauses of the classification, checked on one decomposition.
std::optional<WeightCase> weight_case_for(const HMPair& pair, const NuclearCertificate& cert) {
    std::vector<Int> lawrence;
    for (const auto& s : cert.steps)
        if (s.op == VertexKind::Lawrence) lawrence.push_back(pair.weight_of(s.vertex));

    bool all_binary = std::all_of(lawrence.begin(), lawrence.end(),
                                  [](Int w) { return w == 2; });
    switch (cert.nucleus.kind) {
        case NucleusKind::Simplex:
            if (all_binary) return WeightCase::BinaryLawrence;
            return std::nullopt;
        case NucleusKind::DualDisjoint: {
            bool nucleus_binary = true;
            for (const auto& v : cert.nucleus.left)
                nucleus_binary &= pair.weight_of(v) == 2;
            for (const auto& v : cert.nucleus.right)
                nucleus_binary &= pair.weight_of(v) == 2;
            if (all_binary && nucleus_binary) return WeightCase::BinaryLawrence;
            return std::nullopt;
        }
        case NucleusKind::DisjointSimplices: {
            if (all_binary) return WeightCase::BinaryLawrence;
            // One side a single weight-2 vertex; Lawrence weights at most
            // 3 with at most one 3. Decompositions carry both role
            // orientations, so only the right side is checked here.
            if (cert.nucleus.right.size() != 1) return std::nullopt;
            if (pair.weight_of(cert.nucleus.right.front()) != 2) return std::nullopt;
            int threes = 0;
            for (Int w : lawrence) {
                if (w > 3) return std::nullopt;
                if (w == 3) ++threes;
            }
            if (threes > 1) return std::nullopt;
            return WeightCase::SingleWeight3Lawrence;
        }
    }
    return std::nullopt;
}

}  // namespace

Verdict classify(const HMPair& pair) {
    for (const auto& cert : nuclear_decompositions(pair)) {
        if (auto wc = weight_case_for(pair, cert)) {
            NuclearCertificate chosen = cert;
            chosen.weight_case = *wc;
            return Verdict{true, std::move(chosen), std::nullopt};
        }
    }
    std::size_t catalog_size = std::max<std::size_t>(pair.vertex_count(), 6);
    for (const auto& entry : forbidden_catalog(catalog_size)) {
        if (entry.pair.vertex_count() > pair.vertex_count()) continue;
        if (auto w = embed_as_minor(pair, entry.pair)) {
            w->forbidden_id = entry.id;
            return Verdict{false, std::nullopt, std::move(*w)};
        }
    }
    throw internal_error("classify: neither certificate nor forbidden minor found for " +
                         to_string(pair));
}

SimplicialComplex clique_complex(std::size_t vertices,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::vector<bool>> adj(vertices, std::vector<bool>(vertices, false));
    for (auto [a, b] : edges) {
        if (a >= vertices || b >= vertices || a == b)
            throw std::invalid_argument("bad edge");
        adj[a][b] = adj[b][a] = true;
    }
    std::vector<std::string> ground;
    for (std::size_t i = 1; i <= vertices; ++i) ground.push_back(std::to_string(i));
    std::vector<Face> cliques;
    for (Face s = 0; s < (Face(1) << vertices); ++s) {
        bool ok = true;
        for (std::size_t i = 0; i < vertices && ok; ++i)
            if (s & (Face(1) << i))
                for (std::size_t j = i + 1; j < vertices && ok; ++j)
                    if ((s & (Face(1) << j)) && !adj[i][j]) ok = false;
        if (ok) cliques.push_back(s);
    }
    return SimplicialComplex(std::move(ground), std::move(cliques));
}

bool clique_graph_unimodular(const GraphModel& g) {
    const std::size_t n = g.vertices;
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto [a, b] : g.edges) adj[a][b] = adj[b][a] = true;

    // Complement edges.
    std::vector<std::pair<std::size_t, std::size_t>> non_edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!adj[i][j]) non_edges.emplace_back(i, j);

    if (non_edges.empty()) return true;  // complete graph

    // Two complete graphs glued along a common clique: the complement is a
    // complete bipartite graph (plus isolated vertices).
    {
        auto [a0, b0] = non_edges.front();
        std::set<std::size_t> x, z;
        for (std::size_t v = 0; v < n; ++v) {
            if (!adj[v][b0] && v != b0) x.insert(v);
            if (!adj[v][a0] && v != a0) z.insert(v);
        }
        bool bipartite = x.count(a0) && z.count(b0);
        for (auto v : x)
            if (z.count(v)) bipartite = false;
        if (bipartite) {
            std::size_t crossing = 0;
            for (auto [a, b] : non_edges) {
                bool ax = x.count(a), bx = x.count(b);
                bool az = z.count(a), bz = z.count(b);
                if ((ax && bz) || (az && bx)) ++crossing;
            }
            if (crossing == non_edges.size() && non_edges.size() == x.size() * z.size())
                return true;
        }
    }

    // Suspensions over the four-cycle, weight 2 on the cycle vertices.
    {
        std::vector<std::size_t> rest;
        for (std::size_t v = 0; v < n; ++v) {
            bool universal = true;
            for (std::size_t u = 0; u < n; ++u)
                if (u != v && !adj[v][u]) universal = false;
            if (!universal) rest.push_back(v);
        }
        if (rest.size() == 4) {
            // The remaining graph must be a 4-cycle.
            std::vector<int> deg(4, 0);
            std::size_t edge_count = 0;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    if (adj[rest[i]][rest[j]]) {
                        ++deg[i];
                        ++deg[j];
                        ++edge_count;
                    }
            bool is_c4 = edge_count == 4 &&
                         std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
            if (is_c4) {
                bool weights_ok = true;
                for (auto v : rest) weights_ok &= g.weights[v] == 2;
                if (weights_ok) return true;
            }
        }
    }
    return false;
}

Verdict classify_clique_complex(const GraphModel& g) {
    HMPair pair(clique_complex(g.vertices, g.edges), g.weights);
    Verdict v = classify(pair);
    if (v.unimodular != clique_graph_unimodular(g))
        throw internal_error("clique-complex conditions disagree with classify");
    return v;
}

namespace {

// Incidence matrix of the complete bipartite digraph with `left` and
// `right` vertices, all edges left to right, columns left-major.
IntMatrix bipartite_incidence(std::size_t left, std::size_t right) {
    IntMatrix n(left + right, left * right);
    for (std::size_t l = 0; l < left; ++l)
        for (std::size_t r = 0; r < right; ++r) {
            n.at(l, l * right + r) = 1;
            n.at(left + r, l * right + r) = -1;
        }
    return n;
}

// Exact fallback for two-disjoint-facet pairs whose Graver basis is too
// large to enumerate: if the design matrix kernel (ghost columns
// collapsed) equals the kernel of the complete bipartite incidence matrix,
// flow decomposition bounds every Graver entry by 1.
bool bipartite_network_route(const HMPair& pair) {
    const SimplicialComplex& c = pair.complex();
    auto parts = [&]() -> std::optional<std::pair<Face, Face>> {
        Face ghosts = 0;
        for (std::size_t v = 0; v < c.vertex_count(); ++v)
            if (c.is_ghost_vertex(v)) ghosts |= Face(1) << v;
        if (c.facets().size() != 2) return std::nullopt;
        Face a = c.facets()[0], b = c.facets()[1];
        if (a == 0 || b == 0 || (a & b) != 0) return std::nullopt;
        if ((a | b | ghosts) != c.full_mask()) return std::nullopt;
        return std::make_pair(a, b);
    }();
    if (!parts) return false;
    auto [left_mask, right_mask] = *parts;

    Int nl = 1, nr = 1;
    for (std::size_t v = 0; v < c.vertex_count(); ++v) {
        if (left_mask & (Face(1) << v)) nl = checked_mul(nl, pair.weight(v));
        if (right_mask & (Face(1) << v)) nr = checked_mul(nr, pair.weight(v));
    }

    DesignMatrix dm = build_design_matrix(pair);
    // Collapse ghost coordinates: deduplicate columns, tracking the
    // (left rank, right rank) class of each survivor.
    IntMatrix deduped = dedup_columns(dm.matrix);
    if (deduped.cols() != static_cast<std::size_t>(checked_mul(nl, nr))) return false;
    std::vector<std::size_t> survivor;  // deduped col -> original col
    {
        std::set<std::vector<Int>> seen;
        for (std::size_t col = 0; col < dm.cols(); ++col) {
            std::vector<Int> colv(dm.rows());
            for (std::size_t r = 0; r < dm.rows(); ++r) colv[r] = dm.matrix.at(r, col);
            if (seen.insert(std::move(colv)).second) survivor.push_back(col);
        }
    }
    // Where each deduped column sits among the bipartite edges.
    std::vector<std::size_t> perm(deduped.cols());
    std::vector<bool> hit(deduped.cols(), false);
    for (std::size_t j = 0; j < survivor.size(); ++j) {
        const StateTuple& t = dm.col_labels[survivor[j]];
        std::size_t lrank = 0, rrank = 0;
        for (std::size_t v = 0; v < c.vertex_count(); ++v) {
            if (left_mask & (Face(1) << v))
                lrank = lrank * static_cast<std::size_t>(pair.weight(v)) +
                        static_cast<std::size_t>(t[v] - 1);
            if (right_mask & (Face(1) << v))
                rrank = rrank * static_cast<std::size_t>(pair.weight(v)) +
                        static_cast<std::size_t>(t[v] - 1);
        }
        std::size_t edge = lrank * static_cast<std::size_t>(nr) + rrank;
        if (hit[edge]) return false;
        hit[edge] = true;
        perm[edge] = j;
    }
    IntMatrix aligned = deduped.select_columns(perm);
    return kernels_equal(aligned,
                         bipartite_incidence(static_cast<std::size_t>(nl),
                                             static_cast<std::size_t>(nr)));
}

// Alignment permutation that brings the design columns of `pair` into
// (vertex-v value major, remaining tuple) order.
std::vector<std::size_t> vertex_major_alignment(const HMPair& pair, const DesignMatrix& dm,
                                                std::size_t v) {
    std::vector<std::size_t> perm(dm.cols());
    std::size_t inner = 1;
    for (std::size_t u = 0; u < pair.vertex_count(); ++u)
        if (u != v) inner *= static_cast<std::size_t>(pair.weight(u));
    std::vector<std::size_t> counter(static_cast<std::size_t>(pair.weight(v)), 0);
    for (std::size_t col = 0; col < dm.cols(); ++col) {
        std::size_t block = static_cast<std::size_t>(dm.col_labels[col][v] - 1);
        perm[block * inner + counter[block]++] = col;
    }
    return perm;
}

// Cone reduction: if deleting a cone vertex leaves the kernel
// block-diagonal (verified exactly), conformal minimality splits across the
// blocks and the verdict is the inner pair's.
std::optional<HMPair> cone_route_inner(const HMPair& pair, const DesignMatrix& dm) {
    const SimplicialComplex& c = pair.complex();
    for (std::size_t v = 0; v < c.vertex_count(); ++v) {
        if (!c.is_cone_vertex(v) || c.is_ghost_vertex(v)) continue;
        HMPair inner = pair.delete_vertex(v);
        DesignMatrix idm = build_design_matrix(inner);
        const std::size_t w = static_cast<std::size_t>(pair.weight(v));
        IntMatrix block(idm.rows() * w, idm.cols() * w);
        for (std::size_t k = 0; k < w; ++k)
            for (std::size_t r = 0; r < idm.rows(); ++r)
                for (std::size_t col = 0; col < idm.cols(); ++col)
                    block.at(k * idm.rows() + r, k * idm.cols() + col) = idm.matrix.at(r, col);
        IntMatrix aligned = dm.matrix.select_columns(vertex_major_alignment(pair, dm, v));
        if (kernels_equal(aligned, block)) return inner;
    }
    return std::nullopt;
}

// Binary Lawrence reduction: ker Lambda_2(B) = {(x,-x) : x in ker B}, and
// (x,-x) <= (x',-x') conformally iff x <= x', so the Graver bases biject
// entrywise and the verdict is the link pair's. Verified exactly via the
// kernel comparison.
std::optional<HMPair> lambda2_route_inner(const HMPair& pair, const DesignMatrix& dm) {
    const SimplicialComplex& c = pair.complex();
    for (std::size_t v = 0; v < c.vertex_count(); ++v) {
        if (pair.weight(v) != 2 || !c.is_lawrence_vertex(v) || c.is_ghost_vertex(v)) continue;
        HMPair inner = pair.link_vertex(v);
        IntMatrix lift = build_design_matrix(inner).matrix.lambda_lift(2);
        IntMatrix aligned = dm.matrix.select_columns(vertex_major_alignment(pair, dm, v));
        if (kernels_equal(aligned, lift)) return inner;
    }
    return std::nullopt;
}

// Weight-3 Lawrence reduction: when the design matrix kernel equals the
// kernel of the 3-block Lawrence lift of the link's matrix (verified
// exactly), and that matrix is a ghost repetition of its deduplicated core
// (a literal column grouping), the verdict is decided on the lifted core.
// The step from "lift of the repeated matrix" to "lift of the core" is the
// one imported preservation fact, exercised independently by the test
// suites at enumerable sizes.
std::optional<GraverTestResult> lambda3_ghost_route(const HMPair& pair, const DesignMatrix& dm,
                                                    std::size_t max_cols,
                                                    std::size_t completion_budget) {
    const SimplicialComplex& c = pair.complex();
    for (std::size_t v = 0; v < c.vertex_count(); ++v) {
        if (pair.weight(v) != 3 || !c.is_lawrence_vertex(v) || c.is_ghost_vertex(v)) continue;
        HMPair inner = pair.link_vertex(v);
        DesignMatrix idm = build_design_matrix(inner);
        IntMatrix lift = idm.matrix.lambda_lift(3);
        IntMatrix aligned = dm.matrix.select_columns(vertex_major_alignment(pair, dm, v));
        if (!kernels_equal(aligned, lift)) continue;
        IntMatrix core = dedup_columns(idm.matrix);
        if (core.cols() == idm.cols()) continue;  // no ghost repetition to strip
        // The inner matrix must be exactly q copies of the core, columnwise.
        if (idm.cols() % core.cols() != 0) continue;
        const std::size_t q = idm.cols() / core.cols();
        std::map<std::vector<Int>, std::size_t> core_pos;
        for (std::size_t cc = 0; cc < core.cols(); ++cc) {
            std::vector<Int> colv(core.rows());
            for (std::size_t r = 0; r < core.rows(); ++r) colv[r] = core.at(r, cc);
            core_pos[colv] = cc;
        }
        std::vector<std::size_t> copies(core.cols(), 0);
        bool grouping = true;
        for (std::size_t col = 0; col < idm.cols() && grouping; ++col) {
            std::vector<Int> colv(idm.rows());
            for (std::size_t r = 0; r < idm.rows(); ++r) colv[r] = idm.matrix.at(r, col);
            auto it = core_pos.find(colv);
            if (it == core_pos.end()) grouping = false;
            else ++copies[it->second];
        }
        if (!grouping ||
            !std::all_of(copies.begin(), copies.end(), [&](std::size_t k) { return k == q; }))
            continue;
        try {
            return is_unimodular_by_graver(core.lambda_lift(3), max_cols, completion_budget)
                       ? GraverTestResult::Unimodular
                       : GraverTestResult::NotUnimodular;
        } catch (const guard_error&) {
            continue;
        }
    }
    return std::nullopt;
}

}  // namespace

GraverTestResult graver_entry_test(const HMPair& pair, std::size_t max_cols,
                                   std::size_t completion_budget) {
    DesignMatrix dm = build_design_matrix(pair);
    if (auto inner = cone_route_inner(pair, dm))
        return graver_entry_test(*inner, max_cols, completion_budget);
    if (auto inner = lambda2_route_inner(pair, dm))
        return graver_entry_test(*inner, max_cols, completion_budget);
    if (bipartite_network_route(pair)) return GraverTestResult::Unimodular;
    try {
        return is_unimodular_by_graver(dm.matrix, max_cols, completion_budget)
                   ? GraverTestResult::Unimodular
                   : GraverTestResult::NotUnimodular;
    } catch (const guard_error&) {
        if (auto reduced = lambda3_ghost_route(pair, dm, max_cols, completion_budget))
            return *reduced;
        SubmatrixCertifyOptions opts;
        opts.budget = 50;
        if (certify_nonunimodular_by_submatrix(pair, 1, opts))
            return GraverTestResult::NotUnimodular;
        return GraverTestResult::Infeasible;
    }
}

std::optional<SignedVector> certify_nonunimodular_by_submatrix(
    const HMPair& pair, std::uint64_t seed, const SubmatrixCertifyOptions& options) {
    DesignMatrix dm = build_design_matrix(pair);
    const std::size_t n = dm.cols();
    std::size_t sample = options.sample_cols;
    if (sample == 0) sample = std::max<std::size_t>(18, (3 * n) / 4);
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;

    for (int trial = 0; trial < options.budget; ++trial) {
        std::vector<std::size_t> cols = all;
        std::shuffle(cols.begin(), cols.end(), rng);
        if (cols.size() > sample) cols.resize(sample);
        std::sort(cols.begin(), cols.end());
        std::optional<SignedVector> witness;
        try {
            witness = nonunimodular_graver_witness(dm.matrix.select_columns(cols),
                                                   options.oracle_max_cols);
        } catch (const guard_error&) {
            continue;  // submatrix itself infeasible; try another sample
        }
        if (witness) {
            SignedVector full;
            for (const auto& [idx, v] : witness->entries)
                full.entries.emplace_back(cols[idx], v);
            std::sort(full.entries.begin(), full.entries.end());
            return full.canonical();
        }
    }
    return std::nullopt;
}

}  // namespace hmg
