#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hmg/graver.hpp"
#include "hmg/hm_pair.hpp"
#include "hmg/minor.hpp"
#include "hmg/nuclear.hpp"

namespace hmg {

// Signals a broken internal invariant (e.g. a pair with neither a valid
// certificate nor a forbidden minor); never a legitimate outcome.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

struct Verdict {
    bool unimodular;
    std::optional<NuclearCertificate> certificate;  // set when unimodular
    std::optional<MinorWitness> witness;            // set when not
};

struct CatalogEntry {
    std::string id;
    HMPair pair;
};

// Minimally nonunimodular pairs with at most `max_vertices` vertices: the
// binary forbidden complexes (the boundary-of-a-simplex-plus-point family
// is instantiated up to the requested size) plus the seven weighted
// minimal pairs.
const std::vector<CatalogEntry>& forbidden_catalog(std::size_t max_vertices = 6);

inline constexpr std::size_t kDefaultMinorTestMaxCols = 12;

// Definition-level test: all maximal minors of a full-row-rank row
// selection share one absolute value.
bool is_unimodular_by_minors(const IntMatrix& a,
                             std::size_t max_cols = kDefaultMinorTestMaxCols);

// Decision procedure with certificates: constructive branch first (a
// nuclear decomposition whose weights satisfy the classification), else a
// forbidden-minor witness. Exactly one branch can succeed.
Verdict classify(const HMPair& pair);

// Clique-complex specialization: the graph-side conditions decide, the
// verdict payload comes from classify on the clique complex.
struct GraphModel {
    std::size_t vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<Int> weights;
};

SimplicialComplex clique_complex(std::size_t vertices,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& edges);
bool clique_graph_unimodular(const GraphModel& g);
Verdict classify_clique_complex(const GraphModel& g);

struct SubmatrixCertifyOptions {
    int budget = 200;          // number of column samples
    std::size_t sample_cols = 0;  // 0: three quarters of the columns, min 18
    std::size_t oracle_max_cols = kDefaultOracleMaxCols;
};

// Randomized certificate search: Graver elements of column submatrices
// zero-extend to Graver elements of the full matrix, so any submatrix
// element with an entry of absolute value >= 2 certifies non-unimodularity.
// absent does NOT mean unimodular.
std::optional<SignedVector> certify_nonunimodular_by_submatrix(
    const HMPair& pair, std::uint64_t seed,
    const SubmatrixCertifyOptions& options = {});

enum class GraverTestResult { Unimodular, NotUnimodular, Infeasible };

// Graver-entry test at the pair level. Runs the completion oracle on the
// column-deduplicated design matrix; when the completion budget is
// exhausted (enormous but structured bases), falls back to an exact
// network argument: if the pair's non-ghost part is two disjoint covering
// facets and the design matrix kernel equals the kernel of a complete
// bipartite digraph incidence matrix (verified exactly), every Graver
// element is a simple-cycle vector by flow decomposition, hence {0,±1}.
GraverTestResult graver_entry_test(const HMPair& pair,
                                   std::size_t max_cols = kDefaultOracleMaxCols,
                                   std::size_t completion_budget = kDefaultCompletionBudget);

}  // namespace hmg
