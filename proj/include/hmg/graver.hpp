#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hmg/design_matrix.hpp"
#include "hmg/int_matrix.hpp"
#include "hmg/nuclear.hpp"
#include "hmg/signed_vector.hpp"

namespace hmg {

// Thrown when an operation is asked to exceed its size guard.
struct guard_error : std::runtime_error {
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

// Canonically signed, sorted, duplicate-free set of kernel vectors.
using GraverBasis = std::vector<SignedVector>;

GraverBasis canonicalize(GraverBasis basis);

inline constexpr std::size_t kDefaultOracleMaxCols = 150;
// Completion aborts (guard_error) once this many irreducible vectors have
// been collected; Graver bases beyond this size are not enumerable here.
inline constexpr std::size_t kDefaultCompletionBudget = 200000;

// Exact Graver basis by lattice completion: seed with an integer kernel
// basis, close under sign-conflicting sums with conformal normal-form
// reduction, then keep the conformally minimal elements.
GraverBasis graver_oracle(const IntMatrix& a,
                          std::size_t max_cols = kDefaultOracleMaxCols,
                          std::size_t completion_budget = kDefaultCompletionBudget);

// Duplicate columns collapsed to their first occurrence (order preserved).
// The nonzero maximal minors are unchanged, so unimodularity is too.
IntMatrix dedup_columns(const IntMatrix& a);

// True iff every Graver element of `a` is a {0,±1}-vector. Exits early when
// a certified non-unimodularity witness appears during completion;
// duplicate columns are collapsed first.
bool is_unimodular_by_graver(const IntMatrix& a,
                             std::size_t max_cols = kDefaultOracleMaxCols,
                             std::size_t completion_budget = kDefaultCompletionBudget);

// A Graver element of `a` with an entry of absolute value >= 2, if the
// completion finds one; nullopt means `a` is unimodular.
std::optional<SignedVector> nonunimodular_graver_witness(
    const IntMatrix& a, std::size_t max_cols = kDefaultOracleMaxCols,
    std::size_t completion_budget = kDefaultCompletionBudget);

// --- nucleus bases -------------------------------------------------------

// Signed simple cycles of the complete bipartite graph on the state tuples
// of the two simplex parts; columns indexed left-tuple-major. Streams each
// cycle vector; return false from the visitor to stop.
void for_each_disjoint_circuit(const std::vector<Int>& left_weights,
                               const std::vector<Int>& right_weights,
                               const std::function<bool(const SignedVector&)>& visit);

GraverBasis graver_disjoint_nucleus(int m, int n, const std::vector<Int>& weights);

// Signed bonds of the parity-oriented complete bipartite graph on binary
// tuples (weight 2 everywhere); columns indexed left-tuple-major.
void for_each_dual_bond(int m, int n,
                        const std::function<bool(const SignedVector&)>& visit);

GraverBasis graver_dual_nucleus(int m, int n);

// --- lifting rules (matrix-level column conventions) ---------------------
// ghost/cone: column (copy k, inner i) at index k*n + i.
// lambda: column (block b, inner i) at index b*n + i.

GraverBasis lift_cone(const GraverBasis& basis, Int q, std::size_t n);
GraverBasis lift_ghost(const GraverBasis& basis, Int q, std::size_t n);
GraverBasis lift_lambda2(const GraverBasis& basis, std::size_t n);

// Graver basis of L3(Gq A) from the Graver basis of L3(A) (over 3n
// columns, n = a.cols()): intra-column swaps, slot spreadings, and the
// single-relocation closure applied at most once per column class. The
// candidate forms are necessary but not sufficient, so the result is
// filtered down to the support-minimal kernel vectors of L3(Gq A).
GraverBasis lift_lambda3_over_ghost(const GraverBasis& basis3, Int q, const IntMatrix& a);

// --- the full pipeline ----------------------------------------------------

inline constexpr Int kDefaultLambda3BaseGuard = 16;

// Graver basis over the design-matrix columns of a unimodular pair, driven
// by its nuclear certificate (a classify() result with a validated weight
// case).
GraverBasis graver_for_certificate(const HMPair& pair, const NuclearCertificate& cert,
                                   Int lambda3_guard = kDefaultLambda3BaseGuard);

// Convenience: classifies internally; throws std::invalid_argument when the
// pair is not unimodular.
GraverBasis graver_for_unimodular_pair(const HMPair& pair);

// One Graver element sampled through the certificate's pipeline without
// enumerating the basis; deterministic in `seed`. Throws
// std::invalid_argument on an empty Graver basis.
SignedVector sample_graver(const HMPair& pair, std::uint64_t seed);

// Validates membership of `v` in the Graver basis of `a`: kernel vector,
// entries in {0,±1}, and support-minimal (the support-restricted kernel is
// spanned by v).
bool is_unimodular_graver_member(const IntMatrix& a, const SignedVector& v);

}  // namespace hmg
