#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hmg/hm_pair.hpp"
#include "hmg/int_matrix.hpp"

namespace hmg {

// Column label: one 1-based index per ground vertex, in ground order.
using StateTuple = std::vector<Int>;

struct RowLabel {
    Face face = 0;            // over the pair's ground indices
    StateTuple index;         // one entry per vertex of the face, in ground order
    bool operator==(const RowLabel&) const = default;
};

// The 0/1 matrix of a hierarchical model. Rows are ordered by
// (face cardinality, face, index tuple), columns lexicographically by state
// tuple with the first ground vertex most significant; entry((F,j), i) = 1
// iff F is empty or i agrees with j on F.
struct DesignMatrix {
    IntMatrix matrix;
    std::vector<RowLabel> row_labels;
    std::vector<StateTuple> col_labels;
    std::vector<std::string> ground;  // vertex labels, in tuple order

    std::size_t rows() const { return matrix.rows(); }
    std::size_t cols() const { return matrix.cols(); }
};

DesignMatrix build_design_matrix(const HMPair& pair);

// Number of columns the design matrix of `pair` would have.
Int design_column_count(const HMPair& pair);

// Position of each of b's column labels inside a's (the two must carry the
// same label set); a.col_labels[result[j]] == b.col_labels[j].
std::vector<std::size_t> align_columns(const std::vector<StateTuple>& a,
                                       const std::vector<StateTuple>& b);

// Entries only, row-major: decimal integers, commas within a row, rows
// separated by newlines, no trailing separators.
std::string to_csv(const IntMatrix& m);

std::string state_tuple_to_string(const StateTuple& t);

}  // namespace hmg
