#pragma once

#include <string>
#include <vector>

#include "hmg/design_matrix.hpp"
#include "hmg/graver.hpp"
#include "hmg/hm_pair.hpp"
#include "hmg/unimodularity.hpp"

namespace hmg {

struct model_error : std::runtime_error {
    explicit model_error(const std::string& what) : std::runtime_error(what) {}
};

struct ParsedModel {
    HMPair pair;
    std::vector<std::string> warnings;  // e.g. dropped non-maximal facets
};

// Parses {"vertices": [...], "facets": [[...], ...], "weights": {...}}.
// Facets need not be maximal (normalized with a warning); omitted weights
// default to 2. Throws model_error on malformed input.
ParsedModel parse_model(const std::string& text);

std::string model_to_json(const HMPair& pair);

std::string matrix_to_json(const DesignMatrix& dm);
DesignMatrix matrix_from_json(const std::string& text);

std::string verdict_to_json(const Verdict& v);

// One sparse vector per line, entries as {"col": label, "val": n} arrays in
// canonical order.
std::string basis_to_json_lines(const GraverBasis& basis,
                                const std::vector<StateTuple>& col_labels);
std::string vector_to_json(const SignedVector& v,
                           const std::vector<StateTuple>& col_labels);

}  // namespace hmg
