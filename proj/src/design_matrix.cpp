#include "hmg/design_matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hmg {

namespace {

// All tuples with entries t[k] in [1, bounds[k]], first coordinate most
// significant (the order of the column labels in the matrix figures).
std::vector<StateTuple> enumerate_tuples(const std::vector<Int>& bounds) {
    std::vector<StateTuple> out;
    StateTuple cur(bounds.size(), 1);
    while (true) {
        out.push_back(cur);
        std::size_t k = bounds.size();
        while (k > 0) {
            --k;
            if (cur[k] < bounds[k]) {
                ++cur[k];
                std::fill(cur.begin() + k + 1, cur.end(), 1);
                break;
            }
            if (k == 0) return out;
        }
        if (bounds.empty()) return out;
    }
}

}  // namespace

Int design_column_count(const HMPair& pair) {
    Int n = 1;
    for (Int w : pair.weights()) n = checked_mul(n, w);
    return n;
}

DesignMatrix build_design_matrix(const HMPair& pair) {
    const SimplicialComplex& c = pair.complex();
    const std::size_t nv = c.vertex_count();

    DesignMatrix dm;
    dm.ground = c.ground();
    dm.col_labels = enumerate_tuples(pair.weights());

    for (Face f : c.faces()) {
        std::vector<std::size_t> verts;
        for (std::size_t v = 0; v < nv; ++v)
            if (f & (Face(1) << v)) verts.push_back(v);
        std::vector<Int> bounds;
        for (std::size_t v : verts) bounds.push_back(pair.weight(v) - 1);
        for (auto& j : enumerate_tuples(bounds))
            dm.row_labels.push_back(RowLabel{f, std::move(j)});
    }

    dm.matrix = IntMatrix(dm.row_labels.size(), dm.col_labels.size());
    for (std::size_t r = 0; r < dm.row_labels.size(); ++r) {
        const RowLabel& rl = dm.row_labels[r];
        for (std::size_t col = 0; col < dm.col_labels.size(); ++col) {
            const StateTuple& i = dm.col_labels[col];
            bool eq = true;
            std::size_t k = 0;
            for (std::size_t v = 0; v < nv && eq; ++v)
                if (rl.face & (Face(1) << v)) {
                    if (i[v] != rl.index[k]) eq = false;
                    ++k;
                }
            if (eq) dm.matrix.at(r, col) = 1;
        }
    }
    return dm;
}

std::vector<std::size_t> align_columns(const std::vector<StateTuple>& a,
                                       const std::vector<StateTuple>& b) {
    std::map<StateTuple, std::size_t> pos;
    for (std::size_t i = 0; i < a.size(); ++i) pos[a[i]] = i;
    if (pos.size() != a.size())
        throw std::invalid_argument("align_columns: duplicate labels");
    std::vector<std::size_t> out;
    out.reserve(b.size());
    for (const auto& t : b) {
        auto it = pos.find(t);
        if (it == pos.end())
            throw std::invalid_argument("align_columns: label sets differ");
        out.push_back(it->second);
    }
    if (a.size() != b.size())
        throw std::invalid_argument("align_columns: label sets differ");
    return out;
}

std::string to_csv(const IntMatrix& m) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) out += '\n';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out += ',';
            out += std::to_string(m.at(r, c));
        }
    }
    return out;
}

std::string state_tuple_to_string(const StateTuple& t) {
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(t[i]);
    }
    return out;
}

}  // namespace hmg
