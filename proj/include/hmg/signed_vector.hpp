#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "hmg/arith.hpp"

namespace hmg {

// Sparse integer vector over column indices; entries sorted by column, no
// zeros. Canonical sign: the entry at the smallest support column is
// positive.
struct SignedVector {
    std::vector<std::pair<std::size_t, Int>> entries;

    bool empty() const { return entries.empty(); }
    std::size_t support_size() const { return entries.size(); }
    bool operator==(const SignedVector&) const = default;
    auto operator<=>(const SignedVector&) const = default;

    Int max_abs() const {
        Int m = 0;
        for (const auto& [c, v] : entries) m = std::max(m, v < 0 ? -v : v);
        return m;
    }

    bool is_canonical() const { return entries.empty() || entries.front().second > 0; }

    SignedVector negated() const {
        SignedVector out = *this;
        for (auto& [c, v] : out.entries) v = -v;
        return out;
    }

    SignedVector canonical() const { return is_canonical() ? *this : negated(); }

    std::vector<Int> dense(std::size_t cols) const {
        std::vector<Int> out(cols, 0);
        for (const auto& [c, v] : entries) out[c] = v;
        return out;
    }

    static SignedVector from_dense(const std::vector<Int>& v) {
        SignedVector out;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) out.entries.emplace_back(i, v[i]);
        return out;
    }

    // Map each column index through `perm` (old index -> new index).
    SignedVector remapped(const std::vector<std::size_t>& perm) const {
        SignedVector out;
        out.entries.reserve(entries.size());
        for (const auto& [c, v] : entries) out.entries.emplace_back(perm[c], v);
        std::sort(out.entries.begin(), out.entries.end());
        return out;
    }
};

inline SignedVector add(const SignedVector& a, const SignedVector& b) {
    SignedVector out;
    std::size_t i = 0, j = 0;
    while (i < a.entries.size() || j < b.entries.size()) {
        if (j == b.entries.size() ||
            (i < a.entries.size() && a.entries[i].first < b.entries[j].first)) {
            out.entries.push_back(a.entries[i++]);
        } else if (i == a.entries.size() || b.entries[j].first < a.entries[i].first) {
            out.entries.push_back(b.entries[j++]);
        } else {
            Int s = checked_add(a.entries[i].second, b.entries[j].second);
            if (s != 0) out.entries.emplace_back(a.entries[i].first, s);
            ++i;
            ++j;
        }
    }
    return out;
}

inline SignedVector subtract(const SignedVector& a, const SignedVector& b) {
    return add(a, b.negated());
}

// a is conformal to b and entrywise no larger: a+ <= b+ and a- <= b-.
inline bool conformal_leq(const SignedVector& a, const SignedVector& b) {
    std::size_t j = 0;
    for (const auto& [c, v] : a.entries) {
        while (j < b.entries.size() && b.entries[j].first < c) ++j;
        if (j == b.entries.size() || b.entries[j].first != c) return false;
        Int w = b.entries[j].second;
        if ((v > 0) != (w > 0)) return false;
        if (v > 0 ? v > w : v < w) return false;
    }
    return true;
}

// Sign-compatible on the shared support (no coordinate with opposite signs).
inline bool sign_compatible(const SignedVector& a, const SignedVector& b) {
    std::size_t i = 0, j = 0;
    while (i < a.entries.size() && j < b.entries.size()) {
        if (a.entries[i].first < b.entries[j].first) ++i;
        else if (b.entries[j].first < a.entries[i].first) ++j;
        else {
            if ((a.entries[i].second > 0) != (b.entries[j].second > 0)) return false;
            ++i;
            ++j;
        }
    }
    return true;
}

inline bool shares_support(const SignedVector& a, const SignedVector& b) {
    std::size_t i = 0, j = 0;
    while (i < a.entries.size() && j < b.entries.size()) {
        if (a.entries[i].first < b.entries[j].first) ++i;
        else if (b.entries[j].first < a.entries[i].first) ++j;
        else return true;
    }
    return false;
}

}  // namespace hmg
