#include "hmg/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace hmg {

namespace {

struct VertexSig {
    Int weight;
    int degree;
    std::vector<int> facet_sizes;  // sorted sizes of facets containing the vertex
    auto operator<=>(const VertexSig&) const = default;
};

std::vector<VertexSig> vertex_signatures(const HMPair& pair) {
    const auto& c = pair.complex();
    std::vector<VertexSig> sigs(c.vertex_count());
    for (std::size_t v = 0; v < c.vertex_count(); ++v) {
        VertexSig s;
        s.weight = pair.weight(v);
        s.degree = 0;
        for (Face f : c.facets())
            if (f & (Face(1) << v)) {
                ++s.degree;
                s.facet_sizes.push_back(face_size(f));
            }
        std::sort(s.facet_sizes.begin(), s.facet_sizes.end());
        sigs[v] = std::move(s);
    }
    return sigs;
}

std::string encode(const std::vector<Face>& facets, const std::vector<Int>& weights) {
    std::string out;
    auto sorted = facets;
    std::sort(sorted.begin(), sorted.end());
    for (Face f : sorted) {
        out += std::to_string(f);
        out += ',';
    }
    out += '|';
    for (Int w : weights) {
        out += std::to_string(w);
        out += ',';
    }
    return out;
}

constexpr std::size_t kPermutationCap = 1 << 20;

}  // namespace

std::string labeled_state_key(const SimplicialComplex& c) {
    std::string out;
    for (const auto& lab : c.ground()) {
        out += lab;
        out += ';';
    }
    out += '|';
    for (Face f : c.facets()) {
        out += std::to_string(f);
        out += ',';
    }
    return out;
}

std::string labeled_state_key(const HMPair& pair) {
    std::string out = labeled_state_key(pair.complex());
    out += '|';
    for (Int w : pair.weights()) {
        out += std::to_string(w);
        out += ',';
    }
    return out;
}

std::string canonical_pair_key(const HMPair& pair) {
    const auto& c = pair.complex();
    const std::size_t n = c.vertex_count();
    auto sigs = vertex_signatures(pair);

    // Order vertices by signature; permutations are only taken within
    // signature classes.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return sigs[a] < sigs[b]; });

    std::size_t perm_count = 1;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && sigs[order[j]] == sigs[order[i]]) ++j;
        for (std::size_t k = 2; k <= j - i; ++k) {
            perm_count *= k;
            if (perm_count > kPermutationCap) break;
        }
        if (perm_count > kPermutationCap) break;
        i = j;
    }
    if (perm_count > kPermutationCap) return "X|" + labeled_state_key(pair);

    // Walk the product of within-class permutations with a range odometer.
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && sigs[order[j]] == sigs[order[i]]) ++j;
        ranges.emplace_back(i, j);
        i = j;
    }
    std::string best;
    std::vector<std::size_t> perm = order;
    for (auto [lo, hi] : ranges)  // each class must start at its first arrangement
        std::sort(perm.begin() + lo, perm.begin() + hi);
    while (true) {
        std::vector<std::size_t> pos(n);  // old index -> new index
        for (std::size_t i = 0; i < n; ++i) pos[perm[i]] = i;
        std::vector<Face> facets;
        for (Face f : c.facets()) {
            Face g = 0;
            for (std::size_t v = 0; v < n; ++v)
                if (f & (Face(1) << v)) g |= Face(1) << pos[v];
            facets.push_back(g);
        }
        std::vector<Int> weights(n);
        for (std::size_t i = 0; i < n; ++i) weights[i] = pair.weight(perm[i]);
        std::string enc = encode(facets, weights);
        if (best.empty() || enc < best) best = std::move(enc);

        bool advanced = false;
        for (std::size_t r = ranges.size(); r-- > 0 && !advanced;)
            advanced = std::next_permutation(perm.begin() + ranges[r].first,
                                             perm.begin() + ranges[r].second);
        if (!advanced) break;
    }
    return best;
}

namespace {

bool try_extend(const HMPair& pattern, const HMPair& target, bool exact_weights,
                std::vector<int>& image, std::vector<bool>& used, std::size_t next) {
    const auto& pc = pattern.complex();
    const auto& tc = target.complex();
    const std::size_t n = pc.vertex_count();
    if (next == n) {
        // Facets must correspond exactly under the map.
        std::vector<Face> mapped;
        for (Face f : pc.facets()) {
            Face g = 0;
            for (std::size_t v = 0; v < n; ++v)
                if (f & (Face(1) << v)) g |= Face(1) << image[v];
            mapped.push_back(g);
        }
        std::sort(mapped.begin(), mapped.end());
        return mapped == tc.facets();
    }
    for (std::size_t t = 0; t < n; ++t) {
        if (used[t]) continue;
        if (exact_weights ? pattern.weight(next) != target.weight(t)
                          : pattern.weight(next) > target.weight(t))
            continue;
        image[next] = static_cast<int>(t);
        used[t] = true;
        if (try_extend(pattern, target, exact_weights, image, used, next + 1)) return true;
        used[t] = false;
    }
    return false;
}

}  // namespace

std::optional<std::map<std::string, std::string>> find_isomorphism(
    const HMPair& pattern, const HMPair& target, bool exact_weights) {
    const auto& pc = pattern.complex();
    const auto& tc = target.complex();
    if (pc.vertex_count() != tc.vertex_count()) return std::nullopt;
    if (pc.facets().size() != tc.facets().size()) return std::nullopt;
    {
        auto sizes = [](const SimplicialComplex& c) {
            std::vector<int> s;
            for (Face f : c.facets()) s.push_back(face_size(f));
            std::sort(s.begin(), s.end());
            return s;
        };
        if (sizes(pc) != sizes(tc)) return std::nullopt;
    }
    std::vector<int> image(pc.vertex_count(), -1);
    std::vector<bool> used(pc.vertex_count(), false);
    if (!try_extend(pattern, target, exact_weights, image, used, 0)) return std::nullopt;
    std::map<std::string, std::string> out;
    for (std::size_t v = 0; v < pc.vertex_count(); ++v)
        out[pc.label(v)] = tc.label(image[v]);
    return out;
}

bool pairs_isomorphic(const HMPair& a, const HMPair& b) {
    return find_isomorphism(a, b, /*exact_weights=*/true).has_value();
}

}  // namespace hmg
