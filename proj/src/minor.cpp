#include "hmg/minor.hpp"

#include <unordered_set>

#include "hmg/canonical.hpp"

namespace hmg {

namespace {

struct MinorSearch {
    const HMPair& pattern;
    std::unordered_set<std::string> dead;  // canonical keys with no embedding

    std::optional<MinorWitness> run(const HMPair& state, std::vector<ReductionStep>& steps) {
        if (state.vertex_count() < pattern.vertex_count()) return std::nullopt;
        if (state.vertex_count() == pattern.vertex_count()) {
            auto iso = find_isomorphism(pattern, state, /*exact_weights=*/false);
            if (!iso) return std::nullopt;
            MinorWitness w;
            w.steps = steps;
            // iso maps pattern -> state; the witness wants the other way.
            for (const auto& [pat, surv] : *iso) {
                w.isomorphism[surv] = pat;
                w.weight_reduction[surv] = pattern.weight_of(pat);
            }
            return w;
        }
        std::string key = canonical_pair_key(state);
        if (dead.count(key)) return std::nullopt;
        for (std::size_t v = 0; v < state.vertex_count(); ++v) {
            for (auto op : {ReductionStep::Link, ReductionStep::Delete}) {
                steps.push_back({op, state.complex().label(v)});
                HMPair child = op == ReductionStep::Delete ? state.delete_vertex(v)
                                                           : state.link_vertex(v);
                if (auto w = run(child, steps)) return w;
                steps.pop_back();
            }
        }
        dead.insert(std::move(key));
        return std::nullopt;
    }
};

}  // namespace

std::optional<MinorWitness> embed_as_minor(const HMPair& target, const HMPair& pattern) {
    MinorSearch search{pattern, {}};
    std::vector<ReductionStep> steps;
    return search.run(target, steps);
}

bool validate_witness(const HMPair& target, const HMPair& pattern, const MinorWitness& w) {
    HMPair state = target;
    for (const auto& step : w.steps) {
        std::size_t v;
        try {
            v = state.complex().index_of(step.vertex);
        } catch (const std::exception&) {
            return false;
        }
        state = step.op == ReductionStep::Delete ? state.delete_vertex(v)
                                                 : state.link_vertex(v);
    }
    if (state.vertex_count() != pattern.vertex_count()) return false;

    // Apply the weight reduction, then relabel through the isomorphism and
    // compare for equality with the pattern.
    std::vector<std::string> relabeled;
    std::vector<Int> weights;
    for (std::size_t v = 0; v < state.vertex_count(); ++v) {
        const std::string& lab = state.complex().label(v);
        auto iso_it = w.isomorphism.find(lab);
        auto wr_it = w.weight_reduction.find(lab);
        if (iso_it == w.isomorphism.end() || wr_it == w.weight_reduction.end()) return false;
        Int reduced = wr_it->second;
        if (reduced < 2 || reduced > state.weight(v)) return false;
        relabeled.push_back(iso_it->second);
        weights.push_back(reduced);
    }
    try {
        HMPair mapped(SimplicialComplex(relabeled, state.complex().facets()), weights);
        return mapped == pattern;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace hmg
