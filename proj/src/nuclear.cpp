#include "hmg/nuclear.hpp"

#include <algorithm>
#include <unordered_map>

#include "hmg/canonical.hpp"

namespace hmg {

const char* to_string(NucleusKind k) {
    switch (k) {
        case NucleusKind::Simplex: return "simplex";
        case NucleusKind::DisjointSimplices: return "disjoint_simplices";
        case NucleusKind::DualDisjoint: return "dual_disjoint";
    }
    return "?";
}

const char* to_string(WeightCase c) {
    switch (c) {
        case WeightCase::Unchecked: return "unchecked";
        case WeightCase::BinaryLawrence: return "binary_lawrence";
        case WeightCase::SingleWeight3Lawrence: return "single_weight3_lawrence";
    }
    return "?";
}

SimplicialComplex Nucleus::build() const {
    std::vector<std::string> ground(left);
    ground.insert(ground.end(), right.begin(), right.end());
    const std::size_t total = ground.size();
    Face lmask = (Face(1) << left.size()) - 1;
    Face full = total == 0 ? 0 : (Face(1) << total) - 1;
    switch (kind) {
        case NucleusKind::Simplex:
            return SimplicialComplex(std::move(ground), {full});
        case NucleusKind::DisjointSimplices:
            return SimplicialComplex(std::move(ground), {lmask, full & ~lmask});
        case NucleusKind::DualDisjoint: {
            SimplicialComplex disjoint(std::move(ground), {lmask, full & ~lmask});
            return disjoint.alexander_dual();
        }
    }
    throw std::logic_error("unreachable");
}

SimplicialComplex replay(const NuclearCertificate& cert) {
    SimplicialComplex c = cert.nucleus.build();
    for (const auto& step : cert.steps) c = c.extend(step.op, step.vertex);
    return c;
}

bool replays_to(const NuclearCertificate& cert, const SimplicialComplex& c) {
    return replay(cert) == c;
}

namespace {

struct Enumerator {
    const HMPair& pair;
    // state key -> suffixes, deduplicated by (nucleus, lawrence vertex set)
    std::unordered_map<std::string, std::vector<NuclearCertificate>> memo;

    Int weight_of(const std::string& label) const { return pair.weight_of(label); }

    std::vector<NuclearCertificate> decompose(const SimplicialComplex& c) {
        std::string key = labeled_state_key(c);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        memo.emplace(key, std::vector<NuclearCertificate>{});  // cut cycles (none expected)

        std::vector<NuclearCertificate> out;
        auto dedup_key = [](const NuclearCertificate& cert) {
            std::string k = to_string(cert.nucleus.kind);
            for (const auto& v : cert.nucleus.left) k += "|" + v;
            k += "||";
            for (const auto& v : cert.nucleus.right) k += "|" + v;
            std::vector<std::string> lawrence;
            for (const auto& s : cert.steps)
                if (s.op == VertexKind::Lawrence) lawrence.push_back(s.vertex);
            std::sort(lawrence.begin(), lawrence.end());
            k += "##";
            for (const auto& v : lawrence) k += "|" + v;
            return k;
        };
        std::vector<std::string> seen;
        auto add = [&](NuclearCertificate cert) {
            std::string k = dedup_key(cert);
            if (std::find(seen.begin(), seen.end(), k) != seen.end()) return;
            seen.push_back(std::move(k));
            out.push_back(std::move(cert));
        };

        // Direct nucleus recognitions at this state.
        if (c.is_full_simplex() || (c.vertex_count() == 0 && c.facets() == std::vector<Face>{0})) {
            Nucleus nuc{NucleusKind::Simplex, c.ground(), {}};
            add(NuclearCertificate{std::move(nuc), {}, WeightCase::Unchecked});
        }
        if (auto parts = c.as_disjoint_simplices()) {
            auto [a, b] = *parts;
            for (int flip = 0; flip < 2; ++flip) {
                Nucleus nuc{NucleusKind::DisjointSimplices,
                            c.face_labels(flip ? b : a), c.face_labels(flip ? a : b)};
                add(NuclearCertificate{std::move(nuc), {}, WeightCase::Unchecked});
            }
        }
        if (c.vertex_count() >= 2 && !c.is_full_simplex()) {
            SimplicialComplex dual = c.alexander_dual();
            if (auto parts = dual.as_disjoint_simplices()) {
                auto [a, b] = *parts;
                for (int flip = 0; flip < 2; ++flip) {
                    Nucleus nuc{NucleusKind::DualDisjoint,
                                dual.face_labels(flip ? b : a), dual.face_labels(flip ? a : b)};
                    add(NuclearCertificate{std::move(nuc), {}, WeightCase::Unchecked});
                }
            }
        }

        // Peel one removable vertex in every possible way. A ghost vertex
        // can satisfy the Lawrence definition too (its complement being the
        // unique facet), but only the ghost peel inverts the extension.
        for (std::size_t v = 0; v < c.vertex_count(); ++v) {
            auto kinds = c.classify_vertex(v);
            for (VertexKind k : kinds) {
                if (k == VertexKind::Ordinary) continue;
                if (k == VertexKind::Lawrence && c.is_ghost_vertex(v)) continue;
                SimplicialComplex child = k == VertexKind::Lawrence ? c.link_vertex(v)
                                                                    : c.delete_vertex(v);
                NuclearStep step{k, c.label(v), weight_of(c.label(v))};
                for (const auto& sub : decompose(child)) {
                    NuclearCertificate cert = sub;
                    cert.steps.push_back(step);
                    add(std::move(cert));
                }
            }
        }
        memo[key] = out;
        return out;
    }
};

}  // namespace

std::vector<NuclearCertificate> nuclear_decompositions(const HMPair& pair) {
    Enumerator e{pair, {}};
    return e.decompose(pair.complex());
}

std::optional<NuclearCertificate> nuclear_decompose(const SimplicialComplex& c) {
    HMPair pair = HMPair::uniform(c, 2);
    auto all = nuclear_decompositions(pair);
    if (all.empty()) return std::nullopt;
    return all.front();
}

}  // namespace hmg
