#include "helpers.hpp"

#include <functional>

namespace hmg::testing {

// Enumerate antichains of nonempty subsets of [n]; together with the empty
// antichain (normalized to {emptyset}) these are all complexes on [n].
std::vector<SimplicialComplex> all_complexes(std::size_t n) {
    std::vector<std::string> ground;
    for (std::size_t i = 1; i <= n; ++i) ground.push_back(std::to_string(i));
    const Face full = (Face(1) << n) - 1;

    std::vector<SimplicialComplex> out;
    std::vector<Face> chosen;
    std::function<void(Face)> rec = [&](Face next) {
        if (next > full) {
            out.emplace_back(ground, chosen.empty() ? std::vector<Face>{0} : chosen);
            return;
        }
        rec(next + 1);
        for (Face f : chosen)
            if (face_subset(f, next) || face_subset(next, f)) return;
        chosen.push_back(next);
        rec(next + 1);
        chosen.pop_back();
    };
    rec(1);
    return out;
}

}  // namespace hmg::testing
