#include <doctest.h>

#include "helpers.hpp"
#include "hmg/unimodularity.hpp"

using namespace hmg;
using namespace hmg::testing;

TEST_CASE("minor-based unimodularity test") {
    CHECK(is_unimodular_by_minors(from_rows({{1, 1, 0}, {0, 1, 1}})));
    CHECK(is_unimodular_by_minors(from_rows({{1, 1, 1, 1}})));
    CHECK(!is_unimodular_by_minors(from_rows({{1, 1, 1}, {0, 2, 1}})));
    // Too many columns for minor enumeration.
    auto triangle333 = make_pair({"1", "2", "3"},
                                 {{"1", "2"}, {"2", "3"}, {"1", "3"}}, {3, 3, 3});
    CHECK_THROWS_AS(is_unimodular_by_minors(build_design_matrix(triangle333).matrix),
                    guard_error);
}

TEST_CASE("minor test agrees with the Graver test on small matrices") {
    auto samples = {
        binary_pair({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}}),
        binary_pair({"1", "2", "3"}, {{"1", "2"}, {"1", "3"}, {"2", "3"}}),
        binary_pair({"1", "2"}, {{"1"}, {"2"}}),
        make_pair({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}}, {3, 2, 2}),
    };
    for (const auto& pair : samples) {
        auto a = build_design_matrix(pair).matrix;
        if (a.cols() <= 12)
            CHECK(is_unimodular_by_minors(a) == is_unimodular_by_graver(a));
    }
}

TEST_CASE("classify: certificates") {
    // Lawrence weight 3 over a singleton of weight 2 is fine for any third
    // weight.
    auto tri = make_pair({"1", "2", "3"}, {{"1", "2"}, {"1", "3"}, {"2", "3"}}, {3, 2, 7});
    auto v = classify(tri);
    CHECK(v.unimodular);
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->weight_case == WeightCase::SingleWeight3Lawrence);
    CHECK(replays_to(*v.certificate, tri.complex()));

    auto simplex = HMPair(SimplicialComplex::simplex(3), {5, 9, 2, 2});
    auto vs = classify(simplex);
    CHECK(vs.unimodular);
    CHECK(vs.certificate->nucleus.kind == NucleusKind::Simplex);
    CHECK(vs.certificate->nucleus.m() == 3);

    // Ghost-only pairs are unimodular for any weights (all-ones matrix).
    auto ghosts = make_pair({"1", "2", "3"}, {}, {4, 3, 2});
    CHECK(classify(ghosts).unimodular);
}

TEST_CASE("classify: witnesses") {
    auto square = make_pair({"1", "2", "3", "4"},
                            {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"1", "4"}}, {2, 2, 2, 3});
    auto v = classify(square);
    CHECK(!v.unimodular);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->forbidden_id == "four_cycle_2223");
    CHECK(v.witness->steps.empty());
    const auto& cat = forbidden_catalog();
    auto entry = std::find_if(cat.begin(), cat.end(),
                              [&](const CatalogEntry& e) { return e.id == "four_cycle_2223"; });
    REQUIRE(entry != cat.end());
    CHECK(validate_witness(square, entry->pair, *v.witness));

    auto basket = make_pair({"1", "2", "3", "4"},
                            {{"1", "2"}, {"1", "3"}, {"2", "3", "4"}}, {4, 2, 2, 2});
    auto vb = classify(basket);
    CHECK(!vb.unimodular);
    CHECK(vb.witness->forbidden_id == "lawrence4_over_ghost");

    auto triangle333 = make_pair({"1", "2", "3"},
                                 {{"1", "2"}, {"2", "3"}, {"1", "3"}}, {3, 3, 3});
    CHECK(classify(triangle333).witness->forbidden_id == "triangle_333");
}

TEST_CASE("classify agrees with the Graver test on a spot sample") {
    auto samples = {
        make_pair({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}}, {4, 3, 2}),
        make_pair({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"1", "3"}}, {2, 2, 3}),
        make_pair({"1", "2", "3", "4"}, {{"1", "2"}, {"3"}}, {2, 3, 2, 4}),
        make_pair({"1", "2", "3", "4"},
                  {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"1", "4"}}, {2, 2, 2, 2}),
        make_pair({"1", "2", "3", "4"}, {{"1", "2", "3"}, {"4"}}, {2, 2, 2, 3}),
    };
    for (const auto& pair : samples) {
        auto a = build_design_matrix(pair).matrix;
        CHECK(classify(pair).unimodular == is_unimodular_by_graver(a));
    }
}

TEST_CASE("catalog entries are all nonunimodular (cheap subset)") {
    for (const auto& entry : forbidden_catalog(5)) {
        if (entry.pair.vertex_count() > 4) continue;  // larger ones in acceptance
        auto a = build_design_matrix(entry.pair).matrix;
        CHECK(!is_unimodular_by_graver(a));
        CHECK(!classify(entry.pair).unimodular);
    }
}

TEST_CASE("one-step minors of the weighted triangle are unimodular") {
    auto triangle333 = make_pair({"1", "2", "3"},
                                 {{"1", "2"}, {"2", "3"}, {"1", "3"}}, {3, 3, 3});
    for (std::size_t v = 0; v < 3; ++v) {
        CHECK(classify(triangle333.delete_vertex(v)).unimodular);
        CHECK(classify(triangle333.link_vertex(v)).unimodular);
    }
    for (std::size_t v = 0; v < 3; ++v)
        CHECK(classify(triangle333.with_weight(v, 2)).unimodular);
}

TEST_CASE("clique complexes") {
    GraphModel k5{5, {}, {3, 2, 4, 2, 5}};
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) k5.edges.emplace_back(i, j);
    CHECK(clique_graph_unimodular(k5));
    CHECK(classify_clique_complex(k5).unimodular);

    GraphModel c4{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {2, 2, 2, 2}};
    CHECK(clique_graph_unimodular(c4));
    CHECK(classify_clique_complex(c4).unimodular);

    GraphModel c4_bad{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {2, 2, 2, 3}};
    CHECK(!clique_graph_unimodular(c4_bad));
    CHECK(!classify_clique_complex(c4_bad).unimodular);

    GraphModel suspended{5,
                         {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                          {4, 0}, {4, 1}, {4, 2}, {4, 3}},
                         {2, 2, 2, 2, 7}};
    CHECK(clique_graph_unimodular(suspended));
    CHECK(classify_clique_complex(suspended).unimodular);

    // Two complete graphs glued along a common clique.
    GraphModel glued{5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {1, 3}, {1, 4}},
                     {4, 2, 3, 2, 2}};
    // K{0,1,2} and K{1,2,3,4} share the clique {1,2}.
    CHECK(clique_graph_unimodular(glued));
    CHECK(classify_clique_complex(glued).unimodular);

    GraphModel path4{4, {{0, 1}, {1, 2}, {2, 3}}, {2, 2, 2, 2}};
    CHECK(!clique_graph_unimodular(path4));
    CHECK(!classify_clique_complex(path4).unimodular);
}

TEST_CASE("a link of the five-vertex double-Lawrence pair is itself nonunimodular") {
    // Two weight-3 Lawrence vertices over the two-ghost complex: the
    // restricted kernel of the found witness is one-dimensional with an
    // entry of 2, a self-contained circuit certificate. (So that pair is a
    // nonunimodular but not minimal member of the catalog.)
    auto m = make_pair({"2", "3", "4", "5"},
                       {{"2", "3", "4"}, {"2", "3", "5"}, {"4", "5"}}, {2, 2, 3, 3});
    auto dm = build_design_matrix(m);
    auto w = nonunimodular_graver_witness(dm.matrix);
    REQUIRE(w.has_value());
    CHECK(w->max_abs() == 2);
    CHECK(dm.matrix.in_kernel(w->dense(dm.cols())));
    std::vector<std::size_t> supp;
    for (auto [c, v] : w->entries) supp.push_back(c);
    auto basis = integer_kernel_basis(dm.matrix.select_columns(supp));
    REQUIRE(basis.size() == 1);
    SignedVector g;
    for (std::size_t i = 0; i < supp.size(); ++i)
        if (basis[0][i] != 0) g.entries.emplace_back(supp[i], basis[0][i]);
    CHECK(g.canonical() == w->canonical());
    CHECK(!classify(m).unimodular);
}

TEST_CASE("submatrix certification") {
    auto triangle333 = make_pair({"1", "2", "3"},
                                 {{"1", "2"}, {"2", "3"}, {"1", "3"}}, {3, 3, 3});
    auto cert = certify_nonunimodular_by_submatrix(triangle333, 7);
    REQUIRE(cert.has_value());
    CHECK(cert->max_abs() >= 2);
    auto a = build_design_matrix(triangle333).matrix;
    CHECK(a.in_kernel(cert->dense(a.cols())));

    auto simplex = HMPair::uniform(SimplicialComplex::simplex(2), 2);
    SubmatrixCertifyOptions opts;
    opts.budget = 20;
    CHECK(!certify_nonunimodular_by_submatrix(simplex, 3, opts).has_value());
}
