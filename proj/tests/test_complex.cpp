#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "hmg/canonical.hpp"
#include "hmg/minor.hpp"
#include "hmg/nuclear.hpp"
#include "hmg/unimodularity.hpp"

using namespace hmg;
using namespace hmg::testing;

namespace {
SimplicialComplex cx(const std::vector<std::string>& ground,
                     const std::vector<std::vector<std::string>>& facets) {
    return SimplicialComplex::from_labels(ground, facets);
}
}  // namespace

TEST_CASE("faces: downward closure in canonical order") {
    auto c = cx({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
    auto faces = c.faces();
    REQUIRE(faces.size() == 6);
    CHECK(faces_as_label_sets(c) == label_face_closure({{"1", "2"}, {"2", "3"}}));
    // Canonical order: by cardinality, then lexicographic.
    CHECK(faces[0] == 0);
    CHECK(c.face_labels(faces[1]) == std::vector<std::string>{"1"});
    CHECK(c.face_labels(faces[4]) == std::vector<std::string>{"1", "2"});
    CHECK(c.face_labels(faces[5]) == std::vector<std::string>{"2", "3"});

    auto ghost_only = cx({"1"}, {});
    CHECK(ghost_only.faces() == std::vector<Face>{0});

    auto simplex = cx({"1", "2", "3"}, {{"1", "2", "3"}});
    CHECK(simplex.faces().size() == 8);
}

TEST_CASE("delete and link") {
    auto c = cx({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
    auto del = c.delete_vertex(c.index_of("1"));
    CHECK(del == cx({"2", "3"}, {{"2", "3"}}));

    auto link = c.link_vertex(c.index_of("2"));
    CHECK(link == cx({"1", "3"}, {{"1"}, {"3"}}));

    // Deleting a ghost vertex only shrinks the ground set.
    auto g = cx({"1", "2", "3"}, {{"1", "2"}});
    CHECK(g.delete_vertex(g.index_of("3")) == cx({"1", "2"}, {{"1", "2"}}));

    // Link of a ghost vertex normalizes to the {emptyset} complex.
    CHECK(g.link_vertex(g.index_of("3")) == cx({"1", "2"}, {}));

    // Link of a cone vertex undoes the cone; link of a simplex vertex is
    // the smaller simplex.
    auto two_points = cx({"1", "2"}, {{"1"}, {"2"}});
    auto coned = two_points.extend(VertexKind::Cone, "3");
    CHECK(coned.link_vertex(coned.index_of("3")) == two_points);
    auto simplex = SimplicialComplex::simplex(2);
    CHECK(simplex.link_vertex(0) == SimplicialComplex(
              {"2", "3"}, {Face(3)}));
}

TEST_CASE("delete/link face semantics on all small complexes") {
    // faces(link_v) = {F : F+v is a face}; faces(delete_v) = {F : v not in F}
    // (ghost links are normalized, which only adds the empty face).
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const auto& c : all_complexes(n)) {
            for (std::size_t v = 0; v < n; ++v) {
                std::set<std::set<std::string>> link_expect, del_expect;
                const std::string vlab = c.label(v);
                for (Face f : c.faces()) {
                    auto labels = c.face_labels(f);
                    std::set<std::string> s(labels.begin(), labels.end());
                    if (!s.count(vlab)) del_expect.insert(s);
                    if (s.count(vlab)) {
                        s.erase(vlab);
                        link_expect.insert(s);
                    }
                }
                CHECK(faces_as_label_sets(c.delete_vertex(v)) == del_expect);
                auto got = faces_as_label_sets(c.link_vertex(v));
                if (c.is_ghost_vertex(v)) {
                    CHECK(got == std::set<std::set<std::string>>{{}});
                } else {
                    CHECK(got == link_expect);
                }
            }
        }
    }
}

TEST_CASE("alexander dual") {
    // Computed by minimal non-face enumeration: the non-faces of {12,34}
    // are 13,14,23,24 (minimal) and everything above them.
    auto c = cx({"1", "2", "3", "4"}, {{"1", "2"}, {"3", "4"}});
    auto dual = c.alexander_dual();
    CHECK(dual == cx({"1", "2", "3", "4"},
                     {{"2", "4"}, {"2", "3"}, {"1", "4"}, {"1", "3"}}));

    auto boundary = cx({"1", "2", "3"}, {{"1", "2"}, {"1", "3"}, {"2", "3"}});
    CHECK(boundary.alexander_dual() == cx({"1", "2", "3"}, {}));

    CHECK(dual.alexander_dual() == c);
    CHECK(boundary.alexander_dual().alexander_dual() == boundary);

    CHECK_THROWS_AS(SimplicialComplex::simplex(2).alexander_dual(), std::invalid_argument);
}

TEST_CASE("alexander dual is an involution on small complexes") {
    for (std::size_t n = 2; n <= 5; ++n)
        for (const auto& c : all_complexes(n)) {
            if (c.is_full_simplex()) continue;
            auto dual = c.alexander_dual();
            if (dual.is_full_simplex()) continue;
            CHECK(dual.alexander_dual() == c);
        }
}

TEST_CASE("extend and classify") {
    auto two_points = cx({"1", "2"}, {{"1"}, {"2"}});
    auto lawrence = two_points.extend(VertexKind::Lawrence, "3");
    CHECK(lawrence == cx({"1", "2", "3"}, {{"1", "2"}, {"1", "3"}, {"2", "3"}}));

    auto ghosted = cx({"1", "2"}, {{"1", "2"}}).extend(VertexKind::Ghost, "3");
    CHECK(ghosted == cx({"1", "2", "3"}, {{"1", "2"}}));
    // A ghost over a full simplex also satisfies the Lawrence definition
    // (its complement is the unique facet); both kinds are reported.

    auto coned = two_points.extend(VertexKind::Cone, "3");
    CHECK(coned == cx({"1", "2", "3"}, {{"1", "3"}, {"2", "3"}}));

    CHECK_THROWS_AS(two_points.extend(VertexKind::Ghost, "1"), std::invalid_argument);

    // Classification: triangle vertex is Lawrence, ghost is ghost, simplex
    // vertices are cone vertices.
    CHECK(lawrence.classify_vertex(2) == std::set<VertexKind>{VertexKind::Lawrence});
    CHECK(ghosted.classify_vertex(2) ==
          std::set<VertexKind>{VertexKind::Ghost, VertexKind::Lawrence});
    auto plain_ghost = cx({"1", "2", "3"}, {{"1"}, {"2"}});
    CHECK(plain_ghost.classify_vertex(2) == std::set<VertexKind>{VertexKind::Ghost});
    auto simplex = SimplicialComplex::simplex(2);
    CHECK(simplex.classify_vertex(1) == std::set<VertexKind>{VertexKind::Cone});
}

TEST_CASE("extend then classify round-trips on small complexes") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& c : all_complexes(n)) {
            CHECK(c.extend(VertexKind::Ghost, "x").classify_vertex(n).count(VertexKind::Ghost));
            CHECK(c.extend(VertexKind::Cone, "x").classify_vertex(n).count(VertexKind::Cone));
            // A Lawrence extension of a full simplex degenerates to a cone.
            auto ext = c.extend(VertexKind::Lawrence, "x");
            if (!c.is_full_simplex())
                CHECK(ext.classify_vertex(n).count(VertexKind::Lawrence));
            // Lawrence identities.
            CHECK(ext.link_vertex(n) == c);
            auto deleted = ext.delete_vertex(n);
            CHECK(deleted.is_full_simplex());
            CHECK(deleted.vertex_count() == c.vertex_count());
        }
}

TEST_CASE("merge face rewrite") {
    // Two successive merges collapse the weight-(2,2,2,2,3) pair with
    // facets 125/345/1234 to a triangle weighted (4,4,3).
    auto pair = make_pair({"1", "2", "3", "4", "5"},
                          {{"1", "2", "5"}, {"3", "4", "5"}, {"1", "2", "3", "4"}},
                          {2, 2, 2, 2, 3});
    Face e12 = (Face(1) << 0) | (Face(1) << 1);
    auto once = merge_face_rewrite(pair, e12);
    Face e34 = 0;
    for (const auto& lab : {"3", "4"})
        e34 |= Face(1) << once.complex().index_of(lab);
    auto twice = merge_face_rewrite(once, e34);
    REQUIRE(twice.vertex_count() == 3);
    auto expect = make_pair({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}}, {4, 4, 3});
    CHECK(pairs_isomorphic(twice, expect));

    // Singleton merges only relabel.
    auto single = merge_face_rewrite(binary_pair({"1", "2"}, {{"1", "2"}}), Face(1), "z");
    CHECK(single == binary_pair({"2", "z"}, {{"2", "z"}}));

    auto second = make_pair({"1", "2", "3", "4"},
                            {{"1", "2", "4"}, {"3", "4"}, {"1", "2", "3"}}, {2, 2, 3, 3});
    auto merged = merge_face_rewrite(second, e12);
    CHECK(pairs_isomorphic(
        merged, make_pair({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}}, {4, 3, 3})));

    // The facet condition is enforced.
    auto bad = binary_pair({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
    CHECK_THROWS_AS(merge_face_rewrite(bad, (Face(1) << 1) | (Face(1) << 2)),
                    std::invalid_argument);
}

TEST_CASE("embed as minor") {
    auto triangle333 = make_pair({"1", "2", "3"},
                                 {{"1", "2"}, {"2", "3"}, {"1", "3"}}, {3, 3, 3});
    auto identity = embed_as_minor(triangle333, triangle333);
    REQUIRE(identity.has_value());
    CHECK(identity->steps.empty());
    CHECK(validate_witness(triangle333, triangle333, *identity));

    auto target = make_pair({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}}, {3, 2, 2});
    auto pattern = binary_pair({"a", "b"}, {{"a"}, {"b"}});
    auto w = embed_as_minor(target, pattern);
    REQUIRE(w.has_value());
    CHECK(w->steps == std::vector<ReductionStep>{{ReductionStep::Link, "2"}});
    CHECK(validate_witness(target, pattern, *w));

    auto simplex = HMPair::uniform(SimplicialComplex::simplex(2), 2);
    auto boundary = binary_pair({"1", "2", "3"}, {{"1", "2"}, {"1", "3"}, {"2", "3"}});
    CHECK(!embed_as_minor(simplex, boundary).has_value());
}

TEST_CASE("minor relation is reflexive and transitive on witnesses") {
    auto a = make_pair({"1", "2", "3", "4"},
                       {{"1", "2"}, {"2", "3"}, {"3", "4"}}, {3, 2, 4, 2});
    auto b = make_pair({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}}, {2, 2, 3});
    auto c = binary_pair({"p", "q"}, {{"p", "q"}});

    auto refl = embed_as_minor(a, a);
    REQUIRE(refl.has_value());
    CHECK(validate_witness(a, a, *refl));

    auto ab = embed_as_minor(a, b);
    auto bc = embed_as_minor(b, c);
    REQUIRE(ab.has_value());
    REQUIRE(bc.has_value());
    CHECK(validate_witness(a, b, *ab));
    CHECK(validate_witness(b, c, *bc));
    auto ac = embed_as_minor(a, c);
    REQUIRE(ac.has_value());
    CHECK(validate_witness(a, c, *ac));
}

TEST_CASE("nuclear decomposition") {
    auto triangle = cx({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"1", "3"}});
    auto cert = nuclear_decompose(triangle);
    REQUIRE(cert.has_value());
    CHECK(replays_to(*cert, triangle));

    auto path4 = cx({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"3", "4"}});
    CHECK(!nuclear_decompose(path4).has_value());

    auto disjoint = SimplicialComplex::disjoint_simplices(1, 2);
    auto cert2 = nuclear_decompose(disjoint);
    REQUIRE(cert2.has_value());
    CHECK(cert2->steps.empty());
    CHECK(cert2->nucleus.kind == NucleusKind::DisjointSimplices);
}

TEST_CASE("triangle decomposes as a Lawrence extension of two points") {
    auto triangle = binary_pair({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"1", "3"}});
    bool found = false;
    for (const auto& cert : nuclear_decompositions(triangle)) {
        if (cert.nucleus.kind == NucleusKind::DisjointSimplices &&
            cert.steps.size() == 1 && cert.steps[0].op == VertexKind::Lawrence)
            found = true;
        CHECK(replays_to(cert, triangle.complex()));
    }
    CHECK(found);
}

TEST_CASE("every certificate replays to its complex (small sweep)") {
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& c : all_complexes(n)) {
            auto pair = HMPair::uniform(c, 2);
            for (const auto& cert : nuclear_decompositions(pair))
                CHECK(replays_to(cert, c));
        }
}

TEST_CASE("nuclear iff no binary forbidden minor (small sweep)") {
    // Cross-check of the constructive and forbidden-minor characterizations
    // on every complex with at most five vertices.
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& c : all_complexes(n)) {
            HMPair pair = HMPair::uniform(c, 2);
            bool nuclear = nuclear_decompose(c).has_value();
            bool has_minor = false;
            for (const auto& entry : forbidden_catalog(5)) {
                const auto& w = entry.pair.weights();
                if (*std::max_element(w.begin(), w.end()) > 2) continue;
                if (embed_as_minor(pair, entry.pair)) {
                    has_minor = true;
                    break;
                }
            }
            CHECK(nuclear == !has_minor);
        }
}

TEST_CASE("canonical keys agree exactly with isomorphism on samples") {
    auto a = make_pair({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}}, {2, 3, 2});
    auto b = make_pair({"x", "y", "z"}, {{"z", "y"}, {"y", "x"}}, {2, 3, 2});
    CHECK(canonical_pair_key(a) == canonical_pair_key(b));
    CHECK(pairs_isomorphic(a, b));
    auto c = make_pair({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}}, {2, 2, 3});
    CHECK(canonical_pair_key(a) != canonical_pair_key(c));
    CHECK(!pairs_isomorphic(a, c));
}
