#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "squint/quiver.hpp"
#include "test_util.hpp"

#include <random>
#include <set>

using namespace squint;
using namespace squint::testutil;

TEST_CASE("closed path enumeration on the loop") {
    Setup s = loop_setup(1, 1);
    auto paths = enumerate_closed_paths(s.quiver, 2);
    REQUIRE(paths.size() == 2);
    CHECK(paths[0].edges == std::vector<int>{0});
    CHECK(paths[1].edges == std::vector<int>{0, 0});
    for (const Path& p : paths) CHECK(is_closed(s.quiver, p));
}

TEST_CASE("Kronecker quiver is acyclic") {
    Setup s = kronecker_setup(SDim{1, 1}, SDim{1, 1});
    CHECK(enumerate_closed_paths(s.quiver, 4).empty());
}

TEST_CASE("2-cycle rotation classes are identified") {
    Setup s = two_cycle_setup(SDim{1, 1}, SDim{1, 1});
    auto paths = enumerate_closed_paths(s.quiver, 2);
    // exhaustive check: the only closed 2-walks are (e1,e2)-rotations; one class
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].edges.size() == 2);
    std::set<std::vector<int>> rotations{{0, 1}, {1, 0}};
    CHECK(rotations.count(paths[0].edges) == 1);

    // exhaustive enumeration of compatible edge sequences of length <= 2
    int closed_walks = 0;
    for (int e1 = 0; e1 < 2; ++e1)
        for (int e2 = 0; e2 < 2; ++e2) {
            Path p{{e1, e2}};
            if (path_ok(s.quiver, p) && is_closed(s.quiver, p)) ++closed_walks;
        }
    CHECK(closed_walks == 2); // two rotations of one class
}

TEST_CASE("paths between vertices") {
    Setup s = a3_setup(SDim{1, 0}, SDim{1, 0}, SDim{1, 0});
    auto ps = enumerate_paths_between(s.quiver, 0, 2, 3);
    REQUIRE(ps.size() == 1);
    // stored order: h(edges[i+1]) = t(edges[i]) => (e2, e1)
    CHECK(ps[0].edges == std::vector<int>{1, 0});
    CHECK(path_start(s.quiver, ps[0]) == 0);
    CHECK(path_end(s.quiver, ps[0]) == 2);
}

TEST_CASE("ringel form") {
    SUBCASE("edgeless quiver is the identity-like case") {
        Quiver q;
        q.add_vertex("a");
        SuperDimVector alpha = {SDim{1, 0}};
        CHECK(ringel_form(q, alpha, alpha) == 1);
    }
    SUBCASE("Kronecker (1|1,1|1)") {
        Setup s = kronecker_setup(SDim{1, 1}, SDim{1, 1});
        CHECK(ringel_form(s.quiver, s.alpha, s.alpha) == -4);
    }
    SUBCASE("zero vector") {
        Setup s = kronecker_setup(SDim{1, 1}, SDim{1, 1});
        SuperDimVector zero = {SDim{0, 0}, SDim{0, 0}};
        CHECK(ringel_form(s.quiver, zero, s.alpha) == 0);
    }
    SUBCASE("bilinearity on random vectors") {
        Setup s = two_cycle_setup(SDim{2, 1}, SDim{1, 2});
        std::mt19937_64 rng(42);
        std::uniform_int_distribution<int> d(0, 3);
        for (int it = 0; it < 50; ++it) {
            SuperDimVector a = {SDim{d(rng), d(rng)}, SDim{d(rng), d(rng)}};
            SuperDimVector a2 = {SDim{d(rng), d(rng)}, SDim{d(rng), d(rng)}};
            SuperDimVector b = {SDim{d(rng), d(rng)}, SDim{d(rng), d(rng)}};
            SuperDimVector sum = {SDim{a[0].even + a2[0].even, a[0].odd + a2[0].odd},
                                  SDim{a[1].even + a2[1].even, a[1].odd + a2[1].odd}};
            CHECK(ringel_form(s.quiver, sum, b) ==
                  ringel_form(s.quiver, a, b) + ringel_form(s.quiver, a2, b));
        }
    }
    SUBCASE("parity shift invariance") {
        Setup s = two_cycle_setup(SDim{2, 1}, SDim{1, 2});
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<int> d(0, 3);
        for (int it = 0; it < 50; ++it) {
            SuperDimVector a = {SDim{d(rng), d(rng)}, SDim{d(rng), d(rng)}};
            SuperDimVector b = {SDim{d(rng), d(rng)}, SDim{d(rng), d(rng)}};
            for (int mask = 0; mask < 4; ++mask) {
                ParityVector pv = {static_cast<std::uint8_t>(mask & 1),
                                   static_cast<std::uint8_t>((mask >> 1) & 1)};
                CHECK(ringel_form(s.quiver, parity_shift(a, pv), parity_shift(b, pv)) ==
                      ringel_form(s.quiver, a, b));
            }
        }
    }
}

TEST_CASE("vertex classification") {
    Setup s = kronecker_setup(SDim{1, 1}, SDim{2, 0});
    VertexClass a = classify_vertex(s.quiver, s.alpha, 0);
    CHECK(a.source);
    CHECK_FALSE(a.sink);
    CHECK_FALSE(a.extremal);
    VertexClass b = classify_vertex(s.quiver, s.alpha, 1);
    CHECK(b.sink);
    CHECK(b.extremal);

    Setup l = loop_setup(1, 1);
    VertexClass v = classify_vertex(l.quiver, l.alpha, 0);
    CHECK_FALSE(v.source);
    CHECK_FALSE(v.sink);

    CHECK_THROWS(classify_vertex(s.quiver, s.alpha, 5));
}

TEST_CASE("kirchhoff rule") {
    Setup l = loop_setup(1, 0);
    CHECK(kirchhoff_ok(l.quiver, 0));
    Setup k = kronecker_setup(SDim{1, 0}, SDim{1, 0});
    CHECK_FALSE(kirchhoff_ok(k.quiver, 0));
    Setup c = two_cycle_setup(SDim{1, 0}, SDim{1, 0});
    CHECK(kirchhoff_ok(c.quiver, 0));
    CHECK(kirchhoff_ok(c.quiver, 1));
}

TEST_CASE("edge doubling") {
    Setup l = loop_setup(1, 0);
    EdgeDoubled d = double_edges(l.quiver);
    CHECK(d.quiver.vertex_count() == 1);
    CHECK(d.quiver.edge_count() == 2);
    CHECK(d.edge_parity == std::vector<std::uint8_t>{0, 1});

    Setup k = kronecker_setup(SDim{1, 0}, SDim{1, 0});
    CHECK(double_edges(k.quiver).quiver.edge_count() == 4);

    Quiver edgeless;
    edgeless.add_vertex("a");
    CHECK(double_edges(edgeless).quiver.edge_count() == 0);
}

TEST_CASE("vertex-and-edge doubling") {
    SUBCASE("isolated vertex") {
        Quiver q;
        q.add_vertex("a");
        VertexDoubled d = double_all(q, {SDim{2, 1}});
        CHECK(d.quiver.vertex_count() == 2);
        CHECK(d.dims == std::vector<int>{2, 1});
    }
    SUBCASE("loop") {
        Setup l = loop_setup(1, 1);
        VertexDoubled d = double_all(l.quiver, l.alpha);
        CHECK(d.quiver.vertex_count() == 2);
        CHECK(d.quiver.edge_count() == 4);
    }
    SUBCASE("Kronecker") {
        Setup k = kronecker_setup(SDim{1, 1}, SDim{1, 1});
        VertexDoubled d = double_all(k.quiver, k.alpha);
        CHECK(d.quiver.vertex_count() == 4);
        CHECK(d.quiver.edge_count() == 8);
    }
    SUBCASE("Ringel form agrees with the doubled quiver") {
        // ordinary Euler form of the doubled quiver on the doubled dimensions
        std::mt19937_64 rng(3);
        std::uniform_int_distribution<int> dd(0, 3);
        Setup s = two_cycle_setup(SDim{1, 1}, SDim{1, 1});
        for (int it = 0; it < 40; ++it) {
            SuperDimVector a = {SDim{dd(rng), dd(rng)}, SDim{dd(rng), dd(rng)}};
            SuperDimVector b = {SDim{dd(rng), dd(rng)}, SDim{dd(rng), dd(rng)}};
            VertexDoubled da = double_all(s.quiver, a);
            VertexDoubled db = double_all(s.quiver, b);
            long long euler = 0;
            for (int v = 0; v < da.quiver.vertex_count(); ++v)
                euler += static_cast<long long>(da.dims[v]) * db.dims[v];
            for (int e = 0; e < da.quiver.edge_count(); ++e)
                euler -= static_cast<long long>(da.dims[da.quiver.tail(e)]) *
                         db.dims[db.quiver.head(e)];
            CHECK(euler == ringel_form(s.quiver, a, b));
        }
    }
}

TEST_CASE("quiver polarization") {
    Setup l = loop_setup(1, 0);
    CHECK(polarize_quiver(l.quiver, {2}).edge_count() == 2);
    Setup k = kronecker_setup(SDim{1, 0}, SDim{1, 0});
    Quiver p = polarize_quiver(k.quiver, {1, 1});
    CHECK(p.edge_count() == 2);
    Quiver p2 = polarize_quiver(k.quiver, {3, 0});
    CHECK(p2.edge_count() == 3);
    for (int e = 0; e < 3; ++e) CHECK(p2.edge_id(e) == "e1." + std::to_string(e + 1));
}

TEST_CASE("sink/source normalizing") {
    SUBCASE("path quiver at the middle vertex") {
        Setup s = a3_setup(SDim{1, 0}, SDim{1, 0}, SDim{1, 0});
        Normalized n = normalize_at(s, 1);
        CHECK(n.setup.quiver.vertex_count() == 4);
        CHECK(n.setup.quiver.edge_count() == 3);
        // e1 now ends at b', e(b) = @b runs b' -> b, e2 unchanged
        const Quiver& q = n.setup.quiver;
        CHECK(q.vertex_id(n.new_vertex) == "b'");
        CHECK(q.edge_id(n.new_edge) == "@b");
        CHECK(q.head(q.edge_index("e1")) == n.new_vertex);
        CHECK(q.tail(n.new_edge) == n.new_vertex);
        CHECK(q.head(n.new_edge) == 1);
        CHECK(q.tail(q.edge_index("e2")) == 1);
        // the normalized vertex keeps exactly one in-edge
        CHECK(q.in_degree(1) == 1);
        CHECK(n.setup.alpha[n.new_vertex] == s.alpha[1]);
        CHECK(n.setup.parity[n.new_vertex] == s.parity[1]);
    }
    SUBCASE("loop becomes a 2-cycle shape") {
        Setup l = loop_setup(2, 1);
        Normalized n = normalize_at(l, 0);
        const Quiver& q = n.setup.quiver;
        CHECK(q.vertex_count() == 2);
        CHECK(q.edge_count() == 2);
        // loop edge re-targeted a -> a', new edge a' -> a
        CHECK(q.tail(0) == 0);
        CHECK(q.head(0) == n.new_vertex);
        CHECK(q.tail(1) == n.new_vertex);
        CHECK(q.head(1) == 0);
        // vertex/edge count +1 each
        CHECK(q.vertex_count() == l.quiver.vertex_count() + 1);
        CHECK(q.edge_count() == l.quiver.edge_count() + 1);
    }
    SUBCASE("normalizing a source is an error") {
        Setup k = kronecker_setup(SDim{1, 0}, SDim{1, 0});
        CHECK_THROWS(normalize_at(k, 0));
        CHECK_THROWS(normalize_at(k, 1));
    }
}

TEST_CASE("parity shift") {
    SuperDimVector alpha = {SDim{2, 1}};
    CHECK(parity_shift(alpha, {1})[0] == SDim{1, 2});
    CHECK(parity_shift(alpha, {0})[0] == SDim{2, 1});
}
