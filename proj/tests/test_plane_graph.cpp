#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fumlab/generators.hpp>
#include <fumlab/plane_graph.hpp>

#include <set>

using namespace fumlab;

namespace {

PlaneGraph triangle() { return build_plane_graph(3, {{1, 2}, {2, 0}, {0, 1}}); }

PlaneGraph two_triangles() {
    return build_plane_graph(6, {{1, 2}, {2, 0}, {0, 1}, {4, 5}, {5, 3}, {3, 4}});
}

}  // namespace

TEST_CASE("triangle builds and traces") {
    PlaneGraph g = triangle();
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.component_count() == 1);
    CHECK(max_degree(g) == 2);

    FaceCensus census = trace_faces(g);
    REQUIRE(census.faces.size() == 2);
    CHECK(census.faces[0].length() == 3);
    CHECK(census.faces[1].length() == 3);
    CHECK(euler_characteristic(g) == 2);
}

TEST_CASE("construction rejects malformed rotation systems") {
    CHECK_THROWS_AS(build_plane_graph(2, {{1}, {}}), AsymmetricAdjacency);
    CHECK_THROWS_AS(build_plane_graph(2, {{1, 1}, {0}}), DuplicateNeighbor);
    CHECK_THROWS_AS(build_plane_graph(2, {{0}, {}}), SelfLoop);
    CHECK_THROWS_AS(build_plane_graph(2, {{5}, {}}), IndexOutOfRange);
    CHECK_THROWS_AS(build_plane_graph(1, {{}, {}}), IndexOutOfRange);
}

TEST_CASE("hand-written H_1 rotation data is valid and matches the generator") {
    // Two nested 4-cycles a1..a4 (0..3), b1..b4 (4..7) with the spoke zigzag.
    std::vector<std::vector<VertexId>> rot = {
        {1, 4, 7, 3}, {2, 5, 4, 0}, {3, 6, 5, 1}, {0, 7, 6, 2},
        {1, 5, 7, 0}, {2, 6, 4, 1}, {3, 7, 5, 2}, {0, 4, 6, 3},
    };
    PlaneGraph g = build_plane_graph(8, rot);
    CHECK(g.vertex_count() == 8);
    CHECK(g.edge_count() == 16);
    CHECK(g.rotations() == gen_gadget(1).graph.rotations());
}

TEST_CASE("face census of the generated graphs") {
    SUBCASE("gadget k=1: 8 triangles and two quadrilaterals") {
        FaceCensus census = trace_faces(gen_gadget(1).graph);
        REQUIRE(census.faces.size() == 10);
        CHECK(census.counts_by_length == std::map<std::size_t, std::size_t>{{3, 8}, {4, 2}});
    }
    SUBCASE("fig1: 19 faces") {
        FaceCensus census = trace_faces(gen_fig1());
        CHECK(census.faces.size() == 19);
        CHECK(census.counts_by_length ==
              std::map<std::size_t, std::size_t>{{3, 16}, {4, 2}, {10, 1}});
    }
}

TEST_CASE("euler characteristic") {
    CHECK(euler_characteristic(triangle()) == 2);

    PlaneGraph h2 = gen_gadget(2).graph;
    CHECK(h2.vertex_count() == 14);
    CHECK(h2.edge_count() == 28);
    CHECK(euler_characteristic(h2) == 2);

    PlaneGraph pair = two_triangles();
    CHECK(pair.component_count() == 2);
    CHECK(component_euler_characteristics(pair) == std::vector<int>{2, 2});
    CHECK(euler_characteristic(pair) == 4);  // 2 per component when traced separately
}

TEST_CASE("dart partition: every dart in exactly one walk, total 2E") {
    for (const PlaneGraph& g : {gen_gadget(1).graph, gen_fig1(), gen_k4()}) {
        FaceCensus census = trace_faces(g);
        std::size_t total = 0;
        std::set<std::pair<VertexId, VertexId>> seen;
        for (const Face& f : census.faces)
            for (const Dart& d : f.walk) {
                total += 1;
                CHECK(seen.insert({d.tail, d.head}).second);
            }
        CHECK(total == 2 * static_cast<std::size_t>(g.edge_count()));
    }
}

TEST_CASE("face walks satisfy the successor rule and find_face_of_dart agrees") {
    PlaneGraph g = gen_gadget(1).graph;
    FaceCensus census = trace_faces(g);
    for (int i = 0; i < static_cast<int>(census.faces.size()); ++i) {
        const auto& walk = census.faces[i].walk;
        for (std::size_t j = 0; j < walk.size(); ++j) {
            CHECK(walk[j].head == walk[(j + 1) % walk.size()].tail);
            CHECK(find_face_of_dart(census, walk[j]) == i);
        }
    }
    CHECK_THROWS_AS(find_face_of_dart(census, Dart{0, 2}), FaceNotFound);
}

TEST_CASE("outer face designation follows the stored dart") {
    GadgetHandle h = gen_gadget(1);
    FaceCensus census = trace_faces(h.graph);
    REQUIRE(census.outer_face_index.has_value());
    const Face& outer = census.faces[*census.outer_face_index];
    CHECK(outer.is_outer);
    CHECK(outer.incident_vertices == h.outer_cycle);
    CHECK(outer.length() == 4);
}

TEST_CASE("max degree") {
    CHECK(max_degree(gen_fig1()) == 5);
    for (int k = 1; k <= 5; ++k) CHECK(max_degree(gen_gadget(k).graph) == 4);
}

TEST_CASE("trace_faces is deterministic") {
    PlaneGraph g = gen_fig1();
    FaceCensus a = trace_faces(g);
    FaceCensus b = trace_faces(g);
    REQUIRE(a.faces.size() == b.faces.size());
    for (std::size_t i = 0; i < a.faces.size(); ++i) {
        CHECK(a.faces[i].walk == b.faces[i].walk);
        CHECK(a.faces[i].incident_vertices == b.faces[i].incident_vertices);
    }
}

TEST_CASE("serialize and reparse is the identity") {
    SUBCASE("triangle") {
        PlaneGraph g = triangle();
        CHECK(parse_graph(serialize_graph(g)) == g);
    }
    SUBCASE("fig1 keeps labels and the outer designation") {
        PlaneGraph g = gen_fig1();
        PlaneGraph back = parse_graph(serialize_graph(g));
        CHECK(back == g);
        CHECK(back.label(*back.find_label("a2'")) == "a2'");
        CHECK(back.outer_dart() == g.outer_dart());
    }
    SUBCASE("gadgets") {
        for (int k = 1; k <= 4; ++k) {
            PlaneGraph g = gen_gadget(k).graph;
            CHECK(parse_graph(serialize_graph(g)) == g);
        }
    }
}

TEST_CASE("parser reports errors with line numbers") {
    SUBCASE("dangling neighbor index") {
        CHECK_THROWS_AS(parse_graph("planegraph 2\nv0: 1 7\nv1: 0\n"), IndexOutOfRange);
    }
    SUBCASE("bad header") {
        CHECK_THROWS_AS(parse_graph("plane 3\n"), SyntaxError);
        try {
            parse_graph("# comment\nplanegraph x\n");
            FAIL("expected SyntaxError");
        } catch (const SyntaxError& e) {
            CHECK(e.line == 2);
        }
    }
    SUBCASE("missing rotation line") {
        CHECK_THROWS_AS(parse_graph("planegraph 2\nv0: 1\n"), SyntaxError);
    }
    SUBCASE("duplicate rotation line") {
        CHECK_THROWS_AS(parse_graph("planegraph 1\nv0:\nv0:\n"), SyntaxError);
    }
    SUBCASE("outer dart must be an edge") {
        CHECK_THROWS_AS(parse_graph("planegraph 2\nv0: 1\nv1: 0\nouter 1 1\n"), SyntaxError);
    }
    SUBCASE("asymmetry is still caught behind the parser") {
        CHECK_THROWS_AS(parse_graph("planegraph 2\nv0: 1\nv1:\n"), AsymmetricAdjacency);
    }
}

TEST_CASE("parser accepts comments, blank lines and isolated vertices") {
    PlaneGraph g = parse_graph(
        "# a triangle plus one isolated vertex\n"
        "planegraph 4\n"
        "\n"
        "v0: 1 2\n"
        "v1: 2 0   # inline comment\n"
        "v2: 0 1\n"
        "v3:\n"
        "label v3 lonely\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.component_count() == 2);
    CHECK(g.find_label("lonely") == 3);

    FaceCensus census = trace_faces(g);
    REQUIRE(census.faces.size() == 3);  // two triangle sides plus the isolated vertex's face
    CHECK(census.faces.back().length() == 0);
    CHECK(census.faces.back().incident_vertices == std::vector<VertexId>{3});
    CHECK(euler_characteristic(g) == 4);
}
