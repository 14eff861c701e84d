#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "aeclab/certificate.hpp"
#include "aeclab/constructions.hpp"
#include "aeclab/graph.hpp"
#include "support.hpp"

using namespace aeclab;
namespace ts = testsupport;

TEST_CASE("certificate kind names round-trip") {
    for (CertKind k : {CertKind::Pass, CertKind::Witness, CertKind::BoundedRefutation,
                       CertKind::CompleteRefutation}) {
        CHECK(cert_kind_from_name(cert_kind_name(k)) == k);
    }
    CHECK(std::string(cert_kind_name(CertKind::Pass)) == "pass");
    CHECK(std::string(cert_kind_name(CertKind::Witness)) == "witness");
    CHECK(std::string(cert_kind_name(CertKind::BoundedRefutation)) == "bounded-refutation");
    CHECK(std::string(cert_kind_name(CertKind::CompleteRefutation)) == "complete-refutation");
    CHECK_THROWS_AS(cert_kind_from_name("verdict"), InputError);
}

TEST_CASE("graphs serialize as their text statements") {
    Graph p = gen_path(4);
    Json j = graph_to_json("host", p);
    REQUIRE(j.is_string());
    CHECK(j.get<std::string>() ==
          "graph host { vertices: 4; edges: (0,1), (1,2), (2,3); }");
    CHECK(graph_from_json(j) == p);

    Graph empty(0);
    Json j0 = graph_to_json("z", empty);
    CHECK(j0.get<std::string>() == "graph z { vertices: 0; edges:; }");
    CHECK(graph_from_json(j0) == empty);

    std::mt19937_64 rng(42);
    for (int t = 0; t < 20; ++t) {
        Graph g = random_graph(6, 0.5, rng());
        CHECK(graph_from_json(graph_to_json("g", g)) == g);
    }
}

TEST_CASE("vertex sets serialize as ascending arrays") {
    VertexSet s = set_of({0, 2, 63});
    Json j = vertex_set_to_json(s);
    CHECK(j == Json::array({0, 2, 63}));
    CHECK(vertex_set_from_json(j) == s);
    CHECK(vertex_set_from_json(Json::array()) == 0);
    CHECK_THROWS_AS(vertex_set_from_json(Json::array({64})), InputError);
    CHECK_THROWS_AS(vertex_set_from_json(Json::array({-1})), InputError);
}

TEST_CASE("embeddings serialize as plain maps") {
    Embedding e;
    e.map = {3, 0, 2};
    Json j = embedding_to_json(e);
    CHECK(j == Json::array({3, 0, 2}));
    CHECK(embedding_from_json(j).map == e.map);
    CHECK(embedding_from_json(Json::array()).map.empty());
}

TEST_CASE("every relation kind survives a JSON round trip") {
    Graph k3 = gen_complete(3);
    std::vector<SubmodelRelation> rels = {
        ComponentRel{false},       ComponentRel{true},
        InducedSubRel{},           ForbBoundedRel{k3, 2},
        CountPreservingRel{k3},    NoAddRel{k3, 2},
        TypeBoundedRel{k3, 2},     ForbConCliqueRel{k3},
        ForbConComponentRel{k3},
    };
    std::vector<std::string> kinds = {"component", "component_strict", "induced",
                                      "forb_bounded", "count", "noadd",
                                      "typeb", "fc_clique", "fc_comp"};
    REQUIRE(rels.size() == kinds.size());
    for (size_t i = 0; i < rels.size(); ++i) {
        Json j = rel_to_json(rels[i]);
        CHECK(j.at("kind").get<std::string>() == kinds[i]);
        CHECK(rel_to_json(rel_from_json(j)) == j);
    }
    Json parametrized = rel_to_json(NoAddRel{k3, 2});
    CHECK(parametrized.at("size").get<int>() == 2);
    CHECK(graph_from_json(parametrized.at("forbidden")) == k3);
    Json bounded = rel_to_json(ForbBoundedRel{k3, 1});
    CHECK(bounded.at("threshold").get<int>() == 1);

    Json bogus = {{"kind", "cofinal"}};
    CHECK_THROWS_AS(rel_from_json(bogus), InputError);
}

TEST_CASE("sentence expressions round-trip with nesting intact") {
    SentenceExpr atom_a = SentenceExpr::atom("A", gen_complete(2));
    SentenceExpr atom_b = SentenceExpr::atom("B", gen_edgeless(2));
    SentenceExpr no;
    no.op = SentenceExpr::Op::Not;
    no.kids = {atom_b};
    SentenceExpr conj;
    conj.op = SentenceExpr::Op::And;
    conj.kids = {atom_a, no};
    SentenceExpr root;
    root.op = SentenceExpr::Op::Implies;
    root.kids = {conj, atom_a};

    Json j = expr_to_json(root);
    CHECK(j.at("op").get<std::string>() == "implies");
    REQUIRE(j.at("kids").size() == 2);
    CHECK(j.at("kids")[0].at("op") == "and");
    CHECK(j.at("kids")[0].at("kids")[1].at("op") == "not");
    CHECK(j.at("kids")[0].at("kids")[0].at("name") == "A");
    CHECK(expr_to_json(expr_from_json(j)) == j);

    Json bogus = {{"op", "xor"}, {"kids", Json::array()}};
    CHECK_THROWS_AS(expr_from_json(bogus), InputError);
}

TEST_CASE("every class form survives a JSON round trip") {
    Graph k3 = gen_complete(3);
    Graph p3 = gen_path(3);
    std::vector<ClassSpec> specs = {
        ForbClass{{k3, p3}},
        ForbClass{{}},
        ForbConClass{k3},
        CompMaxClass{3},
        CompCondClass{2, 3},
        NotAllEmbedClass{{k3, gen_edgeless(3)}},
        NotBothTypesClass{gen_complete(1), {true}, {false}},
        SentenceClass{SentenceExpr::atom("A", gen_complete(2))},
    };
    std::vector<std::string> kinds = {"forb", "forb", "forbcon", "compmax",
                                      "compcond", "notallembed", "notboth", "sentence"};
    for (size_t i = 0; i < specs.size(); ++i) {
        Json j = class_to_json(specs[i]);
        CHECK(j.at("kind").get<std::string>() == kinds[i]);
        CHECK(class_to_json(class_from_json(j)) == j);
    }

    Json forb = class_to_json(specs[0]);
    REQUIRE(forb.at("family").size() == 2);
    CHECK(graph_from_json(forb.at("family")[0]) == k3);
    CHECK(graph_from_json(forb.at("family")[1]) == p3);

    Json nb = class_to_json(specs[6]);
    CHECK(nb.at("p") == Json::array({true}));
    CHECK(nb.at("q") == Json::array({false}));

    Json bogus = {{"kind", "openclass"}};
    CHECK_THROWS_AS(class_from_json(bogus), InputError);
}

namespace {

Certificate sample_certificate() {
    Certificate c;
    c.command = "search-amalgam";
    c.inputs = Json{{"bound", 8}, {"rel", rel_to_json(InducedSubRel{})}};
    c.kind = CertKind::BoundedRefutation;
    c.witness = Json{{"note", "none"}};
    c.exhaustion = Exhaustion{8, 1234};
    c.completeness_argument = "every candidate up to the bound was covered";
    c.stats.elapsed_ms = 77;
    c.stats.nodes = 56;
    c.seed = 900001;
    return c;
}

}  // namespace

TEST_CASE("full certificates round-trip through JSON") {
    Certificate c = sample_certificate();
    Json j = certificate_to_json(c, true);
    CHECK(j.at("command") == "search-amalgam");
    CHECK(j.at("kind") == "bounded-refutation");
    CHECK(j.at("exhaustion").at("bound") == 8);
    CHECK(j.at("exhaustion").at("explored") == 1234);
    CHECK(j.at("stats").at("elapsed_ms") == 77);
    CHECK(j.at("stats").at("nodes") == 56);
    CHECK(j.at("seed") == 900001);

    Certificate back = certificate_from_json(j);
    CHECK(certificate_to_json(back, true) == j);
    CHECK(back.kind == c.kind);
    CHECK(back.exhaustion->explored == c.exhaustion->explored);
    CHECK(*back.completeness_argument == *c.completeness_argument);
}

TEST_CASE("timings are zeroed unless explicitly requested") {
    Certificate c = sample_certificate();
    Json quiet = certificate_to_json(c);
    CHECK(quiet.at("stats").at("elapsed_ms") == 0);
    CHECK(quiet.at("stats").at("nodes") == 56);
    Json timed = certificate_to_json(c, true);
    CHECK(timed.at("stats").at("elapsed_ms") == 77);
}

TEST_CASE("optional certificate fields are omitted when absent") {
    Certificate c;
    c.command = "check-transitivity";
    c.inputs = Json::object();
    c.kind = CertKind::Pass;
    Json j = certificate_to_json(c);
    CHECK_FALSE(j.contains("witness"));
    CHECK_FALSE(j.contains("exhaustion"));
    CHECK_FALSE(j.contains("completeness_argument"));
    Certificate back = certificate_from_json(j);
    CHECK_FALSE(back.witness.has_value());
    CHECK_FALSE(back.exhaustion.has_value());
    CHECK_FALSE(back.completeness_argument.has_value());
}

TEST_CASE("serialized certificates are byte-identical across runs") {
    std::string a = certificate_to_json(sample_certificate(), false).dump(2);
    std::string b = certificate_to_json(sample_certificate(), false).dump(2);
    CHECK(a == b);
    // elapsed time never leaks into the default serialization
    Certificate c = sample_certificate();
    c.stats.elapsed_ms = 99999;
    CHECK(certificate_to_json(c, false).dump(2) == a);
}
