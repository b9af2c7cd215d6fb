#include "doctest.h"

#include <qsh/serial.hpp>

#include <json.hpp>

using namespace qsh;

namespace {
FieldRef Q = FieldContext::rational();
FieldRef Z3 = FieldContext::cyclotomic(3);
} // namespace

TEST_CASE("scalar expressions") {
    CHECK(parse_scalar("-1", Q) == Scalar::integer(Q, -1));
    CHECK(parse_scalar("7", Q) == Scalar::integer(Q, 7));
    CHECK(parse_scalar("2/3", Q) == Scalar::from_mpq(Q, mpq_class(2, 3)));
    CHECK(parse_scalar(" - 5/10 ", Q) == Scalar::from_mpq(Q, mpq_class(-1, 2)));
    CHECK(parse_scalar("z", Z3) == Scalar::zeta(Z3));
    CHECK(parse_scalar("z^2", Z3) == Scalar::zeta_power(Z3, 2));
    CHECK(parse_scalar("2*z", Z3) == Scalar::integer(Z3, 2) * Scalar::zeta(Z3));
    CHECK(parse_scalar("2z", Z3) == Scalar::integer(Z3, 2) * Scalar::zeta(Z3));
    // the order-3 root satisfies 1 + z + z^2 = 0
    CHECK(parse_scalar("1+z+z^2", Z3).is_zero());
    CHECK(parse_scalar("1-z", Z3) == Scalar::one(Z3) - Scalar::zeta(Z3));
    CHECK_THROWS_AS(parse_scalar("z", Q), FieldError);
    CHECK_THROWS_AS(parse_scalar("", Q), FieldError);
    CHECK_THROWS_AS(parse_scalar("1+", Q), FieldError);
    CHECK_THROWS_AS(parse_scalar("q", Q), FieldError);
    CHECK_THROWS_AS(parse_scalar("1/0", Q), FieldError);
}

TEST_CASE("braiding descriptions") {
    SUBCASE("trivial") {
        auto V = parse_braiding_spec(R"({"type":"trivial","dim":3})");
        CHECK(V.dim() == 3);
        CHECK(V.field()->kind() == FieldKind::Rational);
        CHECK(yang_baxter_check(V));
    }
    SUBCASE("diagonal with a root of unity") {
        auto V = parse_braiding_spec(
            R"({"type":"diagonal","q":[["z"]],"field":{"field":"cyclotomic","order":3}})");
        CHECK(V.dim() == 1);
        CHECK(V.field()->order() == 3);
        REQUIRE(V.r_matrix()[0].size() == 1);
        CHECK(V.r_matrix()[0][0].second == Scalar::zeta(Z3));
    }
    SUBCASE("conjugation class by labels") {
        auto V = parse_braiding_spec(
            R"js({"type":"group_class","group":{"perm_generators":[[2,1,3],[1,3,2]]},)js"
            R"js("class_reps":["(1 2)"],"cocycle":-1})js");
        CHECK(V.dim() == 3);
        CHECK(yang_baxter_check(V));
        // the class closes to all three transpositions and gives the
        // 12-dimensional quotient profile
        NicholsProfile p = nichols_profile(V, 5);
        CHECK(p.dims == std::vector<long>{1, 3, 4, 3, 1, 0});
    }
    SUBCASE("rack form of the same braiding") {
        auto V = parse_braiding_spec(
            R"({"type":"rack","elements":["a","b","c"],)"
            R"("action":[[0,2,1],[2,1,0],[1,0,2]],"cocycle":-1})");
        CHECK(V.dim() == 3);
        CHECK(yang_baxter_check(V));
        NicholsProfile p = nichols_profile(V, 5);
        CHECK(p.total == 12);
    }
    SUBCASE("raw matrix with validation") {
        // the swap on two letters
        auto V = parse_braiding_spec(
            R"({"type":"matrix","R":[[1,0,0,0],[0,0,1,0],[0,1,0,0],[0,0,0,1]]})");
        CHECK(V.dim() == 2);
        CHECK(yang_baxter_check(V));
        // corrupt one entry: rejected when validating, accepted raw
        std::string bad =
            R"({"type":"matrix","R":[[1,0,0,0],[0,0,1,0],[0,1,1,0],[0,0,0,1]]})";
        CHECK_THROWS_AS(parse_braiding_spec(bad), FieldError);
        auto W = parse_braiding_spec(bad, false);
        CHECK_FALSE(yang_baxter_check(W));
    }
    SUBCASE("malformed input") {
        CHECK_THROWS_AS(parse_braiding_spec("not json"), FieldError);
        CHECK_THROWS_AS(parse_braiding_spec(R"({"type":"nope"})"), FieldError);
        CHECK_THROWS_AS(parse_braiding_spec(R"({"type":"trivial"})"), FieldError);
        CHECK_THROWS_AS(parse_braiding_spec(
                            R"js({"type":"group_class","group":{"perm_generators":[[2,1,3]]},)js"
                            R"js("class_reps":["(9 9)"],"cocycle":-1})js"),
                        FieldError);
    }
}

TEST_CASE("rational rendering") {
    CHECK(render_rational(mpq_class(7), false) == "7");
    CHECK(render_rational(mpq_class(-56, 135), false) == "-56/135");
    CHECK(render_rational(mpq_class(-504) / 1215, true) == "-0.414815");
    CHECK(render_rational(mpq_class(-18) / 1215, true) == "-0.0148148");
    CHECK(render_rational(mpq_class(0), true) == "0");
}

TEST_CASE("table serialization") {
    auto V = parse_braiding_spec(
        R"({"type":"diagonal","q":[["z"]],"field":{"field":"cyclotomic","order":3}})");
    FiltrationTable t = wordlength_filtration(V, 3);
    SUBCASE("tab separated layout: rows are graded indices, columns degrees") {
        CHECK(table_to_tsv(t) == "gr\t0\t1\t2\t3\n"
                                 "0\t1\t1\t1\t\n"
                                 "2\t\t\t\t1\n");
    }
    SUBCASE("json re-parses with the documented keys") {
        auto j = nlohmann::json::parse(table_to_json(t));
        CHECK(j.at("kind") == "wordlen");
        CHECK(j.at("side") == "A");
        CHECK(j.at("entries").size() == 4);
        CHECK(j.at("entries")[3].at("n") == 3);
        CHECK(j.at("entries")[3].at("index") == 2);
        CHECK(j.at("entries")[3].at("gr_dim") == 1);
    }
}

TEST_CASE("report serialization round-trips as json") {
    auto V = parse_braiding_spec(
        R"({"type":"diagonal","q":[["z"]],"field":{"field":"cyclotomic","order":3}})");
    TriGradedDims t = tor_dims(V, AlgebraKind::Shuffle, 3);
    auto jt = nlohmann::json::parse(tor_to_json(t));
    CHECK(jt.at("entries").size() == t.entries.size());

    FiltrationTable table = wordlength_filtration(V, 3);
    SpectralSequencePages ss = spectral_sequence(filtered_bar(V, table, 3));
    auto jp = nlohmann::json::parse(pages_to_json(ss));
    CHECK(jp.at("stabilized_at").get<int>() >= 1);
    CHECK(jp.at("einf").size() == ss.einf.size());

    GroupData G = GroupData::from_permutations({{2, 1, 3}, {1, 3, 2}});
    auto cls = G.conjugacy_class(G.element_by_label("(1 2)"));
    HurwitzReport rep = weight_decomposition(G, cls, 3);
    auto jh = nlohmann::json::parse(hurwitz_to_json(rep));
    CHECK(jh.at("rows").size() == rep.rows.size());
    CHECK(jh.at("rows")[0].contains("frob_weight"));
    CHECK(jh.at("rows")[0].contains("bound"));
    std::string tsv = hurwitz_to_tsv(rep);
    CHECK(tsv.rfind("n\ti\tm\tw\tfrob_weight\tdim\tbound\n", 0) == 0);
}

TEST_CASE("statistics and profile serialization") {
    WeightStatistic ws;
    ws.a = {mpq_class(0), mpq_class(0)};
    ws.a_over_n = {mpq_class(-504) / 1215};
    ws.c_estimate = mpq_class(504) / 1215;
    ws.monotone_ok = true;
    ws.superadditive_ok = true;
    auto j = nlohmann::json::parse(stats_to_json(ws, true));
    CHECK(j.at("a_over_n")[0] == "-0.414815");
    CHECK(j.at("monotone_ok") == true);
    std::string tsv = stats_to_tsv(ws, false);
    CHECK(tsv.find("-56/135") != std::string::npos);

    NicholsProfile p;
    p.finite = true;
    p.max_degree = 2;
    p.total = 3;
    p.dims = {1, 1, 1, 0};
    auto jp = nlohmann::json::parse(profile_to_json(p));
    CHECK(jp.at("dims") == std::vector<long>{1, 1, 1, 0});
    CHECK(profile_to_tsv(p).find("total\t3") != std::string::npos);
}
