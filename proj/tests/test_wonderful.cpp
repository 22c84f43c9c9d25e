#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "gsp/errors.hpp"
#include "gsp/serialize.hpp"
#include "gsp/wonderful.hpp"

using namespace gsp;

TEST_CASE("boundary data") {
    auto a2 = build_weyl("A2");
    auto tpI = boundary_data(*a2, a2->all_nodes());
    CHECK(tpI.y == a2->identity());
    CHECK(tpI.Jp == a2->all_nodes());

    auto a1 = build_weyl("A1");
    auto tp0 = boundary_data(*a1, NodeSet());
    CHECK(tp0.y == a1->longest());
    CHECK(tp0.Jp.empty());

    // J = {1}: y_J is the longest element of W^{{1}} and J' = {1}* = {2}
    auto tp1 = boundary_data(*a2, NodeSet::of({0}));
    CHECK(tp1.y == longest_in_W_upper(*a2, NodeSet::of({0})));
    CHECK(tp1.Jp == NodeSet::of({1}));
}

TEST_CASE("atlas for A1 adjoint") {
    auto a1 = build_weyl("A1");  // torus_rank defaults to |I| = 1
    auto atlas = build_atlas(*a1);
    REQUIRE(atlas.rows.size() == 3);

    // open piece first: J = I, count = |PGL_2| = q^3 - q
    CHECK(atlas.rows[0].J == a1->all_nodes());
    CHECK(atlas.rows[0].quotient_count == CountPolynomial({0, -1, 0, 1}));
    CHECK(atlas.rows[0].dim == 3);

    // boundary pieces: q^2 + q and q + 1
    std::multiset<std::string> counts;
    for (std::size_t i = 1; i < 3; ++i) counts.insert(atlas.rows[i].quotient_count.str());
    CHECK(counts == std::multiset<std::string>{"q^2+q", "q+1"});

    CHECK(atlas.total == CountPolynomial({1, 1, 1, 1}));
    CHECK(atlas.total.degree() == 3);  // dim of the completion of PGL_2
}

TEST_CASE("atlas requires the adjoint convention") {
    auto gl = build_weyl("A1", {}, 2);  // GL_2 torus rank
    CHECK_THROWS_AS(build_atlas(*gl), Error);
}

TEST_CASE("atlas invariants for A2, B2 and the twisted A2") {
    struct Case {
        std::string type;
        std::vector<int> delta;
    };
    for (const auto& c : {Case{"A2", {}}, Case{"B2", {}}, Case{"A2", {1, 0}}, Case{"G2", {}}}) {
        auto W = build_weyl(c.type, c.delta);
        auto atlas = build_atlas(*W);

        int expected_deg = 2 * W->num_positive_roots() + W->rank();
        CHECK(atlas.total.degree() == expected_deg);
        CHECK(atlas.total.leading() == 1);

        // every J appears, covering each piece exactly once
        std::set<std::uint32_t> seen;
        for (const auto& r : atlas.rows) seen.insert(r.J.bits);
        CHECK(seen.size() == subsets_of(W->all_nodes()).size());

        // rows sorted by |J| descending; the open piece leads
        for (std::size_t i = 1; i < atlas.rows.size(); ++i)
            CHECK(atlas.rows[i - 1].J.count() >= atlas.rows[i].J.count());
        CHECK(atlas.rows[0].J == W->all_nodes());
        CHECK(atlas.rows[0].quotient_count == order_poly(*W));

        // positive integer point counts; totals consistent
        for (long long q : {2, 3, 4, 5}) {
            long long total = 0;
            for (const auto& r : atlas.rows) {
                long long v = r.quotient_count.eval(q);
                CHECK(v > 0);
                total += v;
            }
            CHECK(total == atlas.total.eval(q));
        }
        // per-stratum consistency against the independent closed form
        for (NodeSet J : subsets_of(W->all_nodes())) {
            TwistedPair tp = boundary_data(*W, J);
            CHECK(verify_sum(tp).ok);
            CountPolynomial z = poincare(coset_reps(*W, tp.J, Side::Right)) *
                                poincare(coset_reps(*W, tp.Jp, Side::Right)) *
                                levi_order_poly(*W, tp.Jp);
            CountPolynomial stratum;
            for (const auto& r : atlas.rows)
                if (r.J == J) stratum += r.quotient_count;
            CHECK(stratum == z.div_q_minus_1(W->rank() - J.count()));
        }
    }
}

TEST_CASE("cs_index") {
    auto a1 = build_weyl("A1");
    auto atlas = build_atlas(*a1);
    auto idx = cs_index(atlas);
    REQUIRE(idx.size() == 3);
    CHECK(idx[0].J == a1->all_nodes());
    CHECK(idx[0].J_inf == a1->all_nodes());
    CHECK(idx[0].twist == a1->identity());

    auto a2 = build_weyl("A2");
    auto atlas2 = build_atlas(*a2);
    std::size_t total = 0;
    for (NodeSet J : subsets_of(a2->all_nodes()))
        total += enumerate_pieces(boundary_data(*a2, J)).size();
    CHECK(cs_index(atlas2).size() == total);
}

TEST_CASE("serialization snapshots") {
    auto a1 = build_weyl("A1");
    auto atlas = build_atlas(*a1);

    std::string csv = csv_atlas(atlas);
    CHECK(csv ==
          "J,sigma_id,steps,w,J_inf,twist,exponent,count_factored,dim\n"
          "\"{1}\",0,\"({1}|{1}|e)\",\"e\",\"{1}\",\"e\",0,\"q*(q-1)*(q+1)\",3\n"
          "\"{}\",0,\"({}|{}|e)\",\"e\",\"{}\",\"s1\",-1,\"q+1\",1\n"
          "\"{}\",1,\"({}|{}|s1);({}|{}|e)\",\"s1\",\"{}\",\"e\",0,\"q*(q+1)\",2\n");

    Json j = json_atlas(atlas);
    CHECK(j["total"]["factored"] == "q^3+q^2+q+1");
    CHECK(j["total_degree"] == 3);
    CHECK(j["rows"].size() == 3);

    // identical inputs give byte-identical documents
    CHECK(json_atlas(atlas).dump() == j.dump());
    CHECK(csv_atlas(atlas) == csv);
}
