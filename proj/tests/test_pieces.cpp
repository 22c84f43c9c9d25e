#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "gsp/errors.hpp"
#include "gsp/pieces.hpp"

using namespace gsp;

namespace {

std::vector<int> w_lengths(const std::vector<PieceDescriptor>& pieces) {
    std::vector<int> out;
    for (const auto& p : pieces) out.push_back(p.w.length());
    std::sort(out.begin(), out.end());
    return out;
}

// Sweep configurations used by several properties below.
struct Sweep {
    std::string type;
    std::vector<int> delta;
};
const std::vector<Sweep> kSweeps = {
    {"A1", {}}, {"A2", {}}, {"A3", {}}, {"B2", {}}, {"B3", {}}, {"G2", {}},
    {"A2", {1, 0}}, {"A3", {2, 1, 0}},
};

}  // namespace

TEST_CASE("twisted pair validation") {
    auto a2 = build_weyl("A2");
    CHECK_NOTHROW(make_twisted_pair(*a2, NodeSet::of({1}), a2->identity()));
    // y = s1 with J = {1}: Ad(y)J = J is simple but y is not minimal
    CHECK_THROWS_AS(make_twisted_pair(*a2, NodeSet::of({0}), a2->simple(0)), InvalidTwistedPair);
    // J = {1}, y = s2: Ad(s2){1} is not simple
    CHECK_THROWS_AS(make_twisted_pair(*a2, NodeSet::of({0}), a2->simple(1)), InvalidTwistedPair);
}

TEST_CASE("valid_twists matches a direct filter") {
    for (const auto& cfg : kSweeps) {
        auto W = build_weyl(cfg.type, cfg.delta);
        for (NodeSet J : subsets_of(W->all_nodes())) {
            auto ys = valid_twists(*W, J);
            std::size_t direct = 0;
            for (int i = 0; i < W->size(); ++i) {
                WeylElement y = W->element(i);
                AdImage im = ad_subset(y, W->delta(J));
                if (im.all_simple && min_double_coset(im.subset, y, W->delta(J)) == y) ++direct;
            }
            CHECK(ys.size() == direct);
            for (const auto& y : ys) CHECK_NOTHROW(make_twisted_pair(*W, J, y));
        }
    }
}

TEST_CASE("single descent step") {
    auto a2 = build_weyl("A2");
    WeylElement s1 = a2->simple(0), s2 = a2->simple(1);

    // whole-group pair: u = 1 is a fixed point
    auto tpI = make_twisted_pair(*a2, a2->all_nodes(), a2->identity());
    auto st = initial_state(tpI);
    auto choices = admissible_choices(st);
    REQUIRE(choices.size() == 1);
    CHECK(choices[0] == a2->identity());
    auto next = step(st, a2->identity());
    CHECK(next.J == st.J);
    CHECK(next.Jp == st.Jp);
    CHECK(next.y == st.y);

    // J = {2}, y = e, u0 = s1 empties the subset
    auto tp = make_twisted_pair(*a2, NodeSet::of({1}), a2->identity());
    auto st0 = initial_state(tp);
    auto st1 = step(st0, s1);
    CHECK(st1.J.empty());
    CHECK(st1.Jp.empty());
    CHECK(st1.y == s1);
    CHECK(st1.prevJ == NodeSet::of({1}));

    // at that state the admissible choices are W cap W_{{2}} = {1, s2}
    auto c1 = admissible_choices(st1);
    REQUIRE(c1.size() == 2);
    CHECK(c1[0] == a2->identity());
    CHECK(c1[1] == s2);

    CHECK_THROWS_AS(step(st0, s2), InadmissibleChoice);

    // empty subset stays empty, y accumulates
    auto tp0 = make_twisted_pair(*a2, NodeSet(), s2 * s1);
    auto e0 = initial_state(tp0);
    for (const auto& u : admissible_choices(e0)) {
        auto n0 = step(e0, u);
        CHECK(n0.J.empty());
        CHECK(n0.Jp.empty());
        CHECK(n0.y == u.inverse() * (s2 * s1));
    }

    // prevJ empty forces u = 1
    auto a1 = build_weyl("A1");
    auto tp1 = make_twisted_pair(*a1, NodeSet(), a1->simple(0));
    auto s = step(initial_state(tp1), a1->simple(0));
    auto cs = admissible_choices(s);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0] == a1->identity());
}

TEST_CASE("enumerate: hand-checked small cases") {
    auto a1 = build_weyl("A1");
    auto p1 = enumerate_pieces(make_twisted_pair(*a1, NodeSet(), a1->identity()));
    CHECK(w_lengths(p1) == std::vector<int>{0, 1});

    auto a2 = build_weyl("A2");
    auto p2 = enumerate_pieces(make_twisted_pair(*a2, NodeSet::of({1}), a2->identity()));
    REQUIRE(p2.size() == 3);
    CHECK(w_lengths(p2) == std::vector<int>{0, 1, 2});
    std::set<int> ws;
    for (const auto& p : p2) ws.insert(p.w.index());
    WeylElement s1 = a2->simple(0), s2 = a2->simple(1);
    CHECK(ws == std::set<int>{a2->identity().index(), s1.index(), (s1 * s2).index()});

    auto pI = enumerate_pieces(make_twisted_pair(*a2, a2->all_nodes(), a2->identity()));
    REQUIRE(pI.size() == 1);
    CHECK(pI[0].w == a2->identity());
    CHECK(pI[0].count == order_poly(*a2));
    CHECK(pI[0].exponent == 0);
}

TEST_CASE("descriptor structure invariants") {
    for (const auto& cfg : kSweeps) {
        auto W = build_weyl(cfg.type, cfg.delta);
        for (NodeSet J : subsets_of(W->all_nodes())) {
            for (const auto& y : valid_twists(*W, J)) {
                auto tp = make_twisted_pair(*W, J, y);
                for (const auto& p : enumerate_pieces(tp)) {
                    REQUIRE(!p.steps.empty());
                    const auto& tail = p.steps.back();
                    CHECK(tail.u.is_identity());
                    CHECK(tail.J == tail.Jp);
                    CHECK(tail.J == p.J_inf);

                    // u_0 minimal for (Jp, J); u_n in W_{J_{n-1}} for n >= 1
                    CHECK(min_double_coset(p.steps[0].Jp, p.steps[0].u, p.steps[0].J) ==
                          p.steps[0].u);
                    for (std::size_t n = 1; n < p.steps.size(); ++n) {
                        CHECK(p.steps[n].u.in_parabolic(p.steps[n - 1].J));
                        CHECK(min_double_coset(p.steps[n].Jp, p.steps[n].u, p.steps[n].J) ==
                              p.steps[n].u);
                        CHECK(p.steps[n].J.subset_of(p.steps[n - 1].J));
                        CHECK(p.steps[n].Jp.subset_of(p.steps[n - 1].J));
                    }

                    // lengths add along the product: l(w) = sum l(u_n)
                    int total = 0;
                    for (const auto& s : p.steps) total += s.u.length();
                    CHECK(p.w.length() == total);

                    // per-step fibre dimensions are non-negative and
                    // telescope to l(w) + nu_J - nu_{J_inf}
                    int telescoped = 0;
                    for (std::size_t n = 0; n < p.steps.size(); ++n) {
                        NodeSet next = n + 1 < p.steps.size() ? p.steps[n + 1].J : p.J_inf;
                        int fibre = p.steps[n].u.length() + W->nu(p.steps[n].J) - W->nu(next);
                        CHECK(fibre >= 0);
                        telescoped += fibre;
                    }
                    CHECK(telescoped == p.w.length() + W->nu(p.J) - W->nu(p.J_inf));
                    CHECK(telescoped >= 0);

                    // the stabilized twist normalizes the stabilized type
                    AdImage tw = ad_subset(p.twist, W->delta(p.J_inf));
                    CHECK(tw.all_simple);
                    CHECK(tw.subset == p.J_inf);

                    CHECK(p.exponent == p.w.length() + W->nu(p.J) - W->nu(W->all_nodes()));
                    CHECK(p.dim == p.count.degree());
                }
            }
        }
    }
}

TEST_CASE("orbit data") {
    auto a2 = build_weyl("A2");
    WeylElement s1 = a2->simple(0), s2 = a2->simple(1);

    auto pI = enumerate_pieces(make_twisted_pair(*a2, a2->all_nodes(), a2->identity()));
    CHECK(orbit_data(pI[0]).J_inf == a2->all_nodes());
    CHECK(orbit_data(pI[0]).twist == a2->identity());

    auto p2 = enumerate_pieces(make_twisted_pair(*a2, NodeSet::of({1}), a2->identity()));
    for (const auto& p : p2) {
        if (p.w == s1 * s2) {
            CHECK(orbit_data(p).J_inf.empty());
            CHECK(orbit_data(p).twist == s2 * s1);
        }
    }

    // J empty: sigma with u_0 = w stabilizes to twist w^-1 y
    auto tp0 = make_twisted_pair(*a2, NodeSet(), s2);
    for (const auto& p : enumerate_pieces(tp0)) {
        CHECK(p.J_inf.empty());
        CHECK(p.twist == p.w.inverse() * s2);
    }
}

TEST_CASE("piece_count with torus quotient") {
    auto a1 = build_weyl("A1", {}, 1);  // adjoint PGL2 convention
    auto tp = make_twisted_pair(*a1, NodeSet(), a1->longest());
    auto pieces = enumerate_pieces(tp);
    REQUIRE(pieces.size() == 2);
    for (const auto& p : pieces) {
        CountPolynomial c = piece_count(p, true);
        if (p.w.is_identity())
            CHECK(c == CountPolynomial({1, 1}));  // q + 1
        else
            CHECK(c == CountPolynomial({0, 1, 1}));  // q^2 + q
    }
}

TEST_CASE("verify_sum examples") {
    auto a1 = build_weyl("A1");
    auto c1 = verify_sum(make_twisted_pair(*a1, NodeSet(), a1->identity()));
    CHECK(c1.ok);
    CHECK(c1.lhs == CountPolynomial({1, 1}));

    auto a2 = build_weyl("A2");
    auto c2 = verify_sum(make_twisted_pair(*a2, NodeSet::of({1}), a2->identity()));
    CHECK(c2.ok);
    CHECK(c2.lhs == CountPolynomial({1, 1, 1}));

    auto cI = verify_sum(make_twisted_pair(*a2, a2->all_nodes(), a2->identity()));
    CHECK(cI.ok);
    CHECK(cI.lhs == CountPolynomial::one());
}

TEST_CASE("poincare identity across the full sweep") {
    for (const auto& cfg : kSweeps) {
        auto W = build_weyl(cfg.type, cfg.delta);
        for (NodeSet J : subsets_of(W->all_nodes()))
            for (const auto& y : valid_twists(*W, J)) {
                auto check = verify_sum(make_twisted_pair(*W, J, y));
                CHECK(check.ok);
            }
    }
}

TEST_CASE("uncancelled point-count identity") {
    // sum_sigma #Z^sigma = [G:P_J] [G:P_J'] #L_J' as exact polynomials
    for (const auto& cfg : kSweeps) {
        auto W = build_weyl(cfg.type, cfg.delta);
        for (NodeSet J : subsets_of(W->all_nodes()))
            for (const auto& y : valid_twists(*W, J)) {
                auto tp = make_twisted_pair(*W, J, y);
                CountPolynomial lhs;
                for (const auto& p : enumerate_pieces(tp)) lhs += piece_count(p, false);
                CountPolynomial rhs = poincare(coset_reps(*W, tp.J, Side::Right)) *
                                      poincare(coset_reps(*W, tp.Jp, Side::Right)) *
                                      levi_order_poly(*W, tp.Jp);
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("product types work end to end") {
    auto W = build_weyl("A1xA1");
    CHECK(W->size() == 4);
    for (NodeSet J : subsets_of(W->all_nodes()))
        for (const auto& y : valid_twists(*W, J)) {
            auto tp = make_twisted_pair(*W, J, y);
            CHECK(verify_sum(tp).ok);
        }
}

TEST_CASE("termination within the guard at rank 4") {
    // every valid pair of every rank-4 type stabilizes inside the guard
    for (const std::string& type : {std::string("A4"), std::string("B4"), std::string("C4"),
                                    std::string("D4"), std::string("F4")}) {
        auto W = build_weyl(type);
        int guard = 4 * W->rank() + 4;
        long long pieces_total = 0;
        for (NodeSet J : subsets_of(W->all_nodes()))
            for (const auto& y : valid_twists(*W, J)) {
                auto pieces = enumerate_pieces(make_twisted_pair(*W, J, y));
                pieces_total += static_cast<long long>(pieces.size());
                for (const auto& p : pieces)
                    REQUIRE(static_cast<int>(p.steps.size()) <= guard + 1);
            }
        CHECK(pieces_total > 0);
    }
}

TEST_CASE("injectivity of sigma -> w and deterministic order") {
    for (const auto& cfg : kSweeps) {
        auto W = build_weyl(cfg.type, cfg.delta);
        for (NodeSet J : subsets_of(W->all_nodes()))
            for (const auto& y : valid_twists(*W, J)) {
                auto tp = make_twisted_pair(*W, J, y);
                auto pieces = enumerate_pieces(tp);
                std::set<int> ws;
                for (const auto& p : pieces) ws.insert(p.w.index());
                CHECK(ws.size() == pieces.size());

                // at these ranks the image is exactly the set of minimal
                // left coset representatives of W_{J'} \ W
                std::set<int> reps;
                for (const auto& r : coset_reps(*W, tp.Jp, Side::Left)) reps.insert(r.index());
                CHECK(ws == reps);

                // repeated enumeration gives the identical sequence
                auto again = enumerate_pieces(tp);
                REQUIRE(again.size() == pieces.size());
                for (std::size_t i = 0; i < pieces.size(); ++i) {
                    CHECK(again[i].w == pieces[i].w);
                    CHECK(again[i].steps.size() == pieces[i].steps.size());
                }
            }
    }
}
