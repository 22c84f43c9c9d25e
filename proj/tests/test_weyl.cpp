#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "gsp/errors.hpp"
#include "gsp/weyl.hpp"

using namespace gsp;

namespace {

// Brute-force expansion of W_Jp * x * W_J, independent of the descent-based
// implementation. Returns all coset members.
std::vector<WeylElement> oracle_double_coset(const WeylDatum& d, NodeSet Jp, const WeylElement& x,
                                             NodeSet J) {
    std::vector<WeylElement> left, right, out;
    for (int i = 0; i < d.size(); ++i) {
        if (d.supp(i).subset_of(Jp)) left.push_back(d.element(i));
        if (d.supp(i).subset_of(J)) right.push_back(d.element(i));
    }
    std::set<int> seen;
    for (const auto& a : left)
        for (const auto& b : right) {
            WeylElement w = a * x * b;
            if (seen.insert(w.index()).second) out.push_back(w);
        }
    return out;
}

WeylElement oracle_min_of_coset(const WeylDatum& d, NodeSet Jp, const WeylElement& x, NodeSet J) {
    auto coset = oracle_double_coset(d, Jp, x, J);
    auto it = std::min_element(coset.begin(), coset.end(), [](const auto& a, const auto& b) {
        return a.length() < b.length();
    });
    // the minimum must be unique
    int count = 0;
    for (const auto& w : coset)
        if (w.length() == it->length()) ++count;
    REQUIRE(count == 1);
    return *it;
}

// Classical order formulas used as independent oracles.
long long gl_order(int n, long long q) {
    long long o = 1, qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    long long qi = 1;
    for (int i = 0; i < n; ++i) {
        o *= (qn - qi);
        qi *= q;
    }
    return o;
}

long long so_odd_order(int n, long long q) {  // |SO_{2n+1}(F_q)| = |Sp_{2n}(F_q)|
    long long o = 1;
    long long qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;  // q^n
    long long qpow = 1;
    for (int i = 1; i <= n; ++i) {
        qpow *= q * q;  // q^{2i}
        o *= (qpow - 1);
    }
    long long qsq = 1;
    for (int i = 0; i < n * n; ++i) qsq *= q;
    return o * qsq;
}

}  // namespace

TEST_CASE("rank-1 and rank-2 data have the expected size") {
    auto a1 = build_weyl("A1");
    CHECK(a1->size() == 2);
    CHECK(a1->num_positive_roots() == 1);

    auto a2 = build_weyl("A2");
    CHECK(a2->size() == 6);
    CHECK(a2->num_positive_roots() == 3);

    auto b2 = build_weyl("B2");
    CHECK(b2->size() == 8);
    CHECK(b2->num_positive_roots() == 4);
    CHECK(b2->longest().length() == 4);

    auto g2 = build_weyl("G2");
    CHECK(g2->size() == 12);
    CHECK(g2->num_positive_roots() == 6);

    auto a1a1 = build_weyl("A1xA1");
    CHECK(a1a1->size() == 4);
    CHECK(a1a1->num_positive_roots() == 2);
}

TEST_CASE("bigger types enumerate correctly") {
    CHECK(build_weyl("A3")->size() == 24);
    CHECK(build_weyl("B3")->size() == 48);
    CHECK(build_weyl("C3")->size() == 48);
    CHECK(build_weyl("D4")->size() == 192);
    CHECK(build_weyl("D4")->num_positive_roots() == 12);
    CHECK(build_weyl("F4")->size() == 1152);
    CHECK(build_weyl("F4")->num_positive_roots() == 24);
}

TEST_CASE("diagram automorphism validation") {
    CHECK_NOTHROW(build_weyl("A2", {1, 0}));
    CHECK_NOTHROW(build_weyl("A3", {2, 1, 0}));
    CHECK_THROWS_AS(build_weyl("B2", {1, 0}), InvalidAutomorphism);
    CHECK_THROWS_AS(build_weyl("A2", {0, 0}), InvalidAutomorphism);

    // explicit matrices: the B2 flip fails because the edge is directed
    Eigen::MatrixXi b2(2, 2);
    b2 << 1, 4, 4, 1;
    CHECK_NOTHROW(build_weyl_from_matrix(b2));
    CHECK_THROWS_AS(build_weyl_from_matrix(b2, {1, 0}), InvalidAutomorphism);
}

TEST_CASE("non-finite and malformed matrices are rejected") {
    Eigen::MatrixXi affine(3, 3);  // triangle of 3s
    affine << 1, 3, 3, 3, 1, 3, 3, 3, 1;
    CHECK_THROWS_AS(build_weyl_from_matrix(affine), NonFiniteType);

    Eigen::MatrixXi pentagon(2, 2);
    pentagon << 1, 5, 5, 1;
    CHECK_THROWS_AS(build_weyl_from_matrix(pentagon), NonFiniteType);

    CHECK_THROWS_AS(build_weyl("Q7"), NonFiniteType);
}

TEST_CASE("group laws and lengths") {
    auto a1 = build_weyl("A1");
    CHECK(a1->simple(0) * a1->simple(0) == a1->identity());

    auto a2 = build_weyl("A2");
    WeylElement s1 = a2->simple(0), s2 = a2->simple(1);
    CHECK(s1 * s2 * s1 == s2 * s1 * s2);  // braid relation
    CHECK((s1 * s2 * s1).length() == 3);
    CHECK(a2->longest() == s1 * s2 * s1);

    auto b3 = build_weyl("B3");
    for (int i = 0; i < b3->size(); ++i) {
        WeylElement w = b3->element(i);
        CHECK(w.length() == w.inverse().length());
        for (int s = 0; s < b3->rank(); ++s) {
            int diff = (w * b3->simple(s)).length() - w.length();
            CHECK((diff == 1 || diff == -1));
        }
    }
}

TEST_CASE("mixed data are rejected") {
    auto a = build_weyl("A2");
    auto b = build_weyl("A2");
    CHECK_THROWS_AS(a->simple(0) * b->simple(0), MixedDatum);
}

TEST_CASE("min_double_coset") {
    auto a2 = build_weyl("A2");
    WeylElement s1 = a2->simple(0), s2 = a2->simple(1);

    CHECK(min_double_coset(NodeSet::of({1}), a2->identity(), NodeSet::of({0})) == a2->identity());
    CHECK(min_double_coset(NodeSet::of({1}), s2 * s1, NodeSet::of({1})) == s1);
    for (int i = 0; i < a2->size(); ++i)
        CHECK(min_double_coset(NodeSet(), a2->element(i), NodeSet()) == a2->element(i));

    // against the brute-force oracle, for every subset pair and element
    for (auto W : {build_weyl("A2"), build_weyl("B2"), build_weyl("A3"), build_weyl("G2")}) {
        for (NodeSet Jp : subsets_of(W->all_nodes()))
            for (NodeSet J : subsets_of(W->all_nodes()))
                for (int i = 0; i < W->size(); ++i) {
                    WeylElement x = W->element(i);
                    WeylElement m = min_double_coset(Jp, x, J);
                    CHECK(m == oracle_min_of_coset(*W, Jp, x, J));
                    auto reps = double_reps(*W, Jp, J);
                    CHECK(std::find(reps.begin(), reps.end(), m) != reps.end());
                    // x lies in W_Jp * m * W_J
                    auto coset = oracle_double_coset(*W, Jp, m, J);
                    CHECK(std::find(coset.begin(), coset.end(), x) != coset.end());
                }
    }
}

TEST_CASE("coset representatives") {
    auto a2 = build_weyl("A2");
    auto all = coset_reps(*a2, a2->all_nodes(), Side::Right);
    REQUIRE(all.size() == 1);
    CHECK(all[0] == a2->identity());

    auto reps = coset_reps(*a2, NodeSet::of({0}), Side::Right);
    REQUIRE(reps.size() == 3);
    std::multiset<int> lens;
    for (const auto& w : reps) lens.insert(w.length());
    CHECK(lens == std::multiset<int>{0, 1, 2});

    auto dreps = double_reps(*a2, NodeSet::of({1}), NodeSet::of({1}));
    REQUIRE(dreps.size() == 2);
    CHECK(dreps[0] == a2->identity());
    CHECK(dreps[1] == a2->simple(0));

    // |W^J| = |W| / |W_J| for every J, several types
    for (auto W : {build_weyl("A3"), build_weyl("B3"), build_weyl("G2")}) {
        for (NodeSet J : subsets_of(W->all_nodes())) {
            std::size_t wj = 0;
            for (int i = 0; i < W->size(); ++i)
                if (W->supp(i).subset_of(J)) ++wj;
            CHECK(coset_reps(*W, J, Side::Right).size() * wj == static_cast<std::size_t>(W->size()));
            CHECK(coset_reps(*W, J, Side::Left).size() * wj == static_cast<std::size_t>(W->size()));
        }
    }
}

TEST_CASE("ad_subset") {
    auto a2 = build_weyl("A2");
    NodeSet K = NodeSet::of({0, 1});
    auto im = ad_subset(a2->identity(), K);
    CHECK(im.subset == K);
    CHECK(im.all_simple);

    im = ad_subset(a2->simple(0), NodeSet::of({0}));
    CHECK(im.subset == NodeSet::of({0}));
    CHECK(im.all_simple);

    im = ad_subset(a2->simple(0), NodeSet::of({1}));
    CHECK(im.subset.empty());
    CHECK_FALSE(im.all_simple);

    // Ad(w0)K = K* with all conjugates simple; star is an involution
    for (auto W : {build_weyl("A2"), build_weyl("A3"), build_weyl("B3"), build_weyl("G2")}) {
        for (NodeSet K2 : subsets_of(W->all_nodes())) {
            auto image = ad_subset(W->longest(), K2);
            CHECK(image.all_simple);
            CHECK(image.subset == star(*W, K2));
            CHECK(star(*W, star(*W, K2)) == K2);
        }
    }
}

TEST_CASE("star examples") {
    auto a1 = build_weyl("A1");
    CHECK(star(*a1, NodeSet::of({0})) == NodeSet::of({0}));

    auto a2 = build_weyl("A2");
    CHECK(star(*a2, NodeSet::of({0})) == NodeSet::of({1}));

    auto b2 = build_weyl("B2");
    CHECK(star(*b2, NodeSet::of({0})) == NodeSet::of({0}));
    CHECK(star(*b2, NodeSet::of({1})) == NodeSet::of({1}));
}

TEST_CASE("nu") {
    auto a2 = build_weyl("A2");
    CHECK(a2->nu(NodeSet()) == 0);
    CHECK(a2->nu(a2->all_nodes()) == 3);

    auto b2 = build_weyl("B2");
    CHECK(b2->nu(NodeSet::of({0})) == 1);
    CHECK(b2->nu(b2->all_nodes()) == 4);
}

TEST_CASE("longest_in_W_upper") {
    auto a2 = build_weyl("A2");
    CHECK(longest_in_W_upper(*a2, a2->all_nodes()) == a2->identity());
    CHECK(longest_in_W_upper(*a2, NodeSet()) == a2->longest());

    // the length-2 element of W^{{1}}, found by enumerating the reps
    auto reps = coset_reps(*a2, NodeSet::of({0}), Side::Right);
    auto longest = *std::max_element(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
        return a.length() < b.length();
    });
    CHECK(longest_in_W_upper(*a2, NodeSet::of({0})) == longest);
    CHECK(longest.length() == 2);
}

TEST_CASE("poincare and order polynomials") {
    auto a1 = build_weyl("A1", {}, 1);
    CHECK(poincare(coset_reps(*a1, a1->all_nodes(), Side::Right)) == CountPolynomial::one());
    CHECK(order_poly(*a1) == CountPolynomial({0, -1, 0, 1}));  // q^3 - q = |PGL2|

    auto a2gl = build_weyl("A2", {}, 3);
    for (long long q : {2, 3, 4, 5}) CHECK(order_poly(*a2gl).eval(q) == gl_order(3, q));

    for (int n : {1, 2, 3}) {
        auto an = build_weyl("A" + std::to_string(n), {}, n + 1);
        for (long long q : {2, 3, 4, 5}) CHECK(order_poly(*an).eval(q) == gl_order(n + 1, q));
    }
    for (int n : {2, 3}) {
        auto bn = build_weyl("B" + std::to_string(n), {}, n);
        auto cn = build_weyl("C" + std::to_string(n), {}, n);
        for (long long q : {2, 3, 4, 5}) {
            CHECK(order_poly(*bn).eval(q) == so_odd_order(n, q));
            CHECK(order_poly(*cn).eval(q) == so_odd_order(n, q));
        }
    }
}

TEST_CASE("poincare factorization") {
    for (auto W : {build_weyl("A3"), build_weyl("B3"), build_weyl("G2")}) {
        CountPolynomial pw = poincare_parabolic(*W, W->all_nodes());
        for (NodeSet J : subsets_of(W->all_nodes())) {
            CountPolynomial lhs = poincare(coset_reps(*W, J, Side::Right)) * poincare_parabolic(*W, J);
            CHECK(lhs == pw);
        }
    }
}

TEST_CASE("unipotent_codim") {
    auto a2 = build_weyl("A2");
    NodeSet I = a2->all_nodes();
    CHECK(unipotent_codim(*a2, I, a2->identity(), I) == 0);
    for (int i = 0; i < a2->size(); ++i)
        CHECK(unipotent_codim(*a2, NodeSet(), a2->element(i), NodeSet()) == a2->element(i).length());
    CHECK(unipotent_codim(*a2, NodeSet::of({1}), a2->simple(0), NodeSet::of({1})) == 2);
    CHECK_THROWS_AS(unipotent_codim(*a2, NodeSet::of({0}), a2->simple(0), NodeSet()), NotMinimalRep);
}

TEST_CASE("words and element order are canonical") {
    auto b2 = build_weyl("B2");
    std::set<std::vector<int>> words;
    for (int i = 0; i < b2->size(); ++i) {
        WeylElement w = b2->element(i);
        CHECK(b2->from_word(w.word()) == w);
        words.insert(w.word());
        if (i > 0) {
            WeylElement prev = b2->element(i - 1);
            bool ordered = prev.length() < w.length() ||
                           (prev.length() == w.length() && prev.word() < w.word());
            CHECK(ordered);
        }
    }
    CHECK(words.size() == static_cast<std::size_t>(b2->size()));
}

TEST_CASE("count polynomial arithmetic") {
    CountPolynomial p({0, -1, 0, 1});  // q^3 - q
    auto f = p.factored();
    CHECK(f.a == 1);
    CHECK(f.b == 1);
    CHECK(f.rest == CountPolynomial({1, 1}));
    CHECK(p.factored_str() == "q*(q-1)*(q+1)");
    CHECK(p.str() == "q^3-q");
    CHECK(p.eval(3) == 24);

    CHECK(p.shifted(-1) == CountPolynomial({-1, 0, 1}));
    CHECK_THROWS_AS(p.shifted(-2), NonDivisible);
    CHECK(p.div_q_minus_1(1) == CountPolynomial({0, 1, 1}));
    CHECK_THROWS_AS(CountPolynomial({1, 1}).div_q_minus_1(1), NonDivisible);
}
