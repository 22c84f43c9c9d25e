#include "gsp/pieces.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "gsp/errors.hpp"

namespace gsp {

TwistedPair make_twisted_pair(const WeylDatum& d, NodeSet J, const WeylElement& y) {
    if (y.owner_ptr() != &d) throw MixedDatum("y belongs to a different Weyl datum");
    if (!J.subset_of(d.all_nodes())) throw InvalidTwistedPair("J is not a subset of the node set");
    NodeSet dJ = d.delta(J);
    AdImage im = ad_subset(y, dJ);
    if (!im.all_simple)
        throw InvalidTwistedPair("Ad(y)delta(J) is not contained in the simple reflections");
    if (min_double_coset(im.subset, y, dJ) != y)
        throw InvalidTwistedPair("y is not minimal in W_J' \\ W / W_delta(J)");
    return {&d, J, y, im.subset};
}

std::vector<WeylElement> valid_twists(const WeylDatum& d, NodeSet J) {
    std::vector<WeylElement> out;
    NodeSet dJ = d.delta(J);
    for (int i = 0; i < d.size(); ++i) {
        WeylElement y = d.element(i);
        AdImage im = ad_subset(y, dJ);
        if (!im.all_simple) continue;
        if ((y.left_descents() & im.subset).empty() && (y.right_descents() & dJ).empty())
            out.push_back(y);
    }
    return out;
}

PieceState initial_state(const TwistedPair& tp) {
    return {0, tp.J, tp.Jp, tp.y, tp.datum->all_nodes()};
}

std::vector<WeylElement> admissible_choices(const PieceState& state) {
    const WeylDatum& d = state.y.owner();
    std::vector<WeylElement> out;
    for (const auto& u : double_reps(d, state.Jp, state.J)) {
        if (state.n >= 1 && !u.in_parabolic(state.prevJ)) continue;
        out.push_back(u);
    }
    return out;
}

namespace {

// The recursion itself; callers are responsible for admissibility of u.
PieceState apply_step(const PieceState& state, const WeylElement& u) {
    const WeylDatum& d = state.y.owner();
    WeylElement y_next = u.inverse() * state.y;
    NodeSet J_next = state.J & d.delta_inv(ad_subset(state.y.inverse() * u, state.J).subset);
    NodeSet Jp_next = state.J & ad_subset(y_next, d.delta(state.J)).subset;

    AdImage im = ad_subset(y_next, d.delta(J_next));
    if (!im.all_simple || im.subset != Jp_next)
        throw InvariantBreach("descent step broke Ad(y)delta(J) = J'");
    if (min_double_coset(im.subset, y_next, d.delta(J_next)) != y_next)
        throw InvariantBreach("descent step broke minimality of y");

    return {state.n + 1, J_next, Jp_next, y_next, state.J};
}

}  // namespace

PieceState step(const PieceState& state, const WeylElement& u) {
    auto choices = admissible_choices(state);
    if (std::find(choices.begin(), choices.end(), u) == choices.end())
        throw InadmissibleChoice("u is not an admissible choice at this state");
    return apply_step(state, u);
}

namespace {

bool same_state(const PieceState& a, const PieceState& b) {
    return a.J == b.J && a.Jp == b.Jp && a.y == b.y;
}

// Admissible sets depend only on (Jp, J, prevJ-or-root); cache them per
// enumeration so deep sweeps over large groups stay linear in the output.
struct ChoiceCache {
    std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, std::vector<WeylElement>>
        entries;

    const std::vector<WeylElement>& get(const PieceState& state) {
        std::uint32_t prev = state.n >= 1 ? state.prevJ.bits : ~0u;
        auto key = std::make_tuple(state.Jp.bits, state.J.bits, prev);
        auto it = entries.find(key);
        if (it == entries.end()) it = entries.emplace(key, admissible_choices(state)).first;
        return it->second;
    }
};

void finalize_descriptor(const TwistedPair& tp, const std::vector<PieceStep>& steps,
                         const PieceState& tail, std::vector<PieceDescriptor>& out) {
    const WeylDatum& d = *tp.datum;
    PieceDescriptor sigma;
    sigma.datum = tp.datum;
    sigma.J = tp.J;
    sigma.y = tp.y;
    sigma.Jp = tp.Jp;
    sigma.steps = steps;
    WeylElement w = d.identity();
    for (const auto& s : sigma.steps) w = w * s.u;
    sigma.w = w;
    sigma.J_inf = tail.J;
    sigma.twist = tail.y;
    sigma.exponent = w.length() + d.nu(tp.J) - d.num_positive_roots();
    sigma.count = order_poly(d).shifted(sigma.exponent);
    sigma.dim = sigma.count.degree();
    out.push_back(std::move(sigma));
}

void dfs(const TwistedPair& tp, const PieceState& state, std::vector<PieceStep>& trail,
         std::vector<PieceDescriptor>& out, int guard, ChoiceCache& cache) {
    if (state.n > guard)
        throw NoStabilization("piece recursion exceeded its stabilization guard");
    for (const auto& u : cache.get(state)) {
        PieceState next = apply_step(state, u);
        trail.push_back({state.J, state.Jp, u});
        if (u.is_identity() && same_state(next, state)) {
            finalize_descriptor(tp, trail, next, out);
        } else {
            dfs(tp, next, trail, out, guard, cache);
        }
        trail.pop_back();
    }
}

}  // namespace

std::vector<PieceDescriptor> enumerate_pieces(const TwistedPair& tp) {
    std::vector<PieceDescriptor> out;
    std::vector<PieceStep> trail;
    int guard = 4 * tp.datum->rank() + 4;
    ChoiceCache cache;
    dfs(tp, initial_state(tp), trail, out, guard, cache);
    return out;
}

OrbitData orbit_data(const PieceDescriptor& sigma) { return {sigma.J_inf, sigma.twist}; }

CountPolynomial piece_count(const PieceDescriptor& sigma, bool quotient_by_delta) {
    const WeylDatum& d = *sigma.datum;
    CountPolynomial c = order_poly(d).shifted(sigma.exponent);
    if (quotient_by_delta) {
        int delta_rank = d.rank() - sigma.J.count();
        c = c.div_q_minus_1(delta_rank);  // throws NonDivisible on a rank-convention bug
    }
    return c;
}

SumCheck verify_sum(const TwistedPair& tp) {
    SumCheck check;
    CountPolynomial lhs;
    for (const auto& sigma : enumerate_pieces(tp))
        lhs += CountPolynomial::q_pow(sigma.w.length());
    check.lhs = lhs;
    check.rhs = poincare(coset_reps(*tp.datum, tp.Jp, Side::Right));
    check.ok = (check.lhs == check.rhs);
    return check;
}

}  // namespace gsp
