#pragma once

#include <vector>

#include "gsp/count_polynomial.hpp"
#include "gsp/weyl.hpp"

namespace gsp {

// A pair (J, y) with Ad(y)delta(J) = J' contained in the simple reflections
// and y minimal in W_J' \ W / W_{delta(J)}. This is the combinatorial datum
// behind the variety Z_{J,y,delta} whose G-stable pieces are enumerated
// below.
struct TwistedPair {
    const WeylDatum* datum = nullptr;
    NodeSet J;
    WeylElement y;
    NodeSet Jp;  // derived: Ad(y) delta(J)
};

// Validates the twisted-pair conditions; throws InvalidTwistedPair.
TwistedPair make_twisted_pair(const WeylDatum& d, NodeSet J, const WeylElement& y);

// All y making (J, y) a valid twisted pair, in canonical element order.
std::vector<WeylElement> valid_twists(const WeylDatum& d, NodeSet J);

// State of the descent recursion after n steps.
struct PieceState {
    int n = 0;
    NodeSet J, Jp;
    WeylElement y;
    NodeSet prevJ;  // J_{n-1}; the full node set at n = 0
};

PieceState initial_state(const TwistedPair& tp);

// Choices of u_n at this state: all of ^{Jp}W^{J}, intersected with
// W_{prevJ} for n >= 1. Canonically ordered.
std::vector<WeylElement> admissible_choices(const PieceState& state);

// One step of the descent: J_{n+1} = J_n cap delta^{-1}(Ad(y_n^{-1} u) J_n),
// Jp_{n+1} = J_n cap Ad(u^{-1} y_n) delta(J_n), y_{n+1} = u^{-1} y_n, with
// both intersections taken inside the simple reflections. Throws
// InadmissibleChoice if u is not admissible and InvariantBreach if the
// resulting state violates Ad(y)delta(J) = Jp.
PieceState step(const PieceState& state, const WeylElement& u);

struct PieceStep {
    NodeSet J, Jp;
    WeylElement u;
    friend bool operator==(const PieceStep& a, const PieceStep& b) {
        return a.J == b.J && a.Jp == b.Jp && a.u == b.u;
    }
};

// A stabilized descent sequence together with its derived invariants.
struct PieceDescriptor {
    const WeylDatum* datum = nullptr;
    NodeSet J;
    WeylElement y;
    NodeSet Jp;
    std::vector<PieceStep> steps;  // n = 0..r, with u_r = 1 and J_r = Jp_r
    WeylElement w;                 // u_0 u_1 ... u_r
    NodeSet J_inf;                 // J_r
    WeylElement twist;             // y_r
    int exponent = 0;              // l(w) + nu_J - nu_I (may be negative)
    CountPolynomial count;         // order_poly * q^exponent
    int dim = 0;                   // degree of count
};

// Depth-first enumeration of all piece descriptors of the pair, ordered
// lexicographically by the sequence of u_n in canonical element order.
// Throws NoStabilization if a branch exceeds the 4|I|+4 guard (which would
// falsify the termination argument and must never happen).
std::vector<PieceDescriptor> enumerate_pieces(const TwistedPair& tp);

// Levi type and twist indexing the orbit-parametrization target of a piece.
struct OrbitData {
    NodeSet J_inf;
    WeylElement twist;
};
OrbitData orbit_data(const PieceDescriptor& sigma);

// Point-count polynomial order_poly * q^{l(w)+nu_J-nu_I}; when
// quotient_by_delta is set, additionally divides by (q-1)^{|I|-|J|}
// (the rank of the torus acting freely on the piece, adjoint convention).
CountPolynomial piece_count(const PieceDescriptor& sigma, bool quotient_by_delta);

// Exact polynomial identity sum_sigma q^{l(w_sigma)} = poincare(W^{J'}).
struct SumCheck {
    CountPolynomial lhs, rhs;
    bool ok = false;
};
SumCheck verify_sum(const TwistedPair& tp);

}  // namespace gsp
