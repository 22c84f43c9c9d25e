#pragma once

#include <vector>

#include "gsp/pieces.hpp"

namespace gsp {

// One piece of the completion: the pair (J, sigma) with its torus-quotient
// count. dim is the degree of the quotient count, the dimension of the
// piece inside the completion.
struct AtlasRow {
    NodeSet J;
    int sigma_id = 0;
    PieceDescriptor sigma;
    CountPolynomial quotient_count;
    int dim = 0;
};

// The full table of pieces of the completion for one adjoint Weyl datum:
// for every J the boundary pair (J, y_J) is enumerated and quotiented by
// the free torus of rank |I| - |J|.
struct CompletionAtlas {
    const WeylDatum* datum = nullptr;
    std::vector<AtlasRow> rows;
    CountPolynomial total;
};

// Boundary datum of the stratum indexed by J: y_J the longest element of
// W^{delta(J)}, with Ad(y_J)delta(J) = delta(J)* (asserted).
TwistedPair boundary_data(const WeylDatum& d, NodeSet J);

// Assemble the atlas. Requires the adjoint convention torus_rank == |I|.
// Rows are ordered by |J| descending, then J ascending, then enumeration
// order of sigma.
CompletionAtlas build_atlas(const WeylDatum& d);

// Index rows (J, sigma-id, J_inf, twist) for the character-sheaf triples;
// the sheaf slot itself is out of scope and left abstract.
struct CsIndexRow {
    NodeSet J;
    int sigma_id = 0;
    NodeSet J_inf;
    WeylElement twist;
};
std::vector<CsIndexRow> cs_index(const CompletionAtlas& atlas);

}  // namespace gsp
