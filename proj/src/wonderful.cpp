#include "gsp/wonderful.hpp"

#include <algorithm>

#include "gsp/errors.hpp"

namespace gsp {

TwistedPair boundary_data(const WeylDatum& d, NodeSet J) {
    WeylElement yJ = longest_in_W_upper(d, J);
    AdImage im = ad_subset(yJ, d.delta(J));
    if (!im.all_simple || im.subset != d.star(d.delta(J)))
        throw InvariantBreach("boundary datum: Ad(y_J)delta(J) is not delta(J)*");
    return make_twisted_pair(d, J, yJ);
}

CompletionAtlas build_atlas(const WeylDatum& d) {
    if (d.torus_rank() != d.rank())
        throw Error("build_atlas requires the adjoint convention torus_rank == |I|");
    CompletionAtlas atlas;
    atlas.datum = &d;

    std::vector<NodeSet> Js = subsets_of(d.all_nodes());
    std::sort(Js.begin(), Js.end(), [](NodeSet a, NodeSet b) {
        if (a.count() != b.count()) return a.count() > b.count();
        return a.bits < b.bits;
    });

    CountPolynomial total;
    for (NodeSet J : Js) {
        TwistedPair tp = boundary_data(d, J);
        auto pieces = enumerate_pieces(tp);
        for (std::size_t s = 0; s < pieces.size(); ++s) {
            AtlasRow row;
            row.J = J;
            row.sigma_id = static_cast<int>(s);
            row.sigma = pieces[s];
            row.quotient_count = piece_count(pieces[s], /*quotient_by_delta=*/true);
            row.dim = row.quotient_count.degree();
            total += row.quotient_count;
            atlas.rows.push_back(std::move(row));
        }
    }
    atlas.total = total;
    return atlas;
}

std::vector<CsIndexRow> cs_index(const CompletionAtlas& atlas) {
    std::vector<CsIndexRow> out;
    out.reserve(atlas.rows.size());
    for (const auto& row : atlas.rows)
        out.push_back({row.J, row.sigma_id, row.sigma.J_inf, row.sigma.twist});
    return out;
}

}  // namespace gsp
