#include "gsp/glmodel.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>

namespace gsp {

// ---------------------------------------------------------------------------
// SymmetricGroup

namespace {

std::string perm_key(const std::vector<int>& p) {
    std::string s;
    s.reserve(p.size());
    for (int x : p) s += static_cast<char>(x);
    return s;
}

}  // namespace

SymmetricGroup::SymmetricGroup(int d) : d_(d) {
    if (d < 2) throw Error("SymmetricGroup needs degree >= 2");
    W_ = build_weyl("A" + std::to_string(d - 1), {}, d);
    perm_of_.assign(W_->size(), {});
    std::vector<int> id(d);
    for (int i = 0; i < d; ++i) id[i] = i;
    perm_of_[0] = id;
    idx_of_.emplace(perm_key(id), 0);
    // breadth-first over right multiplication: perm(w s_i) = perm(w) o t_i
    std::vector<int> todo{0};
    std::vector<bool> seen(W_->size(), false);
    seen[0] = true;
    for (std::size_t h = 0; h < todo.size(); ++h) {
        int at = todo[h];
        for (int s = 0; s < W_->rank(); ++s) {
            int nxt = W_->rmul(at, s);
            if (seen[nxt]) continue;
            seen[nxt] = true;
            std::vector<int> p = perm_of_[at];
            std::swap(p[s], p[s + 1]);
            idx_of_.emplace(perm_key(p), nxt);
            perm_of_[nxt] = std::move(p);
            todo.push_back(nxt);
        }
    }
}

WeylElement SymmetricGroup::from_perm(const std::vector<int>& perm) const {
    auto it = idx_of_.find(perm_key(perm));
    if (it == idx_of_.end()) throw Error("from_perm: not a permutation of the right degree");
    return W_->element(it->second);
}

const std::vector<int>& SymmetricGroup::to_perm(const WeylElement& w) const {
    if (w.owner_ptr() != W_.get()) throw MixedDatum("element from a different symmetric group");
    return perm_of_[w.index()];
}

// ---------------------------------------------------------------------------
// Shared combinatorics

std::vector<int> block_sizes(int d, NodeSet J) {
    std::vector<int> dims{0};
    for (int t = 1; t <= d - 1; ++t)
        if (!J.contains(t - 1)) dims.push_back(t);
    dims.push_back(d);
    std::vector<int> sizes;
    for (std::size_t i = 1; i < dims.size(); ++i) sizes.push_back(dims[i] - dims[i - 1]);
    return sizes;
}

namespace {

NodeSet type_of_sizes(int d, const std::vector<int>& sizes) {
    NodeSet J = NodeSet::full(d - 1);
    int at = 0;
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
        at += sizes[i];
        J = J.without(at - 1);
    }
    return J;
}

long long gl_order_ll(int n, long long q) {
    long long qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    long long o = 1, qi = 1;
    for (int i = 0; i < n; ++i) {
        o *= (qn - qi);
        qi *= q;
    }
    return o;
}

long long gauss_binom(int n, int k, long long q) {
    if (k < 0 || k > n) return 0;
    // gb(i,j) = gb(i-1,j-1) + q^j gb(i-1,j)
    std::vector<std::vector<long long>> gb(n + 1, std::vector<long long>(n + 1, 0));
    for (int i = 0; i <= n; ++i) gb[i][0] = 1;
    for (int i = 1; i <= n; ++i) {
        long long qj = 1;
        for (int j = 1; j <= i; ++j) {
            qj *= q;
            gb[i][j] = gb[i - 1][j - 1] + qj * gb[i - 1][j];
        }
    }
    return gb[n][k];
}

long long flag_count(int d, const std::vector<int>& sizes, long long q) {
    long long total = 1;
    int rest = d;
    for (int k : sizes) {
        total *= gauss_binom(rest, k, q);
        rest -= k;
    }
    return total;
}

}  // namespace

TwistedPair model_pair(const SymmetricGroup& sym, NodeSet J, const std::vector<int>& sigma) {
    const int d = sym.degree();
    std::vector<int> sizes = block_sizes(d, J);
    const int n = static_cast<int>(sizes.size());
    if (static_cast<int>(sigma.size()) != n) throw Error("sigma size does not match the block count");
    std::vector<int> sizesp(n, 0);
    for (int i = 0; i < n; ++i) sizesp[sigma[i]] = sizes[i];
    NodeSet Jp_expected = type_of_sizes(d, sizesp);

    // block starts
    std::vector<int> start(n + 1, 0), startp(n + 1, 0);
    for (int i = 0; i < n; ++i) start[i + 1] = start[i] + sizes[i];
    for (int i = 0; i < n; ++i) startp[i + 1] = startp[i] + sizesp[i];
    std::vector<int> img(d);
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < sizes[i]; ++t) img[start[i] + t] = startp[sigma[i]] + t;
    WeylElement blk = sym.from_perm(img);
    WeylElement y = min_double_coset(Jp_expected, blk, J);
    TwistedPair tp = make_twisted_pair(sym.weyl(), J, y);
    if (tp.Jp != Jp_expected)
        throw InvariantBreach("model pair: derived J' disagrees with the block permutation");
    return tp;
}

// ---------------------------------------------------------------------------
// Exhaustive runs, templated on the field then dispatched on q

namespace {

template <int P>
std::vector<Filtration<P>> enumerate_flags(int d, const std::vector<int>& sizes) {
    std::vector<int> dims;
    int at = 0;
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
        at += sizes[i];
        dims.push_back(at);
    }
    std::vector<std::vector<Subspace<P>>> levels;
    for (int dim : dims) {
        std::vector<Subspace<P>> subs;
        for (auto& m : all_subspaces<P>(d, dim)) subs.push_back(Subspace<P>{d, std::move(m)});
        levels.push_back(std::move(subs));
    }
    std::vector<Filtration<P>> out;
    std::vector<Subspace<P>> chain;
    auto dfs = [&](auto&& self, std::size_t level) -> void {
        if (level == levels.size()) {
            Filtration<P> f;
            f.members.push_back(Subspace<P>::zero(d));
            for (const auto& s : chain) f.members.push_back(s);
            f.members.push_back(Subspace<P>::full(d));
            out.push_back(std::move(f));
            return;
        }
        for (const auto& s : levels[level]) {
            if (!chain.empty() && !s.contains(chain.back())) continue;
            chain.push_back(s);
            self(self, level + 1);
            chain.pop_back();
        }
    };
    dfs(dfs, 0);
    return out;
}

std::string records_key(const std::vector<SigRecord>& records) {
    std::string s;
    for (const auto& r : records) {
        s += static_cast<char>(r.J.bits);
        s += static_cast<char>(r.Jp.bits);
        s += static_cast<char>(r.pos.index() & 0xff);
        s += static_cast<char>((r.pos.index() >> 8) & 0xff);
    }
    return s;
}

bool records_match_steps(const std::vector<SigRecord>& records,
                         const std::vector<PieceStep>& steps) {
    if (records.size() != steps.size()) return false;
    for (std::size_t i = 0; i < records.size(); ++i)
        if (records[i].J != steps[i].J || records[i].Jp != steps[i].Jp ||
            records[i].pos != steps[i].u)
            return false;
    return true;
}

template <int P>
ModelReport run_model_impl(const ModelConfig& cfg) {
    const int d = cfg.d;
    ModelReport rep;
    rep.cfg = cfg;
    rep.sym = std::make_shared<SymmetricGroup>(d);
    const SymmetricGroup& sym = *rep.sym;

    NodeSet J;
    std::vector<int> sigma;
    switch (cfg.mode) {
        case ModelMode::LineLine: {
            if (d < 2) throw Error("line-line mode needs d >= 2");
            J = type_of_sizes(d, {1, d - 1});
            sigma = {0, 1};
            break;
        }
        case ModelMode::LineHyperplane: {
            if (d < 2) throw Error("line-hyperplane mode needs d >= 2");
            J = type_of_sizes(d, {1, d - 1});
            sigma = {1, 0};
            break;
        }
        case ModelMode::Full: {
            J = cfg.J;
            sigma = cfg.sigma;
            if (sigma.empty()) {
                sigma.resize(block_sizes(d, J).size());
                for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = static_cast<int>(i);
            }
            break;
        }
    }
    std::vector<int> sizes = block_sizes(d, J);
    const int n = static_cast<int>(sizes.size());
    if (static_cast<int>(sigma.size()) != n) throw Error("sigma does not match the block count");
    std::vector<int> sizesp(n, 0);
    for (int i = 0; i < n; ++i) sizesp[sigma[i]] = sizes[i];

    // size guard before any enumeration
    long long total = flag_count(d, sizes, cfg.q) * flag_count(d, sizesp, cfg.q);
    for (int k : sizes) {
        total *= gl_order_ll(k, cfg.q);
        if (total > cfg.guard) break;
    }
    if (total > cfg.guard)
        throw TooLarge("configuration has " + std::to_string(total) +
                       " quadruples, over the guard of " + std::to_string(cfg.guard));

    rep.pair = model_pair(sym, J, sigma);
    rep.descriptors = enumerate_pieces(rep.pair);

    auto vflags = enumerate_flags<P>(d, sizes);
    auto vpflags = enumerate_flags<P>(d, sizesp);
    std::vector<std::vector<MatF<P>>> map_choices;
    for (int k : sizes) map_choices.push_back(all_invertible<P>(k));

    struct Accum {
        std::vector<SigRecord> records;
        long long size = 0;
        std::set<int> ks;
    };
    std::map<std::string, Accum> buckets;
    bool prefix_ok = true;
    const int max_iter = 2 * d + 4;

    for (const auto& vf : vflags) {
        for (const auto& vpf : vpflags) {
            // odometer over the map tuples
            std::vector<std::size_t> pick(n, 0);
            while (true) {
                Quadruple<P> Q;
                Q.V = vf;
                Q.Vp = vpf;
                Q.sigma = sigma;
                for (int i = 0; i < n; ++i) Q.maps.push_back(map_choices[i][pick[i]]);
                Q.validate();

                SignatureResult sig = signature<P>(Q, sym, max_iter);
                prefix_ok = prefix_ok && sig.prefix_products_ok;

                int k = 0;
                if (cfg.mode == ModelMode::LineLine)
                    k = classify_line_line<P>(Q.V.members[1], Q.Vp.members[1], Q.maps[1]);
                else if (cfg.mode == ModelMode::LineHyperplane)
                    k = classify_line_hyperplane<P>(Q.V.members[1], Q.Vp.members[1], Q.maps[1]);

                Accum& acc = buckets[records_key(sig.records)];
                if (acc.size == 0) acc.records = sig.records;
                acc.size += 1;
                if (k > 0) acc.ks.insert(k);

                int at = n - 1;
                while (at >= 0 && ++pick[at] == map_choices[at].size()) pick[at--] = 0;
                if (at < 0) break;
            }
        }
    }

    rep.prefix_products_ok = prefix_ok;
    rep.total = 0;
    std::set<int> matched, ks_seen;
    bool all_matched = true, sizes_ok = true, classifiers_ok = true;
    for (auto& [key, acc] : buckets) {
        ModelBucket b;
        b.key = acc.records;
        b.size = acc.size;
        rep.total += acc.size;
        for (std::size_t i = 0; i < rep.descriptors.size(); ++i)
            if (records_match_steps(acc.records, rep.descriptors[i].steps)) {
                b.matched_sigma = static_cast<int>(i);
                break;
            }
        if (b.matched_sigma < 0) {
            all_matched = false;
        } else {
            matched.insert(b.matched_sigma);
            b.predicted = piece_count(rep.descriptors[b.matched_sigma], false).eval(cfg.q);
            sizes_ok = sizes_ok && (b.predicted == b.size);
        }
        if (cfg.mode != ModelMode::Full) {
            if (acc.ks.size() != 1)
                classifiers_ok = false;
            else {
                b.classifier_k = *acc.ks.begin();
                classifiers_ok = classifiers_ok && ks_seen.insert(b.classifier_k).second;
            }
        }
        rep.buckets.push_back(std::move(b));
    }
    rep.buckets_match_descriptors =
        all_matched && matched.size() == rep.descriptors.size() &&
        rep.buckets.size() == rep.descriptors.size();
    rep.sizes_match = sizes_ok;
    rep.classifiers_agree = classifiers_ok;
    rep.pass = rep.buckets_match_descriptors && rep.sizes_match && rep.classifiers_agree &&
               rep.prefix_products_ok;

    std::sort(rep.buckets.begin(), rep.buckets.end(), [](const ModelBucket& a, const ModelBucket& b) {
        if (a.matched_sigma != b.matched_sigma) return a.matched_sigma < b.matched_sigma;
        return records_key(a.key) < records_key(b.key);
    });
    return rep;
}

// --- GL_d brute-force helpers ---

template <int P>
std::vector<MatF<P>> general_linear_group(int d, long long limit) {
    long long order = gl_order_ll(d, P);
    if (order > limit) throw TooLarge("GL_" + std::to_string(d) + "(F_" + std::to_string(P) +
                                      ") too large for exhaustive enumeration");
    return all_invertible<P>(d);
}

template <int P>
Filtration<P> standard_flag(int d, NodeSet J) {
    Filtration<P> f;
    f.members.push_back(Subspace<P>::zero(d));
    auto sizes = block_sizes(d, J);
    int at = 0;
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
        at += sizes[i];
        MatF<P> rows = MatF<P>::Zero(at, d);
        for (int r = 0; r < at; ++r) rows(r, r) = GF<P>(1);
        f.members.push_back(Subspace<P>{d, rows});
    }
    f.members.push_back(Subspace<P>::full(d));
    return f;
}

template <int P>
Filtration<P> apply_to_flag(const MatF<P>& g, const Filtration<P>& f) {
    Filtration<P> out;
    for (const auto& m : f.members)
        out.members.push_back(Subspace<P>::span(m.ambient, MatF<P>(m.rows * g.transpose())));
    return out;
}

template <int P>
bool stabilizes(const MatF<P>& g, const Filtration<P>& f) {
    for (const auto& m : f.members) {
        if (m.dim() == 0 || m.dim() == m.ambient) continue;
        MatF<P> img = row_space<P>(MatF<P>(m.rows * g.transpose()));
        if (!(img == m.rows)) return false;
    }
    return true;
}

template <int P>
bool is_in_unipotent_radical(const MatF<P>& g, const Filtration<P>& f) {
    const int d = f.ambient();
    MatF<P> shift = g.transpose();
    for (int i = 0; i < d; ++i) shift(i, i) -= GF<P>(1);
    for (std::size_t i = 1; i < f.members.size(); ++i) {
        const auto& m = f.members[i];
        const auto& prev = f.members[i - 1];
        for (int r = 0; r < m.rows.rows(); ++r) {
            RowF<P> moved = m.rows.row(r) * shift;
            if (!row_in_space<P>(moved, prev.rows)) return false;
        }
    }
    return true;
}

template <int P>
CosetCheck verify_double_coset_impl(int d, NodeSet J, const WeylElement& y,
                                    const SymmetricGroup& sym) {
    CosetCheck out;
    TwistedPair tp = make_twisted_pair(sym.weyl(), J, y);
    auto gl = general_linear_group<P>(d, 20000);
    Filtration<P> flagJp = standard_flag<P>(d, tp.Jp);

    std::vector<MatF<P>> pprime, u_pprime;
    for (const auto& g : gl)
        if (stabilizes<P>(g, flagJp)) {
            pprime.push_back(g);
            if (is_in_unipotent_radical<P>(g, flagJp)) u_pprime.push_back(g);
        }
    auto levi_sizes = block_sizes(d, tp.Jp);
    out.levi_order = 1;
    for (int k : levi_sizes) out.levi_order *= gl_order_ll(k, P);

    bool all_ok = true;
    long long gamma = -1;
    for (const auto& F : enumerate_flags<P>(d, block_sizes(d, J))) {
        std::vector<MatF<P>> up;
        for (const auto& g : gl)
            if (stabilizes<P>(g, F) && is_in_unipotent_radical<P>(g, F)) up.push_back(g);

        std::vector<MatF<P>> ay;
        for (const auto& g : gl)
            if (rel_pos<P>(flagJp, apply_to_flag<P>(g, F), sym) == tp.y) ay.push_back(g);
        if (ay.empty()) {
            all_ok = false;
            continue;
        }

        // single (P', U_P) double coset
        std::set<std::string> coset;
        for (const auto& p : pprime)
            for (const auto& u : up) coset.insert(mat_bytes<P>(MatF<P>(p * ay.front() * u)));
        bool single = coset.size() == ay.size();
        for (const auto& g : ay) single = single && coset.count(mat_bytes<P>(g)) > 0;

        // gamma classes: U_{P'} \ A_y / U_P
        std::set<std::string> reps;
        for (const auto& g : ay) {
            std::string best;
            for (const auto& u1 : u_pprime)
                for (const auto& u2 : up) {
                    std::string s = mat_bytes<P>(MatF<P>(u1 * g * u2));
                    if (best.empty() || s < best) best = std::move(s);
                }
            reps.insert(best);
        }
        long long count = static_cast<long long>(reps.size());
        if (gamma < 0) gamma = count;
        all_ok = all_ok && single && count == out.levi_order && count == gamma;
    }
    out.single_coset = all_ok;
    out.gamma_count = gamma;
    out.ok = all_ok && gamma == out.levi_order;
    return out;
}

template <int P>
UnipotentQuotients measure_unipotent_quotient_impl(int d, NodeSet J, const WeylElement& u,
                                                   NodeSet K, const SymmetricGroup& sym) {
    auto gl = general_linear_group<P>(d, 20000);
    Filtration<P> flagJ = standard_flag<P>(d, J);
    const auto& perm = sym.to_perm(u);
    MatF<P> pm = MatF<P>::Zero(d, d);
    for (int x = 0; x < d; ++x) pm(perm[x], x) = GF<P>(1);
    Filtration<P> flagK = apply_to_flag<P>(pm, standard_flag<P>(d, K));
    if (!(rel_pos<P>(flagJ, flagK, sym) == u))
        throw InvariantBreach("permuted standard flag is not in position u");

    long long up = 0, uq = 0, both = 0;
    for (const auto& g : gl) {
        bool in_up = stabilizes<P>(g, flagJ) && is_in_unipotent_radical<P>(g, flagJ);
        bool in_uq = stabilizes<P>(g, flagK) && is_in_unipotent_radical<P>(g, flagK);
        up += in_up;
        uq += in_uq;
        both += in_up && in_uq;
    }
    return {up / both, uq / both};
}

// --- d = 2 orbit parametrization cross-checks ---

template <int P>
long long count_z_orbits_impl(NodeSet J, const WeylElement& y, const SymmetricGroup& sym) {
    const int d = 2;
    TwistedPair tp = make_twisted_pair(sym.weyl(), J, y);
    auto gl = general_linear_group<P>(d, 5000);
    auto flagsJ = enumerate_flags<P>(d, block_sizes(d, J));
    auto flagsJp = enumerate_flags<P>(d, block_sizes(d, tp.Jp));

    auto unipotent_of = [&](const Filtration<P>& f) {
        std::vector<MatF<P>> out;
        for (const auto& g : gl)
            if (stabilizes<P>(g, f) && is_in_unipotent_radical<P>(g, f)) out.push_back(g);
        return out;
    };
    std::vector<std::vector<MatF<P>>> upJ, upJp;
    for (const auto& f : flagsJ) upJ.push_back(unipotent_of(f));
    for (const auto& f : flagsJp) upJp.push_back(unipotent_of(f));

    auto gamma_rep = [&](std::size_t fi, std::size_t fpi, const MatF<P>& g) {
        std::string best;
        for (const auto& u1 : upJp[fpi])
            for (const auto& u2 : upJ[fi]) {
                std::string s = mat_bytes<P>(MatF<P>(u1 * g * u2));
                if (best.empty() || s < best) best = std::move(s);
            }
        return best;
    };

    // points of Z: (flag, flag', gamma)
    std::map<std::string, int> point_ids;
    std::vector<std::tuple<std::size_t, std::size_t, MatF<P>>> points;
    auto flag_key = [&](const Filtration<P>& f) {
        std::string s;
        for (const auto& m : f.members) s += mat_bytes<P>(m.rows);
        return s;
    };
    std::map<std::string, std::size_t> flagJ_idx, flagJp_idx;
    for (std::size_t i = 0; i < flagsJ.size(); ++i) flagJ_idx[flag_key(flagsJ[i])] = i;
    for (std::size_t i = 0; i < flagsJp.size(); ++i) flagJp_idx[flag_key(flagsJp[i])] = i;

    for (std::size_t fi = 0; fi < flagsJ.size(); ++fi)
        for (std::size_t fpi = 0; fpi < flagsJp.size(); ++fpi) {
            std::set<std::string> seen;
            for (const auto& g : gl) {
                if (!(rel_pos<P>(flagsJp[fpi], apply_to_flag<P>(g, flagsJ[fi]), sym) == tp.y))
                    continue;
                std::string rep = gamma_rep(fi, fpi, g);
                if (seen.insert(rep).second) {
                    std::string key = std::to_string(fi) + ":" + std::to_string(fpi) + ":" + rep;
                    point_ids[key] = static_cast<int>(points.size());
                    points.emplace_back(fi, fpi, g);
                }
            }
        }

    // orbits of the conjugation action
    std::vector<int> root(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) root[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
    for (std::size_t i = 0; i < points.size(); ++i) {
        auto [fi, fpi, g] = points[i];
        for (const auto& h : gl) {
            Filtration<P> nf = apply_to_flag<P>(h, flagsJ[fi]);
            Filtration<P> nfp = apply_to_flag<P>(h, flagsJp[fpi]);
            std::size_t nfi = flagJ_idx.at(flag_key(nf));
            std::size_t nfpi = flagJp_idx.at(flag_key(nfp));
            MatF<P> ng = h * g * inverse_mat<P>(h);
            std::string key = std::to_string(nfi) + ":" + std::to_string(nfpi) + ":" +
                              gamma_rep(nfi, nfpi, ng);
            int j = point_ids.at(key);
            int a = find(static_cast<int>(i)), b = find(j);
            if (a != b) root[a] = b;
        }
    }
    std::set<int> orbits;
    for (std::size_t i = 0; i < points.size(); ++i) orbits.insert(find(static_cast<int>(i)));
    return static_cast<long long>(orbits.size());
}

template <int P>
long long count_levi_orbit_sum_impl(NodeSet J, const WeylElement& y, const SymmetricGroup& sym) {
    const int d = 2;
    TwistedPair tp = make_twisted_pair(sym.weyl(), J, y);
    auto gl = general_linear_group<P>(d, 5000);
    long long sum = 0;
    for (const auto& sigma : enumerate_pieces(tp)) {
        Filtration<P> flagQ = standard_flag<P>(d, sigma.J_inf);
        std::vector<MatF<P>> uq, levi;
        auto sizes = block_sizes(d, sigma.J_inf);
        for (const auto& g : gl) {
            if (stabilizes<P>(g, flagQ) && is_in_unipotent_radical<P>(g, flagQ)) uq.push_back(g);
            // block-diagonal Levi of the standard parabolic
            bool diag = true;
            int at = 0;
            for (int k : sizes) {
                for (int r = 0; r < d; ++r)
                    for (int c = at; c < at + k; ++c)
                        if ((r < at || r >= at + k) && !g(r, c).is_zero()) diag = false;
                at += k;
            }
            if (diag) levi.push_back(g);
        }
        auto rep_of = [&](const MatF<P>& g) {
            std::string best;
            for (const auto& u1 : uq)
                for (const auto& u2 : uq) {
                    std::string s = mat_bytes<P>(MatF<P>(u1 * g * u2));
                    if (best.empty() || s < best) best = std::move(s);
                }
            return best;
        };
        std::map<std::string, int> classes;
        std::vector<MatF<P>> class_rep;
        for (const auto& g : gl) {
            if (!(rel_pos<P>(apply_to_flag<P>(g, flagQ), flagQ, sym) == sigma.twist)) continue;
            std::string r = rep_of(g);
            if (!classes.count(r)) {
                classes[r] = static_cast<int>(class_rep.size());
                class_rep.push_back(g);
            }
        }
        // orbits of Levi conjugation on the classes
        std::vector<int> root(class_rep.size());
        for (std::size_t i = 0; i < root.size(); ++i) root[i] = static_cast<int>(i);
        std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
        for (std::size_t i = 0; i < class_rep.size(); ++i)
            for (const auto& l : levi) {
                MatF<P> ng = l * class_rep[i] * inverse_mat<P>(l);
                int j = classes.at(rep_of(ng));
                int a = find(static_cast<int>(i)), b = find(j);
                if (a != b) root[a] = b;
            }
        std::set<int> orbits;
        for (std::size_t i = 0; i < class_rep.size(); ++i) orbits.insert(find(static_cast<int>(i)));
        sum += static_cast<long long>(orbits.size());
    }
    return sum;
}

template <typename F>
auto dispatch_q(int q, F&& f) {
    switch (q) {
        case 2: return f(std::integral_constant<int, 2>{});
        case 3: return f(std::integral_constant<int, 3>{});
        case 5: return f(std::integral_constant<int, 5>{});
        case 7: return f(std::integral_constant<int, 7>{});
        default: throw TooLarge("q must be one of the primes 2, 3, 5, 7");
    }
}

}  // namespace

ModelReport run_model(const ModelConfig& cfg) {
    ModelConfig c = cfg;
    if (const char* env = std::getenv("STABLE_PIECES_GUARD")) c.guard = std::atoll(env);
    return dispatch_q(c.q, [&](auto p) { return run_model_impl<decltype(p)::value>(c); });
}

CosetCheck verify_double_coset(int d, int q, NodeSet J, const WeylElement& y,
                               const SymmetricGroup& sym) {
    (void)d;
    return dispatch_q(q, [&](auto p) {
        return verify_double_coset_impl<decltype(p)::value>(sym.degree(), J, y, sym);
    });
}

UnipotentQuotients measure_unipotent_quotient(int d, int q, NodeSet J, const WeylElement& u,
                                              NodeSet K, const SymmetricGroup& sym) {
    (void)d;
    return dispatch_q(q, [&](auto p) {
        return measure_unipotent_quotient_impl<decltype(p)::value>(sym.degree(), J, u, K, sym);
    });
}

long long count_z_orbits(int q, NodeSet J, const WeylElement& y, const SymmetricGroup& sym) {
    return dispatch_q(q, [&](auto p) { return count_z_orbits_impl<decltype(p)::value>(J, y, sym); });
}

long long count_levi_orbit_sum(int q, NodeSet J, const WeylElement& y, const SymmetricGroup& sym) {
    return dispatch_q(q,
                      [&](auto p) { return count_levi_orbit_sum_impl<decltype(p)::value>(J, y, sym); });
}

}  // namespace gsp
