#include "gsp/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "gsp/errors.hpp"

namespace gsp {

namespace {

std::string mat_key(const Eigen::MatrixXi& m) {
    return std::string(reinterpret_cast<const char*>(m.data()), sizeof(int) * m.size());
}

std::string vec_key(const Eigen::VectorXi& v) {
    return std::string(reinterpret_cast<const char*>(v.data()), sizeof(int) * v.size());
}

// Cartan matrix entry convention: cartan(i,j) = <alpha_i, alpha_j^vee>, so
// s_j(alpha_i) = alpha_i - cartan(i,j) alpha_j.
Eigen::MatrixXi cartan_of_irreducible(char family, int n) {
    auto chain = [&](Eigen::MatrixXi& c) {
        for (int i = 0; i + 1 < n; ++i) c(i, i + 1) = c(i + 1, i) = -1;
    };
    Eigen::MatrixXi c = 2 * Eigen::MatrixXi::Identity(n, n);
    switch (family) {
        case 'A':
            if (n < 1) throw NonFiniteType("A_n needs n >= 1");
            chain(c);
            return c;
        case 'B':  // alpha_n short
            if (n < 2) throw NonFiniteType("B_n needs n >= 2");
            chain(c);
            c(n - 2, n - 1) = -2;
            c(n - 1, n - 2) = -1;
            return c;
        case 'C':  // alpha_n long
            if (n < 2) throw NonFiniteType("C_n needs n >= 2");
            chain(c);
            c(n - 2, n - 1) = -1;
            c(n - 1, n - 2) = -2;
            return c;
        case 'D':
            if (n < 3) throw NonFiniteType("D_n needs n >= 3");
            for (int i = 0; i + 2 < n; ++i) c(i, i + 1) = c(i + 1, i) = -1;
            c(n - 3, n - 1) = c(n - 1, n - 3) = -1;
            return c;
        case 'G':
            if (n != 2) throw NonFiniteType("G_n only exists for n = 2");
            c(0, 1) = -1;
            c(1, 0) = -3;
            return c;
        case 'F':
            if (n != 4) throw NonFiniteType("F_n only exists for n = 4");
            chain(c);
            c(1, 2) = -2;
            c(2, 1) = -1;
            return c;
        default:
            throw NonFiniteType(std::string("unknown type family '") + family + "'");
    }
}

Eigen::MatrixXi coxeter_from_cartan(const Eigen::MatrixXi& c) {
    const int n = static_cast<int>(c.rows());
    Eigen::MatrixXi m = Eigen::MatrixXi::Ones(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            switch (c(i, j) * c(j, i)) {
                case 0: m(i, j) = 2; break;
                case 1: m(i, j) = 3; break;
                case 2: m(i, j) = 4; break;
                case 3: m(i, j) = 6; break;
                default: throw NonFiniteType("invalid Cartan product");
            }
        }
    return m;
}

Eigen::MatrixXi cartan_from_coxeter(const Eigen::MatrixXi& m) {
    const int n = static_cast<int>(m.rows());
    if (m.cols() != n) throw NonFiniteType("Coxeter matrix must be square");
    if (m != m.transpose()) throw NonFiniteType("Coxeter matrix must be symmetric");
    Eigen::MatrixXi c = 2 * Eigen::MatrixXi::Identity(n, n);
    for (int i = 0; i < n; ++i) {
        if (m(i, i) != 1) throw NonFiniteType("Coxeter matrix diagonal must be 1");
        for (int j = i + 1; j < n; ++j) {
            switch (m(i, j)) {
                case 2: break;
                case 3: c(i, j) = c(j, i) = -1; break;
                case 4: c(i, j) = -1; c(j, i) = -2; break;
                case 6: c(i, j) = -1; c(j, i) = -3; break;
                default:
                    throw NonFiniteType("off-diagonal Coxeter entries must be 2, 3, 4 or 6");
            }
        }
    }
    return c;
}

long long igcd(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// Exact finiteness test: the Weyl group is finite iff the symmetrized
// Cartan form is positive definite. Symmetrizer found by graph traversal,
// definiteness by fraction-free elimination over exact integers.
bool cartan_positive_definite(const Eigen::MatrixXi& c) {
    const int n = static_cast<int>(c.rows());
    std::vector<long long> num(n, 0), den(n, 1);
    for (int start = 0; start < n; ++start) {
        if (num[start] != 0) continue;
        num[start] = 1;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            for (int j = 0; j < n; ++j) {
                if (c(i, j) == 0 || i == j) continue;
                // want d_j with d_i c(i,j) = d_j c(j,i)
                long long nn = num[i] * c(i, j), dd = den[i] * c(j, i);
                if (dd < 0) {
                    nn = -nn;
                    dd = -dd;
                }
                long long g = igcd(nn, dd);
                nn /= g;
                dd /= g;
                if (num[j] == 0) {
                    num[j] = nn;
                    den[j] = dd;
                    queue.push_back(j);
                } else if (num[j] * dd != nn * den[j]) {
                    return false;  // not symmetrizable
                }
            }
        }
    }
    long long scale = 1;
    for (int i = 0; i < n; ++i) scale = den[i] / igcd(scale, den[i]) * scale;
    std::vector<std::vector<__int128>> b(n, std::vector<__int128>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            b[i][j] = static_cast<__int128>(num[i] * (scale / den[i])) * c(i, j);
    // Bareiss elimination; all leading principal minors must be positive.
    __int128 prev = 1;
    for (int k = 0; k < n; ++k) {
        if (b[k][k] <= 0) return false;
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                b[i][j] = (b[i][j] * b[k][k] - b[i][k] * b[k][j]) / prev;
        prev = b[k][k];
    }
    return true;
}

constexpr int kMaxGroupSize = 2'000'000;

}  // namespace

void WeylDatum::finish(int torus_rank, const std::vector<int>& delta) {
    rank_ = static_cast<int>(cartan_.rows());
    torus_rank_ = torus_rank < 0 ? rank_ : torus_rank;
    coxeter_ = coxeter_from_cartan(cartan_);

    delta_ = delta.empty() ? [&] {
        std::vector<int> id(rank_);
        std::iota(id.begin(), id.end(), 0);
        return id;
    }() : delta;
    if (static_cast<int>(delta_.size()) != rank_)
        throw InvalidAutomorphism("delta must list an image for every node");
    std::vector<bool> seen(rank_, false);
    for (int i : delta_) {
        if (i < 0 || i >= rank_ || seen[i]) throw InvalidAutomorphism("delta is not a bijection");
        seen[i] = true;
    }
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            if (cartan_(delta_[i], delta_[j]) != cartan_(i, j))
                throw InvalidAutomorphism("delta does not preserve the Cartan data");
    delta_inv_.assign(rank_, 0);
    for (int i = 0; i < rank_; ++i) delta_inv_[delta_[i]] = i;

    if (!cartan_positive_definite(cartan_)) throw NonFiniteType("Coxeter matrix is not of finite type");

    // Simple reflection matrices on the root lattice.
    std::vector<Eigen::MatrixXi> gen(rank_);
    for (int j = 0; j < rank_; ++j) {
        gen[j] = Eigen::MatrixXi::Identity(rank_, rank_);
        for (int i = 0; i < rank_; ++i) gen[j](j, i) -= cartan_(i, j);
    }

    // Root system: closure of the simple roots under the generators.
    {
        std::unordered_map<std::string, int> seen_roots;
        std::vector<Eigen::VectorXi> roots;
        for (int i = 0; i < rank_; ++i) {
            Eigen::VectorXi a = Eigen::VectorXi::Zero(rank_);
            a(i) = 1;
            seen_roots.emplace(vec_key(a), static_cast<int>(roots.size()));
            roots.push_back(a);
        }
        for (std::size_t h = 0; h < roots.size(); ++h) {
            Eigen::VectorXi r = roots[h];
            for (int j = 0; j < rank_; ++j) {
                Eigen::VectorXi img = gen[j] * r;
                auto key = vec_key(img);
                if (!seen_roots.count(key)) {
                    seen_roots.emplace(key, static_cast<int>(roots.size()));
                    roots.push_back(img);
                }
            }
        }
        for (const auto& r : roots) {
            if ((r.array() >= 0).all()) {
                pos_roots_.push_back(r);
                std::uint32_t s = 0;
                for (int i = 0; i < rank_; ++i)
                    if (r(i) != 0) s |= (1u << i);
                root_supp_.push_back(s);
            }
        }
    }

    // Enumerate the group by breadth-first closure; BFS depth is the length.
    std::unordered_map<std::string, int> index;
    rmul_.assign(rank_, {});
    {
        Eigen::MatrixXi id = Eigen::MatrixXi::Identity(rank_, rank_);
        mats_.push_back(id);
        len_.push_back(0);
        index.emplace(mat_key(id), 0);
        for (int s = 0; s < rank_; ++s) rmul_[s].push_back(-1);
        for (std::size_t h = 0; h < mats_.size(); ++h) {
            for (int s = 0; s < rank_; ++s) {
                if (rmul_[s][h] >= 0) continue;
                Eigen::MatrixXi m = mats_[h] * gen[s];
                auto key = mat_key(m);
                auto it = index.find(key);
                int idx;
                if (it == index.end()) {
                    idx = static_cast<int>(mats_.size());
                    if (idx >= kMaxGroupSize) throw TooLarge("Weyl group too large to materialize");
                    index.emplace(std::move(key), idx);
                    mats_.push_back(std::move(m));
                    len_.push_back(len_[h] + 1);
                    for (int t = 0; t < rank_; ++t) rmul_[t].push_back(-1);
                } else {
                    idx = it->second;
                }
                rmul_[s][h] = idx;
                rmul_[s][idx] = static_cast<int>(h);
            }
        }
    }
    const int N = static_cast<int>(mats_.size());

    lmul_.assign(rank_, std::vector<int>(N, -1));
    for (int s = 0; s < rank_; ++s)
        for (int i = 0; i < N; ++i) lmul_[s][i] = index.at(mat_key(gen[s] * mats_[i]));

    // Shortlex reduced words, computed in order of increasing length.
    words_.assign(N, {});
    ldesc_.assign(N, 0);
    rdesc_.assign(N, 0);
    supp_.assign(N, 0);
    {
        std::vector<int> order(N);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return len_[a] < len_[b]; });
        for (int idx : order) {
            std::uint32_t ld = 0, rd = 0;
            for (int s = 0; s < rank_; ++s) {
                if (len_[lmul_[s][idx]] < len_[idx]) ld |= (1u << s);
                if (len_[rmul_[s][idx]] < len_[idx]) rd |= (1u << s);
            }
            ldesc_[idx] = ld;
            rdesc_[idx] = rd;
            if (idx != 0) {
                int s = __builtin_ctz(ld);
                const auto& rest = words_[lmul_[s][idx]];
                words_[idx].reserve(rest.size() + 1);
                words_[idx].push_back(s);
                words_[idx].insert(words_[idx].end(), rest.begin(), rest.end());
                supp_[idx] = supp_[lmul_[s][idx]] | (1u << s);
            }
        }
    }

    // Canonical order: (length, shortlex word). Remap every table.
    {
        std::vector<int> order(N);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (len_[a] != len_[b]) return len_[a] < len_[b];
            return words_[a] < words_[b];
        });
        std::vector<int> new_of_old(N);
        for (int i = 0; i < N; ++i) new_of_old[order[i]] = i;
        auto permute_ints = [&](std::vector<int>& v) {
            std::vector<int> w(N);
            for (int i = 0; i < N; ++i) w[new_of_old[i]] = v[i];
            v = std::move(w);
        };
        std::vector<Eigen::MatrixXi> mats(N);
        std::vector<std::vector<int>> words(N);
        std::vector<std::uint32_t> ld(N), rd(N), sp(N);
        for (int i = 0; i < N; ++i) {
            mats[new_of_old[i]] = std::move(mats_[i]);
            words[new_of_old[i]] = std::move(words_[i]);
            ld[new_of_old[i]] = ldesc_[i];
            rd[new_of_old[i]] = rdesc_[i];
            sp[new_of_old[i]] = supp_[i];
        }
        mats_ = std::move(mats);
        words_ = std::move(words);
        ldesc_ = std::move(ld);
        rdesc_ = std::move(rd);
        supp_ = std::move(sp);
        permute_ints(len_);
        for (int s = 0; s < rank_; ++s) {
            std::vector<int> r(N), l(N);
            for (int i = 0; i < N; ++i) {
                r[new_of_old[i]] = new_of_old[rmul_[s][i]];
                l[new_of_old[i]] = new_of_old[lmul_[s][i]];
            }
            rmul_[s] = std::move(r);
            lmul_[s] = std::move(l);
        }
        index.clear();
        for (int i = 0; i < N; ++i) index.emplace(mat_key(mats_[i]), i);
    }

    // Inverses via reversed reduced words.
    inv_.assign(N, 0);
    for (int i = 0; i < N; ++i) {
        int acc = 0;
        const auto& w = words_[i];
        for (auto it = w.rbegin(); it != w.rend(); ++it) acc = rmul_[*it][acc];
        inv_[i] = acc;
    }

    simple_idx_.assign(rank_, 0);
    for (int s = 0; s < rank_; ++s) simple_idx_[s] = rmul_[s][0];

    // Opposition involution from conjugation by the longest element.
    star_.assign(rank_, 0);
    {
        int w0 = N - 1;
        for (int s = 0; s < rank_; ++s) {
            int t = index.at(mat_key(mats_[w0] * mats_[simple_idx_[s]] * mats_[w0]));
            if (len_[t] != 1) throw InvariantBreach("opposition image of a simple reflection is not simple");
            star_[s] = words_[t][0];
        }
    }
}

namespace {

// Shared multiplication-by-lookup used by WeylElement. The per-datum key
// map is rebuilt here because the datum does not expose it; a small
// thread-safe cache would be overkill at these group sizes, so the lookup
// is recomputed from matrices directly.
int mul_idx(const WeylDatum& d, int a, int b) {
    // multiply via the reduced word of b, using the generator tables
    int acc = a;
    for (int s : d.word_of(b)) acc = d.rmul(acc, s);
    return acc;
}

}  // namespace

NodeSet WeylDatum::delta(NodeSet J) const {
    NodeSet out;
    for (int i : J.indices()) out = out.with(delta_[i]);
    return out;
}

NodeSet WeylDatum::delta_inv(NodeSet J) const {
    NodeSet out;
    for (int i : J.indices()) out = out.with(delta_inv_[i]);
    return out;
}

bool WeylDatum::delta_is_identity() const {
    for (int i = 0; i < rank_; ++i)
        if (delta_[i] != i) return false;
    return true;
}

int WeylDatum::nu(NodeSet J) const {
    int count = 0;
    for (std::uint32_t s : root_supp_)
        if ((s & ~J.bits) == 0) ++count;
    return count;
}

NodeSet WeylDatum::star(NodeSet J) const {
    NodeSet out;
    for (int i : J.indices()) out = out.with(star_[i]);
    return out;
}

WeylElement WeylDatum::from_word(const std::vector<int>& letters) const {
    int acc = 0;
    for (int s : letters) {
        if (s < 0 || s >= rank_) throw Error("word letter out of range");
        acc = rmul_[s][acc];
    }
    return {this, acc};
}

int WeylElement::length() const { return owner_->len(idx_); }

WeylElement WeylElement::operator*(const WeylElement& o) const {
    if (owner_ != o.owner_) throw MixedDatum("elements belong to different Weyl data");
    return {owner_, mul_idx(*owner_, idx_, o.idx_)};
}

WeylElement WeylElement::inverse() const { return {owner_, owner_->inv(idx_)}; }

const std::vector<int>& WeylElement::word() const { return owner_->word_of(idx_); }

NodeSet WeylElement::support() const { return owner_->supp(idx_); }
NodeSet WeylElement::left_descents() const { return owner_->ldesc(idx_); }
NodeSet WeylElement::right_descents() const { return owner_->rdesc(idx_); }

Eigen::VectorXi WeylElement::act(const Eigen::VectorXi& root) const {
    return owner_->matrix_of(idx_) * root;
}

const Eigen::MatrixXi& WeylElement::matrix() const { return owner_->matrix_of(idx_); }

std::string WeylElement::str() const {
    if (idx_ == 0) return "e";
    std::string s;
    for (int letter : word()) {
        if (!s.empty()) s += '*';
        s += 's' + std::to_string(letter + 1);
    }
    return s;
}

namespace {

struct TypeToken {
    char family;
    int n;
};

std::vector<TypeToken> parse_type_spec(const std::string& spec) {
    std::vector<TypeToken> out;
    std::size_t i = 0;
    while (i < spec.size()) {
        char f = static_cast<char>(std::toupper(static_cast<unsigned char>(spec[i])));
        ++i;
        std::size_t j = i;
        while (j < spec.size() && std::isdigit(static_cast<unsigned char>(spec[j]))) ++j;
        if (j == i) throw NonFiniteType("malformed type spec: " + spec);
        int n = std::stoi(spec.substr(i, j - i));
        out.push_back({f, n});
        i = j;
        if (i < spec.size()) {
            if (spec[i] != 'x' && spec[i] != 'X') throw NonFiniteType("malformed type spec: " + spec);
            ++i;
        }
    }
    if (out.empty()) throw NonFiniteType("empty type spec");
    return out;
}

}  // namespace

std::shared_ptr<const WeylDatum> build_weyl_from_cartan(const Eigen::MatrixXi& cartan,
                                                        const std::vector<int>& delta,
                                                        int torus_rank) {
    auto d = std::shared_ptr<WeylDatum>(new WeylDatum());
    d->cartan_ = cartan;
    d->finish(torus_rank, delta);
    return d;
}

WeylRef build_weyl(const std::string& type_spec, const std::vector<int>& delta, int torus_rank) {
    auto tokens = parse_type_spec(type_spec);
    int total = 0;
    for (const auto& t : tokens) total += t.n;
    Eigen::MatrixXi cartan = Eigen::MatrixXi::Zero(total, total);
    int at = 0;
    for (const auto& t : tokens) {
        cartan.block(at, at, t.n, t.n) = cartan_of_irreducible(t.family, t.n);
        at += t.n;
    }
    return build_weyl_from_cartan(cartan, delta, torus_rank);
}

WeylRef build_weyl_from_matrix(const Eigen::MatrixXi& coxeter, const std::vector<int>& delta,
                               int torus_rank) {
    return build_weyl_from_cartan(cartan_from_coxeter(coxeter), delta, torus_rank);
}

WeylElement mul(const WeylElement& x, const WeylElement& y) { return x * y; }
WeylElement inv(const WeylElement& x) { return x.inverse(); }
int length(const WeylElement& x) { return x.length(); }

WeylElement min_double_coset(NodeSet Jp, const WeylElement& x, NodeSet J) {
    const WeylDatum& d = x.owner();
    int idx = x.index();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int s : (d.ldesc(idx) & Jp).indices()) {
            idx = d.lmul(idx, s);
            changed = true;
            break;
        }
        if (changed) continue;
        for (int s : (d.rdesc(idx) & J).indices()) {
            idx = d.rmul(idx, s);
            changed = true;
            break;
        }
    }
    return d.element(idx);
}

std::vector<WeylElement> coset_reps(const WeylDatum& d, NodeSet J, Side side) {
    std::vector<WeylElement> out;
    for (int i = 0; i < d.size(); ++i) {
        NodeSet desc = side == Side::Left ? d.ldesc(i) : d.rdesc(i);
        if ((desc & J).empty()) out.push_back(d.element(i));
    }
    return out;
}

std::vector<WeylElement> double_reps(const WeylDatum& d, NodeSet Jp, NodeSet J) {
    std::vector<WeylElement> out;
    for (int i = 0; i < d.size(); ++i)
        if ((d.ldesc(i) & Jp).empty() && (d.rdesc(i) & J).empty()) out.push_back(d.element(i));
    return out;
}

AdImage ad_subset(const WeylElement& x, NodeSet K) {
    const WeylDatum& d = x.owner();
    AdImage out;
    for (int k : K.indices()) {
        // x s_k x^-1 is the reflection in the root x(alpha_k); it is simple
        // exactly when that root is +- a simple root.
        Eigen::VectorXi beta = x.matrix().col(k);
        int nonzero = -1;
        bool simple = true;
        for (int i = 0; i < d.rank(); ++i) {
            if (beta(i) == 0) continue;
            if (nonzero >= 0 || (beta(i) != 1 && beta(i) != -1)) {
                simple = false;
                break;
            }
            nonzero = i;
        }
        if (simple && nonzero >= 0)
            out.subset = out.subset.with(nonzero);
        else
            out.all_simple = false;
    }
    return out;
}

WeylElement longest_in_W_upper(const WeylDatum& d, NodeSet J) {
    NodeSet K = d.delta(J);
    // longest element of W^K is w0 * w0(K)
    int w0K = 0;
    for (int i = 0; i < d.size(); ++i)
        if (d.supp(i).subset_of(K) && d.len(i) > d.len(w0K)) w0K = i;
    return d.longest() * d.element(w0K);
}

NodeSet star(const WeylDatum& d, NodeSet J) { return d.star(J); }

CountPolynomial poincare(const std::vector<WeylElement>& elts) {
    if (elts.empty()) return CountPolynomial::zero();
    const WeylDatum* owner = elts.front().owner_ptr();
    std::vector<long long> c;
    for (const auto& w : elts) {
        if (w.owner_ptr() != owner) throw MixedDatum("poincare over mixed Weyl data");
        int l = w.length();
        if (static_cast<int>(c.size()) <= l) c.resize(l + 1, 0);
        c[l] += 1;
    }
    return CountPolynomial(std::move(c));
}

CountPolynomial poincare_parabolic(const WeylDatum& d, NodeSet J) {
    std::vector<long long> c;
    for (int i = 0; i < d.size(); ++i) {
        if (!d.supp(i).subset_of(J)) continue;
        int l = d.len(i);
        if (static_cast<int>(c.size()) <= l) c.resize(l + 1, 0);
        c[l] += 1;
    }
    return CountPolynomial(std::move(c));
}

CountPolynomial order_poly(const WeylDatum& d) { return levi_order_poly(d, d.all_nodes()); }

CountPolynomial levi_order_poly(const WeylDatum& d, NodeSet J) {
    CountPolynomial q_minus_1({-1, 1});
    CountPolynomial p = poincare_parabolic(d, J).shifted(d.nu(J));
    for (int i = 0; i < d.torus_rank(); ++i) p = p * q_minus_1;
    return p;
}

int unipotent_codim(const WeylDatum& d, NodeSet J, const WeylElement& u, NodeSet K) {
    if (min_double_coset(J, u, K) != u)
        throw NotMinimalRep("u is not minimal in W_J \\ W / W_K");
    NodeSet meet = J & ad_subset(u, K).subset;
    return u.length() + d.nu(J) - d.nu(meet);
}

}  // namespace gsp
