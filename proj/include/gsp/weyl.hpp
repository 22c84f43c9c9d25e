#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <vector>

#include "gsp/count_polynomial.hpp"
#include "gsp/node_set.hpp"

namespace gsp {

class WeylDatum;

// Element of a finite Weyl group, canonically represented by its index in
// the owning datum's sorted element table. The table is ordered by
// (length, shortlex reduced word), so indices give a deterministic total
// order and equality is trivial. The owner must outlive the element.
class WeylElement {
public:
    WeylElement() = default;
    WeylElement(const WeylDatum* owner, int idx) : owner_(owner), idx_(idx) {}

    const WeylDatum& owner() const { return *owner_; }
    const WeylDatum* owner_ptr() const { return owner_; }
    int index() const { return idx_; }

    int length() const;
    bool is_identity() const { return idx_ == 0; }

    WeylElement operator*(const WeylElement& o) const;
    WeylElement inverse() const;

    // Shortlex-minimal reduced word, 0-based letters.
    const std::vector<int>& word() const;
    NodeSet support() const;
    NodeSet left_descents() const;
    NodeSet right_descents() const;
    bool in_parabolic(NodeSet K) const { return support().subset_of(K); }

    // Action on a root written in simple-root coordinates.
    Eigen::VectorXi act(const Eigen::VectorXi& root) const;
    const Eigen::MatrixXi& matrix() const;

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.owner_ == b.owner_ && a.idx_ == b.idx_;
    }
    friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }
    friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.idx_ < b.idx_; }

    // "e" for the identity, otherwise "s1*s2" with 1-based letters.
    std::string str() const;

private:
    const WeylDatum* owner_ = nullptr;
    int idx_ = 0;
};

// A finite Weyl group together with a diagram automorphism delta and the
// torus rank of the ambient reductive group. Immutable once built; the
// whole group is materialized (elements act on the root lattice and are
// stored with lengths, descent sets and generator-multiplication tables),
// which keeps every operation exact and cheap at the ranks this library
// targets.
class WeylDatum {
public:
    int rank() const { return rank_; }
    int torus_rank() const { return torus_rank_; }
    NodeSet all_nodes() const { return NodeSet::full(rank_); }

    const Eigen::MatrixXi& coxeter_matrix() const { return coxeter_; }
    const Eigen::MatrixXi& cartan_matrix() const { return cartan_; }

    int delta(int i) const { return delta_[i]; }
    int delta_inv(int i) const { return delta_inv_[i]; }
    NodeSet delta(NodeSet J) const;
    NodeSet delta_inv(NodeSet J) const;
    bool delta_is_identity() const;

    int size() const { return static_cast<int>(mats_.size()); }
    int num_positive_roots() const { return static_cast<int>(pos_roots_.size()); }  // nu_I
    const std::vector<Eigen::VectorXi>& positive_roots() const { return pos_roots_; }

    // Number of reflections of the standard parabolic W_J.
    int nu(NodeSet J) const;

    WeylElement identity() const { return {this, 0}; }
    WeylElement simple(int i) const { return {this, simple_idx_[i]}; }
    WeylElement longest() const { return {this, size() - 1}; }
    WeylElement element(int idx) const { return {this, idx}; }
    WeylElement from_word(const std::vector<int>& letters) const;

    // Opposition involution i -> i* defined by w0 s_i w0 = s_{i*}.
    int star(int i) const { return star_[i]; }
    NodeSet star(NodeSet J) const;

    // Internal tables, used by WeylElement and the free functions.
    int len(int idx) const { return len_[idx]; }
    int rmul(int idx, int s) const { return rmul_[s][idx]; }
    int lmul(int idx, int s) const { return lmul_[s][idx]; }
    int inv(int idx) const { return inv_[idx]; }
    NodeSet supp(int idx) const { return NodeSet(supp_[idx]); }
    NodeSet ldesc(int idx) const { return NodeSet(ldesc_[idx]); }
    NodeSet rdesc(int idx) const { return NodeSet(rdesc_[idx]); }
    const std::vector<int>& word_of(int idx) const { return words_[idx]; }
    const Eigen::MatrixXi& matrix_of(int idx) const { return mats_[idx]; }

    WeylDatum(const WeylDatum&) = delete;
    WeylDatum& operator=(const WeylDatum&) = delete;

private:
    WeylDatum() = default;
    friend std::shared_ptr<const WeylDatum> build_weyl_from_cartan(const Eigen::MatrixXi&,
                                                                   const std::vector<int>&, int);

    int rank_ = 0;
    int torus_rank_ = 0;
    Eigen::MatrixXi coxeter_;
    Eigen::MatrixXi cartan_;
    std::vector<int> delta_, delta_inv_, star_, simple_idx_;
    std::vector<Eigen::VectorXi> pos_roots_;
    std::vector<std::uint32_t> root_supp_;

    std::vector<Eigen::MatrixXi> mats_;
    std::vector<int> len_, inv_;
    std::vector<std::vector<int>> rmul_, lmul_;  // [s][idx]
    std::vector<std::uint32_t> supp_, ldesc_, rdesc_;
    std::vector<std::vector<int>> words_;

    void finish(int torus_rank, const std::vector<int>& delta);
};

using WeylRef = std::shared_ptr<const WeylDatum>;

// Build from a Cartan-type string ("A2", "B3", ..., products "A1xA1").
// delta is the 0-based image list (empty means identity); torus_rank
// defaults to the rank (adjoint convention) when negative.
WeylRef build_weyl(const std::string& type_spec, const std::vector<int>& delta = {},
                   int torus_rank = -1);

// Build from an explicit Coxeter matrix (entries 1 on the diagonal and
// 2,3,4,6 off it). Finiteness is validated by positive definiteness of the
// associated root-lattice form.
WeylRef build_weyl_from_matrix(const Eigen::MatrixXi& coxeter, const std::vector<int>& delta = {},
                               int torus_rank = -1);

// Group operations as free functions (thin wrappers over WeylElement).
WeylElement mul(const WeylElement& x, const WeylElement& y);
WeylElement inv(const WeylElement& x);
int length(const WeylElement& x);

// Unique minimal-length element of W_Jp x W_J.
WeylElement min_double_coset(NodeSet Jp, const WeylElement& x, NodeSet J);

enum class Side {
    Left,   // ^J W : minimal representatives of W_J \ W
    Right,  // W^J : minimal representatives of W / W_J
};
std::vector<WeylElement> coset_reps(const WeylDatum& d, NodeSet J, Side side);
std::vector<WeylElement> double_reps(const WeylDatum& d, NodeSet Jp, NodeSet J);

// Conjugates {x s_k x^-1 : k in K}. `subset` collects the k whose conjugate
// is again a simple reflection; `all_simple` reports whether that held for
// every k. Non-simple conjugates are dropped, not an error: the descent
// recursion intersects through this, while twisted-pair validation asserts
// the flag.
struct AdImage {
    NodeSet subset;
    bool all_simple = true;
};
AdImage ad_subset(const WeylElement& x, NodeSet K);

// Longest element of W^{delta(J)} (delta taken from the datum).
WeylElement longest_in_W_upper(const WeylDatum& d, NodeSet J);

NodeSet star(const WeylDatum& d, NodeSet J);

// Sum of q^{l(w)} over a set of elements.
CountPolynomial poincare(const std::vector<WeylElement>& elts);
CountPolynomial poincare_parabolic(const WeylDatum& d, NodeSet J);  // over W_J

// Order of the split reductive group with this Weyl datum and torus rank:
// q^{nu_I} (q-1)^{torus_rank} poincare(W).
CountPolynomial order_poly(const WeylDatum& d);
// Order of the Levi of type J: q^{nu_J} (q-1)^{torus_rank} poincare(W_J).
CountPolynomial levi_order_poly(const WeylDatum& d, NodeSet J);

// dim (U_P cap U_Q) \ U_P for P of type J, Q of type K, u = pos(P,Q):
// l(u) + nu_J - nu_{J cap Ad(u)K}, the intersection keeping only simple
// conjugates. Requires u minimal in W_J \ W / W_K.
int unipotent_codim(const WeylDatum& d, NodeSet J, const WeylElement& u, NodeSet K);

}  // namespace gsp
