#pragma once

#include <qsh/linalg.hpp>
#include <qsh/scalar.hpp>

#include <string>
#include <vector>

namespace qsh {

/// Finite rack on {0..size-1}: act[a][b] = a^b ("a acted on by b").
/// Axioms: (c^a)^(b^a) = (c^b)^a for all a,b,c, and for each a the map
/// c -> c^a is a bijection.  Conjugation racks g^h = h^-1 g h satisfy both.
struct Rack {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> act;

    int size() const { return int(act.size()); }
    void validate() const; ///< throws FieldError on a broken table
};

/// Finite group, either from a full multiplication table or generated by
/// permutations.  Element 0 is the identity; labels use cycle notation when
/// the group was built from permutations.
class GroupData {
public:
    static GroupData from_permutations(const std::vector<std::vector<int>>& one_line_gens);
    static GroupData from_table(const std::vector<std::vector<int>>& table);

    int size() const { return int(mul_.size()); }
    int identity() const { return 0; }
    int multiply(int a, int b) const { return mul_[std::size_t(a)][std::size_t(b)]; }
    int inverse(int a) const { return inv_[std::size_t(a)]; }
    /// b^-1 a b
    int conjugate(int a, int b) const;
    std::vector<int> conjugacy_class(int g) const; ///< sorted element indices
    const std::string& label(int g) const { return labels_[std::size_t(g)]; }
    int element_by_label(const std::string& s) const; ///< -1 when absent

private:
    GroupData() = default;
    void finish_validate();
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    std::vector<std::string> labels_;
};

/// Braided vector space (V, R): basis e_0..e_{d-1} and an invertible solution
/// of the Yang-Baxter equation on V ox V, stored column-sparse over the pair
/// index i*d + j.  Constructors validate their inputs and throw FieldError.
class BraidedVectorSpace {
public:
    int dim() const { return d_; }
    const FieldRef& field() const { return F_; }
    const std::vector<std::string>& labels() const { return labels_; }
    int label_index(const std::string& s) const;
    /// Column p = i*d+j holds R(e_i ox e_j) as pairs (k*d+l, coeff).
    const std::vector<SparseVec>& r_matrix() const { return cols_; }

    /// R(e_i ox e_j) = e_j ox e_i.
    static BraidedVectorSpace trivial(int d, const FieldRef& F);
    /// R(e_i ox e_j) = q[i][j] e_j ox e_i; all q[i][j] nonzero.
    static BraidedVectorSpace diagonal(const std::vector<std::vector<Scalar>>& q);
    /// R(e_a ox e_b) = x[a][b] (e_b ox e_{a^b}).
    static BraidedVectorSpace rack(const Rack& rk, const std::vector<std::vector<Scalar>>& cocycle);
    static BraidedVectorSpace rack_constant(const Rack& rk, const Scalar& x);
    /// Conjugation rack on a union of conjugacy classes with constant cocycle.
    static BraidedVectorSpace group_class(const GroupData& G, const std::vector<int>& class_reps,
                                          const Scalar& cocycle);
    /// Raw columns; with validate=true checks invertibility and Yang-Baxter.
    static BraidedVectorSpace from_matrix(int d, std::vector<SparseVec> columns, const FieldRef& F,
                                          std::vector<std::string> labels, bool validate = true);

    /// Dual braided space on the dual basis: the adjoint braiding R^T, the
    /// unique choice for which the canonical pairing intertwines the lifted
    /// braidings, <R*_sigma w, v> = <w, R_{sigma^-1} v>, and the tensor
    /// algebra of the dual is the graded dual of the shuffle algebra.
    BraidedVectorSpace dual() const;

private:
    BraidedVectorSpace(int d, FieldRef F, std::vector<std::string> labels,
                       std::vector<SparseVec> cols);
    int d_ = 0;
    FieldRef F_;
    std::vector<std::string> labels_;
    std::vector<SparseVec> cols_;
};

/// Direct check of (R ox 1)(1 ox R)(R ox 1) = (1 ox R)(R ox 1)(1 ox R) on V^3.
bool yang_baxter_check(const BraidedVectorSpace& V);
/// Rank test of the braiding matrix.
bool invertible(const BraidedVectorSpace& V);

/// Canonical cycle notation for a 0-based one-line permutation, 1-based
/// display: "(1 2 3)(4 5)"; identity prints "()".
std::string cycle_string(const std::vector<int>& one_line);

} // namespace qsh
