#pragma once

#include <qsh/scalar.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace qsh {

using Index = std::int64_t;

/// Sparse vector over an exact field: entries sorted by strictly increasing
/// index, no stored zeros.  The ambient dimension lives with the container
/// using the vector, not the vector itself.
using SparseVec = std::vector<std::pair<Index, Scalar>>;

SparseVec sv_unit(Index i, const FieldRef& F);
/// Merge unsorted terms (duplicates summed, zeros dropped).
SparseVec sv_from_terms(std::vector<std::pair<Index, Scalar>> terms, const FieldRef& F);
/// y += c * x, keeping canonical form.
void sv_add_scaled(SparseVec& y, const Scalar& c, const SparseVec& x);
SparseVec sv_scaled(const Scalar& c, const SparseVec& x);
Scalar sv_coeff(const SparseVec& v, Index i, const FieldRef& F);
Scalar sv_dot(const SparseVec& a, const SparseVec& b, const FieldRef& F);
/// Shift every index by the given offset.
SparseVec sv_shift(const SparseVec& v, Index offset);

/// Subspace of k^ambient kept in reduced row echelon form: pivot columns
/// strictly increasing, pivot entries 1, pivot columns eliminated from every
/// other row.  RREF is unique per row space, so equality of spans is equality
/// of bases and all derived bases are deterministic.
class Subspace {
public:
    Subspace(FieldRef F, Index ambient);

    const FieldRef& field() const { return F_; }
    Index ambient() const { return ambient_; }
    int dim() const { return int(rows_.size()); }
    const std::vector<SparseVec>& basis() const { return rows_; }
    const std::vector<Index>& pivots() const { return pivots_; }

    /// Residue of v modulo the subspace (forward elimination only).
    SparseVec reduce(SparseVec v) const;
    /// Insert a vector; returns true when the dimension grew.
    bool insert(SparseVec v);
    bool contains(const SparseVec& v) const;
    bool equals(const Subspace& o) const;

    static Subspace sum(const Subspace& a, const Subspace& b);
    /// Zassenhaus: echelonize rows (u|u) and (w|0); rows with pivot in the
    /// right block form a basis of the intersection.
    static Subspace intersect(const Subspace& a, const Subspace& b);
    /// Null space of the basis matrix: all v with <row, v> = 0.
    Subspace orthogonal_complement() const;

private:
    FieldRef F_;
    Index ambient_ = 0;
    std::vector<SparseVec> rows_;
    std::vector<Index> pivots_;
};

/// Rank of the map whose j-th basis image is cols[j].
long rank_of_columns(const std::vector<SparseVec>& cols, const FieldRef& F);
/// Kernel basis of the same map, as coefficient vectors over the column
/// index.  Each vector carries entry 1 at its own free column, so the family
/// is independent by construction and deterministic.
std::vector<SparseVec> kernel_of_columns(const std::vector<SparseVec>& cols, const FieldRef& F);
/// Kernel of the map u_j -> images[j] restricted to span(domain_basis),
/// returned as vectors in the domain's ambient space.
std::vector<SparseVec> kernel_through(const std::vector<SparseVec>& domain_basis,
                                      const std::vector<SparseVec>& images,
                                      const FieldRef& F);

enum class RankMode { Exact, Modular };

/// Outcome of a rank computation.  In modular mode the lower bound is always
/// certified (the pivot minor found mod ell has nonzero determinant mod ell,
/// hence nonzero determinant exactly); `verified` additionally requires the
/// upper bound, established by lifting a kernel basis through CRT + rational
/// reconstruction and checking M v = 0 in exact arithmetic.  When lifting
/// fails the result keeps the consensus rank with verified = false and an
/// explanatory note.
struct RankReport {
    long rank = 0;
    bool verified = false;
    unsigned primes_agreeing = 0;
    std::string note;
};

RankReport certified_rank(const std::vector<SparseVec>& cols, Index rows,
                          const FieldRef& F, RankMode mode,
                          unsigned num_primes, std::uint64_t seed);

} // namespace qsh
