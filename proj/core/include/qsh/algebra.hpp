#pragma once

#include <qsh/combinat.hpp>
#include <qsh/linalg.hpp>

namespace qsh {

/// Concatenate u (degree p) with v (degree q) over an alphabet of size d.
/// Pure index arithmetic; no braiding involved.
SparseVec concat_product(int d, const SparseVec& u, int p, const SparseVec& v, int q);

/// Sum of the braid lifts of all (p,q)-shuffles applied to the window of
/// width p+q starting at tensor position `offset` of a degree-n element.
SparseVec shuffle_window(const BraidedVectorSpace& V, const SparseVec& v, int n,
                         int offset, int p, int q);

/// Same with the inverse shuffles; this is the (p,q) coproduct component of
/// the braided tensor coalgebra when applied at offset 0 with p+q = n.
SparseVec unshuffle_window(const BraidedVectorSpace& V, const SparseVec& v, int n,
                           int offset, int p, int q);

/// Quantum shuffle product: concatenate, then sum over (p,q)-shuffle lifts.
/// Associative; the degree-0 line is the unit.
SparseVec shuffle_product(const BraidedVectorSpace& V, const SparseVec& u, int p,
                          const SparseVec& v, int q);

/// Columns of the degree-n braid symmetrizer sum_{sigma in S_n} R_sigma,
/// indexed by basis words of V^{ox n}.
std::vector<SparseVec> symmetrizer_columns(const BraidedVectorSpace& V, int n);

/// Image of the braid symmetrizer in degree n.  Inside the shuffle algebra
/// this is the degree-n piece of the subalgebra generated by degree 1.
Subspace nichols_subspace(const BraidedVectorSpace& V, int n);

/// The same space computed the other way: iterated left shuffle products of
/// the degree-1 basis vectors.  Route equality is a structural cross-check.
Subspace nichols_by_left_products(const BraidedVectorSpace& V, int n);

/// Rank of the degree-n symmetrizer with a choice of certification mode.
RankReport nichols_rank(const BraidedVectorSpace& V, int n, RankMode mode,
                        int num_primes = 3, std::uint64_t seed = 1);

} // namespace qsh
