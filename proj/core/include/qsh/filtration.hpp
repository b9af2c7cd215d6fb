#pragma once

#include <qsh/algebra.hpp>

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace qsh {

enum class FiltKind { WordLength, WeightedWordLength, Weight };
enum class FiltSide { OnA, OnT };

/// An increasing filtration of each graded piece V^{ox n}, n = 0..nmax.
/// Levels are stored with contiguous integer indices; anything below the
/// lowest stored index is the zero subspace and the highest stored level is
/// the full space.
struct FiltrationTable {
    FiltKind kind = FiltKind::WordLength;
    FiltSide side = FiltSide::OnA;
    int alphabet = 0;
    std::vector<std::vector<std::pair<int, Subspace>>> levels;

    int nmax() const { return int(levels.size()) - 1; }
    int min_index(int n) const;
    int max_index(int n) const;
    /// Level at index s, or nullptr when s is below the stored range.
    const Subspace* level(int n, int s) const;
    long level_dim(int n, int s) const;
    long gr_dim(int n, int s) const;
    /// Nonzero graded dimensions of degree n, keyed by filtration index.
    std::map<int, long> gr_row(int n) const;
};

/// Structural gates: contiguous ascending indices, nested levels, top level
/// spans everything, graded dimensions sum to the full dimension.
void validate_table(const FiltrationTable& t);

/// Increasing word-length filtration of the shuffle algebra: level c of
/// degree n is spanned by shuffle products of exactly n-c words of positive
/// length.  Computed by the product recursion.
FiltrationTable wordlength_filtration(const BraidedVectorSpace& V, int nmax);

/// Generalization weighting each part r with cost f[r] (f[1] = 0 and f
/// superadditive): level c is spanned by products over compositions of total
/// cost at most c.  Computed by composition enumeration; f[r] = r-1 recovers
/// the word-length filtration through an independent code path.
FiltrationTable weighted_wordlength_filtration(const BraidedVectorSpace& V,
                                               const std::vector<long>& f, int nmax);

/// Elements killed by every interior coproduct component (p,q), p+q = n,
/// 0 < p < n, of the braided tensor coalgebra carried by W.
Subspace primitives(const BraidedVectorSpace& W, int n);

/// Weight filtration of the tensor algebra carried by W (weights <= 0):
///   W_w T_n = mu(W_w S) + (mu(W_{w+1} S) and-intersect P_n)
/// where S runs over interior splits T_p ox T_q with the sum-of-weights
/// filtration and mu is concatenation.  Degrees 0 and 1 sit in weight 0.
FiltrationTable weight_filtration_T(const BraidedVectorSpace& W, int nmax);

/// Weight filtration of the shuffle algebra (weights >= 0), defined by
/// W_w A_n = complement of W_{-w-1} T_n under the dual-basis pairing, with T
/// built on the dual braided space.  Level 0 is the Nichols subalgebra.
FiltrationTable weight_filtration_A(const BraidedVectorSpace& V, int nmax);

/// Alternating average (1/2N) sum_{j<2N} (-1)^j R^j (x ox y) where R crosses
/// the two blocks and 2N is the least even period, searched up to `bound`
/// applications.  Returns nothing if no period is found; the result is
/// primitive whenever x and y are.
std::optional<SparseVec> brprim2(const BraidedVectorSpace& W, const SparseVec& x, int p,
                                 const SparseVec& y, int q, int bound = 64);

/// Average weight (1/dim T_n) sum_w w * dim Gr_w of a tensor-side table.
mpq_class avg_weight(const FiltrationTable& tT, int n);

struct WeightStatistic {
    std::vector<mpq_class> a;          // a[n] for n = 0..nmax
    std::vector<mpq_class> a_over_n;   // a[n]/n for n = 1..nmax
    mpq_class c_estimate;              // -inf_n a(n)/n over the computed range
    bool superadditive_ok = false;     // a(nm) <= m a(n) on all computed pairs
    bool monotone_ok = false;          // a(n+1) <= a(n)
};

/// Average-weight statistics of the tensor algebra dual to V, with the
/// concentration constant estimated from the computed range (an estimate of
/// the limit, not a proof of it).
WeightStatistic concentration_report(const BraidedVectorSpace& V, int nmax);

/// Check that every interior coproduct component maps W_w T_n into the
/// sum-of-weights filtration of the splits.  True means the weight
/// filtration is a coalgebra (hence bialgebra) filtration in degree n.
bool weight_bialgebra_check(const BraidedVectorSpace& W, const FiltrationTable& tT, int n);

/// Dimensions indexed by (algebraic degree, weight).
using Bigraded = std::map<std::pair<int, int>, long>;

/// Two-variable Hilbert series division a / b truncated at degree nmax.
/// Requires b to have constant term 1 and no other degree-0 terms; throws
/// GateError if any quotient coefficient is negative, since callers use this
/// as a factorization gate.
Bigraded hilbert_quotient(const Bigraded& a, const Bigraded& b, int nmax);

struct BoundConstants {
    mpq_class delta;   // 1/(m+1) from the top degree m of the Nichols algebra
    mpq_class c;       // max of i/n over cohomology generators (n-i, n)
    mpq_class epsilon; // delta/(1-c)
};

/// Constants of the weight lower bound w >= epsilon (i - c n) governing the
/// stable range; generators are given as (n-i, n) pairs with n-i > 0.
BoundConstants bound_constants(int m, const std::vector<std::pair<int, int>>& gens);

/// Number of Lyndon words of length n over d letters.
long lyndon_count(int d, int n);

} // namespace qsh
