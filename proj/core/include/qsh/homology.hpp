#pragma once

#include <qsh/filtration.hpp>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qsh {

enum class AlgebraKind { Tensor, Shuffle, Nichols };

/// Knobs shared by the rank-hungry entry points.  When `mode` is unset the
/// engine picks exact arithmetic for n <= 5 and the certified modular path
/// for larger degrees.
struct HomologyOptions {
    std::optional<RankMode> mode;
    unsigned primes = 3;
    std::uint64_t seed = 1;
    bool force = false;
};

/// One-sided resolution complex of a graded algebra in a fixed algebraic
/// degree n.  Chain groups sit at one vertex per composition of n; a group
/// with m parts lives in cohomological degree -m (descending complex, merges)
/// or +m (ascending complex, splits).  Every group is embedded in the word
/// space k^(d^n) by concatenating part bases; `diff` holds the columns of the
/// total differential out of each degree, in chain coordinates.
struct BarComplex {
    int n = 0;
    AlgebraKind kind = AlgebraKind::Shuffle;
    bool ascending = false;
    int alphabet = 0;
    FieldRef field;
    std::vector<std::vector<int>> comps;
    std::vector<Subspace> groups;   // parallel to comps
    std::vector<long> offsets;      // start of each group inside its degree
    std::map<int, std::vector<SparseVec>> diff;

    int parts_to_degree(int m) const { return ascending ? m : -m; }
    long degree_dim(int k) const;
    /// Columns of d: C^k -> C^(k+1); nullptr when the map is zero.
    const std::vector<SparseVec>* columns(int k) const;
};

/// Memory guard shared by the complex builders: 2^(n-1) hypercube vertices
/// times d^n coordinates must stay within budget unless force is set.
/// Pipelines call this up front for every degree they will visit, so an
/// oversized request refuses before any work happens.
void guard_complex_size(int d, int n, bool force);

BarComplex build_bar(const BraidedVectorSpace& V, AlgebraKind kind, int n, bool force = false);
BarComplex build_cobar(const BraidedVectorSpace& V, AlgebraKind kind, int n, bool force = false);

/// Composes consecutive differentials and throws GateError on any nonzero
/// entry.  Cheap relative to rank work; run on every freshly built complex.
void check_d_squared(const BarComplex& bc);

/// Cohomology dimensions per degree, keyed by the complex's own grading.
std::map<int, long> complex_homology(const BarComplex& bc, const HomologyOptions& opt = {});

/// Dimensions carrying (homological degree m, algebraic degree n, weight w).
/// Unweighted runs keep has_weight false and w = 0 throughout.
struct TriGradedDims {
    bool has_weight = false;
    std::map<std::array<int, 3>, long> entries;
    long at(int m, int n, int w = 0) const;
};

/// Tor_{m,n} tables with Tor_{m,n} = H^(-m) of the degree-n descending
/// complex; includes the degree (0,0) unit entry.
TriGradedDims tor_dims(const BraidedVectorSpace& V, AlgebraKind kind, int nmax,
                       const HomologyOptions& opt = {});

/// dim of the top corner Tor_{n,n} alone: intersection of the kernels of all
/// adjacent multiplication columns, much cheaper than the full table.
long top_tor_dim(const BraidedVectorSpace& V, AlgebraKind kind, int n,
                 const HomologyOptions& opt = {});

/// Descending complex with the level structure induced on every chain group:
/// level s of a product of parts is the sum over part-level splittings
/// summing to s.  Built levels are ascending contiguous per degree.
struct FilteredBarComplex {
    BarComplex bc;
    std::map<int, std::vector<std::pair<int, Subspace>>> levels;
    int pmin = 0;
    int pmax = 0;

    /// Level subspace in chain coordinates; empty below, clamped above.
    const Subspace* level(int k, int s) const;
    long level_dim(int k, int s) const;
};

/// The table's side picks the algebra: A-side tables filter the shuffle
/// algebra, T-side tables the tensor algebra.  Throws GateError when some
/// differential fails to preserve the induced levels.
FilteredBarComplex filtered_bar(const BraidedVectorSpace& V, const FiltrationTable& table,
                                int n, bool force = false);

/// Cohomology of one associated-graded column of the filtered complex,
/// computed directly from quotient ranks (independent of the page towers).
std::map<int, long> gr_homology(const FilteredBarComplex& fc, int p);

/// Page data of the filtration spectral sequence.  pages[r-1] holds the
/// dims of E_r^{p,k} keyed by (filtration index p, cohomological degree k);
/// dr_ranks[r-1] the rank of d_r leaving (p,k).  Dims satisfy
/// dim E_{r+1} = dim E_r - rank out - rank in (gated internally).
struct SpectralSequencePages {
    int pmin = 0;
    int pmax = 0;
    std::vector<std::map<std::pair<int, int>, long>> pages;
    std::vector<std::map<std::pair<int, int>, long>> dr_ranks;
    std::map<std::pair<int, int>, long> einf;
    int stabilized_at = 1;
    /// Nonzero differentials on pages r >= 2, reported not errored: the
    /// expected collapse pattern allows page-1 differentials only.
    std::vector<std::string> findings;
};

SpectralSequencePages spectral_sequence(const FilteredBarComplex& fc);

} // namespace qsh
