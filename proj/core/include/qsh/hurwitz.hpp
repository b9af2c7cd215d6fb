#pragma once

#include <qsh/filtration.hpp>
#include <qsh/homology.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qsh {

/// Betti numbers of the branched-cover configuration spaces attached to a
/// conjugation class: entry (j, n) is dim H^j of the degree-n space, computed
/// as the homological degree n-j piece of the shuffle-algebra resolution on
/// the class braiding with constant cocycle -1.  Degrees run n = 1..nmax and
/// only nonzero entries are stored; the (0, n) entry counts connected
/// components and must agree with the braid orbit count.
std::map<std::pair<int, int>, long> hurwitz_betti(const GroupData& G,
                                                  const std::vector<int>& cls, int nmax,
                                                  const HomologyOptions& opt = {});

/// One weight-graded cohomology entry.  Index conventions, fixed once so the
/// three gradings never drift: m = n - i is homological, i cohomological,
/// w >= 0 the algebra weight, frob_weight = 2n - i - w the weight seen on the
/// compactly-supported side.
struct HurwitzRow {
    int n = 0;
    int i = 0;
    int m = 0;
    int w = 0;
    int frob_weight = 0;
    long dim = 0;
    std::string bound = "n/a"; // "pass" | "fail" | "n/a", set by check_weight_bound
};

struct HurwitzReport {
    std::string group;                     // order tag of the group
    std::vector<std::string> class_labels; // the closed class, element labels
    int nmax = 0;
    std::map<std::pair<int, int>, long> betti; // (j, n) -> b_j, nonzero only
    std::map<int, long> orbit_counts;          // n -> braid orbit count
    std::map<int, long> full_monodromy_orbits; // n -> orbits whose tuple generates G
    std::vector<HurwitzRow> rows;              // nonzero graded dims, sorted by (n, i, w)
    std::vector<std::string> findings;         // late spectral differentials, per degree
};

/// Full pipeline: Betti numbers, braid orbit counts with full-monodromy
/// tags, and the weight decomposition read off the limit page of the
/// weight-filtered spectral sequence.  Two internal gates throw GateError:
/// b_0 must match the orbit count, and at each (i, n) the graded dims must
/// sum to b_i.
HurwitzReport weight_decomposition(const GroupData& G, const std::vector<int>& cls, int nmax,
                                   const HomologyOptions& opt = {});

/// Verify the weight bounds row by row; sets row.bound and returns failure
/// descriptions (empty means nothing failed).  The epsilon bound
///   frob_weight <= (2n - i) - epsilon (i - c n)
/// is asserted when i > c n; with strict_s3 set, additionally
///   frob_weight < 2n - i  whenever i > 2 floor(n/6).
/// Rows outside every hypothesis keep "n/a".
std::vector<std::string> check_weight_bound(HurwitzReport& rep, const BoundConstants& bc,
                                            bool strict_s3 = false);

struct NicholsProfile {
    bool finite = false;    // a zero graded piece appeared within the bound
    int max_degree = 0;     // top degree with a nonzero piece
    long total = 0;         // sum of dims through max_degree
    std::vector<long> dims; // from degree 0; ends at the first zero or at the bound
};

/// Graded dimensions of the degree-1-generated subalgebra, scanning degrees
/// up to `bound`.  finite=false means no vanishing degree was observed.
NicholsProfile nichols_profile(const BraidedVectorSpace& V, int bound = 8);

} // namespace qsh
