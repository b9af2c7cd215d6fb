#include <qsh/hurwitz.hpp>

#include <algorithm>
#include <set>

namespace qsh {

namespace {

BraidedVectorSpace class_space(const GroupData& G, const std::vector<int>& cls) {
    FieldRef Q = FieldContext::rational();
    return BraidedVectorSpace::group_class(G, cls, Scalar::integer(Q, -1));
}

bool generates_group(const GroupData& G, const std::vector<int>& tuple) {
    std::set<int> seen = {G.identity()};
    std::vector<int> frontier = {G.identity()};
    while (!frontier.empty()) {
        int h = frontier.back();
        frontier.pop_back();
        for (int g : tuple) {
            int hg = G.multiply(h, g);
            if (seen.insert(hg).second) frontier.push_back(hg);
        }
    }
    return long(seen.size()) == G.size();
}

} // namespace

std::map<std::pair<int, int>, long> hurwitz_betti(const GroupData& G,
                                                  const std::vector<int>& cls, int nmax,
                                                  const HomologyOptions& opt) {
    BraidedVectorSpace V = class_space(G, cls);
    for (int n = 1; n <= nmax; ++n) guard_complex_size(V.dim(), n, opt.force);
    TriGradedDims t = tor_dims(V, AlgebraKind::Shuffle, nmax, opt);
    std::map<std::pair<int, int>, long> out;
    for (const auto& [key, dim] : t.entries) {
        int m = key[0], n = key[1];
        if (n == 0) continue;
        out[{n - m, n}] = dim;
    }
    return out;
}

HurwitzReport weight_decomposition(const GroupData& G, const std::vector<int>& cls, int nmax,
                                   const HomologyOptions& opt) {
    BraidedVectorSpace V = class_space(G, cls);
    HurwitzReport rep;
    rep.group = "order " + std::to_string(G.size());
    rep.class_labels = V.labels();
    rep.nmax = nmax;
    rep.betti = hurwitz_betti(G, cls, nmax, opt);
    FiltrationTable table = weight_filtration_A(V, nmax);
    for (int n = 1; n <= nmax; ++n) {
        OrbitSummary os = orbit_enumerate(G, cls, n);
        rep.orbit_counts[n] = os.orbit_count;
        long full = 0;
        for (const auto& t : os.representatives)
            if (generates_group(G, t)) ++full;
        rep.full_monodromy_orbits[n] = full;

        auto b0 = rep.betti.find({0, n});
        if ((b0 == rep.betti.end() ? 0 : b0->second) != os.orbit_count)
            throw GateError("component count does not match the braid orbit count at degree " +
                            std::to_string(n));

        FilteredBarComplex fc = filtered_bar(V, table, n, opt.force);
        SpectralSequencePages ss = spectral_sequence(fc);
        std::map<int, long> sums; // i -> total over weights
        for (const auto& [pk, dim] : ss.einf) {
            HurwitzRow row;
            row.n = n;
            row.m = -pk.second;
            row.i = n - row.m;
            row.w = pk.first;
            row.frob_weight = 2 * n - row.i - row.w;
            row.dim = dim;
            rep.rows.push_back(row);
            sums[row.i] += dim;
        }
        for (int i = 0; i < n; ++i) {
            auto bit = rep.betti.find({i, n});
            long want = bit == rep.betti.end() ? 0 : bit->second;
            auto sit = sums.find(i);
            long got = sit == sums.end() ? 0 : sit->second;
            if (want != got)
                throw GateError("weight decomposition does not sum to the Betti number at (i=" +
                                std::to_string(i) + ", n=" + std::to_string(n) + ")");
        }
        for (const auto& f : ss.findings)
            rep.findings.push_back("n=" + std::to_string(n) + ": " + f);
    }
    std::sort(rep.rows.begin(), rep.rows.end(), [](const HurwitzRow& a, const HurwitzRow& b) {
        return std::tie(a.n, a.i, a.w) < std::tie(b.n, b.i, b.w);
    });
    return rep;
}

std::vector<std::string> check_weight_bound(HurwitzReport& rep, const BoundConstants& bc,
                                            bool strict_s3) {
    std::vector<std::string> failures;
    for (auto& row : rep.rows) {
        bool eps_hyp = mpq_class(row.i) > bc.c * mpq_class(row.n);
        bool strict_hyp = strict_s3 && row.i > 2 * (row.n / 6);
        if (!eps_hyp && !strict_hyp) {
            row.bound = "n/a";
            continue;
        }
        bool ok = true;
        if (eps_hyp) {
            mpq_class slack = mpq_class(row.i) - bc.c * mpq_class(row.n);
            mpq_class rhs = mpq_class(2 * row.n - row.i) - bc.epsilon * slack;
            if (mpq_class(row.frob_weight) > rhs) ok = false;
        }
        if (strict_hyp && row.frob_weight >= 2 * row.n - row.i) ok = false;
        row.bound = ok ? "pass" : "fail";
        if (!ok)
            failures.push_back("n=" + std::to_string(row.n) + " i=" + std::to_string(row.i) +
                               " frobenius weight " + std::to_string(row.frob_weight) +
                               " exceeds the bound");
    }
    return failures;
}

NicholsProfile nichols_profile(const BraidedVectorSpace& V, int bound) {
    NicholsProfile p;
    p.dims.push_back(1);
    p.total = 1;
    for (int n = 1; n <= bound; ++n) {
        long dn = nichols_subspace(V, n).dim();
        p.dims.push_back(dn);
        if (dn == 0) {
            p.finite = true;
            break;
        }
        p.max_degree = n;
        p.total += dn;
    }
    return p;
}

} // namespace qsh
