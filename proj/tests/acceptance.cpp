// End-to-end acceptance suite.  Each numbered block checks one published
// contract of the engine and prints a single PASS/FAIL line; the exit code is
// the number of failed blocks.  Everything here recomputes its expectations
// from scratch or from frozen literals, never from the code paths under test.

#include <qsh/hurwitz.hpp>
#include <qsh/serial.hpp>

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <utility>
#include <vector>

using namespace qsh;

namespace {

FieldRef Q = FieldContext::rational();

struct Criterion {
    int id;
    std::string title;
    std::vector<std::string> failures;
    void require(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

int finish(Criterion& c, std::chrono::steady_clock::time_point t0) {
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  %2d  %-68s (%.1fs)\n", c.failures.empty() ? "PASS" : "FAIL", c.id,
                c.title.c_str(), secs);
    for (const auto& f : c.failures) std::printf("        %s\n", f.c_str());
    return c.failures.empty() ? 0 : 1;
}

BraidedVectorSpace cube_root_line() {
    FieldRef K = FieldContext::cyclotomic(3);
    return BraidedVectorSpace::diagonal({{Scalar::zeta(K)}});
}

GroupData sym3() { return GroupData::from_permutations({{2, 1, 3}, {1, 3, 2}}); }

std::vector<int> transpositions(const GroupData& G) {
    std::vector<int> cls;
    int rep = G.element_by_label("(1 2)");
    for (int g = 0; g < G.size(); ++g)
        if (G.conjugacy_class(g) == G.conjugacy_class(rep)) cls.push_back(g);
    return cls;
}

BraidedVectorSpace transposition_space(long coeff) {
    GroupData G = sym3();
    return BraidedVectorSpace::group_class(G, transpositions(G), Scalar::integer(Q, coeff));
}

// expected table rows as (gr index, first n, dims...)
using RowSpec = std::vector<std::pair<int, std::pair<int, std::vector<long>>>>;

void check_table(Criterion& c, const FiltrationTable& t, int nmax, const RowSpec& rows,
                 const std::string& tag) {
    std::map<std::pair<int, int>, long> want;
    for (const auto& [idx, rest] : rows) {
        int n = rest.first;
        for (long dim : rest.second) want[{idx, n++}] = dim;
    }
    std::map<std::pair<int, int>, long> got;
    for (int n = 0; n <= nmax; ++n)
        for (const auto& [idx, dim] : t.gr_row(n)) got[{idx, n}] = dim;
    if (got != want) {
        for (const auto& [key, dim] : want)
            if (!got.count(key) || got[key] != dim)
                c.require(false, tag + ": expected gr(" + std::to_string(key.first) + "," +
                                     std::to_string(key.second) + ") = " + std::to_string(dim));
        for (const auto& [key, dim] : got)
            if (!want.count(key))
                c.require(false, tag + ": unexpected gr(" + std::to_string(key.first) + "," +
                                     std::to_string(key.second) + ") = " + std::to_string(dim));
    }
}

long power(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

mpq_class frac(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

} // namespace

int main() {
    int failed = 0;
    auto Vz = cube_root_line();
    auto V3 = BraidedVectorSpace::trivial(3, Q);
    auto Vp = transposition_space(1);
    auto Vm = transposition_space(-1);
    GroupData G = sym3();
    std::vector<int> cls = transpositions(G);

    // 1: one-letter alphabet at a cube root of unity, word-length table to n = 8.
    {
        Criterion c{1, "cube-root line: shifted word-length dims through degree 8"};
        auto t0 = std::chrono::steady_clock::now();
        auto t = wordlength_filtration(Vz, 8);
        validate_table(t);
        for (int n = 0; n <= 8; ++n) {
            std::map<int, long> want{{2 * (n / 3), 1}};
            c.require(t.gr_row(n) == want, "degree " + std::to_string(n) +
                                               " not concentrated at index " +
                                               std::to_string(2 * (n / 3)));
        }
        failed += finish(c, t0);
    }

    // 2: three unbraided letters, word-length table to n = 5.
    {
        Criterion c{2, "trivial rank 3: word-length table, column sums, Lyndon diagonal"};
        auto t0 = std::chrono::steady_clock::now();
        auto t = wordlength_filtration(V3, 5);
        validate_table(t);
        check_table(c, t, 5,
                    {{0, {0, {1, 3, 6, 10, 15, 21}}},
                     {1, {2, {3, 9, 18, 30}}},
                     {2, {3, {8, 30, 66}}},
                     {3, {4, {18, 78}}},
                     {4, {5, {48}}}},
                    "rank 3");
        for (int n = 0; n <= 5; ++n) {
            long sum = 0;
            for (const auto& [idx, dim] : t.gr_row(n)) sum += dim;
            c.require(sum == power(3, n), "column sum at degree " + std::to_string(n));
            if (n >= 1)
                c.require(t.gr_dim(n, n - 1) == lyndon_count(3, n),
                          "diagonal vs Lyndon count at degree " + std::to_string(n));
        }
        failed += finish(c, t0);
    }

    // 3: transposition class, both cocycle signs, word-length tables to n = 5.
    {
        Criterion c{3, "transposition class, both signs: word-length tables through degree 5"};
        auto t0 = std::chrono::steady_clock::now();
        auto tp = wordlength_filtration(Vp, 5);
        validate_table(tp);
        check_table(c, tp, 5,
                    {{0, {0, {1, 3, 9, 27, 79, 225}}}, {3, {4, {2, 12}}}, {4, {5, {6}}}},
                    "cocycle +1");
        auto tm = wordlength_filtration(Vm, 5);
        validate_table(tm);
        check_table(c, tm, 5,
                    {{0, {0, {1, 3, 4, 3, 1}}},
                     {1, {2, {5, 21, 42, 51}}},
                     {2, {3, {3, 32, 132}}},
                     {3, {4, {6, 51}}},
                     {4, {5, {9}}}},
                    "cocycle -1");
        failed += finish(c, t0);
    }

    // 4: weight tables for the cube-root line (n <= 8) and the +1 class (n <= 5).
    {
        Criterion c{4, "weight tables: cube-root line to degree 8, +1 class to degree 5"};
        auto t0 = std::chrono::steady_clock::now();
        auto tz = weight_filtration_A(Vz, 8);
        validate_table(tz);
        for (int n = 0; n <= 8; ++n) {
            std::map<int, long> want{{n / 3, 1}};
            c.require(tz.gr_row(n) == want,
                      "line weight at degree " + std::to_string(n));
        }
        auto tw = weight_filtration_A(Vp, 5);
        validate_table(tw);
        check_table(c, tw, 5,
                    {{0, {0, {1, 3, 9, 27, 79, 225}}}, {1, {4, {2, 18}}}},
                    "+1 weight");
        failed += finish(c, t0);
    }

    // 5: average-weight statistics, exact values at degree 5 plus shape flags.
    {
        Criterion c{5, "average-weight report: exact a(5)/5, decimal form, monotone flags"};
        auto t0 = std::chrono::steady_clock::now();
        auto sp = concentration_report(Vp, 5);
        auto sm = concentration_report(Vm, 5);
        c.require(sp.a_over_n.size() == 5 && sm.a_over_n.size() == 5, "report length");
        c.require(sp.a_over_n.back() == frac(-18, 1215), "+1 a(5)/5 != -18/1215");
        c.require(sm.a_over_n.back() == frac(-504, 1215), "-1 a(5)/5 != -504/1215");
        c.require(render_rational(sp.a_over_n.back(), true) == "-0.0148148",
                  "+1 decimal rendering");
        c.require(render_rational(sm.a_over_n.back(), true) == "-0.414815",
                  "-1 decimal rendering");
        c.require(sp.monotone_ok && sp.superadditive_ok, "+1 shape flags");
        c.require(sm.monotone_ok && sm.superadditive_ok, "-1 shape flags");
        failed += finish(c, t0);
    }

    // 6: degree-1-generated profile of the -1 class; weight-0 level equals that
    // subalgebra degreewise as subspaces.
    FiltrationTable wtm; // reused by block 10
    {
        Criterion c{6, "-1 class: subalgebra profile 1,3,4,3,1 and weight-0 level identity"};
        auto t0 = std::chrono::steady_clock::now();
        auto prof = nichols_profile(Vm, 8);
        c.require(prof.finite, "profile not finite");
        c.require(prof.max_degree == 4, "top degree != 4");
        c.require(prof.total == 12, "total dim != 12");
        c.require(prof.dims == std::vector<long>({1, 3, 4, 3, 1, 0}), "graded dims");
        wtm = weight_filtration_A(Vm, 5);
        validate_table(wtm);
        for (int n = 0; n <= 5; ++n) {
            const Subspace* w0 = wtm.level(n, 0);
            Subspace nich = nichols_subspace(Vm, n);
            bool same = w0 ? w0->equals(nich) : nich.dim() == 0;
            c.require(same, "weight-0 level vs subalgebra at degree " + std::to_string(n));
        }
        failed += finish(c, t0);
    }

    // 7: bound constants from top degree 4 and generator bidegrees.
    {
        Criterion c{7, "bound constants (1/5, 1/3, 3/10) from degree-4 generator data"};
        auto t0 = std::chrono::steady_clock::now();
        auto bc = bound_constants(4, {{1, 1}, {1, 1}, {1, 1}, {4, 6}});
        c.require(bc.delta == frac(1, 5), "delta != 1/5");
        c.require(bc.c == frac(1, 3), "c != 1/3");
        c.require(bc.epsilon == frac(3, 10), "epsilon != 3/10");
        failed += finish(c, t0);
    }

    // 8: structural gates on everything the suite constructs.
    {
        Criterion c{8, "gates: braid relation, squared differential, limit-page totals"};
        auto t0 = std::chrono::steady_clock::now();
        for (const auto* V : {&Vz, &V3, &Vp, &Vm})
            c.require(yang_baxter_check(*V), "braid relation");
        for (const auto* V : {&Vz, &V3, &Vp, &Vm})
            for (auto kind : {AlgebraKind::Tensor, AlgebraKind::Shuffle, AlgebraKind::Nichols})
                for (int n = 1; n <= 4; ++n) {
                    try {
                        check_d_squared(build_bar(*V, kind, n));
                        check_d_squared(build_cobar(*V, kind, n));
                    } catch (const GateError& e) {
                        c.require(false, std::string("d^2 gate: ") + e.what());
                    }
                }
        for (const auto* V : {&Vz, &Vm})
            for (int n = 5; n <= 6; ++n) {
                try {
                    check_d_squared(build_bar(*V, AlgebraKind::Shuffle, n));
                } catch (const GateError& e) {
                    c.require(false, std::string("degree-6 d^2 gate: ") + e.what());
                }
            }
        // limit page of a word-length filtered run resums to plain homology
        auto table = wordlength_filtration(Vz, 4);
        for (int n = 1; n <= 4; ++n) {
            auto fc = filtered_bar(Vz, table, n);
            auto ss = spectral_sequence(fc);
            auto H = complex_homology(fc.bc);
            for (int m = 1; m <= n; ++m) {
                long total = 0;
                for (const auto& [pk, dim] : ss.einf)
                    if (pk.second == -m) total += dim;
                long want = H.count(-m) ? H[-m] : 0;
                c.require(total == want, "limit-page sum at degree " + std::to_string(n) +
                                             ", slot " + std::to_string(m));
            }
        }
        failed += finish(c, t0);
    }

    // 9: three independent oracles for the same numbers.
    {
        Criterion c{9, "oracles: braid orbits, dual cobar cohomology, two subalgebra routes"};
        auto t0 = std::chrono::steady_clock::now();
        for (int n = 1; n <= 5; ++n) {
            long orbits = orbit_enumerate(G, cls, n).orbit_count;
            c.require(top_tor_dim(Vm, AlgebraKind::Shuffle, n) == orbits,
                      "corner vs orbit count at degree " + std::to_string(n));
        }
        HomologyOptions certified;
        certified.mode = RankMode::Modular;
        certified.primes = 3;
        certified.seed = 20260823;
        c.require(top_tor_dim(Vm, AlgebraKind::Shuffle, 6, certified) ==
                      orbit_enumerate(G, cls, 6).orbit_count,
                  "corner vs orbit count at degree 6");
        for (const auto* V : {&V3, &Vz, &Vp, &Vm})
            for (int n = 1; n <= 5; ++n) {
                auto bar = complex_homology(build_bar(*V, AlgebraKind::Shuffle, n));
                auto cobar = complex_homology(build_cobar(V->dual(), AlgebraKind::Tensor, n));
                for (int m = 1; m <= n; ++m) {
                    long lhs = bar.count(-m) ? bar[-m] : 0;
                    long rhs = cobar.count(m) ? cobar[m] : 0;
                    c.require(lhs == rhs, "duality at degree " + std::to_string(n) +
                                              ", slot " + std::to_string(m));
                }
            }
        for (const auto* V : {&Vz, &Vp, &Vm})
            for (int n = 0; n <= 5; ++n)
                c.require(nichols_by_left_products(*V, n).equals(nichols_subspace(*V, n)),
                          "product route vs symmetrizer at degree " + std::to_string(n));
        failed += finish(c, t0);
    }

    // 10: graded Hilbert series of the -1 class factors over its weight-0
    // subalgebra with quotient weights growing at least n/5.
    {
        Criterion c{10, "-1 class: Hilbert factorization, quotient weights >= n/5"};
        auto t0 = std::chrono::steady_clock::now();
        Bigraded a, b;
        for (int n = 0; n <= 5; ++n)
            for (const auto& [w, dim] : wtm.gr_row(n)) a[{n, w}] = dim;
        const long nich[] = {1, 3, 4, 3, 1};
        for (int n = 0; n <= 4; ++n) b[{n, 0}] = nich[n];
        try {
            Bigraded q = hilbert_quotient(a, b, 5);
            for (const auto& [key, dim] : q)
                if (dim != 0)
                    c.require(5 * key.second >= key.first,
                              "quotient weight too small at degree " +
                                  std::to_string(key.first));
        } catch (const GateError& e) {
            c.require(false, std::string("negative quotient coefficient: ") + e.what());
        }
        failed += finish(c, t0);
    }

    // 11: full weight decomposition to degree 5 against both weight bounds.
    HurwitzReport rep; // reused by block 12
    {
        Criterion c{11, "weight decomposition to degree 5: epsilon bound and strict bound"};
        auto t0 = std::chrono::steady_clock::now();
        bool built = true;
        try {
            rep = weight_decomposition(G, cls, 5);
        } catch (const GateError& e) {
            c.require(false, std::string("internal gate: ") + e.what());
            built = false;
        }
        if (built) {
            c.require(rep.findings.empty(), "late differentials reported");
            auto bc = bound_constants(4, {{1, 1}, {1, 1}, {1, 1}, {4, 6}});
            auto fails = check_weight_bound(rep, bc, true);
            for (const auto& f : fails) c.require(false, "bound: " + f);
            for (const auto& row : rep.rows) {
                if (row.i > 2 * (row.n / 6))
                    c.require(row.frob_weight < 2 * row.n - row.i,
                              "strict bound at degree " + std::to_string(row.n));
                if (3 * row.i > row.n) {
                    mpq_class rhs = mpq_class(2 * row.n - row.i) -
                                    frac(3, 10) * (mpq_class(row.i) - frac(row.n, 3));
                    c.require(mpq_class(row.frob_weight) <= rhs,
                              "epsilon bound at degree " + std::to_string(row.n));
                }
            }
        }
        failed += finish(c, t0);
    }

    // 12: seeded runs are byte-identical; sampled ranks match exact ranks.
    {
        Criterion c{12, "determinism: identical seeded output, modular equals exact"};
        auto t0 = std::chrono::steady_clock::now();
        HomologyOptions seeded;
        seeded.mode = RankMode::Modular;
        seeded.primes = 3;
        seeded.seed = 12345;
        auto first = hurwitz_to_json(weight_decomposition(G, cls, 4, seeded));
        auto second = hurwitz_to_json(weight_decomposition(G, cls, 4, seeded));
        c.require(first == second, "seeded weight decompositions differ");
        c.require(stats_to_json(concentration_report(Vm, 5), true) ==
                      stats_to_json(concentration_report(Vm, 5), true),
                  "statistics reports differ");
        HomologyOptions sampled;
        sampled.mode = RankMode::Modular;
        sampled.primes = 3;
        sampled.seed = 999;
        auto modular_m = tor_dims(Vm, AlgebraKind::Shuffle, 5, sampled);
        long exact_entries = 0, modular_entries = 0;
        for (const auto& [jn, dim] : rep.betti) exact_entries += dim > 0;
        for (const auto& [key, dim] : modular_m.entries) {
            if (key[1] == 0) continue; // betti starts at degree 1
            modular_entries += dim > 0;
            auto it = rep.betti.find({key[1] - key[0], key[1]});
            long want = it == rep.betti.end() ? 0 : it->second;
            c.require(dim == want, "modular rank drift at degree " + std::to_string(key[1]));
        }
        c.require(exact_entries == modular_entries, "entry support differs");
        auto exact_p = tor_dims(Vp, AlgebraKind::Shuffle, 5);
        auto modular_p = tor_dims(Vp, AlgebraKind::Shuffle, 5, sampled);
        c.require(exact_p.entries == modular_p.entries, "+1 class tables differ");
        failed += finish(c, t0);
    }

    std::printf("%s: %d of 12 criteria failed\n", failed == 0 ? "OK" : "NOT OK", failed);
    return failed;
}
