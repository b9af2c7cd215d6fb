#include <qsh/homology.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace qsh {

long BarComplex::degree_dim(int k) const {
    long total = 0;
    for (std::size_t g = 0; g < comps.size(); ++g)
        if (parts_to_degree(int(comps[g].size())) == k) total += groups[g].dim();
    return total;
}

const std::vector<SparseVec>* BarComplex::columns(int k) const {
    auto it = diff.find(k);
    return it == diff.end() ? nullptr : &it->second;
}

namespace {

std::vector<std::vector<int>> compositions_by_parts(int n) {
    std::vector<std::vector<int>> out;
    for (std::uint64_t mask = 0; mask < (1ull << (n - 1)); ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (int g = 0; g < n - 1; ++g) {
            if (mask >> g & 1) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.push_back(std::move(parts));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& x, const auto& y) { return x.size() < y.size(); });
    return out;
}

Subspace full_space(FieldRef F, Index ambient) {
    Subspace S(F, ambient);
    for (Index i = 0; i < ambient; ++i) S.insert(sv_unit(i, F));
    return S;
}

// Coordinates of w in the echelon basis of S (RREF rows have unit pivots, so
// coordinates are just the pivot entries); gates membership.
SparseVec coords_in(const Subspace& S, const SparseVec& w) {
    if (S.dim() == long(S.ambient())) return w;
    if (!S.contains(w)) throw GateError("complex image leaves its chain group");
    SparseVec c;
    for (std::size_t k = 0; k < S.pivots().size(); ++k) {
        Scalar sc = sv_coeff(w, S.pivots()[k], S.field());
        if (!sc.is_zero()) c.emplace_back(Index(k), sc);
    }
    return c;
}

SparseVec apply_columns(const std::vector<SparseVec>& cols, const SparseVec& v) {
    SparseVec out;
    for (const auto& [j, c] : v) sv_add_scaled(out, c, cols[std::size_t(j)]);
    return out;
}

BarComplex assemble(const BraidedVectorSpace& V, AlgebraKind kind, int n, bool force,
                    bool ascending) {
    if (n < 1) throw FieldError("chain complex needs algebraic degree >= 1");
    FieldRef F = V.field();
    int d = V.dim();
    guard_complex_size(d, n, force);

    BarComplex bc;
    bc.n = n;
    bc.kind = kind;
    bc.ascending = ascending;
    bc.alphabet = d;
    bc.field = F;
    bc.comps = compositions_by_parts(n);
    Index N = word_space_size(d, n);

    std::vector<Subspace> nich;
    if (kind == AlgebraKind::Nichols) {
        nich.emplace_back(F, 1);
        for (int p = 1; p <= n; ++p) nich.push_back(nichols_subspace(V, p));
    }

    std::map<std::vector<int>, std::size_t> slot;
    std::map<int, long> running;
    for (std::size_t g = 0; g < bc.comps.size(); ++g) {
        const auto& parts = bc.comps[g];
        slot[parts] = g;
        Subspace S(F, N);
        if (kind != AlgebraKind::Nichols) {
            S = full_space(F, N);
        } else {
            Subspace cur = nich[std::size_t(parts[0])];
            int len = parts[0];
            for (std::size_t j = 1; j < parts.size(); ++j) {
                int pj = parts[j];
                Subspace nxt(F, word_space_size(d, len + pj));
                for (const auto& a : cur.basis())
                    for (const auto& b : nich[std::size_t(pj)].basis())
                        nxt.insert(concat_product(d, a, len, b, pj));
                cur = std::move(nxt);
                len += pj;
            }
            S = std::move(cur);
        }
        int k = bc.parts_to_degree(int(parts.size()));
        bc.offsets.push_back(running[k]);
        running[k] += S.dim();
        bc.groups.push_back(std::move(S));
    }

    for (std::size_t g = 0; g < bc.comps.size(); ++g) {
        const auto& parts = bc.comps[g];
        int m = int(parts.size());
        int k = bc.parts_to_degree(m);
        bool has_out = ascending ? std::any_of(parts.begin(), parts.end(),
                                               [](int p) { return p >= 2; })
                                 : m >= 2;
        if (!has_out) continue;
        auto& cols = bc.diff[k];
        if (cols.empty()) cols.resize(std::size_t(running[k]));
        const auto& basis = bc.groups[g].basis();
        for (std::size_t j = 0; j < basis.size(); ++j) {
            SparseVec total;
            if (!ascending) {
                int offset = 0;
                for (int i = 1; i <= m - 1; ++i) {
                    SparseVec w = (kind == AlgebraKind::Tensor)
                                      ? basis[j]
                                      : shuffle_window(V, basis[j], n, offset,
                                                       parts[std::size_t(i - 1)],
                                                       parts[std::size_t(i)]);
                    std::vector<int> target = parts;
                    target[std::size_t(i - 1)] += target[std::size_t(i)];
                    target.erase(target.begin() + i);
                    std::size_t h = slot.at(target);
                    SparseVec c = coords_in(bc.groups[h], w);
                    sv_add_scaled(total, Scalar::integer(F, i % 2 == 1 ? 1 : -1),
                                  sv_shift(c, bc.offsets[h]));
                    offset += parts[std::size_t(i - 1)];
                }
            } else {
                int offset = 0;
                for (int i = 1; i <= m; ++i) {
                    int pi = parts[std::size_t(i - 1)];
                    for (int a = 1; a <= pi - 1; ++a) {
                        int b = pi - a;
                        SparseVec w = (kind == AlgebraKind::Tensor)
                                          ? unshuffle_window(V, basis[j], n, offset, a, b)
                                          : basis[j];
                        std::vector<int> target = parts;
                        target[std::size_t(i - 1)] = a;
                        target.insert(target.begin() + i, b);
                        std::size_t h = slot.at(target);
                        SparseVec c = coords_in(bc.groups[h], w);
                        sv_add_scaled(total, Scalar::integer(F, i % 2 == 1 ? 1 : -1),
                                      sv_shift(c, bc.offsets[h]));
                    }
                    offset += pi;
                }
            }
            cols[std::size_t(bc.offsets[g]) + j] = std::move(total);
        }
    }
    return bc;
}

long rank_with_mode(const std::vector<SparseVec>& cols, long rows, FieldRef F, RankMode mode,
                    const HomologyOptions& opt) {
    if (mode == RankMode::Exact) return rank_of_columns(cols, F);
    RankReport rep = certified_rank(cols, rows, F, RankMode::Modular, opt.primes, opt.seed);
    if (!rep.verified)
        rep = certified_rank(cols, rows, F, RankMode::Modular, opt.primes * 2 + 1, opt.seed + 17);
    if (!rep.verified) throw GateError("modular rank not certified: " + rep.note);
    return rep.rank;
}

} // namespace

void guard_complex_size(int d, int n, bool force) {
    if (std::ldexp(1.0, n - 1) * std::pow(double(d), n) > 1e7 && !force)
        throw ResourceError("total chain dimension exceeds guard; use force to override");
}

BarComplex build_bar(const BraidedVectorSpace& V, AlgebraKind kind, int n, bool force) {
    return assemble(V, kind, n, force, false);
}

BarComplex build_cobar(const BraidedVectorSpace& V, AlgebraKind kind, int n, bool force) {
    return assemble(V, kind, n, force, true);
}

void check_d_squared(const BarComplex& bc) {
    for (const auto& [k, cols] : bc.diff) {
        const auto* next = bc.columns(k + 1);
        if (!next) continue;
        for (const auto& col : cols) {
            SparseVec res = apply_columns(*next, col);
            if (!res.empty()) throw GateError("differential does not square to zero");
        }
    }
}

namespace {

// Auto mode: exact up to n = 5; the certified modular path beyond, but only
// over the rationals where the kernel lift can actually verify.
RankMode pick_mode(const HomologyOptions& opt, int n, FieldRef F) {
    if (opt.mode) return *opt.mode;
    if (n <= 5 || F->kind() != FieldKind::Rational) return RankMode::Exact;
    return RankMode::Modular;
}

} // namespace

std::map<int, long> complex_homology(const BarComplex& bc, const HomologyOptions& opt) {
    RankMode mode = pick_mode(opt, bc.n, bc.field);
    std::map<int, long> ranks;
    auto rank_at = [&](int k) -> long {
        auto it = ranks.find(k);
        if (it != ranks.end()) return it->second;
        const auto* cols = bc.columns(k);
        long r = cols ? rank_with_mode(*cols, bc.degree_dim(k + 1), bc.field, mode, opt) : 0;
        ranks[k] = r;
        return r;
    };
    std::map<int, long> H;
    for (int m = 1; m <= bc.n; ++m) {
        int k = bc.parts_to_degree(m);
        H[k] = bc.degree_dim(k) - rank_at(k) - rank_at(k - 1);
    }
    return H;
}

long TriGradedDims::at(int m, int n, int w) const {
    auto it = entries.find({m, n, w});
    return it == entries.end() ? 0 : it->second;
}

TriGradedDims tor_dims(const BraidedVectorSpace& V, AlgebraKind kind, int nmax,
                       const HomologyOptions& opt) {
    TriGradedDims t;
    t.entries[{0, 0, 0}] = 1;
    for (int n = 1; n <= nmax; ++n) {
        BarComplex bc = build_bar(V, kind, n, opt.force);
        check_d_squared(bc);
        for (const auto& [k, dim] : complex_homology(bc, opt))
            if (dim != 0) t.entries[{-k, n, 0}] = dim;
    }
    return t;
}

long top_tor_dim(const BraidedVectorSpace& V, AlgebraKind kind, int n,
                 const HomologyOptions& opt) {
    if (n == 0) return 1;
    BarComplex bc = build_bar(V, kind, n, opt.force);
    RankMode mode = pick_mode(opt, n, bc.field);
    int k = bc.parts_to_degree(n);
    const auto* cols = bc.columns(k);
    long rank = cols ? rank_with_mode(*cols, bc.degree_dim(k + 1), bc.field, mode, opt) : 0;
    return bc.degree_dim(k) - rank;
}

const Subspace* FilteredBarComplex::level(int k, int s) const {
    auto it = levels.find(k);
    if (it == levels.end() || it->second.empty()) return nullptr;
    const auto& row = it->second;
    if (s < row.front().first) return nullptr;
    std::size_t idx = std::min(row.size() - 1, std::size_t(s - row.front().first));
    return &row[idx].second;
}

long FilteredBarComplex::level_dim(int k, int s) const {
    const Subspace* L = level(k, s);
    return L ? L->dim() : 0;
}

FilteredBarComplex filtered_bar(const BraidedVectorSpace& V, const FiltrationTable& table,
                                int n, bool force) {
    if (table.alphabet != V.dim()) throw FieldError("filtration table alphabet mismatch");
    if (table.nmax() < n) throw FieldError("filtration table does not cover the degree");
    validate_table(table);
    FieldRef F = V.field();
    int d = V.dim();
    AlgebraKind kind =
        table.side == FiltSide::OnA ? AlgebraKind::Shuffle : AlgebraKind::Tensor;

    FilteredBarComplex fc;
    fc.bc = build_bar(V, kind, n, force);

    // per chain group: exact cumulative levels; level s of a product is the
    // sum over splittings of s across the parts
    std::vector<std::vector<std::pair<int, Subspace>>> glevels;
    for (const auto& parts : fc.bc.comps) {
        const auto& row0 = table.levels.at(std::size_t(parts[0]));
        std::vector<std::pair<int, Subspace>> cur(row0.begin(), row0.end());
        int len = parts[0];
        for (std::size_t j = 1; j < parts.size(); ++j) {
            int pj = parts[j];
            const auto& rowj = table.levels.at(std::size_t(pj));
            int lo = cur.front().first + rowj.front().first;
            int hi = cur.back().first + rowj.back().first;
            std::vector<std::pair<int, Subspace>> nxt;
            for (int s = lo; s <= hi; ++s) {
                Subspace acc(F, word_space_size(d, len + pj));
                for (const auto& [u, A] : cur) {
                    int v = s - u;
                    if (v < rowj.front().first) continue;
                    const Subspace& B =
                        rowj[std::size_t(std::min(v - rowj.front().first,
                                                  int(rowj.size()) - 1))].second;
                    for (const auto& a : A.basis())
                        for (const auto& b : B.basis())
                            acc.insert(concat_product(d, a, len, b, pj));
                }
                nxt.emplace_back(s, std::move(acc));
            }
            cur = std::move(nxt);
            len += pj;
        }
        glevels.push_back(std::move(cur));
    }

    fc.pmin = std::numeric_limits<int>::max();
    fc.pmax = std::numeric_limits<int>::min();
    for (int m = 1; m <= n; ++m) {
        int k = fc.bc.parts_to_degree(m);
        int lo = std::numeric_limits<int>::max();
        int hi = std::numeric_limits<int>::min();
        for (std::size_t g = 0; g < fc.bc.comps.size(); ++g) {
            if (int(fc.bc.comps[g].size()) != m) continue;
            lo = std::min(lo, glevels[g].front().first);
            hi = std::max(hi, glevels[g].back().first);
        }
        std::vector<std::pair<int, Subspace>> chain;
        for (int s = lo; s <= hi; ++s) {
            Subspace L(F, fc.bc.degree_dim(k));
            for (std::size_t g = 0; g < fc.bc.comps.size(); ++g) {
                if (int(fc.bc.comps[g].size()) != m) continue;
                const auto& grow = glevels[g];
                if (s < grow.front().first) continue;
                const Subspace& piece =
                    grow[std::size_t(std::min(s - grow.front().first, int(grow.size()) - 1))]
                        .second;
                for (const auto& v : piece.basis()) L.insert(sv_shift(v, fc.bc.offsets[g]));
            }
            chain.emplace_back(s, std::move(L));
        }
        fc.pmin = std::min(fc.pmin, lo);
        fc.pmax = std::max(fc.pmax, hi);
        fc.levels[k] = std::move(chain);
    }

    // gate: the differential must preserve every induced level
    for (const auto& [k, row] : fc.levels) {
        const auto* cols = fc.bc.columns(k);
        if (!cols) continue;
        for (const auto& [s, L] : row) {
            const Subspace* target = fc.level(k + 1, s);
            for (const auto& v : L.basis()) {
                SparseVec img = apply_columns(*cols, v);
                bool ok = target ? target->contains(img) : img.empty();
                if (!ok)
                    throw GateError("differential raises the induced filtration level at degree " +
                                    std::to_string(k) + ", level " + std::to_string(s));
            }
        }
    }
    return fc;
}

std::map<int, long> gr_homology(const FilteredBarComplex& fc, int p) {
    FieldRef F = fc.bc.field;
    std::map<int, long> ranks;
    auto rank_induced = [&](int k) -> long {
        auto it = ranks.find(k);
        if (it != ranks.end()) return it->second;
        long r = 0;
        const auto* cols = fc.bc.columns(k);
        const Subspace* Fp = fc.level(k, p);
        if (cols && Fp && fc.levels.count(k + 1)) {
            Subspace I(F, fc.bc.degree_dim(k + 1));
            const Subspace* below = fc.level(k + 1, p - 1);
            long base = 0;
            if (below) {
                I = *below;
                base = below->dim();
            }
            for (const auto& v : Fp->basis()) I.insert(apply_columns(*cols, v));
            r = I.dim() - base;
        }
        ranks[k] = r;
        return r;
    };
    std::map<int, long> H;
    for (const auto& [k, row] : fc.levels) {
        (void)row;
        long gr = fc.level_dim(k, p) - fc.level_dim(k, p - 1);
        long h = gr - rank_induced(k) - rank_induced(k - 1);
        if (h != 0) H[k] = h;
    }
    return H;
}

SpectralSequencePages spectral_sequence(const FilteredBarComplex& fc) {
    FieldRef F = fc.bc.field;
    SpectralSequencePages out;
    out.pmin = fc.pmin;
    out.pmax = fc.pmax;
    int width = fc.pmax - fc.pmin;
    int R = width + 2;

    auto has_degree = [&](int k) { return fc.levels.count(k) > 0; };

    std::map<std::array<int, 3>, Subspace> zmemo;
    auto Zf = [&](int r, int p, int k) -> const Subspace& {
        std::array<int, 3> key{r, p, k};
        auto it = zmemo.find(key);
        if (it != zmemo.end()) return it->second;
        Subspace result(F, has_degree(k) ? fc.bc.degree_dim(k) : 0);
        const Subspace* Fpk = has_degree(k) ? fc.level(k, p) : nullptr;
        if (Fpk) {
            const auto* cols = fc.bc.columns(k);
            if (!cols || !has_degree(k + 1) || r == 0) {
                // r = 0: the preservation gate makes F_p ∩ d^{-1}F_p = F_p
                result = *Fpk;
            } else {
                const Subspace* target = fc.level(k + 1, p - r);
                std::vector<SparseVec> residues;
                for (const auto& b : Fpk->basis()) {
                    SparseVec img = apply_columns(*cols, b);
                    residues.push_back(target ? target->reduce(std::move(img)) : img);
                }
                for (auto& v : kernel_through(Fpk->basis(), residues, F))
                    result.insert(std::move(v));
            }
        }
        return zmemo.emplace(key, std::move(result)).first->second;
    };

    auto image_of = [&](const Subspace& S, int k_src, long dst_ambient) -> Subspace {
        Subspace I(F, dst_ambient);
        const auto* cols = has_degree(k_src) ? fc.bc.columns(k_src) : nullptr;
        if (cols)
            for (const auto& b : S.basis()) I.insert(apply_columns(*cols, b));
        return I;
    };

    out.pages.assign(std::size_t(R), {});
    out.dr_ranks.assign(std::size_t(R), {});
    for (int r = 1; r <= R; ++r) {
        auto& page = out.pages[std::size_t(r - 1)];
        auto& rks = out.dr_ranks[std::size_t(r - 1)];
        for (const auto& [k, row] : fc.levels) {
            long dimk = fc.bc.degree_dim(k);
            for (int p = row.front().first; p <= row.back().first; ++p) {
                const Subspace& num = Zf(r, p, k);
                Subspace den = Subspace::sum(Zf(r - 1, p - 1, k),
                                             image_of(Zf(r - 1, p + r - 1, k - 1), k - 1, dimk));
                long e = num.dim() - den.dim();
                if (e < 0) throw GateError("negative page dimension");
                if (e > 0) page[{p, k}] = e;
                if (has_degree(k + 1)) {
                    long dimk1 = fc.bc.degree_dim(k + 1);
                    Subspace denT =
                        Subspace::sum(Zf(r - 1, p - r - 1, k + 1),
                                      image_of(Zf(r - 1, p - 1, k), k, dimk1));
                    Subspace img = image_of(num, k, dimk1);
                    long rank = Subspace::sum(img, denT).dim() - denT.dim();
                    if (rank > 0) rks[{p, k}] = rank;
                }
            }
        }
    }

    auto getv = [](const std::map<std::pair<int, int>, long>& m, int p, int k) {
        auto it = m.find({p, k});
        return it == m.end() ? 0L : it->second;
    };
    for (int r = 1; r < R; ++r) {
        for (const auto& [k, row] : fc.levels) {
            for (int p = row.front().first; p <= row.back().first; ++p) {
                long lhs = getv(out.pages[std::size_t(r)], p, k);
                long rhs = getv(out.pages[std::size_t(r - 1)], p, k) -
                           getv(out.dr_ranks[std::size_t(r - 1)], p, k) -
                           getv(out.dr_ranks[std::size_t(r - 1)], p + r, k - 1);
                if (lhs != rhs) throw GateError("page dimension bookkeeping mismatch");
            }
        }
    }

    out.einf = out.pages[std::size_t(R - 1)];
    if (out.pages[std::size_t(R - 2)] != out.einf)
        throw GateError("spectral sequence failed to stabilize within the filtration width");
    out.stabilized_at = R;
    for (int r = R; r >= 1; --r) {
        bool quiet = out.pages[std::size_t(r - 1)] == out.einf;
        for (int rr = r; rr <= R && quiet; ++rr)
            if (!out.dr_ranks[std::size_t(rr - 1)].empty()) quiet = false;
        if (quiet) out.stabilized_at = r;
    }
    for (int r = 2; r <= R; ++r)
        for (const auto& [pk, rank] : out.dr_ranks[std::size_t(r - 1)])
            out.findings.push_back("nonzero d_" + std::to_string(r) + " at (p=" +
                                   std::to_string(pk.first) + ", k=" + std::to_string(pk.second) +
                                   ") of rank " + std::to_string(rank));
    return out;
}

} // namespace qsh
