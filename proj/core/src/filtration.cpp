#include <qsh/filtration.hpp>

#include <algorithm>
#include <numeric>

namespace qsh {

int FiltrationTable::min_index(int n) const { return levels.at(std::size_t(n)).front().first; }
int FiltrationTable::max_index(int n) const { return levels.at(std::size_t(n)).back().first; }

const Subspace* FiltrationTable::level(int n, int s) const {
    const auto& row = levels.at(std::size_t(n));
    if (s < row.front().first) return nullptr;
    std::size_t k = std::min(row.size() - 1, std::size_t(s - row.front().first));
    return &row[k].second;
}

long FiltrationTable::level_dim(int n, int s) const {
    const Subspace* L = level(n, s);
    return L ? L->dim() : 0;
}

long FiltrationTable::gr_dim(int n, int s) const {
    return level_dim(n, s) - level_dim(n, s - 1);
}

std::map<int, long> FiltrationTable::gr_row(int n) const {
    std::map<int, long> out;
    for (int s = min_index(n); s <= max_index(n); ++s) {
        long g = gr_dim(n, s);
        if (g != 0) out[s] = g;
    }
    return out;
}

void validate_table(const FiltrationTable& t) {
    for (int n = 0; n <= t.nmax(); ++n) {
        const auto& row = t.levels.at(std::size_t(n));
        if (row.empty()) throw GateError("filtration degree with no levels");
        Index full = word_space_size(t.alphabet, n);
        long running = 0;
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k > 0) {
                if (row[k].first != row[k - 1].first + 1)
                    throw GateError("filtration indices not contiguous");
                for (const auto& v : row[k - 1].second.basis())
                    if (!row[k].second.contains(v))
                        throw GateError("filtration levels not nested");
            }
            if (row[k].second.dim() < running) throw GateError("filtration dimension decreased");
            running = row[k].second.dim();
        }
        if (row.back().second.dim() != long(full))
            throw GateError("top filtration level does not span the degree");
        long total = 0;
        for (int s = t.min_index(n); s <= t.max_index(n); ++s) total += t.gr_dim(n, s);
        if (total != long(full))
            throw GateError("graded dimensions do not sum to the degree dimension");
    }
}

namespace {

Subspace full_space(FieldRef F, Index ambient) {
    Subspace S(F, ambient);
    for (Index i = 0; i < ambient; ++i) S.insert(sv_unit(i, F));
    return S;
}

} // namespace

FiltrationTable wordlength_filtration(const BraidedVectorSpace& V, int nmax) {
    FieldRef F = V.field();
    int d = V.dim();
    // prod[r][n]: span of shuffle products of exactly r words of positive length
    std::vector<std::vector<Subspace>> prod(std::size_t(nmax) + 1);
    for (int r = 1; r <= nmax; ++r) {
        auto& row = prod[std::size_t(r)];
        for (int n = 0; n <= nmax; ++n) {
            Index N = word_space_size(d, n);
            if (n < r) {
                row.emplace_back(F, N);
                continue;
            }
            if (r == 1) {
                row.push_back(full_space(F, N));
                continue;
            }
            Subspace S(F, N);
            for (int a = 1; a <= n - r + 1; ++a) {
                const Subspace& rest = prod[std::size_t(r - 1)][std::size_t(n - a)];
                for (Index w = 0; w < word_space_size(d, a); ++w) {
                    SparseVec gen = sv_unit(w, F);
                    for (const auto& s : rest.basis())
                        S.insert(shuffle_product(V, gen, a, s, n - a));
                }
            }
            row.push_back(std::move(S));
        }
    }
    FiltrationTable t;
    t.kind = FiltKind::WordLength;
    t.side = FiltSide::OnA;
    t.alphabet = d;
    for (int n = 0; n <= nmax; ++n) {
        std::vector<std::pair<int, Subspace>> row;
        if (n == 0) {
            row.emplace_back(0, full_space(F, 1));
        } else {
            for (int c = 0; c <= n - 1; ++c)
                row.emplace_back(c, prod[std::size_t(n - c)][std::size_t(n)]);
        }
        t.levels.push_back(std::move(row));
    }
    return t;
}

FiltrationTable weighted_wordlength_filtration(const BraidedVectorSpace& V,
                                               const std::vector<long>& f, int nmax) {
    FieldRef F = V.field();
    int d = V.dim();
    if (int(f.size()) <= nmax) throw FieldError("cost table too short");
    for (int r = 1; r <= nmax; ++r)
        if (f[std::size_t(r)] < 0) throw FieldError("cost values must be nonnegative");
    if (nmax >= 1 && f[1] != 0) throw FieldError("cost of a single letter must be 0");
    for (int a = 1; a <= nmax; ++a)
        for (int b = 1; a + b <= nmax; ++b)
            if (f[std::size_t(a)] + f[std::size_t(b)] > f[std::size_t(a + b)])
                throw FieldError("cost function must be superadditive");

    FiltrationTable t;
    t.kind = FiltKind::WeightedWordLength;
    t.side = FiltSide::OnA;
    t.alphabet = d;
    for (int n = 0; n <= nmax; ++n) {
        std::vector<std::pair<int, Subspace>> row;
        Index N = word_space_size(d, n);
        if (n == 0) {
            row.emplace_back(0, full_space(F, 1));
            t.levels.push_back(std::move(row));
            continue;
        }
        // compositions of n by bitmask over n-1 gaps, grouped by total cost
        std::vector<std::pair<long, std::vector<int>>> comps;
        for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
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
            long cost = 0;
            for (int p : parts) cost += f[std::size_t(p)];
            comps.emplace_back(cost, std::move(parts));
        }
        std::stable_sort(comps.begin(), comps.end(),
                         [](const auto& x, const auto& y) { return x.first < y.first; });
        Subspace acc(F, N);
        std::size_t next = 0;
        for (long c = 0; c <= f[std::size_t(n)]; ++c) {
            while (next < comps.size() && comps[next].first == c) {
                const auto& parts = comps[next].second;
                // right-associated span of products over this composition
                int suffix = parts.back();
                Subspace S = full_space(F, word_space_size(d, suffix));
                for (int k = int(parts.size()) - 2; k >= 0; --k) {
                    int a = parts[std::size_t(k)];
                    Subspace T(F, word_space_size(d, a + suffix));
                    for (Index w = 0; w < word_space_size(d, a); ++w) {
                        SparseVec gen = sv_unit(w, F);
                        for (const auto& s : S.basis())
                            T.insert(shuffle_product(V, gen, a, s, suffix));
                    }
                    suffix += a;
                    S = std::move(T);
                }
                for (const auto& v : S.basis()) acc.insert(v);
                ++next;
            }
            row.emplace_back(int(c), acc);
        }
        t.levels.push_back(std::move(row));
    }
    return t;
}

Subspace primitives(const BraidedVectorSpace& W, int n) {
    FieldRef F = W.field();
    int d = W.dim();
    Index N = word_space_size(d, n);
    if (n <= 1) return full_space(F, N);
    // stack every interior coproduct component into one block column
    std::vector<SparseVec> cols(static_cast<std::size_t>(N));
    for (Index i = 0; i < N; ++i) {
        SparseVec stacked;
        for (int p = 1; p <= n - 1; ++p) {
            SparseVec comp = unshuffle_window(W, sv_unit(i, F), n, 0, p, n - p);
            sv_add_scaled(stacked, Scalar::one(F), sv_shift(comp, Index(p - 1) * N));
        }
        cols[std::size_t(i)] = std::move(stacked);
    }
    auto kern = kernel_of_columns(cols, F);
    Subspace P(F, N);
    for (auto& v : kern) P.insert(std::move(v));
    return P;
}

namespace {

// mu(W_w S): concatenations of level-u and level-v pieces over all interior
// splits and u+v = w
Subspace mu_weight_level(const FiltrationTable& t, FieldRef F, int d, int n, int w) {
    Index N = word_space_size(d, n);
    Subspace M(F, N);
    for (int p = 1; p <= n - 1; ++p) {
        int q = n - p;
        for (int u = w; u <= 0; ++u) {
            int v = w - u;
            if (v > 0) continue;
            const Subspace* A = t.level(p, u);
            const Subspace* B = t.level(q, v);
            if (!A || !B || A->dim() == 0 || B->dim() == 0) continue;
            for (const auto& a : A->basis())
                for (const auto& b : B->basis())
                    M.insert(concat_product(d, a, p, b, q));
        }
    }
    return M;
}

} // namespace

FiltrationTable weight_filtration_T(const BraidedVectorSpace& W, int nmax) {
    FieldRef F = W.field();
    int d = W.dim();
    FiltrationTable t;
    t.kind = FiltKind::Weight;
    t.side = FiltSide::OnT;
    t.alphabet = d;
    for (int n = 0; n <= nmax; ++n) {
        Index N = word_space_size(d, n);
        if (n <= 1) {
            t.levels.push_back({{0, full_space(F, N)}});
            continue;
        }
        Subspace P = primitives(W, n);
        std::vector<std::pair<int, Subspace>> rev;
        rev.emplace_back(0, full_space(F, N));
        Subspace above = full_space(F, N); // mu(W_{w+1} S) for the level below
        for (int w = -1;; --w) {
            if (w < -(n + 1))
                throw GateError("weight filtration failed to terminate");
            Subspace M = mu_weight_level(t, F, d, n, w);
            Subspace cur = Subspace::sum(M, Subspace::intersect(above, P));
            if (cur.dim() == 0) break;
            rev.emplace_back(w, cur);
            above = std::move(M);
        }
        std::reverse(rev.begin(), rev.end());
        t.levels.push_back(std::move(rev));
    }
    return t;
}

FiltrationTable weight_filtration_A(const BraidedVectorSpace& V, int nmax) {
    FiltrationTable tT = weight_filtration_T(V.dual(), nmax);
    FieldRef F = V.field();
    int d = V.dim();
    FiltrationTable t;
    t.kind = FiltKind::Weight;
    t.side = FiltSide::OnA;
    t.alphabet = d;
    for (int n = 0; n <= nmax; ++n) {
        Index N = word_space_size(d, n);
        std::vector<std::pair<int, Subspace>> row;
        int lo = tT.min_index(n);
        for (int w = 0; w <= -lo; ++w) {
            const Subspace* L = tT.level(n, -w - 1);
            row.emplace_back(w, L ? L->orthogonal_complement() : full_space(F, N));
        }
        t.levels.push_back(std::move(row));
    }
    return t;
}

std::optional<SparseVec> brprim2(const BraidedVectorSpace& W, const SparseVec& x, int p,
                                 const SparseVec& y, int q, int bound) {
    FieldRef F = W.field();
    int n = p + q;
    SparseVec z0 = concat_product(W.dim(), x, p, y, q);
    SparseVec z = z0;
    SparseVec sum = z0;
    for (int k = 1; k <= bound; ++k) {
        int a = (k % 2 == 1) ? p : q; // widths alternate as blocks swap sides
        int b = n - a;
        Perm chi(static_cast<std::size_t>(n));
        for (int i = 0; i < a; ++i) chi[std::size_t(i)] = b + i;
        for (int j = 0; j < b; ++j) chi[std::size_t(a + j)] = j;
        z = apply_R_sigma(W, chi, z, n);
        if (k % 2 == 0 && z == z0) return sv_scaled(Scalar::integer(F, k).inverse(), sum);
        sv_add_scaled(sum, Scalar::integer(F, k % 2 == 0 ? 1 : -1), z);
    }
    return std::nullopt;
}

mpq_class avg_weight(const FiltrationTable& tT, int n) {
    mpz_class total = 0;
    for (const auto& [w, g] : tT.gr_row(n)) total += mpz_class(w) * g;
    mpq_class out(total);
    out /= mpq_class(tT.level_dim(n, tT.max_index(n)));
    return out;
}

WeightStatistic concentration_report(const BraidedVectorSpace& V, int nmax) {
    FiltrationTable tT = weight_filtration_T(V.dual(), nmax);
    WeightStatistic s;
    for (int n = 0; n <= nmax; ++n) s.a.push_back(avg_weight(tT, n));
    s.c_estimate = 0;
    for (int n = 1; n <= nmax; ++n) {
        mpq_class ratio = s.a[std::size_t(n)] / n;
        s.a_over_n.push_back(ratio);
        if (-ratio > s.c_estimate) s.c_estimate = -ratio;
    }
    s.monotone_ok = true;
    for (int n = 1; n < nmax; ++n)
        if (s.a[std::size_t(n + 1)] > s.a[std::size_t(n)]) s.monotone_ok = false;
    s.superadditive_ok = true;
    for (int n = 1; n <= nmax; ++n)
        for (int m = 1; n * m <= nmax; ++m)
            if (s.a[std::size_t(n * m)] > m * s.a[std::size_t(n)]) s.superadditive_ok = false;
    return s;
}

bool weight_bialgebra_check(const BraidedVectorSpace& W, const FiltrationTable& tT, int n) {
    FieldRef F = W.field();
    int d = W.dim();
    Index N = word_space_size(d, n);
    for (int p = 1; p <= n - 1; ++p) {
        int q = n - p;
        for (int w = tT.min_index(n); w <= 0; ++w) {
            // target: sum over u+v = w of level-u ox level-v in the split (p,q)
            Subspace target(F, N);
            for (int u = w; u <= 0; ++u) {
                const Subspace* A = tT.level(p, u);
                const Subspace* B = tT.level(q, w - u);
                if (!A || !B) continue;
                for (const auto& a : A->basis())
                    for (const auto& b : B->basis())
                        target.insert(concat_product(d, a, p, b, q));
            }
            const Subspace* L = tT.level(n, w);
            if (!L) continue;
            for (const auto& z : L->basis())
                if (!target.contains(unshuffle_window(W, z, n, 0, p, q)))
                    return false;
        }
    }
    return true;
}

Bigraded hilbert_quotient(const Bigraded& a, const Bigraded& b, int nmax) {
    auto at = [](const Bigraded& m, int n, int w) -> long {
        auto it = m.find({n, w});
        return it == m.end() ? 0 : it->second;
    };
    if (at(b, 0, 0) != 1) throw FieldError("hilbert quotient needs constant term 1");
    for (const auto& [k, v] : b)
        if (k.first == 0 && k.second != 0 && v != 0)
            throw FieldError("hilbert quotient denominator must be unital in degree 0");
    int wlo = 0, whi = 0;
    for (const auto& m : {a, b})
        for (const auto& [k, v] : m) {
            (void)v;
            wlo = std::min(wlo, k.second);
            whi = std::max(whi, k.second);
        }
    wlo *= nmax + 1;
    whi *= nmax + 1;
    Bigraded c;
    for (int n = 0; n <= nmax; ++n) {
        for (int w = wlo; w <= whi; ++w) {
            long acc = at(a, n, w);
            for (const auto& [k, v] : b) {
                if (k.first == 0 || k.first > n) continue;
                acc -= v * at(c, n - k.first, w - k.second);
            }
            if (acc < 0) throw GateError("hilbert series division produced a negative coefficient");
            if (acc != 0) c[{n, w}] = acc;
        }
    }
    return c;
}

BoundConstants bound_constants(int m, const std::vector<std::pair<int, int>>& gens) {
    if (m < 1) throw FieldError("top Nichols degree must be positive");
    if (gens.empty()) throw FieldError("generator list must be nonempty");
    BoundConstants bc;
    bc.delta = mpq_class(1) / (m + 1);
    bc.c = 0;
    for (const auto& [nmi, nn] : gens) {
        if (nmi < 1 || nn < nmi) throw FieldError("generator bidegree (n-i, n) needs 0 < n-i <= n");
        mpq_class ratio = mpq_class(nn - nmi) / nn;
        if (ratio > bc.c) bc.c = ratio;
    }
    if (bc.c >= 1) throw FieldError("cohomology growth constant must be below 1");
    bc.epsilon = bc.delta / (1 - bc.c);
    return bc;
}

long lyndon_count(int d, int n) {
    auto mobius = [](int k) {
        int mu = 1;
        for (int p = 2; p * p <= k; ++p) {
            if (k % p == 0) {
                k /= p;
                if (k % p == 0) return 0;
                mu = -mu;
            }
        }
        if (k > 1) mu = -mu;
        return mu;
    };
    long total = 0;
    for (int k = 1; k <= n; ++k) {
        if (n % k != 0) continue;
        long power = 1;
        for (int i = 0; i < n / k; ++i) power *= d;
        total += mobius(k) * power;
    }
    return total / n;
}

} // namespace qsh
