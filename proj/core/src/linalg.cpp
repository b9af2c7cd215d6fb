#include <qsh/linalg.hpp>

#include <algorithm>
#include <map>

namespace qsh {

SparseVec sv_unit(Index i, const FieldRef& F) {
    return {{i, Scalar::one(F)}};
}

SparseVec sv_from_terms(std::vector<std::pair<Index, Scalar>> terms, const FieldRef& F) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec out;
    for (auto& [i, c] : terms) {
        if (!out.empty() && out.back().first == i) out.back().second += c;
        else out.push_back({i, c});
    }
    SparseVec clean;
    clean.reserve(out.size());
    for (auto& [i, c] : out)
        if (!c.is_zero()) clean.push_back({i, c});
    (void)F;
    return clean;
}

void sv_add_scaled(SparseVec& y, const Scalar& c, const SparseVec& x) {
    if (c.is_zero() || x.empty()) return;
    SparseVec out;
    out.reserve(y.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            out.push_back(y[i++]);
        } else if (i == y.size() || x[j].first < y[i].first) {
            out.push_back({x[j].first, c * x[j].second});
            ++j;
        } else {
            Scalar s = y[i].second + c * x[j].second;
            if (!s.is_zero()) out.push_back({y[i].first, s});
            ++i;
            ++j;
        }
    }
    y = std::move(out);
}

SparseVec sv_scaled(const Scalar& c, const SparseVec& x) {
    SparseVec out;
    if (c.is_zero()) return out;
    out.reserve(x.size());
    for (const auto& [i, v] : x) out.push_back({i, c * v});
    return out;
}

Scalar sv_coeff(const SparseVec& v, Index i, const FieldRef& F) {
    auto it = std::lower_bound(v.begin(), v.end(), i,
                               [](const auto& e, Index k) { return e.first < k; });
    if (it != v.end() && it->first == i) return it->second;
    return Scalar::zero(F);
}

Scalar sv_dot(const SparseVec& a, const SparseVec& b, const FieldRef& F) {
    Scalar s = Scalar::zero(F);
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) ++i;
        else if (b[j].first < a[i].first) ++j;
        else { s += a[i].second * b[j].second; ++i; ++j; }
    }
    return s;
}

SparseVec sv_shift(const SparseVec& v, Index offset) {
    SparseVec out;
    out.reserve(v.size());
    for (const auto& [i, c] : v) out.push_back({i + offset, c});
    return out;
}

Subspace::Subspace(FieldRef F, Index ambient) : F_(std::move(F)), ambient_(ambient) {}

SparseVec Subspace::reduce(SparseVec v) const {
    std::size_t i = 0;
    while (i < v.size()) {
        auto it = std::lower_bound(pivots_.begin(), pivots_.end(), v[i].first);
        if (it != pivots_.end() && *it == v[i].first) {
            Scalar c = v[i].second;
            sv_add_scaled(v, -c, rows_[std::size_t(it - pivots_.begin())]);
            // the row's leading index equals the pivot, so entries < v[i] are untouched
        } else {
            ++i;
        }
    }
    return v;
}

bool Subspace::insert(SparseVec v) {
    SparseVec r = reduce(std::move(v));
    if (r.empty()) return false;
    Scalar lead = r.front().second;
    Index p = r.front().first;
    r = sv_scaled(lead.inverse(), r);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        Scalar c = sv_coeff(rows_[k], p, F_);
        if (!c.is_zero()) sv_add_scaled(rows_[k], -c, r);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    std::size_t at = std::size_t(pos - pivots_.begin());
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + at, std::move(r));
    return true;
}

bool Subspace::contains(const SparseVec& v) const { return reduce(v).empty(); }

bool Subspace::equals(const Subspace& o) const {
    if (ambient_ != o.ambient_ || rows_.size() != o.rows_.size()) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i] != o.rows_[i]) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& a, const Subspace& b) {
    Subspace s = a;
    for (const auto& row : b.rows_) s.insert(row);
    return s;
}

Subspace Subspace::intersect(const Subspace& a, const Subspace& b) {
    Index D = a.ambient_;
    Subspace work(a.F_, 2 * D);
    for (const auto& u : a.rows_) {
        SparseVec v = u;
        for (const auto& [i, c] : u) v.push_back({i + D, c});
        work.insert(sv_from_terms(std::move(v), a.F_));
    }
    for (const auto& w : b.rows_) work.insert(w);
    Subspace out(a.F_, D);
    for (std::size_t k = 0; k < work.rows_.size(); ++k)
        if (work.pivots_[k] >= D) out.insert(sv_shift(work.rows_[k], -D));
    return out;
}

Subspace Subspace::orthogonal_complement() const {
    // columns of the transposed basis matrix, indexed by ambient coordinate
    std::map<Index, SparseVec> colmap;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (const auto& [j, c] : rows_[i]) colmap[j].push_back({Index(i), c});
    std::vector<SparseVec> cols(static_cast<std::size_t>(ambient_));
    for (auto& [j, col] : colmap) cols[std::size_t(j)] = std::move(col);
    auto ker = kernel_of_columns(cols, F_);
    Subspace out(F_, ambient_);
    for (auto& k : ker) out.insert(std::move(k));
    return out;
}

namespace {

// Shared elimination core; tracks combinations when a sink is provided.
struct Elim {
    const FieldRef& F;
    std::map<Index, std::pair<SparseVec, SparseVec>> pivots; // lead -> (vec, combo)
    explicit Elim(const FieldRef& f) : F(f) {}

    // returns true if the column increased the rank
    bool feed(Index j, SparseVec y, std::vector<SparseVec>* kernel_sink) {
        SparseVec combo = {{j, Scalar::one(F)}};
        while (!y.empty()) {
            auto it = pivots.find(y.front().first);
            if (it == pivots.end()) break;
            Scalar c = y.front().second;
            sv_add_scaled(y, -c, it->second.first);
            sv_add_scaled(combo, -c, it->second.second);
        }
        if (y.empty()) {
            if (kernel_sink) kernel_sink->push_back(std::move(combo));
            return false;
        }
        Scalar inv = y.front().second.inverse();
        Index lead = y.front().first;
        pivots.emplace(lead, std::make_pair(sv_scaled(inv, y), sv_scaled(inv, combo)));
        return true;
    }
};

} // namespace

long rank_of_columns(const std::vector<SparseVec>& cols, const FieldRef& F) {
    Elim e(F);
    long r = 0;
    for (std::size_t j = 0; j < cols.size(); ++j)
        if (e.feed(Index(j), cols[j], nullptr)) ++r;
    return r;
}

std::vector<SparseVec> kernel_of_columns(const std::vector<SparseVec>& cols, const FieldRef& F) {
    Elim e(F);
    std::vector<SparseVec> kernel;
    for (std::size_t j = 0; j < cols.size(); ++j) e.feed(Index(j), cols[j], &kernel);
    return kernel;
}

std::vector<SparseVec> kernel_through(const std::vector<SparseVec>& domain_basis,
                                      const std::vector<SparseVec>& images,
                                      const FieldRef& F) {
    auto combos = kernel_of_columns(images, F);
    std::vector<SparseVec> out;
    out.reserve(combos.size());
    for (const auto& c : combos) {
        SparseVec v;
        for (const auto& [k, s] : c) sv_add_scaled(v, s, domain_basis[std::size_t(k)]);
        out.push_back(std::move(v));
    }
    return out;
}

// ---------------------------------------------------------------------------
// modular path

namespace {

using ZpVec = std::vector<std::pair<Index, std::uint64_t>>;

std::uint64_t zp_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return std::uint64_t((unsigned __int128)a * b % p);
}

std::uint64_t zp_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = zp_mul(r, a, p);
        a = zp_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

void zp_add_scaled(ZpVec& y, std::uint64_t c, const ZpVec& x, std::uint64_t p) {
    if (c == 0 || x.empty()) return;
    ZpVec out;
    out.reserve(y.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            out.push_back(y[i++]);
        } else if (i == y.size() || x[j].first < y[i].first) {
            out.push_back({x[j].first, zp_mul(c, x[j].second, p)});
            ++j;
        } else {
            std::uint64_t s = (y[i].second + zp_mul(c, x[j].second, p)) % p;
            if (s != 0) out.push_back({y[i].first, s});
            ++i; ++j;
        }
    }
    y = std::move(out);
}

struct ZpElim {
    std::uint64_t p;
    std::map<Index, std::pair<ZpVec, ZpVec>> pivots;
    bool feed(Index j, ZpVec y, std::vector<ZpVec>* kernel_sink) {
        ZpVec combo = {{j, 1}};
        while (!y.empty()) {
            auto it = pivots.find(y.front().first);
            if (it == pivots.end()) break;
            std::uint64_t c = p - y.front().second;
            zp_add_scaled(y, c, it->second.first, p);
            zp_add_scaled(combo, c, it->second.second, p);
        }
        if (y.empty()) {
            if (kernel_sink) kernel_sink->push_back(std::move(combo));
            return false;
        }
        std::uint64_t inv = zp_pow(y.front().second, p - 2, p);
        ZpVec nv, nc;
        for (auto& [i, c] : y) nv.push_back({i, zp_mul(c, inv, p)});
        for (auto& [i, c] : combo) nc.push_back({i, zp_mul(c, inv, p)});
        pivots.emplace(y.front().first, std::make_pair(std::move(nv), std::move(nc)));
        return true;
    }
};

struct ModularRun {
    std::uint64_t prime = 0;
    long rank = 0;
    std::vector<ZpVec> kernel;   // combos over column indices; free col carries 1
    std::vector<Index> free_cols;
};

} // namespace

RankReport certified_rank(const std::vector<SparseVec>& cols, Index rows,
                          const FieldRef& F, RankMode mode,
                          unsigned num_primes, std::uint64_t seed) {
    (void)rows;
    RankReport rep;
    if (mode == RankMode::Exact) {
        rep.rank = rank_of_columns(cols, F);
        rep.verified = true;
        rep.primes_agreeing = 0;
        rep.note = "exact";
        return rep;
    }
    if (num_primes == 0) num_primes = 2;
    std::mt19937_64 rng(seed);
    std::vector<ModularRun> runs;
    unsigned attempts = 0;
    while (runs.size() < num_primes && attempts < num_primes + 16) {
        ++attempts;
        FieldRef P = prime_context_for(F, rng);
        try {
            ZpElim e;
            e.p = P->modulus();
            ModularRun run;
            run.prime = P->modulus();
            for (std::size_t j = 0; j < cols.size(); ++j) {
                ZpVec zc;
                for (const auto& [i, s] : cols[j]) {
                    std::uint64_t v = reduce_mod(s, P).residue();
                    if (v != 0) zc.push_back({i, v});
                }
                if (e.feed(Index(j), std::move(zc), &run.kernel)) ++run.rank;
                else run.free_cols.push_back(Index(j));
            }
            runs.push_back(std::move(run));
        } catch (const FieldError&) {
            continue; // denominator hit the modulus; draw another prime
        }
    }
    if (runs.empty()) {
        rep.note = "modular: no usable prime found";
        return rep;
    }
    long rmax = 0;
    for (const auto& r : runs) rmax = std::max(rmax, r.rank);
    rep.rank = rmax;
    rep.primes_agreeing = 0;
    for (const auto& r : runs)
        if (r.rank == rmax) ++rep.primes_agreeing;
    // Lower bound is certified: the elimination that reached rmax pivots
    // exhibits an rmax x rmax minor with determinant nonzero mod its prime,
    // and reduction is a ring homomorphism, so the exact determinant is
    // nonzero as well.
    std::string consensus = std::to_string(rep.primes_agreeing) + "/" +
                            std::to_string(runs.size()) + " primes";
    // Upper bound: lift a kernel basis and verify exactly.
    std::vector<const ModularRun*> agree;
    for (const auto& r : runs)
        if (r.rank == rmax && r.free_cols == runs.front().free_cols) agree.push_back(&r);
    if (agree.empty() || agree.front()->free_cols.size() != cols.size() - std::size_t(rmax)) {
        rep.note = "modular: lower bound certified, free columns unstable (" + consensus + "); unverified";
        return rep;
    }
    if (F->kind() == FieldKind::Cyclotomic) {
        rep.note = "modular: lower bound certified (" + consensus + "); cyclotomic kernel lift not attempted; unverified";
        return rep;
    }
    bool lifted_all = true;
    std::size_t nker = agree.front()->kernel.size();
    for (std::size_t kv = 0; kv < nker && lifted_all; ++kv) {
        // CRT-combine the kernel vector entries across agreeing primes
        std::map<Index, std::pair<mpz_class, mpz_class>> entries; // idx -> (residue, modulus)
        for (const ModularRun* run : agree) {
            if (run->kernel.size() != nker) { lifted_all = false; break; }
            for (const auto& [i, v] : run->kernel[kv]) {
                mpz_class r((unsigned long)v), m((unsigned long)run->prime);
                auto it = entries.find(i);
                if (it == entries.end()) entries.emplace(i, std::make_pair(r, m));
                else {
                    it->second.first = crt_combine(it->second.first, it->second.second, r, m);
                    it->second.second *= m;
                }
            }
        }
        if (!lifted_all) break;
        SparseVec lifted;
        for (auto& [i, rm] : entries) {
            auto q = rational_reconstruct(rm.first, rm.second);
            if (!q) { lifted_all = false; break; }
            lifted.push_back({i, Scalar::from_mpq(F, *q)});
        }
        if (!lifted_all) break;
        SparseVec img;
        for (const auto& [j, c] : lifted) sv_add_scaled(img, c, cols[std::size_t(j)]);
        if (!img.empty()) lifted_all = false;
    }
    if (lifted_all) {
        rep.verified = true;
        rep.note = "modular: minor certified, kernel lifted and checked exactly (" + consensus + ")";
    } else {
        rep.note = "modular: lower bound certified (" + consensus + "); kernel lift failed; unverified";
    }
    return rep;
}

} // namespace qsh
