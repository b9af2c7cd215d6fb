#include <qsh/braided.hpp>

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace qsh {

void Rack::validate() const {
    int n = size();
    if (n == 0) throw FieldError("empty rack");
    for (const auto& row : act) {
        if (int(row.size()) != n) throw FieldError("rack table not square");
        for (int v : row)
            if (v < 0 || v >= n) throw FieldError("rack table entry out of range");
    }
    for (int a = 0; a < n; ++a) {
        std::vector<bool> seen(std::size_t(n), false);
        for (int c = 0; c < n; ++c) {
            int img = act[std::size_t(c)][std::size_t(a)];
            if (seen[std::size_t(img)]) throw FieldError("rack action by " + std::to_string(a) + " is not bijective");
            seen[std::size_t(img)] = true;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int lhs = act[std::size_t(act[std::size_t(c)][std::size_t(a)])]
                              [std::size_t(act[std::size_t(b)][std::size_t(a)])];
                int rhs = act[std::size_t(act[std::size_t(c)][std::size_t(b)])][std::size_t(a)];
                if (lhs != rhs) throw FieldError("rack self-distributivity fails");
            }
}

std::string cycle_string(const std::vector<int>& p) {
    int n = int(p.size());
    std::vector<bool> used(std::size_t(n), false);
    std::string out;
    for (int s = 0; s < n; ++s) {
        if (used[std::size_t(s)] || p[std::size_t(s)] == s) continue;
        std::string cyc = "(" + std::to_string(s + 1);
        used[std::size_t(s)] = true;
        for (int x = p[std::size_t(s)]; x != s; x = p[std::size_t(x)]) {
            used[std::size_t(x)] = true;
            cyc += " " + std::to_string(x + 1);
        }
        out += cyc + ")";
    }
    return out.empty() ? "()" : out;
}

GroupData GroupData::from_permutations(const std::vector<std::vector<int>>& one_line_gens) {
    if (one_line_gens.empty()) throw FieldError("no generators");
    std::size_t deg = one_line_gens.front().size();
    std::vector<std::vector<int>> gens;
    for (const auto& g : one_line_gens) {
        if (g.size() != deg) throw FieldError("generator degrees differ");
        std::vector<int> z(deg);
        std::vector<bool> seen(deg, false);
        for (std::size_t i = 0; i < deg; ++i) {
            int v = g[i] - 1; // external format is 1-based one-line
            if (v < 0 || v >= int(deg) || seen[std::size_t(v)])
                throw FieldError("generator is not a permutation");
            seen[std::size_t(v)] = true;
            z[i] = v;
        }
        gens.push_back(std::move(z));
    }
    std::vector<int> id(deg);
    for (std::size_t i = 0; i < deg; ++i) id[i] = int(i);
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elems;
    elems.push_back(id);
    index[id] = 0;
    std::queue<int> bfs;
    bfs.push(0);
    while (!bfs.empty()) {
        int cur = bfs.front();
        bfs.pop();
        for (const auto& g : gens) {
            std::vector<int> nxt(deg);
            for (std::size_t i = 0; i < deg; ++i) nxt[i] = g[std::size_t(elems[std::size_t(cur)][i])];
            if (index.emplace(nxt, int(elems.size())).second) {
                elems.push_back(nxt);
                bfs.push(int(elems.size()) - 1);
                if (elems.size() > 100000) throw FieldError("group too large");
            }
        }
    }
    GroupData G;
    int n = int(elems.size());
    G.mul_.assign(std::size_t(n), std::vector<int>(std::size_t(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> ab(deg);
            for (std::size_t i = 0; i < deg; ++i)
                ab[i] = elems[std::size_t(a)][std::size_t(elems[std::size_t(b)][i])];
            G.mul_[std::size_t(a)][std::size_t(b)] = index.at(ab);
        }
    G.labels_.resize(std::size_t(n));
    for (int a = 0; a < n; ++a) G.labels_[std::size_t(a)] = cycle_string(elems[std::size_t(a)]);
    G.finish_validate();
    return G;
}

GroupData GroupData::from_table(const std::vector<std::vector<int>>& table) {
    int n = int(table.size());
    if (n == 0) throw FieldError("empty group table");
    for (const auto& row : table) {
        if (int(row.size()) != n) throw FieldError("group table not square");
        std::vector<bool> seen(std::size_t(n), false);
        for (int v : row) {
            if (v < 0 || v >= n || seen[std::size_t(v)]) throw FieldError("group table row is not a permutation");
            seen[std::size_t(v)] = true;
        }
    }
    for (int j = 0; j < n; ++j) {
        std::vector<bool> seen(std::size_t(n), false);
        for (int i = 0; i < n; ++i) {
            int v = table[std::size_t(i)][std::size_t(j)];
            if (seen[std::size_t(v)]) throw FieldError("group table column is not a permutation");
            seen[std::size_t(v)] = true;
        }
    }
    // locate the identity and move it to index 0 by relabeling
    int e = -1;
    for (int a = 0; a < n; ++a) {
        bool ok = true;
        for (int b = 0; b < n; ++b)
            if (table[std::size_t(a)][std::size_t(b)] != b || table[std::size_t(b)][std::size_t(a)] != b) { ok = false; break; }
        if (ok) { e = a; break; }
    }
    if (e < 0) throw FieldError("group table has no identity");
    std::vector<int> old2new(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) old2new[std::size_t(a)] = a == 0 ? e : (a == e ? 0 : a);
    GroupData G;
    G.mul_.assign(std::size_t(n), std::vector<int>(std::size_t(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            G.mul_[std::size_t(old2new[std::size_t(a)])][std::size_t(old2new[std::size_t(b)])] =
                old2new[std::size_t(table[std::size_t(a)][std::size_t(b)])];
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (G.mul_[std::size_t(G.mul_[std::size_t(a)][std::size_t(b)])][std::size_t(c)] !=
                    G.mul_[std::size_t(a)][std::size_t(G.mul_[std::size_t(b)][std::size_t(c)])])
                    throw FieldError("group table is not associative");
    G.labels_.resize(std::size_t(n));
    for (int a = 0; a < n; ++a) G.labels_[std::size_t(a)] = a == 0 ? "e" : "g" + std::to_string(a);
    G.finish_validate();
    return G;
}

void GroupData::finish_validate() {
    int n = size();
    inv_.assign(std::size_t(n), -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul_[std::size_t(a)][std::size_t(b)] == 0) { inv_[std::size_t(a)] = b; break; }
        if (inv_[std::size_t(a)] < 0) throw FieldError("group element has no inverse");
    }
}

int GroupData::conjugate(int a, int b) const {
    return multiply(multiply(inverse(b), a), b);
}

std::vector<int> GroupData::conjugacy_class(int g) const {
    std::set<int> cls = {g};
    std::queue<int> bfs;
    bfs.push(g);
    while (!bfs.empty()) {
        int cur = bfs.front();
        bfs.pop();
        for (int h = 0; h < size(); ++h) {
            int c = conjugate(cur, h);
            if (cls.insert(c).second) bfs.push(c);
        }
    }
    return std::vector<int>(cls.begin(), cls.end());
}

int GroupData::element_by_label(const std::string& s) const {
    for (int a = 0; a < size(); ++a)
        if (labels_[std::size_t(a)] == s) return a;
    return -1;
}

BraidedVectorSpace::BraidedVectorSpace(int d, FieldRef F, std::vector<std::string> labels,
                                       std::vector<SparseVec> cols)
    : d_(d), F_(std::move(F)), labels_(std::move(labels)), cols_(std::move(cols)) {
    if (labels_.empty()) {
        labels_.resize(std::size_t(d_));
        for (int i = 0; i < d_; ++i) labels_[std::size_t(i)] = "e" + std::to_string(i);
    }
}

int BraidedVectorSpace::label_index(const std::string& s) const {
    for (int i = 0; i < d_; ++i)
        if (labels_[std::size_t(i)] == s) return i;
    return -1;
}

BraidedVectorSpace BraidedVectorSpace::trivial(int d, const FieldRef& F) {
    if (d <= 0) throw FieldError("dimension must be positive");
    std::vector<SparseVec> cols(std::size_t(d) * std::size_t(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            cols[std::size_t(i * d + j)] = sv_unit(Index(j) * d + i, F);
    return BraidedVectorSpace(d, F, {}, std::move(cols));
}

BraidedVectorSpace BraidedVectorSpace::diagonal(const std::vector<std::vector<Scalar>>& q) {
    int d = int(q.size());
    if (d == 0) throw FieldError("empty coefficient matrix");
    FieldRef F = q[0][0].field();
    std::vector<SparseVec> cols(std::size_t(d) * std::size_t(d));
    for (int i = 0; i < d; ++i) {
        if (int(q[std::size_t(i)].size()) != d) throw FieldError("coefficient matrix not square");
        for (int j = 0; j < d; ++j) {
            const Scalar& c = q[std::size_t(i)][std::size_t(j)];
            if (c.is_zero()) throw FieldError("diagonal braiding coefficient is zero");
            cols[std::size_t(i * d + j)] = {{Index(j) * d + i, c}};
        }
    }
    return BraidedVectorSpace(d, F, {}, std::move(cols));
}

BraidedVectorSpace BraidedVectorSpace::rack(const Rack& rk,
                                            const std::vector<std::vector<Scalar>>& cocycle) {
    rk.validate();
    int d = rk.size();
    if (int(cocycle.size()) != d) throw FieldError("cocycle table size mismatch");
    FieldRef F = cocycle[0][0].field();
    std::vector<SparseVec> cols(std::size_t(d) * std::size_t(d));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const Scalar& x = cocycle[std::size_t(a)][std::size_t(b)];
            if (x.is_zero()) throw FieldError("cocycle value is zero");
            int ab = rk.act[std::size_t(a)][std::size_t(b)];
            cols[std::size_t(a * d + b)] = {{Index(b) * d + ab, x}};
        }
    BraidedVectorSpace V(d, F, rk.labels, std::move(cols));
    if (!yang_baxter_check(V)) throw FieldError("rack braiding fails Yang-Baxter");
    return V;
}

BraidedVectorSpace BraidedVectorSpace::rack_constant(const Rack& rk, const Scalar& x) {
    std::vector<std::vector<Scalar>> co(std::size_t(rk.size()),
                                        std::vector<Scalar>(std::size_t(rk.size()), x));
    return rack(rk, co);
}

BraidedVectorSpace BraidedVectorSpace::group_class(const GroupData& G,
                                                   const std::vector<int>& class_reps,
                                                   const Scalar& cocycle) {
    if (class_reps.empty()) throw FieldError("no class representatives");
    std::set<int> basis;
    for (int r : class_reps) {
        if (r < 0 || r >= G.size()) throw FieldError("class representative out of range");
        auto cls = G.conjugacy_class(r);
        basis.insert(cls.begin(), cls.end());
    }
    std::vector<int> elems(basis.begin(), basis.end());
    int d = int(elems.size());
    std::map<int, int> pos;
    for (int i = 0; i < d; ++i) pos[elems[std::size_t(i)]] = i;
    Rack rk;
    rk.labels.resize(std::size_t(d));
    rk.act.assign(std::size_t(d), std::vector<int>(std::size_t(d)));
    for (int i = 0; i < d; ++i) {
        rk.labels[std::size_t(i)] = G.label(elems[std::size_t(i)]);
        for (int j = 0; j < d; ++j) {
            int c = G.conjugate(elems[std::size_t(i)], elems[std::size_t(j)]);
            auto it = pos.find(c);
            if (it == pos.end()) throw FieldError("class set not closed under conjugation");
            rk.act[std::size_t(i)][std::size_t(j)] = it->second;
        }
    }
    return rack_constant(rk, cocycle);
}

BraidedVectorSpace BraidedVectorSpace::from_matrix(int d, std::vector<SparseVec> columns,
                                                   const FieldRef& F,
                                                   std::vector<std::string> labels, bool validate) {
    if (int(columns.size()) != d * d) throw FieldError("braiding matrix must be d^2 x d^2");
    BraidedVectorSpace V(d, F, std::move(labels), std::move(columns));
    if (validate) {
        if (!invertible(V)) throw FieldError("braiding matrix is singular");
        if (!yang_baxter_check(V)) throw FieldError("matrix fails Yang-Baxter");
    }
    return V;
}

BraidedVectorSpace BraidedVectorSpace::dual() const {
    std::vector<std::vector<std::pair<Index, Scalar>>> t(cols_.size());
    for (std::size_t p = 0; p < cols_.size(); ++p)
        for (const auto& [q, c] : cols_[p]) t[std::size_t(q)].push_back({Index(p), c});
    std::vector<SparseVec> cols(cols_.size());
    for (std::size_t q = 0; q < t.size(); ++q) cols[q] = sv_from_terms(std::move(t[q]), F_);
    return BraidedVectorSpace(d_, F_, labels_, std::move(cols));
}

namespace {

SparseVec apply_on_triples(const BraidedVectorSpace& V, int pos, const SparseVec& v) {
    int d = V.dim();
    const auto& R = V.r_matrix();
    std::vector<std::pair<Index, Scalar>> terms;
    for (const auto& [t, coef] : v) {
        Index a = t / (d * d), b = (t / d) % d, c = t % d;
        Index pair = pos == 0 ? a * d + b : b * d + c;
        for (const auto& [pq, rc] : R[std::size_t(pair)]) {
            Index x = pq / d, y = pq % d;
            Index nt = pos == 0 ? x * d * d + y * d + c : a * d * d + x * d + y;
            terms.push_back({nt, coef * rc});
        }
    }
    return sv_from_terms(std::move(terms), V.field());
}

} // namespace

bool yang_baxter_check(const BraidedVectorSpace& V) {
    int d = V.dim();
    for (Index t = 0; t < Index(d) * d * d; ++t) {
        SparseVec e = sv_unit(t, V.field());
        SparseVec l = apply_on_triples(V, 0, apply_on_triples(V, 1, apply_on_triples(V, 0, e)));
        SparseVec r = apply_on_triples(V, 1, apply_on_triples(V, 0, apply_on_triples(V, 1, e)));
        if (l != r) return false;
    }
    return true;
}

bool invertible(const BraidedVectorSpace& V) {
    return rank_of_columns(V.r_matrix(), V.field()) == long(V.r_matrix().size());
}

} // namespace qsh
