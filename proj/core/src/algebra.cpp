#include <qsh/algebra.hpp>

#include <algorithm>
#include <numeric>

namespace qsh {

SparseVec concat_product(int d, const SparseVec& u, int p, const SparseVec& v, int q) {
    (void)p;
    Index shift = word_space_size(d, q);
    SparseVec out;
    for (const auto& [iu, cu] : u)
        for (const auto& [iv, cv] : v)
            sv_add_scaled(out, cu * cv, sv_unit(iu * shift + iv, cu.field()));
    return out;
}

namespace {

SparseVec perm_sum_window(const BraidedVectorSpace& V, const std::vector<Perm>& perms,
                          const SparseVec& v, int n, int offset) {
    SparseVec out;
    for (const auto& s : perms) {
        auto letters = matsumoto_lift(s);
        for (int& L : letters) L += offset;
        SparseVec term = apply_word(V, letters, v, n);
        for (const auto& [i, c] : term) sv_add_scaled(out, c, sv_unit(i, c.field()));
    }
    return out;
}

} // namespace

SparseVec shuffle_window(const BraidedVectorSpace& V, const SparseVec& v, int n,
                         int offset, int p, int q) {
    return perm_sum_window(V, shuffles(p, q), v, n, offset);
}

SparseVec unshuffle_window(const BraidedVectorSpace& V, const SparseVec& v, int n,
                           int offset, int p, int q) {
    return perm_sum_window(V, unshuffles(p, q), v, n, offset);
}

SparseVec shuffle_product(const BraidedVectorSpace& V, const SparseVec& u, int p,
                          const SparseVec& v, int q) {
    SparseVec cat = concat_product(V.dim(), u, p, v, q);
    return shuffle_window(V, cat, p + q, 0, p, q);
}

std::vector<SparseVec> symmetrizer_columns(const BraidedVectorSpace& V, int n) {
    Index size = word_space_size(V.dim(), n);
    std::vector<SparseVec> cols(static_cast<std::size_t>(size));
    Perm s(static_cast<std::size_t>(n));
    std::iota(s.begin(), s.end(), 0);
    do {
        auto letters = matsumoto_lift(s);
        for (Index i = 0; i < size; ++i) {
            SparseVec term = apply_word(V, letters, sv_unit(i, V.field()), n);
            for (const auto& [j, c] : term)
                sv_add_scaled(cols[std::size_t(i)], c, sv_unit(j, c.field()));
        }
    } while (std::next_permutation(s.begin(), s.end()));
    return cols;
}

Subspace nichols_subspace(const BraidedVectorSpace& V, int n) {
    if (n == 0) {
        Subspace S(V.field(), 1);
        S.insert(sv_unit(0, V.field()));
        return S;
    }
    Index size = word_space_size(V.dim(), n);
    Subspace S(V.field(), size);
    for (const auto& col : symmetrizer_columns(V, n)) S.insert(col);
    return S;
}

Subspace nichols_by_left_products(const BraidedVectorSpace& V, int n) {
    FieldRef F = V.field();
    if (n == 0) {
        Subspace S(F, 1);
        S.insert(sv_unit(0, F));
        return S;
    }
    Subspace prev(F, 1);
    prev.insert(sv_unit(0, F));
    for (int k = 1; k <= n; ++k) {
        Subspace cur(F, word_space_size(V.dim(), k));
        for (int i = 0; i < V.dim(); ++i) {
            SparseVec gen = sv_unit(i, F);
            for (const auto& row : prev.basis())
                cur.insert(shuffle_product(V, gen, 1, row, k - 1));
        }
        prev = std::move(cur);
    }
    return prev;
}

RankReport nichols_rank(const BraidedVectorSpace& V, int n, RankMode mode,
                        int num_primes, std::uint64_t seed) {
    auto cols = symmetrizer_columns(V, n);
    return certified_rank(cols, word_space_size(V.dim(), n), V.field(), mode, num_primes, seed);
}

} // namespace qsh
