#include <qsh/combinat.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

namespace qsh {

int perm_length(const Perm& p) {
    int n = int(p.size()), inv = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p[std::size_t(i)] > p[std::size_t(j)]) ++inv;
    return inv;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[std::size_t(b[i])];
    return r;
}

Perm perm_inverse(const Perm& p) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[std::size_t(p[i])] = int(i);
    return r;
}

std::vector<int> matsumoto_lift(const Perm& p) {
    // Peel off the smallest right descent each step; the collected letters
    // are applied first to last, and greediness makes the word lex-least.
    Perm cur = p;
    int n = int(cur.size());
    std::vector<int> word;
    for (;;) {
        int j = -1;
        for (int i = 0; i + 1 < n; ++i)
            if (cur[std::size_t(i)] > cur[std::size_t(i + 1)]) { j = i; break; }
        if (j < 0) break;
        word.push_back(j + 1);
        std::swap(cur[std::size_t(j)], cur[std::size_t(j + 1)]);
    }
    return word;
}

namespace {

void reduced_words_rec(Perm cur, std::vector<int>& stack,
                       std::vector<std::vector<int>>& out) {
    int n = int(cur.size());
    bool any = false;
    for (int i = 0; i + 1 < n; ++i) {
        if (cur[std::size_t(i)] > cur[std::size_t(i + 1)]) {
            any = true;
            stack.push_back(i + 1);
            Perm next = cur;
            std::swap(next[std::size_t(i)], next[std::size_t(i + 1)]);
            reduced_words_rec(std::move(next), stack, out);
            stack.pop_back();
        }
    }
    if (!any) out.push_back(stack);
}

} // namespace

std::vector<std::vector<int>> all_reduced_words(const Perm& p) {
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    reduced_words_rec(p, stack, out);
    std::sort(out.begin(), out.end());
    return out;
}

Index word_pack(const std::vector<int>& word, int d) {
    Index idx = 0;
    for (int w : word) idx = idx * d + w;
    return idx;
}

std::vector<int> word_unpack(Index idx, int d, int n) {
    std::vector<int> word(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        word[std::size_t(i)] = int(idx % d);
        idx /= d;
    }
    return word;
}

Index word_space_size(int d, int n) {
    Index s = 1;
    for (int i = 0; i < n; ++i) s *= d;
    return s;
}

SparseVec apply_R_letter(const BraidedVectorSpace& V, int letter, const SparseVec& v, int n) {
    if (letter < 1 || letter >= n)
        throw FieldError("braid letter out of range");
    int d = V.dim();
    Index hi = 1; // weight of the left factor's digit
    for (int i = 0; i < n - 1 - letter; ++i) hi *= d;
    Index lo = hi; // weight of the right factor's digit is hi, left is hi*d
    hi *= d;
    const auto& R = V.r_matrix();
    SparseVec out;
    for (const auto& [idx, coef] : v) {
        int a = int((idx / hi) % d);
        int b = int((idx / lo) % d);
        Index base = idx - Index(a) * hi - Index(b) * lo;
        for (const auto& [pair_idx, rc] : R[std::size_t(a * d + b)]) {
            int x = int(pair_idx / d), y = int(pair_idx % d);
            sv_add_scaled(out, coef * rc, sv_unit(base + Index(x) * hi + Index(y) * lo, coef.field()));
        }
    }
    return out;
}

SparseVec apply_word(const BraidedVectorSpace& V, const std::vector<int>& word,
                     const SparseVec& v, int n) {
    SparseVec cur = v;
    for (int letter : word) cur = apply_R_letter(V, letter, cur, n);
    return cur;
}

SparseVec apply_R_sigma(const BraidedVectorSpace& V, const Perm& p, const SparseVec& v, int n) {
    if (int(p.size()) != n) throw FieldError("permutation degree mismatch");
    return apply_word(V, matsumoto_lift(p), v, n);
}

std::vector<Perm> shuffles(int p, int q) {
    int n = p + q;
    std::vector<Perm> out;
    // choose the output positions of the first block, in lex order
    std::vector<int> pos(static_cast<std::size_t>(p));
    std::iota(pos.begin(), pos.end(), 0);
    for (;;) {
        Perm s(static_cast<std::size_t>(n));
        std::vector<bool> used(std::size_t(n), false);
        for (int i = 0; i < p; ++i) {
            s[std::size_t(i)] = pos[std::size_t(i)];
            used[std::size_t(pos[std::size_t(i)])] = true;
        }
        int k = p;
        for (int v = 0; v < n; ++v)
            if (!used[std::size_t(v)]) s[std::size_t(k++)] = v;
        out.push_back(std::move(s));
        // next p-subset of {0..n-1}
        int i = p - 1;
        while (i >= 0 && pos[std::size_t(i)] == n - p + i) --i;
        if (i < 0) break;
        ++pos[std::size_t(i)];
        for (int j = i + 1; j < p; ++j) pos[std::size_t(j)] = pos[std::size_t(j - 1)] + 1;
    }
    return out;
}

std::vector<Perm> unshuffles(int p, int q) {
    auto sh = shuffles(p, q);
    for (auto& s : sh) s = perm_inverse(s);
    return sh;
}

std::vector<int> hurwitz_move(const GroupData& G, std::vector<int> tuple, int i, bool inverse) {
    int n = int(tuple.size());
    if (i < 1 || i >= n) throw FieldError("braid move index out of range");
    int a = tuple[std::size_t(i - 1)], b = tuple[std::size_t(i)];
    if (!inverse) {
        tuple[std::size_t(i - 1)] = b;
        tuple[std::size_t(i)] = G.conjugate(a, b); // b^{-1} a b
    } else {
        tuple[std::size_t(i - 1)] = G.multiply(G.multiply(a, b), G.inverse(a));
        tuple[std::size_t(i)] = a;
    }
    return tuple;
}

OrbitSummary orbit_enumerate(const GroupData& G, const std::vector<int>& elements, int n,
                             long guard) {
    std::size_t m = elements.size();
    double total = 1;
    for (int i = 0; i < n; ++i) total *= double(m);
    if (total > double(guard))
        throw ResourceError("orbit enumeration guard exceeded");
    // dense position map for members of the element set
    std::map<int, int> slot;
    for (std::size_t i = 0; i < m; ++i) slot[elements[i]] = int(i);
    auto encode = [&](const std::vector<int>& t) {
        std::uint64_t code = 0;
        for (int g : t) code = code * m + std::uint64_t(slot.at(g));
        return code;
    };
    std::uint64_t count = 1;
    for (int i = 0; i < n; ++i) count *= m;
    std::vector<std::uint8_t> seen(count, 0);
    OrbitSummary out;
    std::vector<int> tuple(static_cast<std::size_t>(n));
    for (std::uint64_t start = 0; start < count; ++start) {
        if (seen[start]) continue;
        // decode the lex-least unseen tuple; it is its orbit's representative
        std::uint64_t rem = start;
        for (int i = n - 1; i >= 0; --i) {
            tuple[std::size_t(i)] = elements[rem % m];
            rem /= m;
        }
        long size = 0;
        std::vector<std::vector<int>> frontier = {tuple};
        seen[start] = 1;
        while (!frontier.empty()) {
            std::vector<std::vector<int>> next;
            for (const auto& t : frontier) {
                ++size;
                for (int i = 1; i < n; ++i) {
                    for (bool inv : {false, true}) {
                        auto moved = hurwitz_move(G, t, i, inv);
                        std::uint64_t code = encode(moved);
                        if (!seen[code]) {
                            seen[code] = 1;
                            next.push_back(std::move(moved));
                        }
                    }
                }
            }
            frontier = std::move(next);
        }
        ++out.orbit_count;
        out.representatives.push_back(tuple);
        out.orbit_sizes.push_back(size);
    }
    return out;
}

} // namespace qsh
