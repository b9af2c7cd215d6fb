#pragma once

#include <qsh/braided.hpp>

#include <vector>

namespace qsh {

/// Permutation in one-line notation, 0-based: p[i] is the image of i.
using Perm = std::vector<int>;

int perm_length(const Perm& p); // inversion count
Perm perm_compose(const Perm& a, const Perm& b); // (a*b)(x) = a(b(x))
Perm perm_inverse(const Perm& p);

/// Lexicographically least reduced word for p.  Letters are 1-based adjacent
/// transposition positions, listed in the order they are applied: if the
/// result is (j1, ..., jm) then p = s_{jm} * ... * s_{j1}.
std::vector<int> matsumoto_lift(const Perm& p);

/// Every reduced word of p, in lexicographic order.  Exponential in length;
/// intended for cross-checking on small symmetric groups.
std::vector<std::vector<int>> all_reduced_words(const Perm& p);

/// Basis words of V^{ox n} are digit strings over {0..d-1}; the index of
/// (w_0, ..., w_{n-1}) is sum w_i d^{n-1-i}, so indices sort words
/// lexicographically.
Index word_pack(const std::vector<int>& word, int d);
std::vector<int> word_unpack(Index idx, int d, int n);
Index word_space_size(int d, int n);

/// Apply the braiding to tensor factors (letter-1, letter) of a degree-n
/// element, letter in 1..n-1.
SparseVec apply_R_letter(const BraidedVectorSpace& V, int letter, const SparseVec& v, int n);

/// Apply a whole word of letters, left to right.
SparseVec apply_word(const BraidedVectorSpace& V, const std::vector<int>& word,
                     const SparseVec& v, int n);

/// The braid-group lift of p acting on V^{ox n}: the letters of any reduced
/// word applied left to right.  Well defined because the braiding satisfies
/// the Yang-Baxter equation.  For the trivial braiding this moves the letter
/// in position i to position p(i).
SparseVec apply_R_sigma(const BraidedVectorSpace& V, const Perm& p, const SparseVec& v, int n);

/// (p,q)-shuffles: permutations of {0..p+q-1} increasing on the first p and
/// on the last q inputs.  Ordered by the position set of the first block.
std::vector<Perm> shuffles(int p, int q);
/// Inverses of the (p,q)-shuffles, in matching order.
std::vector<Perm> unshuffles(int p, int q);

/// Braid move i (1-based) on a tuple of group element ids:
///   forward:  (.., g_i, g_{i+1}, ..) -> (.., g_{i+1}, g_{i+1}^{-1} g_i g_{i+1}, ..)
///   inverse:  (.., g_i, g_{i+1}, ..) -> (.., g_i g_{i+1} g_i^{-1}, g_i, ..)
std::vector<int> hurwitz_move(const GroupData& G, std::vector<int> tuple, int i, bool inverse);

struct OrbitSummary {
    long orbit_count = 0;
    std::vector<std::vector<int>> representatives; // lex-least member of each orbit, sorted
    std::vector<long> orbit_sizes;                 // matching order
};

/// Enumerate braid orbits on n-tuples drawn from a fixed set of group
/// elements closed under conjugation.  Throws ResourceError when |set|^n
/// exceeds the guard.
OrbitSummary orbit_enumerate(const GroupData& G, const std::vector<int>& elements, int n,
                             long guard = 10000000);

} // namespace qsh
