#include "doctest.h"

#include <qsh/braided.hpp>

using namespace qsh;

namespace {

// Independent dense Yang-Baxter oracle: build both composites on V^3 by
// straightforward application and compare, no shared code with the library
// checker beyond the raw column data.
SparseVec apply_pair_map(const std::vector<SparseVec>& R, int d, int pos, const SparseVec& v,
                         const FieldRef& F) {
    // pos = 0 acts on factors (0,1), pos = 1 on (1,2) of a triple index a*d^2+b*d+c
    SparseVec out;
    for (const auto& [t, coef] : v) {
        long a = t / (d * d), b = (t / d) % d, c = t % d;
        long pair = pos == 0 ? a * d + b : b * d + c;
        for (const auto& [pq, rc] : R[std::size_t(pair)]) {
            long x = pq / d, y = pq % d;
            long nt = pos == 0 ? x * d * d + y * d + c : a * d * d + x * d + y;
            sv_add_scaled(out, coef * rc, sv_unit(nt, F));
        }
    }
    return out;
}

bool brute_yang_baxter(const BraidedVectorSpace& V) {
    int d = V.dim();
    const auto& R = V.r_matrix();
    const FieldRef& F = V.field();
    for (long t = 0; t < (long)d * d * d; ++t) {
        SparseVec e = sv_unit(t, F);
        SparseVec lhs = apply_pair_map(R, d, 0, apply_pair_map(R, d, 1, apply_pair_map(R, d, 0, e, F), F), F);
        SparseVec rhs = apply_pair_map(R, d, 1, apply_pair_map(R, d, 0, apply_pair_map(R, d, 1, e, F), F), F);
        if (lhs != rhs) return false;
    }
    return true;
}

} // namespace

TEST_CASE("symmetric group S3 from permutation generators") {
    GroupData G = GroupData::from_permutations({{2, 1, 3}, {1, 3, 2}});
    CHECK(G.size() == 6);
    int t12 = G.element_by_label("(1 2)");
    int t13 = G.element_by_label("(1 3)");
    int t23 = G.element_by_label("(2 3)");
    REQUIRE(t12 >= 0);
    REQUIRE(t13 >= 0);
    REQUIRE(t23 >= 0);
    SUBCASE("conjugation (12)^(13) = (23), frozen by hand multiplication") {
        CHECK(G.conjugate(t12, t13) == t23);
        CHECK(G.conjugate(t13, t12) == t23);
        CHECK(G.conjugate(t12, t23) == t13);
    }
    SUBCASE("class of a transposition has size 3") {
        auto cls = G.conjugacy_class(t12);
        CHECK(cls.size() == 3);
    }
    SUBCASE("24-element check: S4 generators close") {
        GroupData S4 = GroupData::from_permutations({{2, 1, 3, 4}, {1, 3, 2, 4}, {1, 2, 4, 3}});
        CHECK(S4.size() == 24);
    }
}

TEST_CASE("trivial braiding") {
    BraidedVectorSpace V = BraidedVectorSpace::trivial(3, FieldContext::rational());
    CHECK(V.dim() == 3);
    // R(e_i ox e_j) = e_j ox e_i
    const auto& R = V.r_matrix();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            REQUIRE(R[std::size_t(i * 3 + j)].size() == 1);
            CHECK(R[std::size_t(i * 3 + j)][0].first == j * 3 + i);
            CHECK(R[std::size_t(i * 3 + j)][0].second.is_one());
        }
    CHECK(yang_baxter_check(V));
    CHECK(brute_yang_baxter(V));
    CHECK(V.dual().r_matrix() == V.r_matrix());
}

TEST_CASE("diagonal braiding") {
    FieldRef Q = FieldContext::rational();
    std::vector<std::vector<Scalar>> q = {
        {Scalar::integer(Q, 2), Scalar::integer(Q, 3)},
        {Scalar::integer(Q, 5), Scalar::integer(Q, 7)}};
    BraidedVectorSpace V = BraidedVectorSpace::diagonal(q);
    CHECK(yang_baxter_check(V));
    CHECK(brute_yang_baxter(V));
    // R(e_i ox e_j) = q_ij e_j ox e_i
    CHECK(V.r_matrix()[0 * 2 + 1][0].first == 1 * 2 + 0);
    CHECK(V.r_matrix()[0 * 2 + 1][0].second == Scalar::integer(Q, 3));
    SUBCASE("dual of a diagonal braiding transposes the coefficient matrix") {
        BraidedVectorSpace D = V.dual();
        CHECK(D.r_matrix()[0 * 2 + 1][0].second == Scalar::integer(Q, 5));
        CHECK(D.dual().r_matrix() == V.r_matrix());
    }
    SUBCASE("one-dimensional cyclotomic case") {
        Scalar z = Scalar::cyclotomic(3, 1);
        BraidedVectorSpace W = BraidedVectorSpace::diagonal({{z}});
        CHECK(yang_baxter_check(W));
        CHECK(W.dual().r_matrix() == W.r_matrix()); // 1x1 transpose
    }
    SUBCASE("zero coefficient is rejected") {
        std::vector<std::vector<Scalar>> bad = {
            {Scalar::integer(Q, 1), Scalar::integer(Q, 0)},
            {Scalar::integer(Q, 1), Scalar::integer(Q, 1)}};
        CHECK_THROWS_AS(BraidedVectorSpace::diagonal(bad), FieldError);
    }
}

TEST_CASE("rack braiding for S3 transpositions") {
    GroupData G = GroupData::from_permutations({{2, 1, 3}, {1, 3, 2}});
    FieldRef Q = FieldContext::rational();
    SUBCASE("cocycle -1: R((12) ox (13)) = -((13) ox (23))") {
        BraidedVectorSpace V = BraidedVectorSpace::group_class(
            G, {G.element_by_label("(1 2)")}, Scalar::integer(Q, -1));
        REQUIRE(V.dim() == 3);
        // basis order is class elements sorted into enumeration order
        int a = V.label_index("(1 2)"), b = V.label_index("(1 3)"), c = V.label_index("(2 3)");
        REQUIRE(a >= 0);
        REQUIRE(b >= 0);
        REQUIRE(c >= 0);
        const SparseVec& col = V.r_matrix()[std::size_t(a * 3 + b)];
        REQUIRE(col.size() == 1);
        CHECK(col[0].first == b * 3 + c); // (13) ox (12)^(13) = (13) ox (23)
        CHECK(col[0].second == Scalar::integer(Q, -1));
        CHECK(yang_baxter_check(V));
        CHECK(brute_yang_baxter(V));
        SUBCASE("R^2 is not the identity although the cocycle squares to 1") {
            const SparseVec& once = V.r_matrix()[std::size_t(a * 3 + b)];
            long p = once[0].first;
            const SparseVec& twice = V.r_matrix()[std::size_t(p)];
            CHECK(twice[0].first != a * 3 + b);
        }
        SUBCASE("dual braiding passes Yang-Baxter and dual(dual) = original") {
            BraidedVectorSpace D = V.dual();
            CHECK(yang_baxter_check(D));
            CHECK(brute_yang_baxter(D));
            CHECK(D.dual().r_matrix() == V.r_matrix());
        }
    }
    SUBCASE("cocycle +1 variant") {
        BraidedVectorSpace V = BraidedVectorSpace::group_class(
            G, {G.element_by_label("(1 2)")}, Scalar::integer(Q, 1));
        CHECK(yang_baxter_check(V));
        CHECK(brute_yang_baxter(V));
    }
}

TEST_CASE("abstract rack with validation") {
    // dihedral rack on Z/3: a^b = 2b - a mod 3
    Rack rk;
    rk.labels = {"0", "1", "2"};
    rk.act.assign(3, std::vector<int>(3));
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) rk.act[a][b] = ((2 * b - a) % 3 + 3) % 3;
    FieldRef Q = FieldContext::rational();
    BraidedVectorSpace V = BraidedVectorSpace::rack_constant(rk, Scalar::integer(Q, -1));
    CHECK(yang_baxter_check(V));
    CHECK(brute_yang_baxter(V));
    SUBCASE("broken self-distributivity is rejected") {
        Rack bad = rk;
        bad.act[0][1] = 0; // makes c -> c^1 non-bijective as well
        CHECK_THROWS_AS(BraidedVectorSpace::rack_constant(bad, Scalar::integer(Q, -1)), FieldError);
    }
}

TEST_CASE("raw matrix escape hatch") {
    FieldRef Q = FieldContext::rational();
    SUBCASE("a swap with an added non-monomial term fails Yang-Baxter") {
        // R(e0 ox e1) = e1 ox e0 + e0 ox e0, otherwise swap
        std::vector<SparseVec> cols(4);
        cols[0 * 2 + 0] = sv_unit(0, Q);
        cols[0 * 2 + 1] = sv_from_terms({{1 * 2 + 0, Scalar::one(Q)}, {0, Scalar::one(Q)}}, Q);
        cols[1 * 2 + 0] = sv_unit(0 * 2 + 1, Q);
        cols[1 * 2 + 1] = sv_unit(1 * 2 + 1, Q);
        BraidedVectorSpace V = BraidedVectorSpace::from_matrix(2, cols, Q, {}, false);
        CHECK_FALSE(brute_yang_baxter(V));
        CHECK_FALSE(yang_baxter_check(V));
        CHECK_THROWS_AS(BraidedVectorSpace::from_matrix(2, cols, Q, {}, true), FieldError);
    }
    SUBCASE("singular matrix is rejected") {
        std::vector<SparseVec> cols(4);
        cols[0] = sv_unit(0, Q);
        cols[1] = sv_unit(0, Q); // not invertible
        cols[2] = sv_unit(1, Q);
        cols[3] = sv_unit(3, Q);
        CHECK_THROWS_AS(BraidedVectorSpace::from_matrix(2, cols, Q, {}, true), FieldError);
    }
}

TEST_CASE("group from multiplication table") {
    // Z/4 given by its table
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) t[a][b] = (a + b) % 4;
    GroupData G = GroupData::from_table(t);
    CHECK(G.size() == 4);
    CHECK(G.inverse(1) == 3);
    CHECK(G.conjugacy_class(1) == std::vector<int>{1}); // abelian
    SUBCASE("broken table is rejected") {
        t[1][2] = 1; // 1*2 = 1 forces 2 = identity, inconsistent
        CHECK_THROWS_AS(GroupData::from_table(t), FieldError);
    }
}
