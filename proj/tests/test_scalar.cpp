#include "doctest.h"

#include <qsh/scalar.hpp>

#include <random>

using namespace qsh;

namespace {

// Random nonzero element, used by the field axiom checks below.
Scalar random_elem(const FieldRef& F, std::mt19937_64& rng, bool nonzero = false) {
    for (;;) {
        Scalar s;
        switch (F->kind()) {
        case FieldKind::Rational: {
            long num = long(rng() % 41) - 20;
            long den = 1 + long(rng() % 9);
            s = Scalar::rational(num, den);
            break;
        }
        case FieldKind::Cyclotomic: {
            s = Scalar::zero(F);
            for (unsigned k = 0; k < F->degree(); ++k) {
                long c = long(rng() % 7) - 3;
                s = s + Scalar::integer(F, c) * Scalar::zeta_power(F, k);
            }
            break;
        }
        case FieldKind::Prime:
            s = Scalar::integer(F, long(rng() % F->modulus()));
            break;
        }
        if (!nonzero || !s.is_zero()) return s;
    }
}

void check_field_axioms(const FieldRef& F, unsigned seed) {
    std::mt19937_64 rng(seed);
    for (int iter = 0; iter < 50; ++iter) {
        Scalar a = random_elem(F, rng), b = random_elem(F, rng), c = random_elem(F, rng);
        CHECK(((a + b) + c) == (a + (b + c)));
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * (b + c)) == (a * b + a * c));
        CHECK((a + b) == (b + a));
        CHECK((a * b) == (b * a));
        CHECK((a - a).is_zero());
        Scalar u = random_elem(F, rng, true);
        CHECK((u * u.inverse()).is_one());
        CHECK(((a / u) * u) == a);
    }
}

} // namespace

TEST_CASE("rational arithmetic is canonical") {
    Scalar a = Scalar::rational(2, 4);
    CHECK(a == Scalar::rational(1, 2));
    CHECK(a.to_string() == "1/2");
    Scalar b = Scalar::rational(-3, 6);
    CHECK((a + b).is_zero());
    CHECK(Scalar::rational(7, 1).to_string() == "7");
    CHECK((Scalar::rational(1, 3) * Scalar::rational(3, 1)).is_one());
}

TEST_CASE("cyclotomic relations") {
    FieldRef F3 = FieldContext::cyclotomic(3);
    Scalar z = Scalar::zeta(F3);
    SUBCASE("1 + z + z^2 = 0 and z^3 = 1") {
        CHECK((Scalar::one(F3) + z + z * z).is_zero());
        CHECK((z * z * z).is_one());
        CHECK(z.pow(3).is_one());
    }
    SUBCASE("inverse of zeta is zeta^2") {
        CHECK(z.inverse() == z * z);
    }
    SUBCASE("zeta_4^2 = -1") {
        FieldRef F4 = FieldContext::cyclotomic(4);
        Scalar i = Scalar::zeta(F4);
        CHECK((i * i) == Scalar::integer(F4, -1));
    }
    SUBCASE("order 6: z^2 = z - 1") {
        FieldRef F6 = FieldContext::cyclotomic(6);
        Scalar w = Scalar::zeta(F6);
        CHECK((w * w) == (w - Scalar::one(F6)));
        CHECK(w.pow(6).is_one());
        CHECK_FALSE(w.pow(3).is_one());
    }
    SUBCASE("order 12 has degree 4") {
        FieldRef F12 = FieldContext::cyclotomic(12);
        CHECK(F12->degree() == 4);
        Scalar z12 = Scalar::zeta(F12);
        CHECK(z12.pow(12).is_one());
        CHECK_FALSE(z12.pow(6).is_one());
        // Phi_12 = x^4 - x^2 + 1
        CHECK((z12.pow(4) - z12.pow(2) + Scalar::one(F12)).is_zero());
    }
    SUBCASE("order 1 and 2 degenerate to rationals") {
        CHECK(Scalar::zeta(FieldContext::cyclotomic(1)).is_one());
        Scalar m = Scalar::zeta(FieldContext::cyclotomic(2));
        CHECK((m * m).is_one());
        CHECK(m == Scalar::integer(FieldContext::cyclotomic(2), -1));
    }
}

TEST_CASE("quantum integers and binomials") {
    FieldRef F3 = FieldContext::cyclotomic(3);
    Scalar z = Scalar::zeta(F3);
    SUBCASE("[3]_q vanishes at a primitive third root of unity") {
        CHECK(q_integer(3, z).is_zero());
        CHECK(q_integer(1, z).is_one());
        CHECK(q_integer(2, z) == Scalar::one(F3) + z);
    }
    SUBCASE("binom(3,1)_q = 0 at zeta_3") {
        CHECK(q_binomial(3, 1, z).is_zero());
        CHECK(q_binomial(3, 2, z).is_zero());
        CHECK(q_binomial(3, 0, z).is_one());
        CHECK(q_binomial(3, 3, z).is_one());
    }
    SUBCASE("binom(6,3) at zeta_3 equals 2 (Lucas pattern)") {
        CHECK(q_binomial(6, 3, z) == Scalar::integer(F3, 2));
        CHECK(q_binomial(6, 1, z).is_zero());
        CHECK(q_binomial(6, 2, z).is_zero());
    }
    SUBCASE("rational specialization q = 2: binom(4,2) = 35") {
        Scalar two = Scalar::rational(2, 1);
        CHECK(q_binomial(4, 2, two) == Scalar::rational(35, 1));
        // classical limit q = 1
        Scalar one = Scalar::rational(1, 1);
        CHECK(q_binomial(5, 2, one) == Scalar::rational(10, 1));
    }
    SUBCASE("Pascal recurrence holds for random specializations") {
        std::mt19937_64 rng(7);
        for (int iter = 0; iter < 20; ++iter) {
            Scalar q = random_elem(FieldContext::rational(), rng, true);
            int a = 2 + int(rng() % 6), b = 1 + int(rng() % (a - 1));
            Scalar lhs = q_binomial(a, b, q);
            Scalar rhs = q_binomial(a - 1, b - 1, q) + q.pow(b) * q_binomial(a - 1, b, q);
            CHECK(lhs == rhs);
        }
    }
    SUBCASE("b > a is a domain error") {
        CHECK_THROWS_AS(q_binomial(2, 3, z), FieldError);
    }
}

TEST_CASE("field axioms hold in all three modes") {
    check_field_axioms(FieldContext::rational(), 11);
    check_field_axioms(FieldContext::cyclotomic(3), 12);
    check_field_axioms(FieldContext::cyclotomic(12), 13);
    check_field_axioms(FieldContext::prime(1073741827ULL), 14);
}

TEST_CASE("prime fields and reduction homomorphisms") {
    SUBCASE("random primes are > 2^30 and reproducible") {
        std::mt19937_64 rng(42);
        auto p1 = random_prime(rng, 1);
        std::mt19937_64 rng2(42);
        auto p2 = random_prime(rng2, 1);
        CHECK(p1 == p2);
        CHECK(p1 > (1ULL << 30));
        CHECK(is_probable_prime(p1));
    }
    SUBCASE("rational reduction commutes with arithmetic") {
        std::mt19937_64 rng(5);
        std::uint64_t ell = random_prime(rng, 1);
        FieldRef Fp = FieldContext::prime(ell);
        FieldRef Q = FieldContext::rational();
        for (int iter = 0; iter < 30; ++iter) {
            Scalar a = random_elem(Q, rng), b = random_elem(Q, rng), c = random_elem(Q, rng);
            Scalar lhs = reduce_mod(a * b + c, Fp);
            Scalar rhs = reduce_mod(a, Fp) * reduce_mod(b, Fp) + reduce_mod(c, Fp);
            CHECK(lhs == rhs);
        }
    }
    SUBCASE("cyclotomic reduction sends zeta to an element of exact order m") {
        std::mt19937_64 rng(9);
        FieldRef F3 = FieldContext::cyclotomic(3);
        FieldRef Fp = prime_context_for(F3, rng);
        CHECK(Fp->modulus() % 3 == 1);
        Scalar z = Scalar::zeta(F3);
        Scalar zi = reduce_mod(z, Fp);
        CHECK(zi.pow(3).is_one());
        CHECK_FALSE(zi.is_one());
        CHECK(reduce_mod(Scalar::one(F3) + z + z * z, Fp).is_zero());
        // homomorphism on products
        Scalar w = Scalar::rational(2, 5);
        Scalar we = embed(w, F3);
        CHECK(reduce_mod(we * z, Fp) == reduce_mod(we, Fp) * zi);
    }
    SUBCASE("reduction with denominator divisible by ell fails loudly") {
        FieldRef Fp = FieldContext::prime(1073741827ULL);
        CHECK_THROWS_AS(reduce_mod(Scalar::rational(1, 1073741827LL), Fp), FieldError);
    }
}

TEST_CASE("context mixing is rejected") {
    FieldRef F3 = FieldContext::cyclotomic(3);
    FieldRef F4 = FieldContext::cyclotomic(4);
    Scalar a = Scalar::zeta(F3), b = Scalar::zeta(F4);
    CHECK_THROWS_AS(a + b, FieldError);
    CHECK_THROWS_AS(Scalar::one(F3) / Scalar::zero(F3), FieldError);
}

TEST_CASE("scalar printing") {
    FieldRef F3 = FieldContext::cyclotomic(3);
    Scalar z = Scalar::zeta(F3);
    CHECK(Scalar::one(F3).to_string() == "1");
    CHECK(z.to_string() == "z");
    CHECK((z * z).to_string() == "-1-z"); // reduced to the degree-2 power basis
    Scalar z12 = Scalar::zeta(FieldContext::cyclotomic(12));
    CHECK((z12 * z12).to_string() == "z^2");
    CHECK((Scalar::integer(F3, -2) * z).to_string() == "-2*z");
    CHECK((Scalar::one(F3) + z).to_string() == "1+z");
    CHECK(Scalar::rational(-7, 3).to_string() == "-7/3");
}
