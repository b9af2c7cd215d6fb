#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace qsh {

/// Error type for all arithmetic domain violations (mixed fields, division by
/// zero, invalid reductions).  Computational gates elsewhere reuse it so a
/// failure anywhere in a pipeline surfaces as one exception family.
struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a computation would exceed a configured size guard.  Callers
/// that want to proceed anyway pass an explicit force/limit override.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when an internal consistency gate fails (a structural identity that
/// must hold if the implementation is correct).  Never catch and continue.
struct GateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class FieldKind { Rational, Cyclotomic, Prime };

class FieldContext;
using FieldRef = std::shared_ptr<const FieldContext>;

/// Shared description of the coefficient field.  Scalars hold a reference and
/// refuse to combine across incompatible contexts.  Cyclotomic contexts fix a
/// root order m once; elements are coefficient vectors of length phi(m)
/// reduced modulo the m-th cyclotomic polynomial.
class FieldContext {
public:
    static FieldRef rational();
    static FieldRef cyclotomic(unsigned order);
    static FieldRef prime(std::uint64_t modulus);
    /// Prime context remembering the chosen image of zeta_m mod ell, so
    /// cyclotomic scalars can be reduced through it.
    static FieldRef prime_with_root(std::uint64_t modulus, unsigned root_order,
                                    std::uint64_t root_image);

    FieldKind kind() const { return kind_; }
    unsigned order() const { return order_; }             ///< m for cyclotomic
    unsigned degree() const { return degree_; }           ///< phi(m), else 1
    std::uint64_t modulus() const { return modulus_; }    ///< ell for prime
    unsigned root_order() const { return root_order_; }
    std::uint64_t root_image() const { return root_image_; }

    /// Monic minimal polynomial of zeta_m (coefficients low to high, length
    /// degree()+1).  Only meaningful for cyclotomic contexts.
    const std::vector<mpq_class>& min_poly() const { return min_poly_; }
    /// Row k = x^(degree()+k) reduced mod the minimal polynomial.
    const std::vector<std::vector<mpq_class>>& reduction_rows() const { return red_; }

    static bool compatible(const FieldContext& a, const FieldContext& b);

private:
    FieldContext() = default;
    FieldKind kind_ = FieldKind::Rational;
    unsigned order_ = 0;
    unsigned degree_ = 1;
    std::uint64_t modulus_ = 0;
    unsigned root_order_ = 1;
    std::uint64_t root_image_ = 1;
    std::vector<mpq_class> min_poly_;
    std::vector<std::vector<mpq_class>> red_;
};

/// Exact field element.  Value semantics; all operations produce canonical
/// forms, so equality and zero tests are plain comparisons.
class Scalar {
public:
    Scalar();                                    ///< rational zero
    static Scalar zero(const FieldRef& F);
    static Scalar one(const FieldRef& F);
    static Scalar integer(const FieldRef& F, long n);
    static Scalar rational(long num, long den);
    static Scalar from_mpq(const FieldRef& F, const mpq_class& q);
    static Scalar zeta(const FieldRef& F);                 ///< generator zeta_m
    static Scalar zeta_power(const FieldRef& F, long e);
    /// Convenience: zeta_m^e in a fresh cyclotomic context of order m.
    static Scalar cyclotomic(unsigned m, long e);

    const FieldRef& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    Scalar inverse() const;
    Scalar pow(long e) const;

    /// Rational value; throws unless the element lies in the prime subfield.
    mpq_class rational_value() const;
    /// Cyclotomic coefficient vector (length degree()).
    const std::vector<mpq_class>& coeffs() const;
    std::uint64_t residue() const;               ///< prime-field value

    std::string to_string() const;
    /// Decimal rendering with the given number of significant digits; for
    /// cyclotomic elements renders the real embedding zeta = exp(2 pi i/m)
    /// only when the value is real-rational, otherwise falls back to exact.
    std::string to_decimal(int digits = 6) const;

private:
    struct Cyc { std::vector<mpq_class> c; };
    FieldRef field_;
    std::variant<mpq_class, Cyc, std::uint64_t> v_;
    void require_same(const Scalar& o) const;
};

/// [r]_q = 1 + q + ... + q^(r-1); r >= 0.
Scalar q_integer(int r, const Scalar& q);

/// Gaussian binomial via the division-free Pascal recurrence
/// binom(a,b) = binom(a-1,b-1) + q^b binom(a-1,b); valid at roots of unity.
/// Throws FieldError when b > a or b < 0.
Scalar q_binomial(int a, int b, const Scalar& q);

/// Embed a rational-valued scalar into the field F.
Scalar embed(const Scalar& rational_scalar, const FieldRef& F);

/// Reduce an exact scalar into a prime context.  Rational: num * den^-1 mod
/// ell (throws if ell divides the denominator).  Cyclotomic: evaluates the
/// coefficient polynomial at the context's stored root image; the prime
/// context must have been created for the same root order.
Scalar reduce_mod(const Scalar& s, const FieldRef& prime_ctx);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_probable_prime(std::uint64_t n);

/// Random prime in (2^30, 2^31) congruent to 1 mod m, from the given stream.
std::uint64_t random_prime(std::mt19937_64& rng, unsigned m);

/// Prime context suitable for reducing scalars of F: picks ell = 1 mod m and
/// an exact order-m root image when F is cyclotomic.
FieldRef prime_context_for(const FieldRef& F, std::mt19937_64& rng);

/// Rational reconstruction of r mod M with |num|, den <= sqrt(M/2); empty
/// when no such fraction exists.
std::optional<mpq_class> rational_reconstruct(const mpz_class& r, const mpz_class& M);

/// Chinese remainder combination of r1 mod m1 and r2 mod m2 (coprime moduli).
mpz_class crt_combine(const mpz_class& r1, const mpz_class& m1,
                      const mpz_class& r2, const mpz_class& m2);

} // namespace qsh
