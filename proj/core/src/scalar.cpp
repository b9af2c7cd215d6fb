#include <qsh/scalar.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace qsh {

namespace {

using Poly = std::vector<mpq_class>; // coefficients, low degree first

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

// Quotient and remainder by a polynomial with invertible leading coefficient.
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    r = a;
    poly_trim(r);
    Poly bb = b;
    poly_trim(bb);
    if (bb.empty()) throw FieldError("polynomial division by zero");
    q.assign(r.size() > bb.size() ? r.size() - bb.size() + 1 : 1, mpq_class(0));
    while (r.size() >= bb.size() && !r.empty()) {
        mpq_class f = r.back() / bb.back();
        std::size_t shift = r.size() - bb.size();
        q[shift] = f;
        for (std::size_t i = 0; i < bb.size(); ++i)
            r[shift + i] -= f * bb[i];
        poly_trim(r);
    }
    poly_trim(q);
}

// Extended gcd: returns g and u with u*a = g mod b (g a nonzero constant when
// a is invertible mod b).
void poly_ext_gcd(const Poly& a, const Poly& b, Poly& g, Poly& u) {
    Poly r0 = b, r1 = a, u0 = {}, u1 = {mpq_class(1)};
    poly_trim(r0);
    poly_trim(r1);
    while (!r1.empty()) {
        Poly q, rem;
        poly_divmod(r0, r1, q, rem);
        Poly qu = poly_mul(q, u1);
        Poly nu = u0;
        nu.resize(std::max(nu.size(), qu.size()), mpq_class(0));
        for (std::size_t i = 0; i < qu.size(); ++i) nu[i] -= qu[i];
        poly_trim(nu);
        r0 = std::move(r1); r1 = std::move(rem);
        u0 = std::move(u1); u1 = std::move(nu);
    }
    g = std::move(r0);
    u = std::move(u0);
}

// Cyclotomic polynomial by the divisor recursion Phi_m = (x^m - 1) / prod_{d|m, d<m} Phi_d.
Poly cyclotomic_poly(unsigned m) {
    static std::map<unsigned, Poly> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lk(mx);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    Poly num(m + 1, mpq_class(0));
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        auto jt = cache.find(d);
        Poly pd;
        if (jt != cache.end()) {
            pd = jt->second;
        } else {
            // recurse without re-locking
            Poly nd(d + 1, mpq_class(0));
            nd[0] = -1;
            nd[d] = 1;
            for (unsigned e = 1; e < d; ++e) {
                if (d % e != 0) continue;
                Poly q, r;
                poly_divmod(nd, cache.at(e), q, r);
                nd = q;
            }
            cache[d] = nd;
            pd = nd;
        }
        Poly q, r;
        poly_divmod(num, pd, q, r);
        num = q;
    }
    cache[m] = num;
    return num;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return std::uint64_t((unsigned __int128)a * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::vector<unsigned> prime_factors(unsigned m) {
    std::vector<unsigned> f;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            f.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) f.push_back(m);
    return f;
}

mpq_class make_rat(long num, long den) {
    if (den == 0) throw FieldError("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

} // namespace

FieldRef FieldContext::rational() {
    static FieldRef r = [] {
        auto c = std::shared_ptr<FieldContext>(new FieldContext());
        c->kind_ = FieldKind::Rational;
        return FieldRef(c);
    }();
    return r;
}

FieldRef FieldContext::cyclotomic(unsigned order) {
    if (order == 0) throw FieldError("cyclotomic order must be positive");
    static std::map<unsigned, FieldRef> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lk(mx);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    auto c = std::shared_ptr<FieldContext>(new FieldContext());
    c->kind_ = FieldKind::Cyclotomic;
    c->order_ = order;
    c->min_poly_ = cyclotomic_poly(order);
    c->degree_ = unsigned(c->min_poly_.size() - 1);
    // reduction rows for x^(phi .. 2 phi - 2)
    unsigned phi = c->degree_;
    std::vector<mpq_class> cur(phi, mpq_class(0)); // x^phi = -(low part of Phi)
    for (unsigned i = 0; i < phi; ++i) cur[i] = -c->min_poly_[i];
    if (phi >= 1) {
        c->red_.push_back(cur);
        for (unsigned k = 1; k + phi <= 2 * phi - 2; ++k) {
            std::vector<mpq_class> nxt(phi, mpq_class(0));
            // multiply by x, fold the overflowing top coefficient back in
            mpq_class top = cur[phi - 1];
            for (unsigned i = phi - 1; i >= 1; --i) nxt[i] = cur[i - 1];
            nxt[0] = 0;
            if (top != 0)
                for (unsigned i = 0; i < phi; ++i) nxt[i] += top * c->red_[0][i];
            c->red_.push_back(nxt);
            cur = c->red_.back();
        }
    }
    FieldRef ref(c);
    cache[order] = ref;
    return ref;
}

FieldRef FieldContext::prime(std::uint64_t modulus) {
    if (modulus < 3) throw FieldError("prime modulus too small");
    auto c = std::shared_ptr<FieldContext>(new FieldContext());
    c->kind_ = FieldKind::Prime;
    c->modulus_ = modulus;
    return FieldRef(c);
}

FieldRef FieldContext::prime_with_root(std::uint64_t modulus, unsigned root_order,
                                       std::uint64_t root_image) {
    auto c = std::shared_ptr<FieldContext>(new FieldContext());
    c->kind_ = FieldKind::Prime;
    c->modulus_ = modulus;
    c->root_order_ = root_order;
    c->root_image_ = root_image;
    return FieldRef(c);
}

bool FieldContext::compatible(const FieldContext& a, const FieldContext& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
    case FieldKind::Rational: return true;
    case FieldKind::Cyclotomic: return a.order_ == b.order_;
    case FieldKind::Prime: return a.modulus_ == b.modulus_;
    }
    return false;
}

Scalar::Scalar() : field_(FieldContext::rational()), v_(mpq_class(0)) {}

Scalar Scalar::zero(const FieldRef& F) {
    Scalar s;
    s.field_ = F;
    switch (F->kind()) {
    case FieldKind::Rational: s.v_ = mpq_class(0); break;
    case FieldKind::Cyclotomic: s.v_ = Cyc{std::vector<mpq_class>(F->degree(), mpq_class(0))}; break;
    case FieldKind::Prime: s.v_ = std::uint64_t(0); break;
    }
    return s;
}

Scalar Scalar::one(const FieldRef& F) { return integer(F, 1); }

Scalar Scalar::integer(const FieldRef& F, long n) {
    Scalar s = zero(F);
    switch (F->kind()) {
    case FieldKind::Rational: s.v_ = mpq_class(n); break;
    case FieldKind::Cyclotomic: std::get<Cyc>(s.v_).c[0] = mpq_class(n); break;
    case FieldKind::Prime: {
        long long m = (long long)F->modulus();
        long long r = ((long long)n % m + m) % m;
        s.v_ = std::uint64_t(r);
        break;
    }
    }
    return s;
}

Scalar Scalar::rational(long num, long den) {
    Scalar s;
    s.field_ = FieldContext::rational();
    s.v_ = make_rat(num, den);
    return s;
}

Scalar Scalar::from_mpq(const FieldRef& F, const mpq_class& q) {
    Scalar s = zero(F);
    switch (F->kind()) {
    case FieldKind::Rational: s.v_ = q; break;
    case FieldKind::Cyclotomic: std::get<Cyc>(s.v_).c[0] = q; break;
    case FieldKind::Prime: return reduce_mod(Scalar::from_mpq(FieldContext::rational(), q), F);
    }
    return s;
}

Scalar Scalar::zeta(const FieldRef& F) { return zeta_power(F, 1); }

Scalar Scalar::zeta_power(const FieldRef& F, long e) {
    if (F->kind() != FieldKind::Cyclotomic)
        throw FieldError("zeta requires a cyclotomic context");
    long m = (long)F->order();
    long ee = ((e % m) + m) % m;
    Scalar s = one(F);
    Scalar x = zero(F);
    // x = class of the variable; multiply repeatedly (orders are small)
    {
        auto& c = std::get<Cyc>(x.v_).c;
        if (F->degree() >= 2) c[1] = 1;
        else c[0] = -F->min_poly()[0]; // degree-1 field: x reduces to a rational
    }
    for (long i = 0; i < ee; ++i) s = s * x;
    return s;
}

Scalar Scalar::cyclotomic(unsigned m, long e) {
    return zeta_power(FieldContext::cyclotomic(m), e);
}

void Scalar::require_same(const Scalar& o) const {
    if (!FieldContext::compatible(*field_, *o.field_))
        throw FieldError("scalars from incompatible field contexts");
}

bool Scalar::is_zero() const {
    switch (field_->kind()) {
    case FieldKind::Rational: return std::get<mpq_class>(v_) == 0;
    case FieldKind::Cyclotomic: {
        for (const auto& c : std::get<Cyc>(v_).c)
            if (c != 0) return false;
        return true;
    }
    case FieldKind::Prime: return std::get<std::uint64_t>(v_) == 0;
    }
    return false;
}

bool Scalar::is_one() const {
    switch (field_->kind()) {
    case FieldKind::Rational: return std::get<mpq_class>(v_) == 1;
    case FieldKind::Cyclotomic: {
        const auto& c = std::get<Cyc>(v_).c;
        if (c[0] != 1) return false;
        for (std::size_t i = 1; i < c.size(); ++i)
            if (c[i] != 0) return false;
        return true;
    }
    case FieldKind::Prime: return std::get<std::uint64_t>(v_) == 1;
    }
    return false;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!FieldContext::compatible(*field_, *o.field_)) return false;
    switch (field_->kind()) {
    case FieldKind::Rational: return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
    case FieldKind::Cyclotomic: return std::get<Cyc>(v_).c == std::get<Cyc>(o.v_).c;
    case FieldKind::Prime: return std::get<std::uint64_t>(v_) == std::get<std::uint64_t>(o.v_);
    }
    return false;
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same(o);
    Scalar s = *this;
    switch (field_->kind()) {
    case FieldKind::Rational:
        std::get<mpq_class>(s.v_) += std::get<mpq_class>(o.v_);
        break;
    case FieldKind::Cyclotomic: {
        auto& a = std::get<Cyc>(s.v_).c;
        const auto& b = std::get<Cyc>(o.v_).c;
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        break;
    }
    case FieldKind::Prime: {
        std::uint64_t m = field_->modulus();
        s.v_ = (std::get<std::uint64_t>(v_) + std::get<std::uint64_t>(o.v_)) % m;
        break;
    }
    }
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    switch (field_->kind()) {
    case FieldKind::Rational:
        std::get<mpq_class>(s.v_) = -std::get<mpq_class>(s.v_);
        break;
    case FieldKind::Cyclotomic:
        for (auto& c : std::get<Cyc>(s.v_).c) c = -c;
        break;
    case FieldKind::Prime: {
        std::uint64_t m = field_->modulus(), a = std::get<std::uint64_t>(v_);
        s.v_ = a == 0 ? 0 : m - a;
        break;
    }
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    require_same(o);
    Scalar s = zero(field_);
    switch (field_->kind()) {
    case FieldKind::Rational:
        s.v_ = mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_));
        break;
    case FieldKind::Cyclotomic: {
        const auto& a = std::get<Cyc>(v_).c;
        const auto& b = std::get<Cyc>(o.v_).c;
        unsigned phi = field_->degree();
        Poly prod = poly_mul(a, b);
        std::vector<mpq_class> out(phi, mpq_class(0));
        for (std::size_t k = 0; k < prod.size(); ++k) {
            if (prod[k] == 0) continue;
            if (k < phi) {
                out[k] += prod[k];
            } else {
                const auto& row = field_->reduction_rows()[k - phi];
                for (unsigned i = 0; i < phi; ++i) out[i] += prod[k] * row[i];
            }
        }
        std::get<Cyc>(s.v_).c = std::move(out);
        break;
    }
    case FieldKind::Prime:
        s.v_ = mulmod(std::get<std::uint64_t>(v_), std::get<std::uint64_t>(o.v_),
                      field_->modulus());
        break;
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw FieldError("inverse of zero");
    switch (field_->kind()) {
    case FieldKind::Rational: {
        Scalar s = *this;
        std::get<mpq_class>(s.v_) = 1 / std::get<mpq_class>(v_);
        return s;
    }
    case FieldKind::Cyclotomic: {
        Poly a = std::get<Cyc>(v_).c;
        poly_trim(a);
        Poly g, u;
        poly_ext_gcd(a, field_->min_poly(), g, u);
        if (g.size() != 1) throw FieldError("non-invertible cyclotomic element");
        Scalar s = zero(field_);
        auto& c = std::get<Cyc>(s.v_).c;
        for (std::size_t i = 0; i < u.size() && i < c.size(); ++i) c[i] = u[i] / g[0];
        return s;
    }
    case FieldKind::Prime: {
        Scalar s = *this;
        s.v_ = powmod(std::get<std::uint64_t>(v_), field_->modulus() - 2, field_->modulus());
        return s;
    }
    }
    throw FieldError("unreachable");
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r = one(field_), b = *this;
    unsigned long u = (unsigned long)e;
    while (u) {
        if (u & 1) r = r * b;
        b = b * b;
        u >>= 1;
    }
    return r;
}

mpq_class Scalar::rational_value() const {
    switch (field_->kind()) {
    case FieldKind::Rational: return std::get<mpq_class>(v_);
    case FieldKind::Cyclotomic: {
        const auto& c = std::get<Cyc>(v_).c;
        for (std::size_t i = 1; i < c.size(); ++i)
            if (c[i] != 0) throw FieldError("not a rational element");
        return c[0];
    }
    case FieldKind::Prime: return mpq_class((unsigned long)std::get<std::uint64_t>(v_));
    }
    throw FieldError("unreachable");
}

const std::vector<mpq_class>& Scalar::coeffs() const {
    return std::get<Cyc>(v_).c;
}

std::uint64_t Scalar::residue() const { return std::get<std::uint64_t>(v_); }

std::string Scalar::to_string() const {
    switch (field_->kind()) {
    case FieldKind::Rational: return std::get<mpq_class>(v_).get_str();
    case FieldKind::Prime: return std::to_string(std::get<std::uint64_t>(v_));
    case FieldKind::Cyclotomic: {
        const auto& c = std::get<Cyc>(v_).c;
        std::string out;
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k] == 0) continue;
            std::string term;
            std::string coef = c[k].get_str();
            if (k == 0) {
                term = coef;
            } else {
                std::string base = k == 1 ? "z" : "z^" + std::to_string(k);
                if (coef == "1") term = base;
                else if (coef == "-1") term = "-" + base;
                else term = coef + "*" + base;
            }
            if (out.empty() || term[0] == '-') out += term;
            else out += "+" + term;
        }
        return out.empty() ? "0" : out;
    }
    }
    return "?";
}

std::string Scalar::to_decimal(int digits) const {
    if (field_->kind() == FieldKind::Cyclotomic) {
        try {
            mpq_class q = rational_value();
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.*g", digits, q.get_d());
            return buf;
        } catch (const FieldError&) {
            return to_string();
        }
    }
    if (field_->kind() == FieldKind::Prime) return to_string();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, std::get<mpq_class>(v_).get_d());
    return buf;
}

Scalar q_integer(int r, const Scalar& q) {
    if (r < 0) throw FieldError("q_integer needs r >= 0");
    Scalar s = Scalar::zero(q.field());
    Scalar p = Scalar::one(q.field());
    for (int k = 0; k < r; ++k) {
        s = s + p;
        p = p * q;
    }
    return s;
}

Scalar q_binomial(int a, int b, const Scalar& q) {
    if (b < 0 || b > a) throw FieldError("q_binomial needs 0 <= b <= a");
    // row-by-row Pascal; no divisions, so roots of unity are safe
    std::vector<Scalar> row(1, Scalar::one(q.field()));
    for (int n = 1; n <= a; ++n) {
        std::vector<Scalar> nxt(n + 1, Scalar::zero(q.field()));
        Scalar qe = Scalar::one(q.field());
        for (int k = 0; k <= n; ++k) {
            // binom(n,k) = binom(n-1,k-1) + q^k binom(n-1,k)
            Scalar v = Scalar::zero(q.field());
            if (k > 0) v = v + row[k - 1];
            if (k < n) v = v + qe * row[k];
            nxt[k] = v;
            qe = qe * q;
        }
        row = std::move(nxt);
    }
    return row[b];
}

Scalar embed(const Scalar& s, const FieldRef& F) {
    if (FieldContext::compatible(*s.field(), *F)) return s;
    if (s.field()->kind() != FieldKind::Rational)
        throw FieldError("can only embed rational scalars");
    return Scalar::from_mpq(F, s.rational_value());
}

Scalar reduce_mod(const Scalar& s, const FieldRef& prime_ctx) {
    if (prime_ctx->kind() != FieldKind::Prime)
        throw FieldError("reduce_mod target must be a prime context");
    std::uint64_t ell = prime_ctx->modulus();
    auto reduce_q = [&](const mpq_class& q) -> std::uint64_t {
        mpz_class num = q.get_num(), den = q.get_den();
        mpz_class e((unsigned long)ell);
        mpz_class dmod = den % e;
        if (dmod == 0) throw FieldError("denominator divisible by modulus");
        mpz_class nmod = num % e;
        if (nmod < 0) nmod += e;
        std::uint64_t n64 = nmod.get_ui();
        std::uint64_t d64 = dmod.get_ui();
        return mulmod(n64, powmod(d64, ell - 2, ell), ell);
    };
    switch (s.field()->kind()) {
    case FieldKind::Prime:
        if (s.field()->modulus() != ell) throw FieldError("modulus mismatch");
        return s;
    case FieldKind::Rational: {
        Scalar t = Scalar::zero(prime_ctx);
        t = Scalar::integer(prime_ctx, 0);
        std::uint64_t r = reduce_q(s.rational_value());
        return Scalar::integer(prime_ctx, (long)r);
    }
    case FieldKind::Cyclotomic: {
        if (prime_ctx->root_order() != s.field()->order())
            throw FieldError("prime context lacks a root of matching order");
        std::uint64_t img = prime_ctx->root_image();
        std::uint64_t acc = 0, p = 1;
        for (const auto& c : s.coeffs()) {
            if (c != 0) acc = (acc + mulmod(reduce_q(c), p, ell)) % ell;
            p = mulmod(p, img, ell);
        }
        return Scalar::integer(prime_ctx, (long)acc);
    }
    }
    throw FieldError("unreachable");
}

bool is_probable_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t random_prime(std::mt19937_64& rng, unsigned m) {
    if (m == 0) m = 1;
    for (;;) {
        std::uint64_t c = (1ULL << 30) + 1 + rng() % ((1ULL << 30) - 2);
        if (m > 1 && c % m != 1) continue;
        if (is_probable_prime(c)) return c;
    }
}

FieldRef prime_context_for(const FieldRef& F, std::mt19937_64& rng) {
    unsigned m = F->kind() == FieldKind::Cyclotomic ? F->order() : 1;
    std::uint64_t ell = random_prime(rng, m);
    if (m <= 1) return FieldContext::prime(ell);
    auto factors = prime_factors(m);
    for (;;) {
        std::uint64_t g = 2 + rng() % (ell - 3);
        std::uint64_t y = powmod(g, (ell - 1) / m, ell);
        if (y == 1) continue;
        bool exact = true;
        for (unsigned p : factors) {
            if (powmod(y, m / p, ell) == 1) { exact = false; break; }
        }
        if (exact) return FieldContext::prime_with_root(ell, m, y);
    }
}

std::optional<mpq_class> rational_reconstruct(const mpz_class& r, const mpz_class& M) {
    mpz_class a0 = M, a1 = ((r % M) + M) % M;
    mpz_class b0 = 0, b1 = 1;
    // invariant: a_i = b_i * r (mod M)
    while (a1 * a1 * 2 > M) {
        if (a1 == 0) return std::nullopt;
        mpz_class q = a0 / a1;
        mpz_class a2 = a0 - q * a1, b2 = b0 - q * b1;
        a0 = a1; a1 = a2;
        b0 = b1; b1 = b2;
    }
    if (b1 == 0) return std::nullopt;
    mpz_class den = abs(b1);
    mpz_class num = b1 < 0 ? mpz_class(-a1) : a1;
    if (den * den * 2 > M) return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), M.get_mpz_t());
    if (g != 1) return std::nullopt;
    mpq_class q(num, den);
    q.canonicalize();
    mpz_class check = (q.get_num() - r * q.get_den()) % M;
    if (check != 0) return std::nullopt;
    return q;
}

mpz_class crt_combine(const mpz_class& r1, const mpz_class& m1,
                      const mpz_class& r2, const mpz_class& m2) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t()) == 0)
        throw FieldError("crt moduli not coprime");
    mpz_class diff = ((r2 - r1) % m2 + m2) % m2;
    return r1 + m1 * ((diff * inv) % m2);
}

} // namespace qsh
