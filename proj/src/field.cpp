#include "hallinv/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hallinv/error.hpp"

namespace hallinv {

namespace {

constexpr std::uint64_t kTableLimit = 1u << 20;

using Poly = std::vector<long>;

long mod(long a, long q)
{
    long r = a % q;
    return r < 0 ? r + q : r;
}

long modinv(long a, long q)
{
    long t = 0, nt = 1, r = q, nr = mod(a, q);
    while (nr) {
        long k = r / nr;
        t -= k * nt;
        std::swap(t, nt);
        r -= k * nr;
        std::swap(r, nr);
    }
    if (r != 1) throw InvariantError("non-invertible residue");
    return mod(t, q);
}

void trim(Poly& f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly pmul(const Poly& a, const Poly& b, long q)
{
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % q;
    trim(r);
    return r;
}

// Remainder of a modulo b, b nonzero.
Poly pmod(Poly a, const Poly& b, long q)
{
    trim(a);
    long lead_inv = modinv(b.back(), q);
    while (a.size() >= b.size()) {
        long c = a.back() * lead_inv % q;
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = mod(a[shift + j] - c * b[j], q);
        trim(a);
    }
    return a;
}

// Quotient and remainder.
std::pair<Poly, Poly> pdivmod(Poly a, const Poly& b, long q)
{
    trim(a);
    long lead_inv = modinv(b.back(), q);
    Poly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (a.size() >= b.size()) {
        long c = a.back() * lead_inv % q;
        std::size_t shift = a.size() - b.size();
        quot[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = mod(a[shift + j] - c * b[j], q);
        trim(a);
    }
    trim(quot);
    return {quot, a};
}

Poly pgcd(Poly a, Poly b, long q)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = pmod(a, b, q);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        long inv = modinv(a.back(), q);
        for (auto& c : a) c = c * inv % q;
    }
    return a;
}

Poly ppowmod(Poly base, std::uint64_t e, const Poly& m, long q)
{
    Poly r{1};
    base = pmod(base, m, q);
    while (e) {
        if (e & 1) r = pmod(pmul(r, base, q), m, q);
        base = pmod(pmul(base, base, q), m, q);
        e >>= 1;
    }
    return r;
}

// Monic polynomials of degree s over F_q, coefficients c_0 compared first.
Poly monic_from_index(std::uint64_t idx, long q, int s)
{
    Poly f(s + 1, 0);
    f[s] = 1;
    for (int i = s - 1; i >= 0; --i) {
        f[i] = static_cast<long>(idx % q);
        idx /= q;
    }
    return f;
}

std::uint64_t upow(std::uint64_t b, int e)
{
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > UINT64_MAX / b) throw InputError("field too large");
        r *= b;
    }
    return r;
}

// Exact polynomial arithmetic over Q.
using QPoly = std::vector<BigRational>;

void qtrim(QPoly& f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b)
{
    qtrim(a);
    QPoly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size()) {
        BigRational c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        quot[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
        a.back() = 0;
        qtrim(a);
    }
    return {quot, a};
}

QPoly qmul(const QPoly& a, const QPoly& b)
{
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

QPoly qsub(QPoly a, const QPoly& b)
{
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qtrim(a);
    return a;
}

std::string poly_term(long c, std::size_t i, bool first, const char* var)
{
    std::ostringstream o;
    if (c < 0) o << (first ? "-" : " - ");
    else if (!first) o << " + ";
    long a = std::labs(c);
    if (i == 0 || a != 1) o << a;
    if (i >= 1) o << var;
    if (i >= 2) o << '^' << i;
    return o.str();
}

} // namespace

std::string render_polynomial(const std::vector<long>& coeffs)
{
    std::string out;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == 0) continue;
        out += poly_term(coeffs[i], i, out.empty(), "x");
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- polynomials

std::vector<long> cyclotomic_polynomial(long N)
{
    if (N < 1) throw InputError("cyclotomic_polynomial: N must be positive");
    static std::mutex mu;
    static std::map<long, Poly> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(N);
        if (it != memo.end()) return it->second;
    }
    Poly f(N + 1, 0);
    f[0] = -1;
    f[N] = 1;
    for (auto d : divisors(static_cast<std::uint64_t>(N))) {
        if (static_cast<long>(d) == N) continue;
        Poly g = cyclotomic_polynomial(static_cast<long>(d));
        // exact division by a monic integer polynomial
        Poly quot(f.size() - g.size() + 1, 0);
        long top = static_cast<long>(g.size()) - 1;
        for (long k = static_cast<long>(f.size()) - 1; k >= top; --k) {
            long c = f[k];
            if (c == 0) continue;
            std::size_t shift = static_cast<std::size_t>(k - top);
            quot[shift] = c;
            for (std::size_t j = 0; j < g.size(); ++j) f[shift + j] -= c * g[j];
        }
        for (auto c : f)
            if (c != 0) throw InvariantError("cyclotomic division not exact");
        f = quot;
    }
    std::lock_guard<std::mutex> lock(mu);
    memo[N] = f;
    return f;
}

std::uint64_t multiplicative_order(long q, long N)
{
    if (N < 2) throw InputError("multiplicative_order: N must be at least 2");
    if (std::gcd(q, N) != 1) throw InputError("multiplicative_order: gcd(q, N) != 1");
    long x = mod(q, N);
    std::uint64_t s = 1;
    long y = x;
    while (y != 1) {
        y = y * x % N;
        ++s;
    }
    return s;
}

bool is_irreducible_mod_q(const std::vector<long>& f0, long q)
{
    Poly f = f0;
    for (auto& c : f) c = mod(c, q);
    trim(f);
    if (f.size() < 2) return false;
    int d = static_cast<int>(f.size()) - 1;
    if (d == 1) return true;
    Poly x{0, 1};
    Poly h = x;
    for (int i = 1; i <= d / 2; ++i) {
        h = ppowmod(h, static_cast<std::uint64_t>(q), f, q);
        Poly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = mod(hx[1] - 1, q);
        trim(hx);
        Poly g = pgcd(f, hx, q);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<long> smallest_irreducible(long q, int s)
{
    if (!is_prime(static_cast<std::uint64_t>(q))) throw InputError("characteristic must be prime");
    if (s < 1) throw InputError("degree must be positive");
    std::uint64_t count = upow(static_cast<std::uint64_t>(q), s);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly f = monic_from_index(idx, q, s);
        if (is_irreducible_mod_q(f, q)) return f;
    }
    throw InvariantError("no irreducible polynomial found");
}

std::vector<std::vector<long>> factor_cyclotomic_mod_q(long p, long q)
{
    if (p == q) throw InputError("factor_cyclotomic_mod_q: p = q");
    if (!is_prime(static_cast<std::uint64_t>(p)) || !is_prime(static_cast<std::uint64_t>(q)))
        throw InputError("factor_cyclotomic_mod_q: p and q must be prime");
    int s = static_cast<int>(multiplicative_order(q, p));
    Poly rest(p, 1);
    std::vector<Poly> out;
    std::uint64_t count = upow(static_cast<std::uint64_t>(q), s);
    for (std::uint64_t idx = 0; idx < count && rest.size() > 1; ++idx) {
        Poly f = monic_from_index(idx, q, s);
        auto [quot, rem] = pdivmod(rest, f, q);
        if (!rem.empty()) continue;
        out.push_back(f);
        rest = quot;
    }
    require(rest.size() == 1 && out.size() == static_cast<std::size_t>((p - 1) / s),
            "cyclotomic factorization incomplete");
    return out;
}

// ---------------------------------------------------------------- Field

FieldHandle Field::prime(long q)
{
    if (q < 2 || !is_prime(static_cast<std::uint64_t>(q))) throw InputError("prime field needs a prime, got " + std::to_string(q));
    std::shared_ptr<Field> f(new Field());
    f->kind_ = FieldKind::Prime;
    f->q_ = q;
    f->s_ = 1;
    f->size_ = static_cast<std::uint64_t>(q);
    f->mod_ = {0, 1};
    f->build_tables();
    return f;
}

FieldHandle Field::extension(long q, const std::vector<long>& modulus)
{
    if (q < 2 || !is_prime(static_cast<std::uint64_t>(q))) throw InputError("extension field needs a prime characteristic");
    Poly m = modulus;
    for (auto& c : m) c = mod(c, q);
    trim(m);
    if (m.size() < 2 || m.back() != 1) throw InputError("extension modulus must be monic of positive degree");
    if (!is_irreducible_mod_q(m, q)) throw InputError("extension modulus is reducible");
    std::shared_ptr<Field> f(new Field());
    f->kind_ = m.size() == 2 ? FieldKind::Prime : FieldKind::Extension;
    f->q_ = q;
    f->s_ = static_cast<int>(m.size()) - 1;
    f->size_ = upow(static_cast<std::uint64_t>(q), f->s_);
    f->mod_ = m;
    f->build_tables();
    return f;
}

FieldHandle Field::cyclotomic(long N)
{
    if (N < 1) throw InputError("cyclotomic field order must be positive");
    std::shared_ptr<Field> f(new Field());
    f->kind_ = N == 1 ? FieldKind::Rationals : FieldKind::Cyclotomic;
    f->q_ = 0;
    f->n_ = N;
    f->mod_ = cyclotomic_polynomial(N);
    f->s_ = static_cast<int>(f->mod_.size()) - 1;
    return f;
}

std::string Field::describe() const
{
    std::ostringstream o;
    switch (kind_) {
    case FieldKind::Prime: o << "F_" << q_; break;
    case FieldKind::Extension: o << "F_" << q_ << "^" << s_ << " mod " << render_polynomial(mod_); break;
    case FieldKind::Cyclotomic: o << "Q(zeta_" << n_ << ")"; break;
    case FieldKind::Rationals: o << "Q"; break;
    }
    return o.str();
}

std::vector<long> Field::unpack(std::uint64_t v) const
{
    std::vector<long> c(s_, 0);
    for (int i = 0; i < s_; ++i) {
        c[i] = static_cast<long>(v % q_);
        v /= q_;
    }
    return c;
}

std::uint64_t Field::pack(const std::vector<long>& c) const
{
    std::uint64_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * q_ + static_cast<std::uint64_t>(mod(c[i], q_));
    return v;
}

std::uint64_t Field::slow_mul(std::uint64_t a, std::uint64_t b) const
{
    if (s_ == 1) return a * b % static_cast<std::uint64_t>(q_);
    Poly r = pmod(pmul(unpack(a), unpack(b), q_), mod_, q_);
    return pack(r);
}

std::uint64_t Field::slow_pow(std::uint64_t a, std::uint64_t e) const
{
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = slow_mul(r, a);
        a = slow_mul(a, a);
        e >>= 1;
    }
    return r;
}

void Field::build_tables()
{
    std::uint64_t order = size_ - 1;
    auto primes = prime_factors(order);
    gen_ = 0;
    for (std::uint64_t v = 1; v < size_; ++v) {
        if (order == 1 || std::all_of(primes.begin(), primes.end(), [&](std::uint64_t r) { return slow_pow(v, order / r) != 1; })) {
            gen_ = v;
            break;
        }
    }
    require(gen_ != 0, "no multiplicative generator found");
    require(slow_pow(gen_, order) == 1, "generator order check failed");
    if (size_ > kTableLimit) return;
    exp_.assign(order, 0);
    log_.assign(size_, 0);
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
        exp_[i] = static_cast<std::uint32_t>(v);
        log_[v] = static_cast<std::uint32_t>(i);
        v = slow_mul(v, gen_);
    }
    require(v == 1, "generator does not cycle");
}

void Field::check_owner(const FieldElement& a) const
{
    if (a.f_ != this) throw InputError("field element belongs to a different field");
}

FieldElement Field::zero() const
{
    FieldElement e;
    e.f_ = this;
    if (!finite()) e.rat_.assign(s_, BigRational(0));
    return e;
}

FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(long v) const
{
    FieldElement e = zero();
    if (finite()) e.packed_ = static_cast<std::uint64_t>(mod(v, q_));
    else e.rat_[0] = v;
    return e;
}

FieldElement Field::from_int(const BigInt& v) const
{
    if (finite()) {
        BigInt r = v % q_;
        if (r < 0) r += q_;
        return from_int(r.get_si());
    }
    FieldElement e = zero();
    e.rat_[0] = v;
    return e;
}

FieldElement Field::from_residues(const std::vector<long>& coeffs) const
{
    if (!finite()) {
        std::vector<BigRational> r(coeffs.begin(), coeffs.end());
        return from_rationals(r);
    }
    Poly c = coeffs;
    for (auto& x : c) x = mod(x, q_);
    c = pmod(c, mod_, q_);
    c.resize(s_, 0);
    FieldElement e = zero();
    e.packed_ = pack(c);
    return e;
}

FieldElement Field::from_rationals(const std::vector<BigRational>& coeffs) const
{
    if (finite()) throw InputError("rational coefficients in a finite field");
    QPoly c = coeffs;
    qtrim(c);
    QPoly m(mod_.begin(), mod_.end());
    if (c.size() >= m.size()) c = qdivmod(c, m).second;
    c.resize(s_);
    FieldElement e = zero();
    e.rat_ = std::move(c);
    return e;
}

FieldElement Field::from_packed(std::uint64_t packed) const
{
    if (!finite() || packed >= size_) throw InputError("packed value out of range");
    FieldElement e = zero();
    e.packed_ = packed;
    return e;
}

FieldElement Field::from_coordinates(const std::vector<long>& coords) const
{
    if (coords.size() != static_cast<std::size_t>(s_)) throw InputError("coordinate vector has the wrong length");
    FieldElement e = zero();
    if (finite()) {
        std::uint64_t v = 0;
        for (std::size_t i = coords.size(); i-- > 0;) v = v * q_ + static_cast<std::uint64_t>(mod(coords[i], q_));
        e.packed_ = v;
    } else {
        for (int i = 0; i < s_; ++i) e.rat_[i] = coords[i];
    }
    return e;
}

FieldElement Field::generator_x() const
{
    std::vector<long> x{0, 1};
    return from_residues(x);
}

FieldElement Field::multiplicative_generator() const
{
    if (!finite()) throw InputError("multiplicative generator only exists for finite fields");
    return from_packed(gen_);
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const
{
    check_owner(a);
    check_owner(b);
    FieldElement r = a;
    if (finite()) {
        if (q_ == 2) {
            r.packed_ = a.packed_ ^ b.packed_;
        } else if (s_ == 1) {
            r.packed_ = (a.packed_ + b.packed_) % static_cast<std::uint64_t>(q_);
        } else {
            std::uint64_t x = a.packed_, y = b.packed_, out = 0, place = 1;
            auto uq = static_cast<std::uint64_t>(q_);
            for (int i = 0; i < s_; ++i) {
                out += ((x % uq + y % uq) % uq) * place;
                x /= uq;
                y /= uq;
                place *= uq;
            }
            r.packed_ = out;
        }
    } else {
        for (int i = 0; i < s_; ++i) r.rat_[i] += b.rat_[i];
    }
    return r;
}

FieldElement Field::neg(const FieldElement& a) const
{
    check_owner(a);
    FieldElement r = a;
    if (finite()) {
        if (q_ == 2) return r;
        std::uint64_t x = a.packed_, out = 0, place = 1;
        auto uq = static_cast<std::uint64_t>(q_);
        for (int i = 0; i < s_; ++i) {
            out += ((uq - x % uq) % uq) * place;
            x /= uq;
            place *= uq;
        }
        r.packed_ = out;
    } else {
        for (auto& c : r.rat_) c = -c;
    }
    return r;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const
{
    if (!finite()) {
        check_owner(a);
        check_owner(b);
        FieldElement r = a;
        for (int i = 0; i < s_; ++i) r.rat_[i] -= b.rat_[i];
        return r;
    }
    return add(a, neg(b));
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const
{
    check_owner(a);
    check_owner(b);
    FieldElement r = zero();
    if (finite()) {
        if (a.packed_ == 0 || b.packed_ == 0) return r;
        if (!log_.empty()) {
            std::uint64_t e = log_[a.packed_] + static_cast<std::uint64_t>(log_[b.packed_]);
            std::uint64_t order = size_ - 1;
            if (e >= order) e -= order;
            r.packed_ = exp_[e];
        } else {
            r.packed_ = slow_mul(a.packed_, b.packed_);
        }
        return r;
    }
    if (s_ == 1) {
        r.rat_[0] = a.rat_[0] * b.rat_[0];
        return r;
    }
    std::vector<BigRational> prod(2 * s_ - 1);
    for (int i = 0; i < s_; ++i) {
        if (a.rat_[i] == 0) continue;
        for (int j = 0; j < s_; ++j) {
            if (b.rat_[j] == 0) continue;
            prod[i + j] += a.rat_[i] * b.rat_[j];
        }
    }
    for (int k = 2 * s_ - 2; k >= s_; --k) {
        if (prod[k] == 0) continue;
        const BigRational c = prod[k];
        for (int j = 0; j < s_; ++j)
            if (mod_[j] != 0) prod[k - s_ + j] -= c * mod_[j];
    }
    prod.resize(s_);
    r.rat_ = std::move(prod);
    return r;
}

bool Field::is_zero(const FieldElement& a) const
{
    check_owner(a);
    if (finite()) return a.packed_ == 0;
    return std::all_of(a.rat_.begin(), a.rat_.end(), [](const BigRational& c) { return c == 0; });
}

FieldElement Field::inv(const FieldElement& a) const
{
    if (is_zero(a)) throw InputError("inversion of zero");
    FieldElement r = zero();
    if (finite()) {
        if (!log_.empty()) {
            std::uint64_t order = size_ - 1;
            r.packed_ = exp_[(order - log_[a.packed_]) % order];
        } else {
            r.packed_ = slow_pow(a.packed_, size_ - 2);
        }
        return r;
    }
    if (s_ == 1) {
        r.rat_[0] = 1 / a.rat_[0];
        return r;
    }
    // extended Euclid: find u with u*a = 1 mod m
    QPoly m(mod_.begin(), mod_.end());
    QPoly r0 = m, r1 = a.rat_;
    qtrim(r1);
    QPoly s0, s1{BigRational(1)};
    while (!r1.empty()) {
        auto [quot, rem] = qdivmod(r0, r1);
        QPoly s2 = qsub(s0, qmul(quot, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    require(r0.size() == 1, "cyclotomic inverse: gcd is not constant");
    for (auto& c : s0) c /= r0[0];
    return from_rationals(s0);
}

bool Field::eq(const FieldElement& a, const FieldElement& b) const
{
    check_owner(a);
    check_owner(b);
    if (finite()) return a.packed_ == b.packed_;
    return a.rat_ == b.rat_;
}

// ---------------------------------------------------------------- FieldElement

namespace {
const Field& owner(const FieldElement& a)
{
    if (!a.field()) throw InputError("detached field element");
    return *a.field();
}
} // namespace

bool FieldElement::is_zero() const { return owner(*this).is_zero(*this); }

bool FieldElement::is_one() const { return owner(*this).eq(*this, owner(*this).one()); }

FieldElement FieldElement::inv() const { return owner(*this).inv(*this); }

FieldElement FieldElement::pow(long e) const
{
    const Field& f = owner(*this);
    FieldElement base = e < 0 ? inv() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    FieldElement r = f.one();
    while (k) {
        if (k & 1) r = f.mul(r, base);
        k >>= 1;
        if (k) base = f.mul(base, base);
    }
    return r;
}

std::vector<long> FieldElement::residues() const
{
    const Field& f = owner(*this);
    if (!f.finite()) throw InputError("residues of a characteristic-0 element");
    std::vector<long> c(f.degree(), 0);
    std::uint64_t v = packed_;
    for (int i = 0; i < f.degree(); ++i) {
        c[i] = static_cast<long>(v % static_cast<std::uint64_t>(f.characteristic()));
        v /= static_cast<std::uint64_t>(f.characteristic());
    }
    return c;
}

std::string FieldElement::str() const
{
    const Field& f = owner(*this);
    if (f.finite()) {
        auto c = residues();
        if (f.degree() == 1) return std::to_string(c[0]);
        std::string out;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] == 0) continue;
            out += poly_term(c[i], i, out.empty(), "a");
        }
        return out.empty() ? "0" : out;
    }
    std::string out;
    for (std::size_t i = rat_.size(); i-- > 0;) {
        if (rat_[i] == 0) continue;
        std::string coeff = BigRational(abs(rat_[i])).get_str();
        if (!out.empty()) out += rat_[i] < 0 ? " - " : " + ";
        else if (rat_[i] < 0) out += "-";
        if (i == 0 || coeff != "1") out += coeff;
        if (i >= 1) out += "z";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) { return owner(a).add(a, b); }
FieldElement operator-(const FieldElement& a, const FieldElement& b) { return owner(a).sub(a, b); }
FieldElement operator*(const FieldElement& a, const FieldElement& b) { return owner(a).mul(a, b); }
FieldElement operator-(const FieldElement& a) { return owner(a).neg(a); }
bool operator==(const FieldElement& a, const FieldElement& b) { return owner(a).eq(a, b); }

// ---------------------------------------------------------------- services

FieldHandle sufficiently_large_field(long N, long q)
{
    if (N < 1) throw InputError("sufficiently_large_field: N must be positive");
    if (q == 0) return Field::cyclotomic(N);
    if (q < 2 || !is_prime(static_cast<std::uint64_t>(q))) throw InputError("sufficiently_large_field: q must be 0 or prime");
    if (N % q == 0) throw InputError("sufficiently_large_field: characteristic divides N");
    if (N == 1) return Field::prime(q);
    int s = static_cast<int>(multiplicative_order(q, N));
    if (s == 1) return Field::prime(q);
    return Field::extension(q, smallest_irreducible(q, s));
}

FieldElement primitive_root_of_unity(const FieldHandle& K, long N)
{
    if (N < 1) throw InputError("root of unity order must be positive");
    if (K->finite()) {
        std::uint64_t order = K->size() - 1;
        if (order % static_cast<std::uint64_t>(N) != 0)
            throw InputError("no primitive " + std::to_string(N) + "-th root of unity in " + K->describe());
        FieldElement z = K->multiplicative_generator().pow(static_cast<long>(order / N));
        return z;
    }
    long M = K->cyclotomic_order();
    if (N == 1) return K->one();
    if (N == 2) return K->from_int(-1);
    if (M % N != 0)
        throw InputError("no primitive " + std::to_string(N) + "-th root of unity in " + K->describe());
    return K->generator_x().pow(M / N);
}

} // namespace hallinv
