#include "hallinv/hall.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hallinv/error.hpp"
#include "hallinv/field.hpp"
#include "hallinv/oracle.hpp"

namespace hallinv {

namespace {

BigRational phi_poly(long m, const BigRational& t)
{
    BigRational out = 1;
    BigRational tp = 1;
    for (long i = 1; i <= m; ++i) {
        tp *= t;
        out *= BigRational(1) - tp;
    }
    return out;
}

BigRational rpow(long p, long e)
{
    if (e >= 0) return BigRational(ipow(p, static_cast<unsigned long>(e)));
    return BigRational(BigInt(1), ipow(p, static_cast<unsigned long>(-e)));
}

BigInt as_integer(const BigRational& r, const char* what)
{
    BigRational c = r;
    c.canonicalize();
    if (c.get_den() != 1) throw InvariantError(std::string(what) + " is not an integer: " + c.get_str());
    return c.get_num();
}

long valuation(long n, long p)
{
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

BigInt aut_order_pgroup(long p, const Partition& lambda)
{
    BigRational r = rpow(p, lambda.weight() + 2 * lambda.moment());
    BigRational inv_p(BigInt(1), BigInt(p));
    for (long k = 1; k <= (lambda.parts.empty() ? 0 : lambda.parts.front()); ++k) r *= phi_poly(lambda.multiplicity(k), inv_p);
    BigInt out = as_integer(r, "automorphism group order");
    require(out > 0, "automorphism group order must be positive");
    return out;
}

} // namespace

Partition::Partition(std::vector<long> p) : parts(std::move(p))
{
    for (long x : parts)
        if (x <= 0) throw InputError("partition parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<>());
}

long Partition::weight() const
{
    long w = 0;
    for (long x : parts) w += x;
    return w;
}

long Partition::moment() const
{
    long m = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) m += static_cast<long>(i) * parts[i];
    return m;
}

long Partition::multiplicity(long k) const
{
    return static_cast<long>(std::count(parts.begin(), parts.end(), k));
}

Partition Partition::reduced() const
{
    std::vector<long> r;
    for (long x : parts)
        if (x > 1) r.push_back(x - 1);
    return Partition(r);
}

AbelianGroupSpec AbelianGroupSpec::from_cyclic(const std::vector<long>& orders)
{
    std::map<long, std::vector<long>> parts;
    for (long n : orders) {
        if (n < 1) throw InputError("cyclic group orders must be positive");
        for (auto p : prime_factors(static_cast<std::uint64_t>(n))) parts[static_cast<long>(p)].push_back(valuation(n, static_cast<long>(p)));
    }
    AbelianGroupSpec g;
    for (auto& [p, v] : parts) g.primary[p] = Partition(v);
    return g;
}

AbelianGroupSpec AbelianGroupSpec::torsion_of(const AbelStructure& a)
{
    return from_cyclic(a.torsion);
}

BigInt AbelianGroupSpec::order() const
{
    BigInt n = 1;
    for (const auto& [p, lam] : primary) n *= ipow(p, static_cast<unsigned long>(lam.weight()));
    return n;
}

std::vector<long> AbelianGroupSpec::cyclic_orders() const
{
    std::vector<long> out;
    for (const auto& [p, lam] : primary)
        for (long e : lam.parts) out.push_back(to_int64(ipow(p, static_cast<unsigned long>(e))));
    return out;
}

std::string AbelianGroupSpec::describe() const
{
    auto orders = cyclic_orders();
    if (orders.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < orders.size(); ++i) os << (i ? "+" : "") << "Z" << orders[i];
    return os.str();
}

FiniteGroupTable AbelianGroupSpec::table() const
{
    auto orders = cyclic_orders();
    if (orders.empty()) return cyclic_group(1);
    std::vector<int> o(orders.begin(), orders.end());
    return abelian_group(o);
}

long theta(const Partition& lambda, const Partition& tau, std::size_t i)
{
    if (i < 1 || i > lambda.length()) throw InputError("theta index out of range");
    long t = 0;
    for (long tj : tau.parts) t += std::min(lambda.parts[i - 1], tj);
    return t;
}

long theta_total(const Partition& lambda, const Partition& tau)
{
    long t = 0;
    for (std::size_t i = 1; i <= lambda.length(); ++i) t += theta(lambda, tau, i);
    return t;
}

BigInt aut_order_abelian(const AbelianGroupSpec& g)
{
    BigInt out = 1;
    for (const auto& [p, lam] : g.primary) out *= aut_order_pgroup(p, lam);
    return out;
}

BigInt delta_abelian(const AbelStructure& h1, const AbelianGroupSpec& gamma)
{
    long n = static_cast<long>(h1.free_rank);
    AbelianGroupSpec torsion = AbelianGroupSpec::torsion_of(h1);
    BigInt out = 1;
    for (const auto& [p, lambda] : gamma.primary) {
        Partition tau;
        if (auto it = torsion.primary.find(p); it != torsion.primary.end()) tau = it->second;
        std::size_t r = lambda.length();
        // lambda' with zero parts kept, so theta_i stays aligned with lambda
        auto theta_prime = [&](std::size_t i) {
            long t = 0;
            for (long tj : tau.parts) t += std::min(lambda.parts[i - 1] - 1, tj);
            return t;
        };
        long theta_prime_total = 0;
        for (std::size_t i = 1; i <= r; ++i) theta_prime_total += theta_prime(i);
        BigInt num = ipow(p, static_cast<unsigned long>((lambda.weight() - static_cast<long>(r)) * n + theta_prime_total));
        for (std::size_t i = 1; i <= r; ++i) {
            long e = n + theta(lambda, tau, i) - theta_prime(i);
            BigInt factor = ipow(p, static_cast<unsigned long>(e)) - ipow(p, static_cast<unsigned long>(i - 1));
            if (factor == 0) return 0;
            require(factor > 0, "negative factor in the abelian Hall invariant");
            num *= factor;
        }
        out *= exact_div(num, aut_order_pgroup(p, lambda));
    }
    return out;
}

BigInt delta_abelian_torsion_free(long n, const AbelianGroupSpec& gamma)
{
    BigRational out = 1;
    for (const auto& [p, lambda] : gamma.primary) {
        long r = static_cast<long>(lambda.length());
        if (n < r) return 0;
        BigRational inv_p(BigInt(1), BigInt(p));
        BigRational num = rpow(p, lambda.weight() * (n - 1) - 2 * lambda.moment()) * phi_poly(n, inv_p);
        BigRational den = phi_poly(n - r, inv_p);
        for (long k = 1; k <= lambda.parts.front(); ++k) den *= phi_poly(lambda.multiplicity(k), inv_p);
        out *= num / den;
    }
    return as_integer(out, "torsion-free abelian Hall invariant");
}

BigInt eulerian_pgroup(long p, long r, long s, long n)
{
    if (!(r >= s && s >= 0 && n >= 1)) throw InputError("eulerian_pgroup needs r >= s >= 0 and n >= 1");
    BigInt out = ipow(p, static_cast<unsigned long>((r - s) * n));
    for (long i = 0; i < s; ++i) out *= ipow(p, static_cast<unsigned long>(n)) - ipow(p, static_cast<unsigned long>(i));
    return out;
}

BigInt mobius_weisner(long p, long d, bool contains_frattini)
{
    if (d < 0) throw InputError("mobius_weisner needs d >= 0");
    if (!contains_frattini) return 0;
    BigInt v = ipow(p, static_cast<unsigned long>(d * (d - 1) / 2));
    return d % 2 ? BigInt(-v) : v;
}

std::vector<LatticeClass> lattice_mpq(long p, long q)
{
    if (!is_prime(p) || !is_prime(q) || (q - 1) % p != 0) throw InputError("lattice_mpq needs primes with p | q-1");
    MpqsGroup m = construct_mpqs(p, q);
    return {
        {"M" + std::to_string(p) + "," + std::to_string(q), 1, 1, m.table},
        {"Z" + std::to_string(q), 1, -1, cyclic_group(static_cast<int>(q))},
        {"Z" + std::to_string(p), q, -1, cyclic_group(static_cast<int>(p))},
        {"1", 1, q, cyclic_group(1)},
    };
}

std::vector<LatticeClass> lattice_a4()
{
    return {
        {"A4", 1, 1, alternating_group(4)},
        {"Z2^2", 1, -1, abelian_group({2, 2})},
        {"Z2", 3, 0, cyclic_group(2)},
        {"Z3", 4, -1, cyclic_group(3)},
        {"1", 1, 4, cyclic_group(1)},
    };
}

BigInt epi_by_lattice(const Presentation& p, const std::vector<LatticeClass>& lattice)
{
    BigInt out = 0;
    for (const auto& c : lattice) {
        if (c.mobius == 0) continue;
        out += BigInt(c.count * c.mobius) * hom_count(p, c.group);
    }
    return out;
}

BigInt epi_by_lattice_free(long n, const std::vector<LatticeClass>& lattice)
{
    BigInt out = 0;
    for (const auto& c : lattice) out += BigInt(c.count * c.mobius) * ipow(c.group.order(), static_cast<unsigned long>(n));
    return out;
}

MpqsGroup construct_mpqs(long p, long q, std::size_t factor_index)
{
    if (!is_prime(p) || !is_prime(q)) throw InputError("M_{p,q^s} needs prime p and q");
    if (p == q) throw InputError("M_{p,q^s} needs p != q");
    MpqsGroup g;
    g.p = p;
    g.q = q;
    g.s = static_cast<long>(multiplicative_order(q, p));
    auto factors = factor_cyclotomic_mod_q(p, q);
    if (factor_index >= factors.size())
        throw InputError("factor index " + std::to_string(factor_index) + " out of range: only " + std::to_string(factors.size()) + " factors");
    g.factor = factors[factor_index];
    long s = g.s;
    require(static_cast<long>(g.factor.size()) == s + 1, "cyclotomic factor has unexpected degree");
    g.sigma.assign(s, std::vector<long>(s, 0));
    for (long i = 0; i + 1 < s; ++i) g.sigma[i + 1][i] = 1;
    for (long r = 0; r < s; ++r) g.sigma[r][s - 1] = ((-g.factor[r]) % q + q) % q;

    long qs = to_int64(ipow(q, static_cast<unsigned long>(s)));
    auto unpack = [&](long u) {
        std::vector<long> v(s);
        for (long i = 0; i < s; ++i) {
            v[i] = u % q;
            u /= q;
        }
        return v;
    };
    auto pack = [&](const std::vector<long>& v) {
        long u = 0;
        for (long i = s - 1; i >= 0; --i) u = u * q + v[i];
        return u;
    };
    // act[k][u] = sigma^k(u)
    std::vector<std::vector<long>> act(p, std::vector<long>(qs));
    for (long u = 0; u < qs; ++u) act[0][u] = u;
    for (long k = 1; k <= p; ++k) {
        std::vector<long> row(qs);
        for (long u = 0; u < qs; ++u) {
            auto v = unpack(act[k - 1][u]);
            std::vector<long> w(s, 0);
            for (long r = 0; r < s; ++r)
                for (long c = 0; c < s; ++c) w[r] = (w[r] + g.sigma[r][c] * v[c]) % q;
            row[u] = pack(w);
        }
        if (k < p) {
            act[k] = row;
        } else {
            for (long u = 0; u < qs; ++u) require(row[u] == u, "companion matrix does not have order p");
        }
    }
    bool nontrivial = false;
    for (long u = 0; u < qs; ++u) nontrivial = nontrivial || act[1][u] != u;
    require(nontrivial, "companion matrix is the identity");

    long n = qs * p;
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y) {
            long u = x / p, k = x % p, v = y / p, l = y % p;
            auto a = unpack(u), b = unpack(act[k][v]);
            for (long i = 0; i < s; ++i) a[i] = (a[i] + b[i]) % q;
            mul[x][y] = static_cast<int>(pack(a) * p + (k + l) % p);
        }
    g.table = FiniteGroupTable(std::move(mul), "M" + std::to_string(p) + "," + std::to_string(qs));
    g.aut_order = BigInt(s) * qs * (qs - 1);
    return g;
}

BigInt delta_mpqs(const BettiDistribution& beta, long s)
{
    long p = beta.p, q = beta.q;
    if (q == 0 || p == q) throw InputError("M_{p,q^s} invariants need a prime q different from p");
    BigInt sum = 0;
    for (const auto& [d, c] : beta.counts)
        if (d >= 1) sum += c * (ipow(q, static_cast<unsigned long>(s * d)) - 1);
    return exact_div(sum * (p - 1), BigInt(s) * (ipow(q, static_cast<unsigned long>(s)) - 1));
}

BigInt delta_mpqs(const Presentation& P, long p, long q, const BetaOptions& opts)
{
    if (p == q) throw InputError("M_{p,q^s} needs p != q");
    long s = static_cast<long>(multiplicative_order(q, p));
    return delta_mpqs(beta_distribution(P, p, q, opts), s);
}

HomEpi hom_epi_count_mpqs(const Presentation& P, long p, long q, const BetaOptions& opts)
{
    if (p == q) throw InputError("M_{p,q^s} needs p != q");
    long s = static_cast<long>(multiplicative_order(q, p));
    AbelStructure a = abelianization(P);
    BettiDistribution beta = beta_distribution(P, p, q, opts);
    HomEpi out;
    out.hom = ipow(q, static_cast<unsigned long>(s * a.b1(q)));
    out.epi = 0;
    BigInt qs = ipow(q, static_cast<unsigned long>(s));
    for (const auto& [d, c] : beta.counts) {
        BigInt chars = c * (p - 1);
        out.hom += chars * ipow(q, static_cast<unsigned long>(s * d + s));
        out.epi += chars * qs * (ipow(q, static_cast<unsigned long>(s * d)) - 1);
    }
    return out;
}

BigInt delta_free_closed(long p, long q, long n)
{
    if (p == q || n < 1) throw InputError("delta_free_closed needs p != q and n >= 1");
    long s = static_cast<long>(multiplicative_order(q, p));
    BigInt num = (ipow(p, static_cast<unsigned long>(n)) - 1) * (ipow(q, static_cast<unsigned long>(s * (n - 1))) - 1);
    return exact_div(num, BigInt(s) * (ipow(q, static_cast<unsigned long>(s)) - 1));
}

BigInt delta_metacyclic_free(long p, long q, long n)
{
    if ((q - 1) % p != 0 || n < 1) throw InputError("delta_metacyclic_free needs p | q-1 and n >= 1");
    return exact_div((ipow(p, static_cast<unsigned long>(n)) - 1) * (ipow(q, static_cast<unsigned long>(n - 1)) - 1), BigInt(q - 1));
}

BigInt delta_A4_free(long n)
{
    if (n < 1) throw InputError("delta_A4_free needs n >= 1");
    return exact_div((ipow(3, static_cast<unsigned long>(n)) - 1) * (ipow(4, static_cast<unsigned long>(n - 1)) - 1), BigInt(6));
}

} // namespace hallinv
