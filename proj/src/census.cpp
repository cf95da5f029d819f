#include "hallinv/census.hpp"

#include <functional>

#include "hallinv/error.hpp"
#include "hallinv/field.hpp"
#include "hallinv/fox.hpp"
#include "hallinv/hall.hpp"

namespace hallinv {

namespace {

std::vector<std::vector<long>> partitions_of(long n, long max_part)
{
    if (n == 0) return {{}};
    std::vector<std::vector<long>> out;
    for (long first = std::min(n, max_part); first >= 1; --first)
        for (auto rest : partitions_of(n - first, first)) {
            rest.insert(rest.begin(), first);
            out.push_back(rest);
        }
    return out;
}

struct Shape {
    std::vector<std::pair<long, long>> factors;   // (prime, exponent)
};

Shape factor(long k)
{
    Shape s;
    for (auto p : prime_factors(static_cast<std::uint64_t>(k))) {
        long e = 0;
        long m = k;
        while (m % static_cast<long>(p) == 0) {
            m /= static_cast<long>(p);
            ++e;
        }
        s.factors.emplace_back(static_cast<long>(p), e);
    }
    return s;
}

} // namespace

BigInt a_k_via_hall_recursion(int k, const HomCounter& h)
{
    if (k < 1) throw InputError("subgroup index must be positive");
    std::vector<BigInt> a(k + 1);
    std::vector<BigInt> hs(k + 1);
    for (int l = 1; l <= k; ++l) hs[l] = h(l);
    for (int j = 1; j <= k; ++j) {
        BigRational v(hs[j], factorial(j - 1));
        for (int l = 1; l < j; ++l) v -= BigRational(hs[j - l] * a[l], factorial(j - l));
        v.canonicalize();
        if (v.get_den() != 1) throw InvariantError("Hall recursion produced a non-integer at index " + std::to_string(j));
        a[j] = v.get_num();
        require(a[j] >= 0, "Hall recursion produced a negative count");
    }
    return a[k];
}

BigInt a_k_via_hall_recursion(const Presentation& p, int k, const OracleOptions& opts)
{
    return a_k_via_hall_recursion(k, [&](int l) { return hom_count(p, symmetric_group(l), HomMode::All, opts); });
}

BigInt a_k_free(long n, int k)
{
    if (n < 1 || k < 1) throw InputError("a_k_free needs n, k >= 1");
    std::vector<BigInt> a(k + 1);
    for (int j = 1; j <= k; ++j) {
        BigInt v = BigInt(j) * ipow(factorial(j), static_cast<unsigned long>(n - 1));
        for (int l = 1; l < j; ++l) v -= ipow(factorial(j - l), static_cast<unsigned long>(n - 1)) * a[l];
        a[j] = v;
    }
    return a[k];
}

BigInt a_k_Zn(long n, long k)
{
    if (n < 1 || k < 1) throw InputError("a_k_Zn needs n, k >= 1");
    if (n == 1) return 1;
    BigInt out = 0;
    for (auto d : divisors(static_cast<std::uint64_t>(k)))
        out += a_k_Zn(n - 1, static_cast<long>(d)) * ipow(k / static_cast<long>(d), static_cast<unsigned long>(n - 1));
    return out;
}

std::pair<BigInt, BigInt> a2_a3(const Presentation& p, const BetaOptions& opts)
{
    AbelStructure a = abelianization(p);
    BigInt a2 = ipow(2, static_cast<unsigned long>(a.b1(2))) - 1;
    BigInt a3 = exact_div(ipow(3, static_cast<unsigned long>(a.b1(3))) - 1, BigInt(2)) + 3 * delta_mpqs(p, 2, 3, opts);
    return {a2, a3};
}

BigInt a_k(const Presentation& p, int k, const OracleOptions& opts)
{
    if (k < 1) throw InputError("subgroup index must be positive");
    if (k == 1) return 1;
    if (k == 2) return a2_a3(p).first;
    if (k == 3) return a2_a3(p).second;
    return a_k_via_hall_recursion(p, k, opts);
}

BigInt a_normal(const Presentation& p, long k, const BetaOptions& opts)
{
    if (k < 1) throw InputError("subgroup index must be positive");
    if (k == 1) return 1;
    AbelStructure a = abelianization(p);
    Shape s = factor(k);
    auto unsupported = [&]() {
        return InputError("normal subgroups of index " + std::to_string(k) +
                          " are unsupported: only indices p, p^2 and pq are covered by the available Hall invariants");
    };
    if (s.factors.size() == 1) {
        long q = s.factors[0].first;
        long e = s.factors[0].second;
        long n = a.b1(q);
        if (e == 1) return exact_div(ipow(q, static_cast<unsigned long>(n)) - 1, BigInt(q - 1));
        if (e == 2) {
            long m = static_cast<long>(a.free_rank);
            for (long t : a.torsion)
                if (t % (q * q) == 0) ++m;
            BigInt first = n >= 1 ? exact_div((ipow(q, static_cast<unsigned long>(n)) - 1) * (ipow(q, static_cast<unsigned long>(n - 1)) - 1),
                                              BigInt((q * q - 1) * (q - 1)))
                                  : BigInt(0);
            BigInt second = n >= 1 ? exact_div(ipow(q, static_cast<unsigned long>(n - 1)) * (ipow(q, static_cast<unsigned long>(m)) - 1), BigInt(q - 1))
                                   : BigInt(0);
            return first + second;
        }
        throw unsupported();
    }
    if (s.factors.size() == 2 && s.factors[0].second == 1 && s.factors[1].second == 1) {
        long p1 = s.factors[0].first, q1 = s.factors[1].first;
        long n = a.b1(p1), m = a.b1(q1);
        BigInt out = exact_div((ipow(p1, static_cast<unsigned long>(n)) - 1) * (ipow(q1, static_cast<unsigned long>(m)) - 1),
                               BigInt((p1 - 1) * (q1 - 1)));
        if ((q1 - 1) % p1 == 0) {
            BettiDistribution beta = beta_distribution(p, p1, q1, opts);
            BigInt sum = 0;
            for (const auto& [d, c] : beta.counts)
                if (d >= 1) sum += c * (ipow(q1, static_cast<unsigned long>(d)) - 1);
            out += exact_div(sum * (p1 - 1), BigInt(q1 - 1));
        }
        return out;
    }
    throw unsupported();
}

std::vector<std::vector<long>> abelian_groups_of_order(long k)
{
    if (k < 1) throw InputError("group order must be positive");
    std::vector<std::vector<long>> out{{}};
    for (auto [p, e] : factor(k).factors) {
        std::vector<std::vector<long>> next;
        for (const auto& base : out)
            for (const auto& part : partitions_of(e, e)) {
                auto g = base;
                for (long x : part) g.push_back(to_int64(ipow(p, static_cast<unsigned long>(x))));
                next.push_back(g);
            }
        out = std::move(next);
    }
    return out;
}

BigInt alpha_k(const Presentation& p, long k)
{
    AbelStructure a = abelianization(p);
    BigInt out = 0;
    for (const auto& g : abelian_groups_of_order(k)) out += delta_abelian(a, AbelianGroupSpec::from_cyclic(g));
    return out;
}

BigInt c_p(const Presentation& p, long prime, const OracleOptions& opts)
{
    if (!is_prime(static_cast<std::uint64_t>(prime))) throw InputError("c_p needs a prime index");
    long n = abelianization(p).b1(prime);
    return exact_div(ipow(prime, static_cast<unsigned long>(n)) + a_k(p, static_cast<int>(prime), opts) - 1, BigInt(prime));
}

BigInt a_p_product_with_Z(const Presentation& p, long prime, const OracleOptions& opts)
{
    if (!is_prime(static_cast<std::uint64_t>(prime))) throw InputError("needs a prime index");
    long n = abelianization(p).b1(prime);
    return a_k(p, static_cast<int>(prime), opts) + ipow(prime, static_cast<unsigned long>(n));
}

CensusReport census(const Presentation& p, long k, const CensusRequest& req, const OracleOptions& opts)
{
    if (k < 1) throw InputError("subgroup index must be positive");
    CensusReport r;
    r.k = k;
    if (req.all) {
        r.a_k = a_k(p, static_cast<int>(k), opts);
        r.method["a_k"] = k <= 3 ? "closed-form" : "recursion+oracle";
    }
    if (req.normal) {
        r.a_k_normal = a_normal(p, k);
        r.method["a_k_normal"] = "formula";
    }
    if (req.abelian_quotient) {
        r.alpha_k = alpha_k(p, k);
        r.method["alpha_k"] = "formula";
    }
    if (req.conjugacy) {
        if (!is_prime(static_cast<std::uint64_t>(k))) throw InputError("conjugacy class counts need a prime index");
        r.c_k = c_p(p, k, opts);
        r.method["c_k"] = k <= 3 ? "closed-form" : "recursion+oracle";
    }
    return r;
}

} // namespace hallinv
