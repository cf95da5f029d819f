#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "hallinv/braids.hpp"
#include "hallinv/census.hpp"
#include "hallinv/error.hpp"
#include "hallinv/charvar.hpp"
#include "hallinv/cli.hpp"
#include "hallinv/hall.hpp"
#include "hallinv/oracle.hpp"

using namespace hallinv;

namespace {

class Check {
public:
    template <class A, class B>
    void equal(const std::string& what, const A& got, const B& want)
    {
        ++count_;
        if (got == want) return;
        std::ostringstream m;
        m << what << ": got " << got << ", expected " << want;
        failures_.push_back(m.str());
    }

    void truth(const std::string& what, bool ok)
    {
        ++count_;
        if (!ok) failures_.push_back(what);
    }

    void fail(const std::string& what) { failures_.push_back(what); }

    bool ok() const { return failures_.empty(); }
    std::size_t count() const { return count_; }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    std::size_t count_ = 0;
    std::vector<std::string> failures_;
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<void(Check&)> body;
};

BigInt beta_at(const BettiDistribution& b, long d) { return b.at(d); }

std::string beta_tuple(const BettiDistribution& b, long from, long to)
{
    std::ostringstream s;
    s << "(";
    for (long d = from; d <= to; ++d) s << (d > from ? "," : "") << b.at(d);
    s << ")";
    return s.str();
}

BigInt big(long long v) { return BigInt(std::to_string(v)); }

// Every surjection H_1 -> Z_N written on generators.
std::vector<std::vector<long>> cyclic_quotients(const Presentation& p, long N)
{
    AbelStructure a = abelianization(p);
    std::size_t n = a.num_coordinates();
    std::vector<long> radix(n);
    for (std::size_t c = 0; c < n; ++c) {
        long e = a.coordinate_order(c);
        radix[c] = e == 0 ? N : std::gcd(e, N);
    }
    std::vector<std::vector<long>> out;
    std::vector<long> v(n, 0);
    while (true) {
        std::vector<long> coords(n);
        long g = N;
        for (std::size_t c = 0; c < n; ++c) {
            coords[c] = v[c] * (N / radix[c]);
            g = std::gcd(g, coords[c]);
        }
        if (g == 1) {
            std::vector<long> lam(p.num_generators());
            for (std::size_t j = 0; j < lam.size(); ++j) {
                long s = 0;
                for (std::size_t c = 0; c < n; ++c) s += a.chi[j][c] * coords[c];
                lam[j] = ((s % N) + N) % N;
            }
            out.push_back(lam);
        }
        std::size_t c = 0;
        while (c < n && ++v[c] == radix[c]) v[c++] = 0;
        if (c == n) break;
    }
    return out;
}

void table_values(Check& c)
{
    const std::vector<std::pair<std::string, std::vector<long long>>> expected{
        {"F2", {3, 4, 1, 6, 3, 12, 3, 4, 8}},
        {"F3", {7, 13, 7, 28, 42, 112, 28, 65, 208}},
        {"F4", {15, 40, 35, 120, 420, 960, 195, 840, 4560}},
        {"F2xF1", {7, 13, 7, 28, 42, 112, 3, 4, 8}},
        {"F2xF2", {15, 40, 35, 120, 420, 960, 6, 8, 16}},
        {"F3xF1", {15, 40, 35, 120, 420, 960, 28, 65, 208}},
        {"F3xF2", {31, 121, 155, 496, 3720, 7936, 31, 69, 216}},
        {"S2", {15, 40, 35, 120, 420, 960, 60, 200, 640}},
        {"S3", {63, 364, 651, 2016, 31248, 64512, 2520, 30940, 291200}},
        {"S4", {255, 3280, 10795, 32640, 2072640, 4177920, 92820, 4477200, 128628480}},
        {"N2", {3, 1, 1, 2, 1, 2, 1, 0, 0}},
        {"N3", {7, 4, 7, 12, 18, 24, 10, 4, 8}},
        {"N4", {15, 13, 35, 56, 196, 224, 69, 65, 208}},
        {"N5", {31, 40, 155, 240, 1800, 1920, 430, 840, 4560}},
    };
    auto columns = table1_columns();
    for (const auto& [name, values] : expected) {
        TableRow row = table1_row(name);
        for (std::size_t j = 0; j < values.size(); ++j) c.equal(name + " " + columns[j], row.values[j], big(values[j]));
    }
}

void braid_arrangement(Check& c)
{
    Presentation P = fixture("braid_arrangement");
    AlexanderMatrix A = alexander_matrix(P);
    for (long p : {2L, 3L, 5L})
        for (long q : {0L, 2L, 3L, 7L}) {
            if (q == p) continue;
            BettiDistribution b = beta_distribution(A, p, q);
            std::string tag = "p=" + std::to_string(p) + " q=" + std::to_string(q);
            c.equal(tag + " beta_1", beta_at(b, 1), big(5 * (p + 1)));
            c.truth(tag + " no depth above one", b.max_depth() <= 1);
            if (q == 0) continue;
            long s = static_cast<long>(multiplicative_order(q, p));
            c.equal(tag + " delta", delta_mpqs(b, s), big(5 * (p * p - 1) / s));
        }
}

void deleted_b3(Check& c)
{
    Presentation P = fixture("deleted_B3");
    AlexanderMatrix A = alexander_matrix(P);
    for (long q : {0L, 3L, 5L, 7L}) {
        BettiDistribution b = beta_distribution(A, 2, q);
        c.equal("beta_2 q=" + std::to_string(q), beta_tuple(b, 1, 2), std::string("(27,9)"));
    }
    for (long q : {0L, 5L, 7L}) {
        BettiDistribution b = beta_distribution(A, 3, q);
        c.equal("beta_3 q=" + std::to_string(q), beta_tuple(b, 1, 2), std::string("(44,13)"));
    }
    c.equal("beta_3,1 q=2", beta_distribution(A, 3, 2).at(1), big(45));
    c.equal("delta A4", delta_mpqs(P, 3, 2), big(110));
    c.equal("delta S3", delta_mpqs(P, 2, 3), big(63));

    auto exps = order_p_exponents(A.abel, 3);
    auto d2 = order_p_depths(A, 3, 2);
    auto d0 = order_p_depths(A, 3, 0);
    std::size_t jumps = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (d2[i] == d0[i]) continue;
        ++jumps;
        std::vector<long> lam(P.num_generators());
        for (std::size_t j = 0; j < lam.size(); ++j) {
            long s = 0;
            for (std::size_t k = 0; k < exps[i].size(); ++k) s += A.abel.chi[j][k] * exps[i][k];
            lam[j] = ((s % 3) + 3) % 3;
        }
        c.equal("mu cover b1 (characters)", b1_cover_cyclic(A, P, lam, 3, 0), 8L);
        c.equal("mu cover b1 mod 2 (characters)", b1_cover_cyclic(A, P, lam, 3, 2), 10L);
        CoverHomology h = cover_homology(P, regular_cyclic_action(lam, 3));
        c.equal("mu cover b1 (integral)", h.betti, 8L);
        c.equal("mu cover b1 mod 2 (integral)", h.betti_mod(2), 10L);
    }
    c.equal("order-3 characters jumping in characteristic 2", jumps, std::size_t{2});
}

void non_fano(Check& c)
{
    Presentation P = fixture("non_fano");
    AlexanderMatrix A = alexander_matrix(P);
    for (long q : {0L, 3L, 5L, 7L})
        c.equal("beta_2 q=" + std::to_string(q), beta_tuple(beta_distribution(A, 2, q), 1, 2), std::string("(24,1)"));
    for (long q : {3L, 5L, 7L, 11L}) c.equal("dihedral q=" + std::to_string(q), delta_mpqs(P, 2, q), big(q + 25));
}

void horizontal(Check& c)
{
    const std::vector<std::pair<std::string, std::vector<long long>>> rows{
        {"A2134", {25, 38, 72}},     {"A31425", {139, 191, 290}},        {"A21345", {168, 435, 1184}},
        {"A21435", {150, 273, 632}}, {"A123456", {1240, 10285, 96800}},
    };
    for (const auto& [name, values] : rows) {
        TableRow r = table2_row(name);
        for (std::size_t j = 0; j < values.size(); ++j) c.equal(name + " " + table2_columns()[j], r.values[j], big(values[j]));
    }
    Presentation a = fixture("A2134");
    c.equal("A2134 beta_2 q=3", beta_tuple(beta_distribution(a, 2, 3), 1, 2), std::string("(1,6)"));
    c.equal("A2134 beta_3 q=2", beta_tuple(beta_distribution(a, 3, 2), 1, 2), std::string("(18,4)"));
    Presentation b = fixture("A31425");
    c.equal("A31425 beta_2 q=3", beta_tuple(beta_distribution(b, 2, 3), 1, 3), std::string("(5,1,10)"));
    c.equal("A31425 beta_3 q=2", beta_tuple(beta_distribution(b, 3, 2), 1, 2), std::string("(41,30)"));
    c.equal("A31425 beta_3 q=5", beta_tuple(beta_distribution(b, 3, 5), 1, 2), std::string("(70,10)"));
    c.equal("A31425 beta_3 q=7", beta_tuple(beta_distribution(b, 3, 7), 1, 2), std::string("(65,10)"));
}

void censuses(Check& c)
{
    for (int n = 2; n <= 4; ++n) {
        Presentation F = groups::free(n);
        BigInt closed = 3 * (ipow(3, static_cast<unsigned long>(n - 1)) - 1) * ipow(2, static_cast<unsigned long>(n - 1)) + 1;
        std::string tag = "a3(F" + std::to_string(n) + ")";
        c.equal(tag + " beta formula", a2_a3(F).second, closed);
        c.equal(tag + " hall recursion with brute force", a_k_via_hall_recursion(F, 3), closed);
    }
    c.equal("a3 braid arrangement", a2_a3(fixture("braid_arrangement")).second, big(409));
    c.equal("a3 deleted B3", a2_a3(fixture("deleted_B3")).second, big(3469));
    c.equal("a6(Z^2) recursion", a_k_via_hall_recursion(groups::free_abelian(2), 6), big(12));
    c.equal("a6(Z^2) closed", a_k_Zn(2, 6), big(12));

    const std::vector<std::pair<long, std::vector<FiniteGroupTable>>> orders{
        {4, {cyclic_group(4), abelian_group({2, 2})}},
        {6, {cyclic_group(6), symmetric_group(3)}},
        {9, {cyclic_group(9), abelian_group({3, 3})}},
        {10, {cyclic_group(10), construct_mpqs(2, 5).table}},
        {15, {cyclic_group(15)}},
    };
    for (int n : {2, 3}) {
        Presentation F = groups::free(n);
        for (const auto& [k, groups_of_order] : orders) {
            BigInt sum = 0;
            for (const auto& g : groups_of_order) sum += delta_oracle(F, g);
            c.equal("normal index " + std::to_string(k) + " in F" + std::to_string(n), a_normal(F, k), sum);
        }
    }
}

void oracle_equivalence(Check& c)
{
    std::vector<std::string> names = table1_default_rows();
    for (const auto& n : table2_default_rows()) names.push_back(n);
    for (const auto& n : fixture_names()) names.push_back(n);
    names.push_back("Z2");
    names.push_back("Z3");

    struct Target {
        std::string label;
        FiniteGroupTable table;
        std::function<BigInt(const Presentation&, const AbelStructure&)> formula;
    };
    auto abelian = [](std::vector<long> orders) {
        return [orders](const Presentation&, const AbelStructure& h) {
            return delta_abelian(h, AbelianGroupSpec::from_cyclic(orders));
        };
    };
    auto metabelian = [](long p, long q) {
        return [p, q](const Presentation& P, const AbelStructure&) { return delta_mpqs(P, p, q); };
    };
    std::vector<Target> targets{
        {"Z2", cyclic_group(2), abelian({2})},
        {"Z3", cyclic_group(3), abelian({3})},
        {"Z4", cyclic_group(4), abelian({4})},
        {"Z2^2", abelian_group({2, 2}), abelian({2, 2})},
        {"S3", construct_mpqs(2, 3).table, metabelian(2, 3)},
        {"A4", construct_mpqs(3, 2).table, metabelian(3, 2)},
        {"M3,7", construct_mpqs(3, 7).table, metabelian(3, 7)},
    };
    OracleOptions opts;
    opts.budget = 4'000'000'000ULL;
    for (const auto& name : names) {
        Presentation P = fixture(name);
        if (P.num_generators() > 8) continue;
        AbelStructure h = abelianization(P);
        for (const auto& t : targets) {
            try {
                c.equal(name + " " + t.label, t.formula(P, h), delta_oracle(P, t.table, opts));
            } catch (const InfeasibleError& e) {
                c.fail(name + " " + t.label + ": " + e.what());
            }
        }
    }

    std::vector<std::string> cover_groups{"F2", "F3", "Z2", "S2", "N3", "A2134"};
    for (const auto& name : cover_groups) {
        Presentation P = fixture(name);
        AlexanderMatrix A = alexander_matrix(P);
        for (long p : {2L, 3L})
            for (const auto& lam : cyclic_quotients(P, p)) {
                CoverHomology h = cover_homology(P, regular_cyclic_action(lam, p));
                for (long q : {0L, 2L, 3L, 5L, 7L}) {
                    if (q == p) continue;
                    long predicted = b1_cover_cyclic(A, P, lam, p, q);
                    long actual = q == 0 ? h.betti : h.betti_mod(q);
                    c.equal(name + " index " + std::to_string(p) + " q=" + std::to_string(q), predicted, actual);
                }
            }
    }
}

void property_suites(Check& c)
{
    std::string cmd = std::string("\"") + HALLINV_PROPERTY_BINARY + "\" --minimal > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    c.equal("property suite exit status", rc, 0);
}

} // namespace

int main(int argc, char** argv)
{
    std::vector<Criterion> criteria{
        {1, "hall invariants of free, product and surface groups", 120, table_values},
        {2, "braid arrangement betti distributions and metabelian invariants", 600, braid_arrangement},
        {3, "deleted B3 arrangement", 600, deleted_b3},
        {4, "non-Fano arrangement", 600, non_fano},
        {5, "horizontal arrangements", 300, horizontal},
        {6, "finite-index subgroup censuses", 600, censuses},
        {7, "formula versus brute-force oracle", 600, oracle_equivalence},
        {8, "property suites", 600, property_suites},
    };
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));

    int failed = 0;
    for (const auto& cr : criteria) {
        if (!only.empty() && std::find(only.begin(), only.end(), cr.id) == only.end()) continue;
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            cr.body(check);
        } catch (const std::exception& e) {
            check.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > cr.limit_seconds)
            check.fail("runtime " + std::to_string(secs) + "s exceeds " + std::to_string(cr.limit_seconds) + "s");
        bool ok = check.ok();
        failed += ok ? 0 : 1;
        std::printf("%s  %d  %-66s %6zu checks %8.2fs\n", ok ? "PASS" : "FAIL", cr.id, cr.title.c_str(), check.count(),
                    secs);
        for (const auto& f : check.failures()) std::printf("        %s\n", f.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
