#pragma once

#include <map>
#include <string>
#include <vector>

#include "hallinv/bigint.hpp"
#include "hallinv/charvar.hpp"
#include "hallinv/fox.hpp"
#include "hallinv/group_table.hpp"
#include "hallinv/presentation.hpp"

namespace hallinv {

struct Partition {
    std::vector<long> parts;

    Partition() = default;
    explicit Partition(std::vector<long> p);   // sorts, rejects nonpositive parts

    std::size_t length() const { return parts.size(); }
    long weight() const;
    // sum (i-1) pi_i
    long moment() const;
    long multiplicity(long k) const;
    // every part decreased by one, zeros dropped
    Partition reduced() const;
    friend bool operator==(const Partition&, const Partition&) = default;
};

struct AbelianGroupSpec {
    std::map<long, Partition> primary;

    // Direct sum of cyclic groups of the given orders.
    static AbelianGroupSpec from_cyclic(const std::vector<long>& orders);
    // Torsion subgroup of an abelianization.
    static AbelianGroupSpec torsion_of(const AbelStructure& a);

    BigInt order() const;
    // Prime-power cyclic orders, grouped by prime.
    std::vector<long> cyclic_orders() const;
    std::string describe() const;
    FiniteGroupTable table() const;
};

// theta_i(lambda, tau), 1 <= i <= l(lambda)
long theta(const Partition& lambda, const Partition& tau, std::size_t i);
long theta_total(const Partition& lambda, const Partition& tau);

BigInt aut_order_abelian(const AbelianGroupSpec& g);
BigInt delta_abelian(const AbelStructure& h1, const AbelianGroupSpec& gamma);
// Closed form valid when H_1 = Z^n.
BigInt delta_abelian_torsion_free(long n, const AbelianGroupSpec& gamma);

// Number of generating n-tuples of a p-group of order p^r with Frattini index p^s.
BigInt eulerian_pgroup(long p, long r, long s, long n);
BigInt mobius_weisner(long p, long d, bool contains_frattini);

// Subgroup lattice data, one entry per conjugacy class of subgroups.
struct LatticeClass {
    std::string label;
    long count = 1;
    long mobius = 0;
    FiniteGroupTable group;
};

std::vector<LatticeClass> lattice_mpq(long p, long q);   // p | q-1
std::vector<LatticeClass> lattice_a4();

// |Epi(G, Gamma)| = sum_H mu(H) |Hom(G, H)|, with Hom counted by the oracle.
BigInt epi_by_lattice(const Presentation& p, const std::vector<LatticeClass>& lattice);
// Same, for free groups of rank n.
BigInt epi_by_lattice_free(long n, const std::vector<LatticeClass>& lattice);

struct MpqsGroup {
    long p = 0;
    long q = 0;
    long s = 0;
    std::vector<long> factor;                // monic, low degree first
    std::vector<std::vector<long>> sigma;    // s x s companion matrix over F_q
    FiniteGroupTable table;                  // element u*b^k has index pack(u)*p + k
    BigInt aut_order;                        // s q^s (q^s - 1)
};

// Z_q^s semidirect Z_p, seeded by the factor_index-th irreducible factor.
MpqsGroup construct_mpqs(long p, long q, std::size_t factor_index = 0);

BigInt delta_mpqs(const BettiDistribution& beta, long s);
BigInt delta_mpqs(const Presentation& P, long p, long q, const BetaOptions& opts = {});

struct HomEpi {
    BigInt hom;
    BigInt epi;
};
HomEpi hom_epi_count_mpqs(const Presentation& P, long p, long q, const BetaOptions& opts = {});

BigInt delta_free_closed(long p, long q, long n);
BigInt delta_metacyclic_free(long p, long q, long n);
BigInt delta_A4_free(long n);

} // namespace hallinv
