#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "hallinv/bigint.hpp"
#include "hallinv/charvar.hpp"
#include "hallinv/oracle.hpp"
#include "hallinv/presentation.hpp"

namespace hallinv {

using HomCounter = std::function<BigInt(int l)>;   // |Hom(G, S_l)|

BigInt a_k_via_hall_recursion(int k, const HomCounter& h);
BigInt a_k_via_hall_recursion(const Presentation& p, int k, const OracleOptions& opts = {});
BigInt a_k_free(long n, int k);
BigInt a_k_Zn(long n, long k);

std::pair<BigInt, BigInt> a2_a3(const Presentation& p, const BetaOptions& opts = {});

// Index-k subgroups: closed forms for k <= 3, Hall recursion otherwise.
BigInt a_k(const Presentation& p, int k, const OracleOptions& opts = {});

// Normal subgroups of index k for k = p, p^2 or pq.
BigInt a_normal(const Presentation& p, long k, const BetaOptions& opts = {});
BigInt alpha_k(const Presentation& p, long k);
BigInt c_p(const Presentation& p, long prime, const OracleOptions& opts = {});
BigInt a_p_product_with_Z(const Presentation& p, long prime, const OracleOptions& opts = {});

// Abelian groups of order k as cyclic-order lists, in a fixed order.
std::vector<std::vector<long>> abelian_groups_of_order(long k);

struct CensusReport {
    long k = 0;
    std::optional<BigInt> a_k;
    std::optional<BigInt> a_k_normal;
    std::optional<BigInt> alpha_k;
    std::optional<BigInt> c_k;
    std::map<std::string, std::string> method;
};

struct CensusRequest {
    bool all = true;
    bool normal = false;
    bool abelian_quotient = false;
    bool conjugacy = false;
};

CensusReport census(const Presentation& p, long k, const CensusRequest& req, const OracleOptions& opts = {});

} // namespace hallinv
