#pragma once

#include <vector>

#include "hallinv/bigint.hpp"
#include "hallinv/group_table.hpp"
#include "hallinv/presentation.hpp"

namespace hallinv {

enum class HomMode { All, Epi, Transitive };

struct OracleOptions {
    unsigned long long budget = 100000000ULL;
};

// Number of homomorphisms G -> T. Epi counts surjective ones; Transitive
// counts those whose image acts transitively (T built from permutations).
// Throws InfeasibleError when the search budget is exhausted.
BigInt hom_count(const Presentation& p, const FiniteGroupTable& t, HomMode mode = HomMode::All,
                 const OracleOptions& opts = {});

BigInt aut_order(const FiniteGroupTable& t);

// |Epi(G, T)| / |Aut T|.
BigInt delta_oracle(const Presentation& p, const FiniteGroupTable& t, const OracleOptions& opts = {});

// Index-k subgroups counted through transitive actions on k points.
BigInt subgroup_count_oracle(const Presentation& p, int k, const OracleOptions& opts = {});

struct CoverHomology {
    long betti = 0;
    std::vector<BigInt> torsion;
    long betti_mod(long q) const;
};

// action[j][a] is the image of point a under generator j (right action).
CoverHomology cover_homology(const Presentation& p, const std::vector<std::vector<int>>& action);

// Regular action of Z_N where generator j acts by adding lambda[j].
std::vector<std::vector<int>> regular_cyclic_action(const std::vector<long>& lambda, long N);

} // namespace hallinv
