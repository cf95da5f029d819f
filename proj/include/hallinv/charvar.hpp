#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "hallinv/bigint.hpp"
#include "hallinv/field.hpp"
#include "hallinv/fox.hpp"

namespace hallinv {

struct Character {
    FieldHandle field;
    std::vector<FieldElement> free_values;
    std::vector<FieldElement> torsion_values;

    std::vector<FieldElement> values() const;
    bool is_trivial() const;
    // lcm of the multiplicative orders of the coordinates; 0 if some
    // coordinate is not a root of unity.
    long order() const;
};

Character trivial_character(const AbelStructure& abel, const FieldHandle& K);
// Validates nonzero values and t_i^{e_i} = 1 on torsion coordinates.
Character make_character(const AbelStructure& abel, const FieldHandle& K, std::vector<FieldElement> free_values,
                         std::vector<FieldElement> torsion_values);

// Multiplicative order of a nonzero element, 0 if it is not a root of unity.
long element_order(const FieldElement& v);

FieldMatrix evaluate(const AlexanderMatrix& a, const Character& t);
long depth(const AlexanderMatrix& a, const Character& t);

// Evaluates an Alexander matrix at characters whose coordinates are powers
// of one fixed root of unity zeta of order M: coordinate c takes the value
// zeta^{exps[c]}.
class RootEvaluator {
public:
    RootEvaluator(const AlexanderMatrix& a, FieldHandle K, long M, long root_power = 1);

    const FieldHandle& field() const { return K_; }
    long root_order() const { return M_; }
    const FieldElement& root() const { return zeta_; }

    FieldMatrix evaluate(const std::vector<long>& exps) const;
    long depth(const std::vector<long>& exps) const;
    Character character(const std::vector<long>& exps) const;

private:
    struct Term {
        long coef;
        std::vector<long> key;
    };
    const AbelStructure* abel_;
    std::size_t rows_, cols_;
    std::vector<std::vector<Term>> entries_;
    FieldHandle K_;
    long M_;
    FieldElement zeta_;
    std::vector<std::vector<long>> power_coords_;
};

// Exponent vectors (relative to a root of order p) of every order-p
// character, in mixed-radix order over the eligible coordinates.
std::vector<std::vector<long>> order_p_exponents(const AbelStructure& abel, long p);

std::vector<Character> enumerate_order_p_characters(const AbelStructure& abel, long p, const FieldHandle& K);

struct BettiDistribution {
    long p = 0;
    long q = 0;
    std::size_t n_p = 0;
    std::map<long, BigInt> counts;

    BigInt total() const;
    BigInt at(long d) const;
    long max_depth() const;
    // Checks the sum identity and nonnegativity.
    void validate() const;
};

struct BetaOptions {
    long root_power = 1;    // use zeta^root_power as the chosen primitive root
    unsigned threads = 1;
};

BettiDistribution beta_distribution(const Presentation& p, long prime, long q, const BetaOptions& opts = {});
BettiDistribution beta_distribution(const AlexanderMatrix& a, long prime, long q, const BetaOptions& opts = {});

// Depth of every order-p character, indexed as in order_p_exponents.
std::vector<long> order_p_depths(const AlexanderMatrix& a, long prime, long q, const BetaOptions& opts = {});

// images: lambda(x_j) in Z_N for every generator.
long b1_cover_cyclic(const Presentation& p, const std::vector<long>& images, long N, long q);
long b1_cover_cyclic(const AlexanderMatrix& a, const Presentation& p, const std::vector<long>& images, long N, long q);

// images[j][i]: i-th coordinate of lambda(x_j) in Z_{orders[i]}.
long b1_cover_abelian(const Presentation& p, const std::vector<std::vector<long>>& images,
                      const std::vector<long>& orders, long q);

// Largest depth over nontrivial characters of order dividing k.
long max_depth_dividing(const AlexanderMatrix& a, long k, long q);

struct CoverBounds {
    long b1_group = 0;
    long b1_cover = 0;
    long generators = 0;
    long index = 0;
    std::optional<long> depth_bound;
};

struct BoundsReport {
    long lower = 0;
    long upper = 0;
    std::optional<long> sharpened_upper;
    long modulus = 0;
    bool ok = true;
};

// Throws InvariantError on any violation.
BoundsReport check_bounds_congruence(const CoverBounds& c);

} // namespace hallinv
