#pragma once

#include <string>
#include <vector>

namespace hallinv {

// Multiplication table of a finite group on elements 0..N-1.
class FiniteGroupTable {
public:
    FiniteGroupTable() = default;
    // Verifies the group axioms (associativity only for N <= 128).
    explicit FiniteGroupTable(std::vector<std::vector<int>> mul, std::string name = "");

    // Closure of a set of permutations of {0..n-1}; elements are the
    // permutations in discovery order, identity first.
    static FiniteGroupTable from_permutations(const std::vector<std::vector<int>>& gens, std::string name = "");

    int order() const { return static_cast<int>(mul_.size()); }
    int identity() const { return id_; }
    int mul(int a, int b) const { return mul_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    int pow(int a, long e) const;
    int element_order(int a) const;
    const std::string& name() const { return name_; }
    bool is_abelian() const;
    // Permutation representation, when constructed from permutations.
    const std::vector<std::vector<int>>& permutations() const { return perms_; }

    // Subgroup generated by the elements set in mask (order <= 64).
    unsigned long long closure(unsigned long long mask) const;
    std::vector<int> closure_of(const std::vector<int>& elements) const;

private:
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    int id_ = 0;
    std::string name_;
    std::vector<std::vector<int>> perms_;
};

FiniteGroupTable cyclic_group(int n);
FiniteGroupTable abelian_group(const std::vector<int>& orders);
FiniteGroupTable symmetric_group(int k);
FiniteGroupTable alternating_group(int k);
FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b);

// Brute-force isomorphism test for small groups.
bool isomorphic(const FiniteGroupTable& a, const FiniteGroupTable& b);

} // namespace hallinv
