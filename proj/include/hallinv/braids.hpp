#pragma once

#include <string>
#include <vector>

#include "hallinv/linalg.hpp"
#include "hallinv/presentation.hpp"

namespace hallinv {

struct BraidLetter {
    int index = 1;   // sigma_index, 1-based
    int sign = 1;
    friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

class BraidWord {
public:
    explicit BraidWord(int strands = 1, std::vector<BraidLetter> letters = {});

    int strands() const { return strands_; }
    const std::vector<BraidLetter>& letters() const { return letters_; }
    BraidWord inverse() const;
    BraidWord power(int e) const;
    std::string str() const;

    friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
    friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
    int strands_;
    std::vector<BraidLetter> letters_;
};

struct FreeAutomorphism {
    int rank = 0;
    std::vector<Word> images;   // images[i] is the image of x_{i+1}

    static FreeAutomorphism identity(int k);
    Word apply(const Word& w) const;
    // (*this) o other
    FreeAutomorphism after(const FreeAutomorphism& other) const;
    // Integer matrix of the induced map on H_1, rows are images.
    IntMatrix abelianized() const;
    bool fixes(const Word& w) const { return apply(w) == w; }
    friend bool operator==(const FreeAutomorphism&, const FreeAutomorphism&) = default;
};

struct BraidConventions {
    // sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i; the opposite choice is
    // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}.
    bool opposite_artin = false;
    // false: action(uv) = action(u) o action(v)
    bool reverse_composition = false;
    // false: strands are slid together with positive crossings in full twists
    bool underpass_twists = false;
};

FreeAutomorphism artin_action(const BraidWord& b, const BraidConventions& c = {});

BraidWord pure_generator(int i, int j, int k);
BraidWord full_twist(const std::vector<int>& I, int k, const BraidConventions& c = {});
// b^-1 a b
BraidWord conjugate_braid(const BraidWord& a, const BraidWord& b);
// Horizontal arrangement braid on n-1 strands for a permutation of 1..n.
BraidWord xi_from_permutation(const std::vector<int>& tau);
std::vector<int> parse_permutation(const std::string& digits);

// x_1..x_k, y_1..y_m (or y when m = 1), optional central z;
// relators y_j x_i y_j^-1 = phi_j(x_i).
Presentation semidirect_presentation(const std::vector<FreeAutomorphism>& phis, bool add_central_Z);
// x_1..x_k, optional central z; relators alpha_j(x_i) = x_i.
Presentation braid_monodromy_presentation(const std::vector<FreeAutomorphism>& alphas, bool add_central_Z);

// Classical presentation of the pure braid group on k strands, generators A_ij.
Presentation pure_braid_presentation(int k, const BraidConventions& c = {});

Presentation horizontal_arrangement(const std::vector<int>& tau, const BraidConventions& c = {});
Presentation non_fano_arrangement(const BraidConventions& c = {});
Presentation deleted_B3_arrangement(const BraidConventions& c = {});

// Names: F<n>, F<m>xF<n>[x...], S<g>, N<n>, Z<n>, braid_arrangement,
// non_fano, deleted_B3, A<permutation>.
Presentation fixture(const std::string& name, const BraidConventions& c = {});
std::vector<std::string> fixture_names();

} // namespace hallinv
