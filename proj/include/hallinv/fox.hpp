#pragma once

#include <map>
#include <string>
#include <vector>

#include "hallinv/field.hpp"
#include "hallinv/linalg.hpp"
#include "hallinv/presentation.hpp"

namespace hallinv {

// Element of the integral group ring of a free group.
class FreeRingElement {
public:
    FreeRingElement() = default;
    static FreeRingElement from_word(const Word& w, long c = 1);

    const std::map<Word, long>& terms() const { return terms_; }
    void add(const Word& w, long c);
    long augmentation() const;

    friend FreeRingElement operator+(FreeRingElement a, const FreeRingElement& b);
    friend FreeRingElement operator-(FreeRingElement a, const FreeRingElement& b);
    friend FreeRingElement operator*(const FreeRingElement& a, const FreeRingElement& b);
    friend bool operator==(const FreeRingElement&, const FreeRingElement&) = default;

private:
    std::map<Word, long> terms_;
};

FreeRingElement fox_derivative(const Word& w, int j);

IntMatrix augmentation_jacobian(const Presentation& p);

// H_1 = Z^free_rank + sum Z_{torsion[i]}. Coordinates are ordered free first,
// then torsion.
struct AbelStructure {
    std::size_t num_generators = 0;
    std::size_t free_rank = 0;
    std::vector<long> torsion;
    // num_generators rows; row j is the image of generator j.
    std::vector<std::vector<long>> chi;
    // one row per coordinate: a generator exponent vector mapping to that basis element
    std::vector<std::vector<long>> basis_words;

    std::size_t num_coordinates() const { return free_rank + torsion.size(); }
    // Order of coordinate c: 0 for free coordinates.
    long coordinate_order(std::size_t c) const { return c < free_rank ? 0 : torsion[c - free_rank]; }
    long b1(long q) const;
    // free_rank + #{e : p | e}
    std::size_t rank_mod(long p) const;
    std::vector<long> image(const std::vector<long>& exponent_vector) const;
    std::vector<long> reduce(std::vector<long> coords) const;
};

AbelStructure abelianization(const Presentation& p);

class LaurentElement {
public:
    using Key = std::vector<long>;   // free exponents then torsion residues
    const std::map<Key, long>& terms() const { return terms_; }
    void add(const Key& k, long c);
    bool is_zero() const { return terms_.empty(); }
    long augmentation() const;
    friend bool operator==(const LaurentElement&, const LaurentElement&) = default;

private:
    std::map<Key, long> terms_;
};

struct AlexanderMatrix {
    AbelStructure abel;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<LaurentElement> entries;

    const LaurentElement& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

AlexanderMatrix alexander_matrix(const Presentation& p);
AlexanderMatrix alexander_matrix(const Presentation& p, const AbelStructure& abel);

// values: one unit per coordinate of abel, all in K.
FieldMatrix evaluate(const AlexanderMatrix& a, const FieldHandle& K, const std::vector<FieldElement>& values);

std::string render_alexander(const AlexanderMatrix& a);

} // namespace hallinv
