#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hallinv/bigint.hpp"

namespace hallinv {

class Field;
using FieldHandle = std::shared_ptr<const Field>;

enum class FieldKind { Prime, Extension, Cyclotomic, Rationals };

// Value type. Holds a non-owning pointer to its field; the FieldHandle must
// outlive every element created from it.
class FieldElement {
public:
    FieldElement() = default;

    const Field* field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement inv() const;
    FieldElement pow(long e) const;

    // Residues mod q, low degree first (finite fields).
    std::vector<long> residues() const;
    // Rational coefficients, low degree first (characteristic 0).
    const std::vector<BigRational>& rationals() const { return rat_; }
    std::uint64_t packed() const { return packed_; }

    std::string str() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inv(); }
    friend FieldElement operator-(const FieldElement& a);
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
    FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
    FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

private:
    friend class Field;
    const Field* f_ = nullptr;
    std::uint64_t packed_ = 0;
    std::vector<BigRational> rat_;
};

class Field : public std::enable_shared_from_this<Field> {
public:
    static FieldHandle prime(long q);
    // modulus: monic, low degree first, degree s; checked for irreducibility.
    static FieldHandle extension(long q, const std::vector<long>& modulus);
    static FieldHandle cyclotomic(long N);
    static FieldHandle rationals() { return cyclotomic(1); }

    FieldKind kind() const { return kind_; }
    long characteristic() const { return q_; }
    int degree() const { return s_; }
    bool finite() const { return q_ != 0; }
    // q^s for finite fields.
    std::uint64_t size() const { return size_; }
    // N for cyclotomic fields.
    long cyclotomic_order() const { return n_; }
    const std::vector<long>& modulus() const { return mod_; }
    std::string describe() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(long v) const;
    FieldElement from_int(const BigInt& v) const;
    FieldElement from_residues(const std::vector<long>& coeffs) const;
    FieldElement from_rationals(const std::vector<BigRational>& coeffs) const;
    FieldElement from_packed(std::uint64_t packed) const;
    // Integer coordinates in the power basis 1, x, ..., x^{s-1}; no reduction by the modulus.
    FieldElement from_coordinates(const std::vector<long>& coords) const;
    // The class of x.
    FieldElement generator_x() const;
    // A generator of the multiplicative group (finite fields only).
    FieldElement multiplicative_generator() const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement inv(const FieldElement& a) const;
    bool eq(const FieldElement& a, const FieldElement& b) const;
    bool is_zero(const FieldElement& a) const;

    void check_owner(const FieldElement& a) const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    Field() = default;
    void build_tables();
    std::vector<long> unpack(std::uint64_t v) const;
    std::uint64_t pack(const std::vector<long>& c) const;
    std::uint64_t slow_mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t slow_pow(std::uint64_t a, std::uint64_t e) const;

    FieldKind kind_ = FieldKind::Rationals;
    long q_ = 0;
    int s_ = 1;
    long n_ = 1;
    std::uint64_t size_ = 0;
    std::vector<long> mod_;
    std::uint64_t gen_ = 0;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

std::uint64_t multiplicative_order(long q, long N);

FieldHandle sufficiently_large_field(long N, long q);

FieldElement primitive_root_of_unity(const FieldHandle& K, long N);

// Integer coefficients, low degree first.
std::vector<long> cyclotomic_polynomial(long N);

// Monic irreducible factors of 1 + x + ... + x^{p-1} over F_q, sorted
// lexicographically with low-degree coefficients compared first.
std::vector<std::vector<long>> factor_cyclotomic_mod_q(long p, long q);

// Smallest monic irreducible polynomial of degree s over F_q in the same order.
std::vector<long> smallest_irreducible(long q, int s);

bool is_irreducible_mod_q(const std::vector<long>& f, long q);

std::string render_polynomial(const std::vector<long>& coeffs);

} // namespace hallinv
