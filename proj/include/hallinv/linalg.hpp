#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hallinv/bigint.hpp"
#include "hallinv/field.hpp"

namespace hallinv {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols = 0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix transpose() const;
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row a += k * row b
    void add_row(std::size_t a, std::size_t b, const BigInt& k);
    void add_col(std::size_t a, std::size_t b, const BigInt& k);
    void negate_row(std::size_t a);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

BigInt determinant(const IntMatrix& a);

struct SmithForm {
    std::vector<BigInt> divisors;   // d_1 | d_2 | ... | d_r, ones retained
    std::size_t rank = 0;
    std::size_t coker_free_rank = 0;
    std::optional<IntMatrix> U;     // U * A * V = diag(divisors)
    std::optional<IntMatrix> V;
    std::optional<IntMatrix> V_inverse;

    // Divisors greater than one.
    std::vector<BigInt> torsion() const;
};

SmithForm smith_normal_form(const IntMatrix& a, bool want_transform = false);

class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(std::size_t rows, std::size_t cols, const FieldElement& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const FieldElement& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElement> data_;
};

std::size_t rank_over_field(FieldMatrix m, const FieldHandle& K);
inline std::size_t corank_over_field(const FieldMatrix& m, const FieldHandle& K)
{
    return m.cols() - rank_over_field(m, K);
}

FieldMatrix to_field(const IntMatrix& a, const FieldHandle& K);

} // namespace hallinv
