#include "hallinv/linalg.hpp"

#include <algorithm>

#include "hallinv/error.hpp"

namespace hallinv {

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols)
{
    if (!rows.empty()) cols = rows[0].size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw InputError("ragged matrix");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(std::size_t a, std::size_t b, const BigInt& k)
{
    for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(b, j) != 0) (*this)(a, j) += k * (*this)(b, j);
}

void IntMatrix::add_col(std::size_t a, std::size_t b, const BigInt& k)
{
    for (std::size_t i = 0; i < rows_; ++i)
        if ((*this)(i, b) != 0) (*this)(i, a) += k * (*this)(i, b);
}

void IntMatrix::negate_row(std::size_t a)
{
    for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows()) throw InputError("matrix dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

BigInt determinant(const IntMatrix& a0)
{
    if (a0.rows() != a0.cols()) throw InputError("determinant of a non-square matrix");
    std::size_t n = a0.rows();
    if (n == 0) return 1;
    IntMatrix a = a0;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0) ++r;
            if (r == n) return 0;
            a.swap_rows(k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::vector<BigInt> SmithForm::torsion() const
{
    std::vector<BigInt> t;
    for (const auto& d : divisors)
        if (d > 1) t.push_back(d);
    return t;
}

namespace {

int cmpabs(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

class SmithRunner {
public:
    SmithRunner(const IntMatrix& a, bool track) : a_(a), track_(track)
    {
        if (track_) {
            u_ = IntMatrix::identity(a.rows());
            v_ = IntMatrix::identity(a.cols());
            vinv_ = IntMatrix::identity(a.cols());
        }
    }

    SmithForm run()
    {
        std::size_t m = a_.rows(), n = a_.cols();
        std::size_t t = 0;
        for (; t < std::min(m, n); ++t) {
            if (!move_min_to(t, t, m, t, n)) break;
            while (true) {
                bool clean = true;
                for (std::size_t i = t + 1; i < m; ++i) {
                    if (a_(i, t) == 0) continue;
                    BigInt q = quotient(a_(i, t), a_(t, t));
                    row_add(i, t, -q);
                    if (a_(i, t) != 0) clean = false;
                }
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (a_(t, j) == 0) continue;
                    BigInt q = quotient(a_(t, j), a_(t, t));
                    col_add(j, t, -q);
                    if (a_(t, j) != 0) clean = false;
                }
                if (!clean) {
                    move_min_in_cross(t);
                    continue;
                }
                std::size_t bad_row = m;
                for (std::size_t i = t + 1; i < m && bad_row == m; ++i)
                    for (std::size_t j = t + 1; j < n; ++j)
                        if (a_(i, j) != 0 && !mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) {
                            bad_row = i;
                            break;
                        }
                if (bad_row == m) break;
                row_add(t, bad_row, 1);
            }
            if (a_(t, t) < 0) {
                a_.negate_row(t);
                if (track_) u_.negate_row(t);
            }
        }
        SmithForm s;
        for (std::size_t i = 0; i < t; ++i) s.divisors.push_back(a_(i, i));
        s.rank = t;
        s.coker_free_rank = n - t;
        if (track_) {
            s.U = std::move(u_);
            s.V = std::move(v_);
            s.V_inverse = std::move(vinv_);
        }
        return s;
    }

private:
    static BigInt quotient(const BigInt& a, const BigInt& b)
    {
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        BigInt r = a - q * b;
        if (2 * abs(r) > abs(b)) q += 1;
        return q;
    }

    void row_add(std::size_t a, std::size_t b, const BigInt& k)
    {
        a_.add_row(a, b, k);
        if (track_) u_.add_row(a, b, k);
    }

    void col_add(std::size_t a, std::size_t b, const BigInt& k)
    {
        a_.add_col(a, b, k);
        if (track_) {
            v_.add_col(a, b, k);
            vinv_.add_row(b, a, -k);
        }
    }

    void row_swap(std::size_t a, std::size_t b)
    {
        a_.swap_rows(a, b);
        if (track_) u_.swap_rows(a, b);
    }

    void col_swap(std::size_t a, std::size_t b)
    {
        a_.swap_cols(a, b);
        if (track_) {
            v_.swap_cols(a, b);
            vinv_.swap_rows(a, b);
        }
    }

    bool move_min_to(std::size_t t, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1)
    {
        std::size_t bi = r1, bj = c1;
        for (std::size_t i = r0; i < r1; ++i)
            for (std::size_t j = c0; j < c1; ++j) {
                if (a_(i, j) == 0) continue;
                if (bi == r1 || cmpabs(a_(i, j), a_(bi, bj)) < 0) {
                    bi = i;
                    bj = j;
                }
            }
        if (bi == r1) return false;
        row_swap(t, bi);
        col_swap(t, bj);
        return true;
    }

    void move_min_in_cross(std::size_t t)
    {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < a_.rows(); ++i)
            if (a_(i, t) != 0 && cmpabs(a_(i, t), a_(bi, bj)) < 0) {
                bi = i;
                bj = t;
            }
        for (std::size_t j = t + 1; j < a_.cols(); ++j)
            if (a_(t, j) != 0 && cmpabs(a_(t, j), a_(bi, bj)) < 0) {
                bi = t;
                bj = j;
            }
        row_swap(t, bi);
        col_swap(t, bj);
    }

    IntMatrix a_;
    bool track_;
    IntMatrix u_, v_, vinv_;
};

} // namespace

SmithForm smith_normal_form(const IntMatrix& a, bool want_transform)
{
    return SmithRunner(a, want_transform).run();
}

std::size_t rank_over_field(FieldMatrix m, const FieldHandle& K)
{
    std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) K->check_owner(m(i, j));
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && K->is_zero(m(p, c))) ++p;
        if (p == rows) continue;
        if (p != rank)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(rank, j));
        FieldElement inv = K->inv(m(rank, c));
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (K->is_zero(m(i, c))) continue;
            FieldElement f = K->mul(m(i, c), inv);
            for (std::size_t j = c + 1; j < cols; ++j)
                if (!K->is_zero(m(rank, j))) m(i, j) = K->sub(m(i, j), K->mul(f, m(rank, j)));
            m(i, c) = K->zero();
        }
        ++rank;
    }
    return rank;
}

FieldMatrix to_field(const IntMatrix& a, const FieldHandle& K)
{
    FieldMatrix m(a.rows(), a.cols(), K->zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = K->from_int(a(i, j));
    return m;
}

} // namespace hallinv
