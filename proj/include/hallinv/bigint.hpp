#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hallinv {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigInt ipow(const BigInt& base, unsigned long e)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt ipow(long base, unsigned long e) { return ipow(BigInt(base), e); }

inline std::int64_t to_int64(const BigInt& v)
{
    if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
    return v.get_si();
}

// Exact quotient; throws if b does not divide a.
BigInt exact_div(const BigInt& a, const BigInt& b);

BigInt factorial(unsigned long n);

std::uint64_t euler_phi(std::uint64_t n);

// Prime factors of n in increasing order, without multiplicity.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

bool is_prime(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

} // namespace hallinv
