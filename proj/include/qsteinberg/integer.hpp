#ifndef QSTEINBERG_INTEGER_HPP
#define QSTEINBERG_INTEGER_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qsteinberg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Input outside the mathematical domain of an operation.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A request exceeding the configured search bound.
struct ResourceBoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline BigInt factorial(unsigned n)
{
    BigInt r = 1;
    for (unsigned k = 2; k <= n; ++k)
        r *= k;
    return r;
}

inline bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

inline std::vector<unsigned> primes_up_to(unsigned n)
{
    std::vector<unsigned> out;
    for (unsigned p = 2; p <= n; ++p)
        if (is_prime(p))
            out.push_back(p);
    return out;
}

/// p-adic valuation of n! by Legendre's formula.
inline unsigned legendre_nu(unsigned n, unsigned p)
{
    if (!is_prime(p))
        throw DomainError("legendre_nu: p must be prime");
    unsigned nu = 0;
    for (std::uint64_t q = p; q <= n; q *= p)
        nu += static_cast<unsigned>(n / q);
    return nu;
}

/// p-adic valuation of a nonzero integer.
inline unsigned valuation(BigInt x, unsigned p)
{
    if (x == 0)
        throw DomainError("valuation of zero");
    if (x < 0)
        x = -x;
    unsigned v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

inline BigInt ipow(BigInt base, unsigned e)
{
    BigInt r = 1;
    while (e) {
        if (e & 1u)
            r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline std::string to_string(const BigInt& x)
{
    return x.str();
}

} // namespace qsteinberg

#endif // QSTEINBERG_INTEGER_HPP
