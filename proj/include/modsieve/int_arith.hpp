#ifndef MODSIEVE_INT_ARITH_HPP
#define MODSIEVE_INT_ARITH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace modsieve {

/// Exact nonnegative integer used for all dimension arithmetic.
/// 128 bits: lcm(x, y)^2 for dims near 10^6 already needs about 80.
__extension__ typedef unsigned __int128 Nat;

/// A Frobenius-Perron dimension of a simple object.
using Dim = std::uint64_t;

std::optional<Nat> checked_mul(Nat a, Nat b) noexcept;
std::optional<Nat> checked_add(Nat a, Nat b) noexcept;

/// Throws std::invalid_argument when both are zero.
Nat gcd(Nat a, Nat b);

/// Throws std::invalid_argument for a zero argument and std::overflow_error
/// when the result does not fit in 128 bits.
Nat lcm(Nat a, Nat b);

/// Distinct prime divisors of n in increasing order; empty for n == 1.
///
/// Trial division. Divisors are drawn from a precomputed table of the primes
/// below 2^16, which makes the factorization complete and fast for n < 2^32
/// (every dimension the criterion ever sees). Larger n fall back to plain
/// odd trial division and cost O(sqrt(n)).
///
/// Throws std::invalid_argument for n == 0.
std::vector<Nat> prime_factors(Nat n);

std::string to_string(Nat n);

/// Narrowing that throws std::overflow_error when n does not fit.
std::uint64_t to_u64(Nat n);

}  // namespace modsieve

#endif  // MODSIEVE_INT_ARITH_HPP
