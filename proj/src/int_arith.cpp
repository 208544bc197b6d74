#include "modsieve/int_arith.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace modsieve {

namespace {

constexpr std::uint32_t kTableLimit = 1u << 16;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTableLimit, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < kTableLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j < kTableLimit; j += i)
        composite[j] = true;
    }
    return out;
  }();
  return primes;
}

constexpr Nat kNatMax = ~Nat{0};

}  // namespace

std::optional<Nat> checked_mul(Nat a, Nat b) noexcept {
  if (a != 0 && b > kNatMax / a) return std::nullopt;
  return a * b;
}

std::optional<Nat> checked_add(Nat a, Nat b) noexcept {
  if (b > kNatMax - a) return std::nullopt;
  return a + b;
}

Nat gcd(Nat a, Nat b) {
  if (a == 0 && b == 0) throw std::invalid_argument("gcd(0, 0) is undefined");
  while (b != 0) {
    Nat r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Nat lcm(Nat a, Nat b) {
  if (a == 0 || b == 0) throw std::invalid_argument("lcm requires positive arguments");
  auto r = checked_mul(a / gcd(a, b), b);
  if (!r) throw std::overflow_error("lcm does not fit in 128 bits");
  return *r;
}

std::vector<Nat> prime_factors(Nat n) {
  if (n == 0) throw std::invalid_argument("prime_factors(0) is undefined");
  std::vector<Nat> out;
  for (std::uint32_t p : small_primes()) {
    if (Nat{p} * p > n) break;
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) {
    // Past the table: n has no prime factor below 2^16.
    for (Nat q = kTableLimit + 1; q * q <= n; q += 2) {
      if (n % q != 0) continue;
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
    if (n > 1) out.push_back(n);
  }
  return out;
}

std::string to_string(Nat n) {
  if (n == 0) return "0";
  std::string s;
  while (n != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(n % 10)));
    n /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::uint64_t to_u64(Nat n) {
  if (n > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("value " + to_string(n) + " does not fit in 64 bits");
  return static_cast<std::uint64_t>(n);
}

}  // namespace modsieve
