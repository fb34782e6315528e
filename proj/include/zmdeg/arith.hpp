#pragma once

// Number-theoretic primitives over arbitrary-precision naturals: divisor
// lists, tau/sigma, modular powers, geometric sums taken modulo an integer,
// and the multiplicative function g(n) = n * sum_{d1|n, d2|n} 1/gcd(d1, d2).

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace zmdeg {

using Natural = boost::multiprecision::cpp_int;

namespace detail {

inline void require_positive(const Natural& value, const char* what) {
  if (value <= 0) {
    throw std::invalid_argument(std::string(what) + " must be a positive integer, got " + value.str());
  }
}

inline void require_non_negative(const Natural& value, const char* what) {
  if (value < 0) {
    throw std::invalid_argument(std::string(what) + " must be non-negative, got " + value.str());
  }
}

}  // namespace detail

inline Natural gcd(const Natural& a, const Natural& b) {
  // boost's gcd already satisfies gcd(x, 0) == x.
  return boost::multiprecision::gcd(a, b);
}

inline Natural lcm(const Natural& a, const Natural& b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

inline bool divides(const Natural& d, const Natural& n) {
  return d != 0 && n % d == 0;
}

/// One prime power p^e in a factorization.
struct PrimePower {
  Natural prime;
  unsigned exponent = 0;
};

/// Trial-division factorization, primes ascending. factorize(1) is empty.
inline std::vector<PrimePower> factorize(Natural n) {
  detail::require_positive(n, "factorize: n");
  std::vector<PrimePower> factors;
  auto strip = [&](const Natural& p) {
    if (n % p != 0) return;
    PrimePower pp{p, 0};
    while (n % p == 0) {
      n /= p;
      ++pp.exponent;
    }
    factors.push_back(std::move(pp));
  };
  strip(2);
  for (Natural d = 3; d * d <= n; d += 2) strip(d);
  if (n > 1) factors.push_back({n, 1});
  return factors;
}

inline bool is_prime(const Natural& p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (Natural d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

/// Positive divisors of n in strictly ascending order.
inline std::vector<Natural> divisors(const Natural& n) {
  detail::require_positive(n, "divisors: n");
  std::vector<Natural> result{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = result.size();
    Natural power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < base; ++i) result.push_back(result[i] * power);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

inline Natural tau(const Natural& n) {
  detail::require_positive(n, "tau: n");
  Natural count = 1;
  for (const auto& pp : factorize(n)) count *= pp.exponent + 1;
  return count;
}

inline Natural sigma(const Natural& n) {
  detail::require_positive(n, "sigma: n");
  Natural total = 1;
  for (const auto& [p, e] : factorize(n)) {
    Natural term = 1;
    Natural power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= p;
      term += power;
    }
    total *= term;
  }
  return total;
}

/// base^exp mod modulus, result in [0, modulus).
inline Natural pow_mod(const Natural& base, const Natural& exp, const Natural& modulus) {
  detail::require_positive(modulus, "pow_mod: modulus");
  detail::require_non_negative(base, "pow_mod: base");
  detail::require_non_negative(exp, "pow_mod: exp");
  if (modulus == 1) return 0;
  return boost::multiprecision::powm(base % modulus, exp, modulus);
}

/// Residue of the integer (r^n - 1) / (r^n1 - 1) modulo `modulus`, evaluated
/// as sum_{i < n/n1} (r^n1)^i so r^n is never formed. When r == 1 the
/// quotient is read as its limit n/n1 (the sum still has n/n1 unit terms).
inline Natural geom_sum_mod(const Natural& r, const Natural& n1, const Natural& n, const Natural& modulus) {
  detail::require_non_negative(r, "geom_sum_mod: r");
  detail::require_positive(n1, "geom_sum_mod: n1");
  detail::require_positive(n, "geom_sum_mod: n");
  detail::require_positive(modulus, "geom_sum_mod: modulus");
  if (n % n1 != 0) {
    throw std::invalid_argument("geom_sum_mod: n1 = " + n1.str() + " does not divide n = " + n.str());
  }
  if (modulus == 1) return 0;

  // Binary expansion of the term count: walking its bits high to low keeps
  // (sum, x^count) for the prefix read so far.
  const Natural ratio = pow_mod(r, n1, modulus);
  const Natural count = n / n1;
  Natural sum = 0;
  Natural power = 1;
  for (auto bit = static_cast<long>(boost::multiprecision::msb(count)); bit >= 0; --bit) {
    sum = (sum + sum * power) % modulus;
    power = power * power % modulus;
    if (boost::multiprecision::bit_test(count, static_cast<unsigned>(bit))) {
      sum = (sum * ratio + 1) % modulus;
      power = power * ratio % modulus;
    }
  }
  return sum;
}

/// gcd(m1, (r^n - 1) / (r^n1 - 1)); the conjugacy-class size of H(m1, n1, 0).
inline Natural quotient_gcd(const Natural& m1, const Natural& r, const Natural& n1, const Natural& n) {
  detail::require_positive(m1, "quotient_gcd: m1");
  return gcd(m1, geom_sum_mod(r, n1, n, m1));
}

/// g(n) by multiplicativity. Each prime-power factor is the integer sum
/// sum_{0 <= i, j <= e} p^(e - min(i, j)).
inline Natural g_function(const Natural& n) {
  detail::require_positive(n, "g_function: n");
  Natural result = 1;
  for (const auto& [p, e] : factorize(n)) {
    std::vector<Natural> powers(e + 1, Natural(1));
    for (unsigned k = 1; k <= e; ++k) powers[k] = powers[k - 1] * p;
    Natural local = 0;
    for (unsigned i = 0; i <= e; ++i) {
      for (unsigned j = 0; j <= e; ++j) local += powers[e - std::min(i, j)];
    }
    result *= local;
  }
  return result;
}

/// Closed form g(p^a) = ((2a+1) p^(a+2) - (2a+3) p^(a+1) + p + 1) / (p-1)^2.
inline Natural g_prime_power(const Natural& p, const Natural& alpha) {
  if (!is_prime(p)) {
    throw std::invalid_argument("g_prime_power: p = " + p.str() + " is not prime");
  }
  detail::require_positive(alpha, "g_prime_power: alpha");
  const auto a = alpha.convert_to<unsigned>();
  const Natural p_a1 = boost::multiprecision::pow(p, a + 1);
  const Natural numerator = (2 * alpha + 1) * p_a1 * p - (2 * alpha + 3) * p_a1 + p + 1;
  const Natural denominator = (p - 1) * (p - 1);
  if (numerator % denominator != 0) {
    throw std::logic_error("g_prime_power: closed form not integral for p = " + p.str());
  }
  return numerator / denominator;
}

}  // namespace zmdeg
