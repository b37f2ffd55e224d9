#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace unicrit {

using Integer = mpz_class;

/// An exact representation `epsilon * y^p` of an integer.
///
/// Canonical form: for p = 2 the base is nonnegative and epsilon carries the
/// sign of the represented value (+1 for zero); for odd p epsilon is +1 and
/// the base carries the sign.
struct PowerWitness {
  int epsilon = 1;
  Integer y;
  unsigned p = 2;

  Integer value() const;
};

bool operator==(const PowerWitness& a, const PowerWitness& b);

/// Renders a witness as e.g. `114^2`, `-(2^2)` or `(-2)^3`.
std::string to_string(const PowerWitness& w);

Integer ipow(const Integer& base, unsigned long exponent);

/// Largest r >= 0 with r^k <= n. Exact at every size (integer Newton
/// iteration, no floating point). Throws std::invalid_argument for n < 0 or
/// k == 0.
Integer floor_kth_root(const Integer& n, unsigned long k);

/// Canonical witness for n = epsilon * y^p, or nothing when n admits none.
/// Throws std::invalid_argument when p is not prime.
std::optional<PowerWitness> pth_power_witness(const Integer& n, unsigned p);

/// Witness for n = y^p exactly (epsilon = +1). For p = 2 this requires n >= 0.
std::optional<PowerWitness> exact_pth_power(const Integer& n, unsigned p);

/// Distinct prime divisors of d in ascending order. Throws for d < 2.
std::vector<unsigned> prime_divisors(unsigned long d);

/// Deterministic primality for machine-size integers (trial division).
bool is_prime(unsigned long n);

/// Sign of n as -1, 0 or +1.
inline int sign(const Integer& n) { return sgn(n); }

}  // namespace unicrit
