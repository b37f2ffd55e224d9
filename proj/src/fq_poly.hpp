#pragma once

// Dense polynomials over the prime field F_q, q < 2^32, constant term first.

#include <cstdint>
#include <span>
#include <vector>

namespace unicrit::fq {

using Coeffs = std::vector<std::uint64_t>;

class Field {
 public:
  explicit Field(std::uint64_t q) : q_(q) {}

  std::uint64_t modulus() const { return q_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % q_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + q_ - b) % q_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % q_; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const { return pow(a, q_ - 2); }

 private:
  std::uint64_t q_;
};

void trim(Coeffs& a);

Coeffs mul(const Field& F, const Coeffs& a, const Coeffs& b);

/// a mod m for monic m.
Coeffs rem_monic(const Field& F, Coeffs a, const Coeffs& m);

Coeffs mulmod(const Field& F, const Coeffs& a, const Coeffs& b, const Coeffs& m);

/// x^e mod m.
Coeffs x_pow_mod(const Field& F, std::uint64_t e, const Coeffs& m);

Coeffs gcd(const Field& F, Coeffs a, Coeffs b);

/// Rows x^(q*j) mod m for j < deg m; applying it is the Frobenius map.
class Frobenius {
 public:
  Frobenius(const Field& F, const Coeffs& m);
  Coeffs apply(const Coeffs& a) const;

 private:
  Field F_;
  std::vector<Coeffs> rows_;
};

}  // namespace unicrit::fq
