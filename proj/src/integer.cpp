#include "unicrit/integer.hpp"

#include <stdexcept>

namespace unicrit {

Integer PowerWitness::value() const {
  Integer v = ipow(y, p);
  if (epsilon < 0) v = -v;
  return v;
}

bool operator==(const PowerWitness& a, const PowerWitness& b) {
  return a.epsilon == b.epsilon && a.p == b.p && a.y == b.y;
}

std::string to_string(const PowerWitness& w) {
  std::string base = w.y.get_str();
  if (w.y < 0) base = "(" + base + ")";
  std::string s = base + "^" + std::to_string(w.p);
  if (w.epsilon < 0) s = "-(" + s + ")";
  return s;
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Integer floor_kth_root(const Integer& n, unsigned long k) {
  if (k == 0) throw std::invalid_argument("floor_kth_root: k must be positive");
  if (n < 0) throw std::invalid_argument("floor_kth_root: n must be nonnegative");
  if (n == 0 || k == 1) return n;

  // 2^ceil(bits/k) already exceeds the root, and integer Newton steps from
  // above decrease monotonically until they reach floor(n^(1/k)).
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Integer x;
  mpz_setbit(x.get_mpz_t(), (bits + k - 1) / k);

  const Integer km1 = k - 1;
  Integer next, power;
  for (;;) {
    power = ipow(x, k - 1);
    next = (km1 * x + n / power) / k;
    if (next >= x) break;
    x = next;
  }
  return x;
}

std::optional<PowerWitness> pth_power_witness(const Integer& n, unsigned p) {
  if (!is_prime(p)) throw std::invalid_argument("pth_power_witness: p must be prime");
  if (n == 0) return PowerWitness{1, Integer(0), p};

  const Integer magnitude = abs(n);
  Integer r = floor_kth_root(magnitude, p);
  if (ipow(r, p) != magnitude) return std::nullopt;

  if (p == 2) return PowerWitness{n < 0 ? -1 : 1, r, 2};
  if (n < 0) r = -r;
  return PowerWitness{1, r, p};
}

std::optional<PowerWitness> exact_pth_power(const Integer& n, unsigned p) {
  auto w = pth_power_witness(n, p);
  if (w && w->epsilon < 0) return std::nullopt;
  return w;
}

std::vector<unsigned> prime_divisors(unsigned long d) {
  if (d < 2) throw std::invalid_argument("prime_divisors: d must be at least 2");
  std::vector<unsigned> out;
  for (unsigned long q = 2; q * q <= d; ++q) {
    if (d % q != 0) continue;
    out.push_back(static_cast<unsigned>(q));
    while (d % q == 0) d /= q;
  }
  if (d > 1) out.push_back(static_cast<unsigned>(d));
  return out;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (unsigned long q = 3; q * q <= n; q += 2)
    if (n % q == 0) return false;
  return true;
}

}  // namespace unicrit
