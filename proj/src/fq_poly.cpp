#include "fq_poly.hpp"

#include <utility>

namespace unicrit::fq {

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % q_;
  a %= q_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs mul(const Field& F, const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  const std::uint64_t q = F.modulus();
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % q;
  }
  trim(r);
  return r;
}

Coeffs rem_monic(const Field& F, Coeffs a, const Coeffs& m) {
  const std::uint64_t q = F.modulus();
  const std::size_t n = m.size() - 1;
  trim(a);
  while (a.size() > n) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - n;
    if (lead != 0)
      for (std::size_t j = 0; j < n; ++j) a[shift + j] = (a[shift + j] + (q - lead) * m[j]) % q;
    a.pop_back();
    trim(a);
  }
  return a;
}

Coeffs mulmod(const Field& F, const Coeffs& a, const Coeffs& b, const Coeffs& m) {
  return rem_monic(F, mul(F, a, b), m);
}

Coeffs x_pow_mod(const Field& F, std::uint64_t e, const Coeffs& m) {
  Coeffs result = rem_monic(F, Coeffs{1}, m);
  Coeffs base = rem_monic(F, Coeffs{0, 1}, m);
  while (e) {
    if (e & 1) result = mulmod(F, result, base, m);
    e >>= 1;
    if (e) base = mulmod(F, base, base, m);
  }
  return result;
}

Coeffs gcd(const Field& F, Coeffs a, Coeffs b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b with b made monic
    const std::uint64_t inv = F.inv(b.back());
    for (auto& x : b) x = F.mul(x, inv);
    a = rem_monic(F, std::move(a), b);
    std::swap(a, b);
  }
  if (!a.empty()) {
    const std::uint64_t inv = F.inv(a.back());
    for (auto& x : a) x = F.mul(x, inv);
  }
  return a;
}

Frobenius::Frobenius(const Field& F, const Coeffs& m) : F_(F) {
  const std::size_t n = m.size() - 1;
  const Coeffs xq = x_pow_mod(F_, F_.modulus(), m);
  rows_.reserve(n);
  rows_.push_back(rem_monic(F_, Coeffs{1}, m));
  for (std::size_t j = 1; j < n; ++j) rows_.push_back(mulmod(F_, rows_.back(), xq, m));
}

Coeffs Frobenius::apply(const Coeffs& a) const {
  // (sum a_j x^j)^q = sum a_j x^(qj) over F_q
  const std::uint64_t q = F_.modulus();
  Coeffs r(rows_.size(), 0);
  for (std::size_t j = 0; j < a.size() && j < rows_.size(); ++j) {
    if (a[j] == 0) continue;
    const auto& row = rows_[j];
    for (std::size_t i = 0; i < row.size(); ++i) r[i] = (r[i] + a[j] * row[i]) % q;
  }
  trim(r);
  return r;
}

}  // namespace unicrit::fq
