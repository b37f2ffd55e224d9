#include "unicrit/irreducibility.hpp"

#include "fq_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace unicrit {

namespace {

Poly binomial_power_factor(std::size_t m, const Integer& y, unsigned p) {
  // X^(p-1) + X^(p-2) y + ... + y^(p-1) with X = x^m
  Poly out(m * (p - 1) + 1, 0);
  for (unsigned j = 0; j < p; ++j) out[m * j] = ipow(y, p - 1 - j);
  return out;
}

// d^length, or nothing once it passes cap.
std::optional<std::size_t> bounded_degree(unsigned d, std::size_t length, std::size_t cap) {
  std::size_t deg = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (deg > cap / d) return std::nullopt;
    deg *= d;
  }
  if (deg > cap) return std::nullopt;
  return deg;
}

}  // namespace

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

std::optional<BaseFactorization> base_reducibility(const UnicriticalPoly& f) {
  for (unsigned p : prime_divisors(f.d)) {
    auto w = exact_pth_power(-f.c, p);
    if (!w) continue;
    const std::size_t m = f.d / p;
    BaseFactorization out;
    out.kind = BaseFactorization::Kind::PowerBinomial;
    out.power = w;
    out.first = Poly(m + 1, 0);
    out.first[0] = -w->y;
    out.first[m] = 1;
    out.second = binomial_power_factor(m, w->y, p);
    return out;
  }
  if (f.d % 4 == 0 && f.c > 0 && f.c % 4 == 0) {
    const Integer quarter = f.c / 4;
    const Integer z = floor_kth_root(quarter, 4);
    if (ipow(z, 4) == quarter) {
      // X^4 + 4z^4 = (X^2 - 2zX + 2z^2)(X^2 + 2zX + 2z^2)
      const std::size_t m = f.d / 4;
      BaseFactorization out;
      out.kind = BaseFactorization::Kind::SophieGermain;
      out.z = z;
      out.first = Poly(2 * m + 1, 0);
      out.second = Poly(2 * m + 1, 0);
      out.first[0] = out.second[0] = 2 * z * z;
      out.first[m] = -2 * z;
      out.second[m] = 2 * z;
      out.first[2 * m] = out.second[2 * m] = 1;
      return out;
    }
  }
  return std::nullopt;
}

bool base_irreducible(const UnicriticalPoly& f) { return !base_reducibility(f).has_value(); }

const char* to_string(StepRule r) {
  switch (r) {
    case StepRule::Base: return "base";
    case StepRule::Stability: return "stability";
    case StepRule::CriticalValue: return "critical-value";
    case StepRule::ModQ: return "mod-q";
  }
  return "?";
}

const char* to_string(IrreducibilityVerdict::Kind k) {
  switch (k) {
    case IrreducibilityVerdict::Kind::Irreducible: return "Irreducible";
    case IrreducibilityVerdict::Kind::Reducible: return "Reducible";
    case IrreducibilityVerdict::Kind::Unknown: return "Unknown";
  }
  return "?";
}

bool IrreducibilityVerdict::used_modq() const {
  return std::any_of(certificate.begin(), certificate.end(),
                     [](const CertificateStep& s) { return s.rule == StepRule::ModQ; });
}

std::vector<std::uint64_t> default_resolver_primes() {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 3; q <= 200; q += 2)
    if (is_prime(q)) out.push_back(q);
  return out;
}

ChainCertifier::ChainCertifier(const Presentation& pres, ResolverOptions resolver)
    : pres_(pres), resolver_(std::move(resolver)), primes_(prime_divisors(pres.degree())) {
  base_ok_.reserve(pres_.size());
  for (std::size_t i = 0; i < pres_.size(); ++i) base_ok_.push_back(base_irreducible(pres_.generator(i)));
}

std::size_t PowerMemo::Hash::operator()(const Integer& v) const {
  std::size_t h = static_cast<std::size_t>(mpz_size(v.get_mpz_t())) * 0x9e3779b97f4a7c15ULL + (v < 0);
  const std::size_t limbs = mpz_size(v.get_mpz_t());
  for (std::size_t k = 0; k < limbs && k < 4; ++k)
    h = (h ^ mpz_getlimbn(v.get_mpz_t(), k)) * 0x100000001b3ULL;
  return h;
}

const std::optional<PowerWitness>* PowerMemo::find(const Integer& v) const {
  auto it = table_.find(v);
  if (it == table_.end()) return nullptr;
  ++hits_;
  return &it->second;
}

void PowerMemo::store(const Integer& v, std::optional<PowerWitness> w) {
  constexpr std::size_t kMaxEntries = 1 << 20;
  if (table_.size() >= kMaxEntries) table_.clear();
  table_.emplace(v, std::move(w));
}

std::optional<PowerWitness> ChainCertifier::blocking_power(const Integer& v, PowerMemo* memo) const {
  if (memo)
    if (const auto* cached = memo->find(v)) return *cached;
  std::optional<PowerWitness> found;
  for (unsigned p : primes_)
    if ((found = exact_pth_power(v, p))) break;
  if (memo) memo->store(v, found);
  return found;
}

IrreducibilityVerdict ChainCertifier::start(std::size_t i) const {
  IrreducibilityVerdict v;
  if (!base_ok_.at(i)) {
    v.kind = IrreducibilityVerdict::Kind::Reducible;
    v.reducible_witness = base_reducibility(pres_.generator(i));
    return v;
  }
  v.kind = IrreducibilityVerdict::Kind::Irreducible;
  v.certificate.push_back({1, StepRule::Base, {}, 0});
  return v;
}

IrreducibilityVerdict ChainCertifier::extend(const Word& prefix, const IrreducibilityVerdict& prefix_verdict,
                                             std::size_t i, PowerMemo* memo) const {
  if (!prefix_verdict.irreducible()) return prefix_verdict;

  IrreducibilityVerdict v = prefix_verdict;
  const std::size_t length = prefix.length() + 1;
  const bool leading_run = std::all_of(prefix.indices.begin(), prefix.indices.end(),
                                       [i](std::size_t j) { return j == i; });
  if (leading_run) {
    v.certificate.push_back({length, StepRule::Stability, {}, 0});
    return v;
  }

  Integer test = evaluate_word(pres_, prefix, pres_.coeff(i));
  auto power = blocking_power(test, memo);
  if (!power) {
    v.certificate.push_back({length, StepRule::CriticalValue, std::move(test), 0});
    return v;
  }

  v.kind = IrreducibilityVerdict::Kind::Unknown;
  v.blocking_step = prefix.length();
  v.blocking_value = std::move(test);
  v.blocking_witness = power;
  if (resolver_.enabled) try_resolve(compose(prefix, Word{{i}}), v);
  return v;
}

void ChainCertifier::try_resolve(const Word& w, IrreducibilityVerdict& v) const {
  ModqResolution res;
  if (!bounded_degree(pres_.degree(), w.length(), resolver_.degree_cap)) {
    res.skipped_for_degree = true;
    v.resolution = res;
    return;
  }
  for (std::uint64_t q : resolver_.primes) {
    ++res.primes_tried;
    const auto coeffs = expand_word_mod(pres_, w, q, resolver_.degree_cap);
    if (modq_irreducible(coeffs, q)) {
      res.resolved = true;
      res.prime = q;
      v.kind = IrreducibilityVerdict::Kind::Irreducible;
      v.certificate.push_back({w.length(), StepRule::ModQ, {}, q});
      break;
    }
  }
  v.resolution = res;
}

IrreducibilityVerdict ChainCertifier::certify(const Word& w) const {
  validate_word(pres_, w);
  IrreducibilityVerdict v = start(w.indices[0]);
  Word prefix{{w.indices[0]}};
  for (std::size_t k = 1; k < w.length(); ++k) {
    if (!v.irreducible()) break;
    v = extend(prefix, v, w.indices[k]);
    prefix.indices.push_back(w.indices[k]);
  }
  return v;
}

IrreducibilityVerdict chain_certify(const Presentation& pres, const Word& w) {
  return ChainCertifier(pres).certify(w);
}

IrreducibilityVerdict certify(const Presentation& pres, const Word& w, const ResolverOptions& resolver) {
  return ChainCertifier(pres, resolver).certify(w);
}

Poly expand_word_coefficients(const Presentation& pres, const Word& w, std::size_t degree_cap) {
  validate_word(pres, w);
  if (!bounded_degree(pres.degree(), w.length(), degree_cap))
    throw ResourceError("expand_word_coefficients: degree exceeds cap " + std::to_string(degree_cap));
  Poly p{0, 1};
  for (auto it = w.indices.rbegin(); it != w.indices.rend(); ++it) {
    Poly r{1};
    Poly base = p;
    for (unsigned e = pres.degree(); e; e >>= 1) {
      if (e & 1) r = poly_mul(r, base);
      if (e > 1) base = poly_mul(base, base);
    }
    r[0] += pres.coeff(*it);
    p = std::move(r);
  }
  return p;
}

std::vector<std::uint64_t> expand_word_mod(const Presentation& pres, const Word& w, std::uint64_t q,
                                           std::size_t degree_cap) {
  validate_word(pres, w);
  if (q < 2 || q >= (std::uint64_t{1} << 32)) throw std::invalid_argument("expand_word_mod: modulus out of range");
  if (!bounded_degree(pres.degree(), w.length(), degree_cap))
    throw ResourceError("expand_word_mod: degree exceeds cap " + std::to_string(degree_cap));
  const fq::Field F(q);
  fq::Coeffs p{0, 1};
  for (auto it = w.indices.rbegin(); it != w.indices.rend(); ++it) {
    fq::Coeffs r{1};
    fq::Coeffs base = p;
    for (unsigned e = pres.degree(); e; e >>= 1) {
      if (e & 1) r = fq::mul(F, r, base);
      if (e > 1) base = fq::mul(F, base, base);
    }
    if (r.empty()) r.push_back(0);
    r[0] = F.add(r[0], mpz_fdiv_ui(pres.coeff(*it).get_mpz_t(), q));
    p = std::move(r);
  }
  return p;
}

bool modq_irreducible(std::span<const std::uint64_t> coeffs, std::uint64_t q) {
  if (q >= (std::uint64_t{1} << 32) || q % 2 == 0 || !is_prime(q))
    throw std::invalid_argument("modq_irreducible: q must be an odd prime below 2^32");
  fq::Coeffs g;
  g.reserve(coeffs.size());
  for (auto a : coeffs) g.push_back(a % q);
  fq::trim(g);
  if (g.size() < 2) throw std::invalid_argument("modq_irreducible: degree must be at least 1");
  if (g.back() != 1) throw std::invalid_argument("modq_irreducible: polynomial must be monic");

  const std::size_t n = g.size() - 1;
  if (n == 1) return true;

  const fq::Field F(q);
  const fq::Frobenius frob(F, g);
  const auto ells = prime_divisors(n);
  const fq::Coeffs x{0, 1};
  fq::Coeffs h = x;  // x^(q^k) mod g
  for (std::size_t k = 1; k <= n; ++k) {
    h = frob.apply(h);
    if (k == n) return h == x;
    for (unsigned ell : ells) {
      if (k != n / ell) continue;
      fq::Coeffs diff = h;
      diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
      diff[1] = F.sub(diff[1], 1);
      fq::trim(diff);
      if (fq::gcd(F, diff, g).size() != 1) return false;
    }
  }
  return false;
}

}  // namespace unicrit
