#include "unicrit/dynamics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace unicrit {

UnicriticalPoly::UnicriticalPoly(unsigned degree, Integer constant) : d(degree), c(std::move(constant)) {
  if (d < 2) throw std::invalid_argument("UnicriticalPoly: degree must be at least 2");
}

Integer evaluate(const UnicriticalPoly& f, const Integer& x) {
  Integer r = ipow(x, f.d);
  r += f.c;
  return r;
}

Integer iterate(const UnicriticalPoly& f, Integer x, std::size_t n, std::size_t max_bits) {
  for (std::size_t i = 0; i < n; ++i) {
    x = evaluate(f, x);
    if (max_bits != 0 && mpz_sizeinbase(x.get_mpz_t(), 2) > max_bits)
      throw ResourceError("iterate: intermediate value exceeds " + std::to_string(max_bits) + " bits");
  }
  return x;
}

Integer escape_threshold(const UnicriticalPoly& f) {
  if (f.c == 0) return Integer(2);
  return abs(f.c) + 2;
}

OrbitReport orbit_classify(const UnicriticalPoly& f, const Integer& alpha) {
  const Integer threshold = escape_threshold(f);
  OrbitReport report;
  std::map<Integer, std::size_t> seen;
  Integer x = alpha;
  // Every value below the threshold lies in a finite interval, so the loop
  // either crosses the threshold or revisits a value.
  for (std::size_t i = 0;; ++i) {
    if (auto it = seen.find(x); it != seen.end()) {
      report.kind = OrbitReport::Kind::Preperiodic;
      report.tail = it->second;
      report.period = i - it->second;
      return report;
    }
    report.prefix.push_back(x);
    if (abs(x) >= threshold) {
      report.kind = OrbitReport::Kind::Escaping;
      report.escape_index = i;
      return report;
    }
    seen.emplace(x, i);
    x = evaluate(f, x);
  }
}

std::vector<Integer> integer_fixed_points(const UnicriticalPoly& f) {
  // A fixed point with |x| >= 2 satisfies |x|^d - |x| <= |c| <= |x|^d + |x|,
  // which pins |x| to {r, r + 1} for r = floor(|c|^(1/d)). The window below
  // is slightly wider than that.
  const Integer r = floor_kth_root(abs(f.c), f.d);
  std::set<Integer> candidates{-1, 0, 1};
  for (Integer m = r > 1 ? Integer(r - 1) : Integer(0); m <= r + 2; ++m) {
    candidates.insert(m);
    candidates.insert(-m);
  }
  std::vector<Integer> out;
  for (const auto& x : candidates)
    if (evaluate(f, x) == x) out.push_back(x);
  return out;
}

std::vector<PowerWitness> powered_fixed_points(const UnicriticalPoly& f) {
  const auto primes = prime_divisors(f.d);
  std::vector<PowerWitness> out;
  for (const auto& v : integer_fixed_points(f)) {
    for (unsigned p : primes) {
      if (auto w = exact_pth_power(v, p)) {
        out.push_back(*w);
        break;
      }
    }
  }
  return out;
}

std::vector<Integer> powered_two_cycles(const UnicriticalPoly& f) {
  if (f.d != 2) throw std::invalid_argument("powered_two_cycles: requires d = 2");
  // (f(f(x)) - x) / (f(x) - x) = x^2 + x + c + 1; its roots are exactly the
  // points of period 2 (a common root with x^2 - x + c would be -1/2).
  const Integer disc = -3 - 4 * f.c;
  std::vector<Integer> out;
  if (disc < 0) return out;
  const Integer s = floor_kth_root(disc, 2);
  if (s * s != disc) return out;
  for (const Integer& x : {Integer((-1 - s) / 2), Integer((-1 + s) / 2)}) {
    if (x < 0 || !exact_pth_power(x, 2)) continue;
    const Integer fx = evaluate(f, x);
    if (fx != x && evaluate(f, fx) == x) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t power_iterate_threshold(unsigned d) { return d == 2 ? 4 : 3; }

bool statement_shape_holds(const UnicriticalPoly& f, const IterateClassification& r) {
  if (r.kind != IterateClassification::Kind::Classified) return false;
  const int expected = f.d == 2 ? 1 : f.d % 2 == 1 ? 2 : f.c == -1 ? 4 : 3;
  if (r.statement != expected) return false;
  if (!r.alpha_orbit || !r.alpha_orbit->preperiodic()) return false;
  if (!r.value_orbit || !r.value_orbit->periodic()) return false;

  const Integer& v = r.value;
  const bool plus_minus = r.anchor == v || r.anchor == -v;
  const std::size_t period = r.value_orbit->period;
  switch (r.statement) {
    case 1: return plus_minus && (period == 1 || period == 2);
    case 2: return r.anchor == v && period == 1;
    case 3: return plus_minus && period == 1;
    case 4: return (v == 0 || v == -1) && period == 2;
    default: return false;
  }
}

IterateClassification classify_pth_power_iterate(const UnicriticalPoly& f, const Integer& alpha,
                                                 std::size_t n) {
  if (f.c == 0) throw std::invalid_argument("classify_pth_power_iterate: c must be nonzero");

  IterateClassification r;
  r.value = iterate(f, alpha, n);
  for (unsigned p : prime_divisors(f.d)) {
    if ((r.witness = pth_power_witness(r.value, p))) break;
  }
  if (!r.witness) {
    r.kind = IterateClassification::Kind::NoPower;
    return r;
  }

  const std::size_t threshold = power_iterate_threshold(f.d);
  if (n < threshold) {
    r.kind = IterateClassification::Kind::BelowThreshold;
    return r;
  }

  r.kind = IterateClassification::Kind::Classified;
  if (f.d == 2) r.statement = 1;
  else if (f.d % 2 == 1) r.statement = 2;
  else r.statement = f.c == -1 ? 4 : 3;
  r.anchor = iterate(f, alpha, n - threshold);
  r.alpha_orbit = orbit_classify(f, alpha);
  r.value_orbit = orbit_classify(f, r.value);
  r.shape_holds = statement_shape_holds(f, r);
  return r;
}

}  // namespace unicrit
