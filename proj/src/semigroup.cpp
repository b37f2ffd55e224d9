#include "unicrit/semigroup.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

namespace unicrit {

WordEnumerator::WordEnumerator(std::size_t alphabet, std::size_t length)
    : alphabet_(alphabet), word_{std::vector<std::size_t>(length, 0)} {
  if (length == 0) throw std::invalid_argument("WordEnumerator: length must be positive");
  done_ = alphabet == 0;
}

void WordEnumerator::advance() {
  auto& idx = word_.indices;
  for (std::size_t k = idx.size(); k-- > 0;) {
    if (++idx[k] < alphabet_) return;
    idx[k] = 0;
  }
  done_ = true;
}

std::vector<Word> enumerate_words(const Presentation& pres, std::size_t n) {
  std::vector<Word> out;
  for (WordEnumerator e(pres.size(), n); !e.done(); e.advance()) out.push_back(e.current());
  return out;
}

std::optional<std::uint64_t> word_count(std::size_t s, std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (s != 0 && total > UINT64_MAX / s) return std::nullopt;
    total *= s;
  }
  return total;
}

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, unsigned e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t random_prime(std::mt19937_64& rng) {
  const std::uint64_t start = (rng() >> 2) | (std::uint64_t{1} << 61);
  mpz_class p(std::to_string(start), 10);
  mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  return std::stoull(p.get_str());
}

}  // namespace

FreenessReport freeness_spot_check(const Presentation& pres, std::size_t max_len, std::size_t trials,
                                   std::uint64_t seed) {
  FreenessReport report;
  report.max_len = max_len;
  report.trials = trials;
  constexpr std::size_t kPoints = 4;

  std::mt19937_64 rng(seed);
  struct Trial {
    std::uint64_t modulus;
    std::vector<std::uint64_t> points;
    std::vector<std::uint64_t> coeffs;
  };
  std::vector<Trial> setups;
  for (std::size_t t = 0; t < trials; ++t) {
    Trial tr;
    tr.modulus = random_prime(rng);
    for (std::size_t k = 0; k < kPoints; ++k) tr.points.push_back(rng() % tr.modulus);
    for (const auto& c : pres.coeffs()) tr.coeffs.push_back(mpz_fdiv_ui(c.get_mpz_t(), tr.modulus));
    report.moduli.push_back(tr.modulus);
    setups.push_back(std::move(tr));
  }

  const unsigned d = pres.degree();
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::pair<std::vector<std::uint64_t>, Word>> prints;
    for (WordEnumerator e(pres.size(), len); !e.done(); e.advance()) {
      const Word& w = e.current();
      std::vector<std::uint64_t> fp;
      for (const auto& tr : setups) {
        for (auto x : tr.points) {
          for (auto it = w.indices.rbegin(); it != w.indices.rend(); ++it)
            x = (powmod64(x, d, tr.modulus) + tr.coeffs[*it]) % tr.modulus;
          fp.push_back(x);
        }
      }
      prints.emplace_back(std::move(fp), w);
    }
    const std::uint64_t n = prints.size();
    report.words_checked += n;
    report.pairs_compared += n * (n - 1) / 2;
    std::sort(prints.begin(), prints.end());
    for (std::size_t k = 1; k < prints.size(); ++k)
      if (prints[k].first == prints[k - 1].first) report.collisions.emplace_back(prints[k - 1].second, prints[k].second);
  }
  report.passed = report.collisions.empty();
  return report;
}

namespace {

std::vector<Integer> exceptional_forms(unsigned d, const Integer& y, unsigned p) {
  const Integer yp = ipow(y, p);
  const Integer ypd = ipow(y, static_cast<unsigned long>(p) * d);
  if (d % 2 == 1) return {yp - ypd, yp};
  return {yp - ypd, yp, Integer(-yp), Integer(-yp - ypd)};
}

}  // namespace

std::optional<ExceptionalHit> detect_exceptional(const Presentation& pres) {
  const unsigned d = pres.degree();
  const bool even_case = d >= 4 && d % 2 == 0;
  const bool odd_case = d >= 5 && d % 2 == 1;
  if (!even_case && !odd_case) return std::nullopt;

  // (p, |y|, y < 0, y)
  std::set<std::tuple<unsigned, Integer, bool, Integer>> candidates;
  auto add_root = [&](const Integer& t, unsigned p) {
    if (auto w = exact_pth_power(t, p)) candidates.emplace(p, abs(w->y), w->y < 0, w->y);
  };
  for (unsigned p : prime_divisors(d)) {
    for (const auto& c : pres.coeffs()) {
      // c in {y^p, -y^p}, or y^p / -y^p is a fixed point of x^d + c
      add_root(c, p);
      add_root(-c, p);
      for (const auto& u : integer_fixed_points(UnicriticalPoly(d, c))) {
        add_root(u, p);
        add_root(-u, p);
      }
    }
  }

  for (const auto& [p, magnitude, negative, y] : candidates) {
    const auto forms = exceptional_forms(d, y, p);
    const std::set<Integer> form_set(forms.begin(), forms.end());
    const bool covered = std::all_of(pres.coeffs().begin(), pres.coeffs().end(),
                                     [&](const Integer& c) { return form_set.count(c) > 0; });
    if (!covered) continue;
    ExceptionalHit hit;
    hit.y = y;
    hit.p = p;
    hit.statement = even_case ? 2 : 3;
    hit.equality = form_set.size() == pres.size();
    return hit;
  }
  return std::nullopt;
}

const char* to_string(FamilyRule r) {
  switch (r) {
    case FamilyRule::Stability: return "Stability";
    case FamilyRule::Sandwich: return "Sandwich";
    case FamilyRule::DoubleCube: return "DoubleCube";
    case FamilyRule::PriorWorkD3: return "PriorWorkD3";
  }
  return "?";
}

const char* outcome_name(const ClassificationOutcome& o) {
  struct Visitor {
    const char* operator()(const NoIrreducibleGenerator&) const { return "NoIrreducibleGenerator"; }
    const char* operator()(const CertifiedFamily&) const { return "CertifiedFamily"; }
    const char* operator()(const ExceptionalFamily&) const { return "Exceptional"; }
    const char* operator()(const PriorWorkResolvedD2&) const { return "PriorWorkResolvedD2"; }
  };
  return std::visit(Visitor{}, o);
}

namespace {

// Smallest |c| first, positive before negative on ties.
std::vector<std::size_t> tie_break_order(const Presentation& pres, std::vector<std::size_t> idx) {
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const Integer &ca = pres.coeff(a), &cb = pres.coeff(b);
    const int by_abs = cmp(abs(ca), abs(cb));
    if (by_abs != 0) return by_abs < 0;
    return ca > cb;
  });
  return idx;
}

bool has_powered_points(const UnicriticalPoly& f) {
  if (!powered_fixed_points(f).empty()) return true;
  return f.d == 2 && !powered_two_cycles(f).empty();
}

CertifiedFamily certified(const Presentation& pres, std::size_t f1, std::optional<std::size_t> f2, Word F,
                          FamilyRule rule) {
  ResolverOptions resolver;
  resolver.enabled = true;
  CertifiedFamily out{f1, f2, std::move(F), rule, {}};
  out.certificate = certify(pres, out.F, resolver);
  // f1 o f2 o f1 for d = 3 rests on an external result; its prefix f1 o f2
  // always blocks the chain (f1(c2) = c2 is a cube) and need not split mod q.
  if (rule != FamilyRule::PriorWorkD3 && !out.certificate.irreducible())
    throw std::logic_error("classify_semigroup: constructed family " + to_string(out.F) +
                           " failed its irreducibility certificate");
  return out;
}

}  // namespace

ClassificationOutcome classify_semigroup(const Presentation& pres) {
  const unsigned d = pres.degree();
  std::vector<std::size_t> irreducible;
  for (std::size_t i = 0; i < pres.size(); ++i)
    if (base_irreducible(pres.generator(i))) irreducible.push_back(i);
  if (irreducible.empty()) return NoIrreducibleGenerator{};
  irreducible = tie_break_order(pres, std::move(irreducible));

  const std::size_t stable_len = power_iterate_threshold(d);
  const std::size_t f1 = irreducible.front();

  // A single generator: every iterate is irreducible.
  if (pres.size() == 1) return certified(pres, f1, std::nullopt, power_word(f1, stable_len), FamilyRule::Stability);

  if (d == 2) {
    for (std::size_t i : irreducible)
      if (!has_powered_points(pres.generator(i)))
        return certified(pres, i, std::nullopt, power_word(i, stable_len), FamilyRule::Stability);
    return PriorWorkResolvedD2{f1};
  }

  const UnicriticalPoly g1 = pres.generator(f1);
  const auto powered = powered_fixed_points(g1);
  if (powered.empty()) return certified(pres, f1, std::nullopt, power_word(f1, stable_len), FamilyRule::Stability);

  // Integer fixed points are unique for d >= 3, so all witnesses share one value.
  const Integer v = powered.front().value();
  std::set<Integer> forbidden{v, pres.coeff(f1)};
  if (d % 2 == 0) {
    forbidden.insert(-v);
    forbidden.insert(-v - ipow(v, d));
  }

  std::vector<std::size_t> others;
  for (std::size_t j = 0; j < pres.size(); ++j)
    if (!forbidden.count(pres.coeff(j))) others.push_back(j);
  if (!others.empty()) {
    const std::size_t f2 = tie_break_order(pres, std::move(others)).front();
    const Integer& c2 = pres.coeff(f2);
    const bool sandwich = c2 == 0 || (d % 2 == 0 && c2 == -1);
    if (sandwich) return certified(pres, f1, f2, Word{{f1, f1, f1, f2, f1}}, FamilyRule::Sandwich);
    return certified(pres, f1, f2, Word{{f1, f1, f1, f2, f2, f2}}, FamilyRule::DoubleCube);
  }

  if (d == 3) {
    const auto f2 = pres.index_of(v);
    if (!f2) throw std::logic_error("classify_semigroup: no second generator for the d = 3 family");
    return certified(pres, f1, *f2, Word{{f1, *f2, f1}}, FamilyRule::PriorWorkD3);
  }

  const auto hit = detect_exceptional(pres);
  if (!hit) throw std::logic_error("classify_semigroup: exceptional branch reached without a detected family");
  return ExceptionalFamily{hit->y, hit->p, hit->statement, hit->equality, f1};
}

mpq_class density_lower_bound(const Presentation& pres, const ClassificationOutcome& outcome) {
  const auto* fam = std::get_if<CertifiedFamily>(&outcome);
  if (!fam) throw std::invalid_argument("density_lower_bound: outcome is not a certified family");
  mpq_class r(Integer(1), ipow(Integer(static_cast<unsigned long>(pres.size())), fam->F.length()));
  r.canonicalize();
  return r;
}

}  // namespace unicrit
