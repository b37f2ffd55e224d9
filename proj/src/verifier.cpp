#include "unicrit/verifier.hpp"

#include "parallel.hpp"
#include "unicrit/json.hpp"
#include "unicrit/presentation.hpp"
#include "unicrit/semigroup.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace unicrit {

namespace {

struct Partial {
  std::uint64_t cases = 0;
  std::vector<Violation> violations;
  std::map<std::string, std::uint64_t> counters;
  json notes = json::array();
};

// Runs fn(i, partial) for i < n and merges the partials in index order.
template <typename Fn>
Partial run_tasks(std::size_t n, unsigned workers, Fn&& fn) {
  std::vector<Partial> parts(n);
  detail::parallel_for(n, workers, [&](std::size_t i) { fn(i, parts[i]); });
  Partial out;
  for (auto& p : parts) {
    out.cases += p.cases;
    for (auto& v : p.violations) out.violations.push_back(std::move(v));
    for (const auto& [k, v] : p.counters) out.counters[k] += v;
    for (auto& note : p.notes) out.notes.push_back(std::move(note));
  }
  return out;
}

// ---- parameters ------------------------------------------------------------

std::int64_t get_int(const json& params, const char* key, std::int64_t lo, std::int64_t hi) {
  const json& v = params.at(key);
  if (!v.is_number_integer())
    throw std::invalid_argument(std::string("parameter '") + key + "' must be an integer");
  const auto x = v.get<std::int64_t>();
  if (x < lo || x > hi)
    throw std::invalid_argument(std::string("parameter '") + key + "' must lie in [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
  return x;
}

std::vector<std::int64_t> get_int_list(const json& params, const char* key, std::int64_t lo, std::int64_t hi) {
  const json& v = params.at(key);
  std::vector<std::int64_t> out;
  auto take = [&](const json& e) {
    if (!e.is_number_integer())
      throw std::invalid_argument(std::string("parameter '") + key + "' must hold integers");
    const auto x = e.get<std::int64_t>();
    if (x < lo || x > hi)
      throw std::invalid_argument(std::string("parameter '") + key + "' entries must lie in [" +
                                  std::to_string(lo) + ", " + std::to_string(hi) + "]");
    out.push_back(x);
  };
  if (v.is_array()) {
    for (const auto& e : v) take(e);
  } else {
    take(v);
  }
  if (out.empty()) throw std::invalid_argument(std::string("parameter '") + key + "' must not be empty");
  return out;
}

std::vector<unsigned> get_degrees(const json& params, const char* key) {
  std::vector<unsigned> out;
  for (auto d : get_int_list(params, key, 2, 64)) out.push_back(static_cast<unsigned>(d));
  return out;
}

std::vector<Integer> get_coeffs(const json& params, const char* key) {
  const json& v = params.at(key);
  if (v.is_string()) return parse_integer_list(v.get<std::string>());
  if (!v.is_array()) throw std::invalid_argument(std::string("parameter '") + key + "' must be a list");
  std::vector<Integer> out;
  for (const auto& e : v) {
    if (e.is_string()) {
      auto parsed = parse_integer_list(e.get<std::string>());
      if (parsed.size() != 1) throw std::invalid_argument(std::string("bad entry in '") + key + "'");
      out.push_back(parsed[0]);
    } else {
      out.push_back(e.get<Integer>());
    }
  }
  return out;
}

// Nonzero c with |c| <= c_max, ascending.
std::vector<std::int64_t> nonzero_range(std::int64_t c_max, std::int64_t min_abs = 1) {
  std::vector<std::int64_t> out;
  for (std::int64_t c = -c_max; c <= c_max; ++c)
    if (c >= min_abs || c <= -min_abs) out.push_back(c);
  return out;
}

std::uint64_t alpha_count(std::int64_t c) { return 2 * (2 * static_cast<std::uint64_t>(c < 0 ? -c : c) + 10) + 1; }

void check_budget(std::uint64_t estimate, const SuiteOptions& options, const std::string& suite) {
  if (estimate > options.budget)
    throw ResourceError("suite " + suite + ": about " + std::to_string(estimate) + " cases exceed the budget of " +
                        std::to_string(options.budget));
}

Integer abs_int(const Integer& x) { return abs(x); }

// ---- suites ----------------------------------------------------------------

void consecutive_powers(const json& p, const SuiteOptions& o, SuiteReport& rep) {
  const auto x_max = get_int(p, "x_max", 2, 100'000'000);
  const auto d_max = get_int(p, "d_max", 2, 4096);
  check_budget(static_cast<std::uint64_t>(x_max - 1) * static_cast<std::uint64_t>(d_max - 1), o, rep.suite);
  auto part = run_tasks(static_cast<std::size_t>(d_max - 1), o.workers, [&](std::size_t i, Partial& out) {
    const unsigned d = static_cast<unsigned>(i + 2);
    for (std::int64_t x = 2; x <= x_max; ++x) {
      ++out.cases;
      const Integer X = x;
      const Integer lhs = ipow(X, d) - ipow(X - 1, d);
      const Integer rhs = ipow(X, d - 1);
      if (!(lhs > rhs))
        out.violations.push_back({{{"x", x}, {"d", d}}, "x^d - (x-1)^d = " + lhs.get_str() + " <= x^(d-1)"});
    }
  });
  rep.cases = part.cases;
  rep.violations = std::move(part.violations);
}

void preimage_bound(const json& p, const SuiteOptions& o, SuiteReport& rep) {
  const auto c_max = get_int(p, "c_max", 1, 1'000'000);
  const auto degrees = get_degrees(p, "d");
  const auto cs = nonzero_range(c_max);
  std::uint64_t estimate = 0;
  for (unsigned d : degrees)
    for (auto c : cs) estimate += alpha_count(c) * prime_divisors(d).size();
  check_budget(estimate, o, rep.suite);

  auto part = run_tasks(cs.size() * degrees.size(), o.workers, [&](std::size_t t, Partial& out) {
    const unsigned d = degrees[t / cs.size()];
    const Integer c = cs[t % cs.size()];
    const Integer abs_c = abs_int(c);
    const auto primes = prime_divisors(d);
    const Integer bound = 2 * abs_c + 10;
    for (Integer alpha = -bound; alpha <= bound; ++alpha) {
      const Integer v = ipow(alpha, d) + c;
      for (unsigned q : primes) {
        ++out.cases;
        const auto w = pth_power_witness(v, q);
        if (!w) continue;
        ++out.counters["power_hits"];
        const bool ok = d > 2 ? alpha * alpha <= abs_c : abs_int(alpha) <= abs_c;
        if (!ok)
          out.violations.push_back({{{"d", d}, {"c", c}, {"alpha", alpha}, {"p", q}},
                                    "alpha^d + c = " + to_string(*w) + " with |alpha| above the bound"});
      }
    }
  });
  rep.cases = part.cases;
  rep.violations = std::move(part.violations);
  rep.stats["power_hits"] = part.counters["power_hits"];
}

void escape_lemma(const json& p, const SuiteOptions& o, SuiteReport& rep) {
  const auto c_max = get_int(p, "c_max", 1, 100'000);
  const auto degrees = get_degrees(p, "d");
  const auto n_max = static_cast<std::size_t>(get_int(p, "n_max", 1, 64));
  const auto cs = nonzero_range(c_max, 2);
  std::uint64_t estimate = 0;
  for (auto c : cs) estimate += alpha_count(c) * n_max * degrees.size();
  check_budget(estimate, o, rep.suite);

  auto part = run_tasks(cs.size() * degrees.size(), o.workers, [&](std::size_t t, Partial& out) {
    const unsigned d = degrees[t / cs.size()];
    const Integer c = cs[t % cs.size()];
    const Integer abs_c = abs_int(c);
    if (d == 2 && abs_c < 3) return;
    const UnicriticalPoly f(d, c);
    const Integer threshold = escape_threshold(f);
    const Integer c_pow = ipow(abs_c, d - 1);
    const Integer bound = 2 * abs_c + 10;
    // Whether |v| satisfies the conclusion required at step n.
    auto holds = [&](const Integer& v, std::size_t n) {
      const Integer a = abs_int(v);
      if (d > 2) return ipow(a, d) > c_pow && a * a > abs_c;
      return n < 2 || a > abs_c;
    };
    for (Integer beta = -bound; beta <= bound; ++beta) {
      const Integer a = abs_int(beta);
      const bool above = a >= 1 && ipow(a - 1, d) >= abs_c;  // |beta| >= rho + 1
      const bool below = ipow(a + 1, d) <= abs_c;           // |beta| <= rho - 1
      if (!above && !below) continue;
      ++out.counters["betas"];
      Integer v = beta;
      for (std::size_t n = 1; n <= n_max; ++n) {
        v = evaluate(f, v);
        ++out.cases;
        if (!holds(v, n)) {
          out.violations.push_back({{{"d", d}, {"c", c}, {"beta", beta}, {"n", n}},
                                    "|f^n(beta)| = " + abs_int(v).get_str() + " does not exceed the bound"});
          continue;
        }
        // Past the threshold |f^n| only grows, so every later step holds too.
        if (abs_int(v) >= threshold && (d > 2 || n >= 2)) {
          out.cases += n_max - n;
          break;
        }
      }
    }
  });
  rep.cases = part.cases;
  rep.violations = std::move(part.violations);
  rep.stats["betas"] = part.counters["betas"];
}

void classification(const json& p, const SuiteOptions& o, SuiteReport& rep) {
  const auto c_max = get_int(p, "c_max", 1, 100'000);
  const auto degrees = get_degrees(p, "d");
  const auto cs = nonzero_range(c_max);
  std::uint64_t estimate = 0;
  for (auto c : cs) estimate += alpha_count(c) * degrees.size();
  check_budget(estimate, o, rep.suite);
  const ShapePredicate shape = o.shape ? o.shape : ShapePredicate(statement_shape_holds);

  auto part = run_tasks(cs.size() * degrees.size(), o.workers, [&](std::size_t t, Partial& out) {
    const unsigned d = degrees[t / cs.size()];
    const Integer c = cs[t % cs.size()];
    const UnicriticalPoly f(d, c);
    const std::size_t N = power_iterate_threshold(d);
    const auto primes = prime_divisors(d);
    const Integer bound = 2 * abs_int(c) + 10;
    for (Integer alpha = -bound; alpha <= bound; ++alpha) {
      ++out.cases;
      json input = {{"d", d}, {"c", c}, {"alpha", alpha}, {"n", N}};
      // Independent power test on f^N(alpha).
      const Integer v = iterate(f, alpha, N);
      bool is_power = false;
      for (unsigned q : primes) is_power = is_power || pth_power_witness(v, q).has_value();

      const IterateClassification r = classify_pth_power_iterate(f, alpha, N);
      const bool classified = r.kind == IterateClassification::Kind::Classified;
      if (classified != is_power) {
        out.violations.push_back({input, is_power ? "power iterate not classified" : "classified a non-power"});
        continue;
      }
      if (!classified) continue;
      ++out.counters["hits"];
      ++out.counters["statement_" + std::to_string(r.statement)];
      if (!orbit_classify(f, alpha).preperiodic())
        out.violations.push_back({input, "alpha is not preperiodic"});
      if (!orbit_classify(f, v).periodic()) out.violations.push_back({input, "f^N(alpha) is not periodic"});
      if (!shape(f, r))
        out.violations.push_back({input, "statement " + std::to_string(r.statement) + " shape fails for " +
                                             to_string(*r.witness)});
    }
  });
  rep.cases = part.cases;
  rep.violations = std::move(part.violations);
  rep.stats = json::object();
  for (const auto& [k, v] : part.counters) rep.stats[k] = v;
  if (!rep.stats.contains("hits")) rep.stats["hits"] = 0;
}

void sharpness(const json& p, const SuiteOptions& o, SuiteReport& rep) {
  const auto r_max = get_int(p, "r_max", 2, 10'000);
  const auto d_max = get_int(p, "d_max", 2, 64);
  check_budget(static_cast<std::uint64_t>(r_max - 1) * static_cast<std::uint64_t>(d_max - 1) + 1, o, rep.suite);

  auto part = run_tasks(static_cast<std::size_t>(d_max - 1), o.workers, [&](std::size_t i, Partial& out) {
    const unsigned d = static_cast<unsigned>(i + 2);
    const unsigned q = prime_divisors(d).front();
    for (std::int64_t r = 2; r <= r_max; ++r) {
      ++out.cases;
      const Integer rd = ipow(Integer(r), d);
      const UnicriticalPoly f(d, -rd);
      json input = {{"d", d}, {"r", r}};
      const Integer v = iterate(f, Integer(r), 2);
      if (v != -rd) out.violations.push_back({input, "f^2(r) = " + v.get_str() + " differs from -r^d"});
      if (!pth_power_witness(v, q)) out.violations.push_back({input, "f^2(r) is not a powered value"});
      if (orbit_classify(f, Integer(r)).preperiodic()) out.violations.push_back({input, "r is preperiodic"});
    }
  });

  // x^2 - 460 at 22.
  ++part.cases;
  const UnicriticalPoly g(2, -460);
  const OrbitReport orbit = orbit_classify(g, 22);
  const Integer v = iterate(g, 22, 3);
  const auto w = exact_pth_power(v, 2);
  json input = {{"d", 2}, {"c", -460}, {"alpha", 22}, {"n", 3}};
  if (v != 12996) part.violations.push_back({input, "f^3(22) = " + v.get_str() + ", expected 12996"});
  if (!w || w->y != 114) part.violations.push_back({input, "f^3(22) is not 114^2"});
  if (orbit.preperiodic()) part.violations.push_back({input, "22 is preperiodic"});
  rep.stats["x^2-460"] = {{"alpha", 22},
                          {"n", 3},
                          {"value", v},
                          {"witness", w ? to_string(*w) : std::string("none")},
                          {"orbit", orbit.preperiodic() ? "Preperiodic" : "Escaping"}};

  rep.cases = part.cases;
  rep.violations = std::move(part.violations);
}

void mod8(const json& p, const SuiteOptions& o, SuiteReport& rep) {
  const auto cs = get_int_list(p, "c", -1'000'000, 1'000'000);
  check_budget(128 * cs.size(), o, rep.suite);
  auto md = [](std::int64_t x) { return ((x % 8) + 8) % 8; };
  std::uint64_t checks = 0;
  for (std::int64_t alpha = 0; alpha < 8; ++alpha)
    for (std::int64_t y = 0; y < 8; ++y)
      for (int eps : {1, -1}) {
        ++rep.cases;
        for (auto c : cs) {
          ++checks;
          std::int64_t v = alpha;
          for (int k = 0; k < 4; ++k) v = md(v * v + c);
          if (v == md(eps * y * y))
            rep.violations.push_back({{{"c", c}, {"alpha", alpha}, {"y", y}, {"epsilon", eps}},
                                      "f^4(alpha) = epsilon y^2 mod 8"});
        }
      }
  rep.stats["checks"] = checks;
}

void orbit_zero(const json& p, const SuiteOptions& o, SuiteReport& rep) {
  const auto c_max = get_int(p, "c_max", 2, 1'000'000);
  const auto d_max = get_int(p, "d_max", 2, 64);
  const auto m_max = static_cast<std::size_t>(get_int(p, "m_max", 1, 64));
  const auto cs = nonzero_range(c_max, 2);
  check_budget(cs.size() * static_cast<std::uint64_t>(d_max - 1) * m_max, o, rep.suite);

  const std::size_t nd = static_cast<std::size_t>(d_max - 1);
  auto part = run_tasks(cs.size() * nd, o.workers, [&](std::size_t t, Partial& out) {
    const unsigned d = static_cast<unsigned>(t / cs.size() + 2);
    const Integer c = cs[t % cs.size()];
    const UnicriticalPoly f(d, c);
    const Integer abs_c = abs_int(c);
    const Integer threshold = escape_threshold(f);
    Integer v = 0;
    for (std::size_t m = 1; m <= m_max; ++m) {
      v = evaluate(f, v);
      ++out.cases;
      if (abs_int(v) < abs_c)
        out.violations.push_back({{{"d", d}, {"c", c}, {"m", m}}, "|f^m(0)| = " + abs_int(v).get_str() + " < |c|"});
      else if (abs_int(v) >= threshold) {
        out.cases += m_max - m;
        break;
      }
    }
  });
  rep.cases = part.cases;
  rep.violations = std::move(part.violations);
}

// Integer fixed points of x^d + c by direct search outward from 0.
std::vector<Integer> scan_fixed_points(unsigned d, const Integer& c) {
  std::vector<Integer> out;
  const Integer abs_c = abs_int(c);
  for (Integer a = 0;; ++a) {
    // |x^d - x| >= a^d - a for |x| = a >= 1, increasing in a.
    if (a >= 2 && ipow(a, d) - a > abs_c) break;
    for (const Integer& x : {Integer(-a), a}) {
      if (x == 0 && a != 0) continue;
      if (ipow(x, d) + c == x) out.push_back(x);
      if (a == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void fixed_uniqueness(const json& p, const SuiteOptions& o, SuiteReport& rep) {
  const auto c_max = get_int(p, "c_max", 1, 10'000'000);
  const auto degrees = get_degrees(p, "d");
  for (unsigned d : degrees)
    if (d < 3) throw std::invalid_argument("fixed-uniqueness needs d >= 3");
  const auto cs = nonzero_range(c_max);
  check_budget(cs.size() * degrees.size(), o, rep.suite);

  auto part = run_tasks(degrees.size(), o.workers, [&](std::size_t i, Partial& out) {
    const unsigned d = degrees[i];
    for (auto cv : cs) {
      ++out.cases;
      const Integer c = cv;
      const auto scanned = scan_fixed_points(d, c);
      const auto reported = integer_fixed_points(UnicriticalPoly(d, c));
      json input = {{"d", d}, {"c", c}};
      if (!scanned.empty()) ++out.counters["with_fixed_point"];
      if (scanned.size() > 1) out.violations.push_back({input, std::to_string(scanned.size()) + " fixed points"});
      if (scanned != reported) out.violations.push_back({input, "integer_fixed_points disagrees with scan"});
    }
  });
  rep.cases = part.cases;
  rep.violations = std::move(part.violations);
  rep.stats["with_fixed_point"] = part.counters["with_fixed_point"];
}

void stability(const json& p, const SuiteOptions& o, SuiteReport& rep) {
  const auto c_max = get_int(p, "c_max", 1, 100'000);
  const auto degrees = get_degrees(p, "d");
  const auto n_max = static_cast<std::size_t>(get_int(p, "n_max", 1, 32));
  const auto degree_cap = static_cast<std::size_t>(get_int(p, "degree_cap", 1, 4096));
  const auto cs = nonzero_range(c_max);
  check_budget(cs.size() * degrees.size() * n_max, o, rep.suite);
  const auto primes = default_resolver_primes();

  auto part = run_tasks(cs.size() * degrees.size(), o.workers, [&](std::size_t t, Partial& out) {
    const unsigned d = degrees[t / cs.size()];
    const Integer c = cs[t % cs.size()];
    const UnicriticalPoly f(d, c);
    if (!base_irreducible(f)) return;
    ++out.counters["irreducible_maps"];
    const auto dp = prime_divisors(d);
    // Step n of the chain for f^n tests f^(n-1)(c) = f^n(0).
    Integer v = c;
    for (std::size_t n = 2; n <= n_max; ++n) {
      v = evaluate(f, v);
      ++out.cases;
      for (unsigned q : dp) {
        if (auto w = exact_pth_power(v, q)) {
          out.violations.push_back({{{"d", d}, {"c", c}, {"n", n}}, "chain blocks: f^n(0) = " + to_string(*w)});
          break;
        }
      }
    }
    const Presentation pres(d, {c});
    std::size_t deg = d;
    for (std::size_t n = 1; n <= n_max && deg <= degree_cap; ++n, deg *= d) {
      const Word w = power_word(0, n);
      bool confirmed = false;
      for (auto q : primes) {
        if (modq_irreducible(expand_word_mod(pres, w, q, degree_cap), q)) {
          confirmed = true;
          break;
        }
      }
      if (confirmed) {
        ++out.counters["modq_confirmed"];
      } else {
        ++out.counters["modq_unconfirmed"];
        out.notes.push_back({{"d", d}, {"c", c}, {"n", n}});
      }
    }
  });
  rep.cases = part.cases;
  rep.violations = std::move(part.violations);
  rep.stats["irreducible_maps"] = part.counters["irreducible_maps"];
  rep.stats["modq_confirmed"] = part.counters["modq_confirmed"];
  rep.stats["modq_unconfirmed"] = part.notes;
}

void freeness(const json& p, const SuiteOptions& o, SuiteReport& rep) {
  const auto d = static_cast<unsigned>(get_int(p, "d", 2, 64));
  const Presentation pres(d, get_coeffs(p, "coeffs"));
  const auto max_len = static_cast<std::size_t>(get_int(p, "max_len", 1, 64));
  const auto trials = static_cast<std::size_t>(get_int(p, "trials", 1, 64));
  std::uint64_t estimate = 0;
  for (std::size_t k = 1; k <= max_len; ++k) {
    const auto n = word_count(pres.size(), k);
    if (!n || *n > o.budget) throw ResourceError("suite freeness: word count overflows the budget");
    estimate += *n;
  }
  check_budget(estimate * trials, o, rep.suite);
  const FreenessReport r = freeness_spot_check(pres, max_len, trials);
  rep.cases = r.pairs_compared;
  for (const auto& [a, b] : r.collisions)
    rep.violations.push_back({{{"d", d}, {"coeffs", pres.coeffs()}, {"words", {a, b}}}, "fingerprints collide"});
  rep.stats = r;
}

struct SuiteEntry {
  const char* id;
  json (*defaults)();
  void (*run)(const json&, const SuiteOptions&, SuiteReport&);
};

const std::vector<SuiteEntry>& catalog() {
  static const std::vector<SuiteEntry> entries = {
      {"consecutive-powers", [] { return json{{"x_max", 10000}, {"d_max", 16}}; }, consecutive_powers},
      {"preimage-bound", [] { return json{{"c_max", 300}, {"d", {2, 3, 4, 6}}}; }, preimage_bound},
      {"escape-lemma", [] { return json{{"c_max", 100}, {"d", {2, 3, 4, 5}}, {"n_max", 8}}; }, escape_lemma},
      {"classification", [] { return json{{"c_max", 100}, {"d", {2, 3, 4}}}; }, classification},
      {"sharpness", [] { return json{{"r_max", 10}, {"d_max", 6}}; }, sharpness},
      {"mod8", [] { return json{{"c", {1, 2}}}; }, mod8},
      {"orbit-zero", [] { return json{{"c_max", 500}, {"d_max", 5}, {"m_max", 6}}; }, orbit_zero},
      {"fixed-uniqueness", [] { return json{{"c_max", 1000}, {"d", {3, 4, 5}}}; }, fixed_uniqueness},
      {"stability",
       [] { return json{{"c_max", 50}, {"d", {2, 3, 4, 5}}, {"n_max", 6}, {"degree_cap", 64}}; },
       stability},
      {"freeness", [] { return json{{"d", 2}, {"coeffs", {"1", "-2"}}, {"max_len", 4}, {"trials", 3}}; }, freeness},
  };
  return entries;
}

const SuiteEntry& find_suite(const std::string& id) {
  for (const auto& e : catalog())
    if (id == e.id) return e;
  std::string known;
  for (const auto& e : catalog()) known += std::string(known.empty() ? "" : ", ") + e.id;
  throw std::invalid_argument("unknown suite '" + id + "' (known: " + known + ")");
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& e : catalog()) out.emplace_back(e.id);
    return out;
  }();
  return ids;
}

json default_params(const std::string& id) { return find_suite(id).defaults(); }

SuiteReport run_suite(const std::string& id, const json& params, const SuiteOptions& options) {
  const SuiteEntry& entry = find_suite(id);
  SuiteReport rep;
  rep.suite = id;
  rep.params = entry.defaults();
  if (!params.is_null()) {
    if (!params.is_object()) throw std::invalid_argument("suite parameters must be a JSON object");
    for (const auto& [key, value] : params.items()) {
      if (!rep.params.contains(key))
        throw std::invalid_argument("suite " + id + " has no parameter '" + key + "'");
      rep.params[key] = value;
    }
  }
  const auto start = std::chrono::steady_clock::now();
  try {
    entry.run(rep.params, options, rep);
  } catch (const json::exception& e) {
    throw std::invalid_argument("suite " + id + ": malformed parameter: " + e.what());
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

json SuiteReport::to_json() const {
  json vs = json::array();
  for (const auto& v : violations) vs.push_back({{"input", v.input}, {"message", v.message}});
  return {{"suite", suite},     {"params", params}, {"cases", cases},     {"violations", std::move(vs)},
          {"passed", passed()}, {"stats", stats},   {"seconds", seconds}};
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  out << "suite " << suite << ": " << (passed() ? "PASS" : "FAIL") << '\n';
  out << "  params: " << params.dump() << '\n';
  out << "  cases: " << cases << '\n';
  out << "  violations: " << violations.size() << '\n';
  constexpr std::size_t kShown = 20;
  for (std::size_t i = 0; i < violations.size() && i < kShown; ++i)
    out << "    " << violations[i].input.dump() << ": " << violations[i].message << '\n';
  if (violations.size() > kShown) out << "    ... " << violations.size() - kShown << " more\n";
  for (const auto& [k, v] : stats.items()) out << "  " << k << ": " << v.dump() << '\n';
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.3f", seconds);
  out << "  seconds: " << secs << '\n';
  return out.str();
}

}  // namespace unicrit
