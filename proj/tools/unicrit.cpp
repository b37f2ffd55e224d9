// unicrit: command-line front end for the unicrit library.

#include "unicrit/census.hpp"
#include "unicrit/dynamics.hpp"
#include "unicrit/irreducibility.hpp"
#include "unicrit/json.hpp"
#include "unicrit/semigroup.hpp"
#include "unicrit/verifier.hpp"

#include <CLI11.hpp>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace unicrit;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  unsigned d = 2;
  std::string c = "0";
  std::string alpha = "0";
  std::string coeffs;
  std::string word;
  std::string format;  // empty: subcommand default
  std::string output = "-";
  unsigned workers = 1;
  bool resolve = false;
  std::size_t max_len = 4;
  std::string suite;
  std::vector<std::string> params;
};

unsigned default_workers() {
  if (const char* env = std::getenv("UNICRIT_WORKERS")) {
    char* end = nullptr;
    const unsigned long n = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && n > 0 && n <= 1024) return static_cast<unsigned>(n);
    std::cerr << "unicrit: ignoring invalid UNICRIT_WORKERS='" << env << "'\n";
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Integer parse_integer(const std::string& text, const char* what) {
  try {
    const auto v = parse_integer_list(text);
    if (v.size() == 1) return v[0];
  } catch (const std::invalid_argument&) {
  }
  throw UsageError(std::string("--") + what + ": expected an integer, got '" + text + "'");
}

std::string poly_text(unsigned d, const Integer& c) {
  std::string s = "x^" + std::to_string(d);
  if (c > 0) s += " + " + c.get_str();
  if (c < 0) s += " - " + Integer(-c).get_str();
  return s;
}

std::string join(const std::vector<Integer>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].get_str();
  return s;
}

Presentation presentation_of(const Config& cfg) {
  if (cfg.coeffs.empty()) throw UsageError("--coeffs is required");
  try {
    return Presentation(cfg.d, parse_integer_list(cfg.coeffs));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--coeffs: ") + e.what());
  }
}

Word word_of(const Config& cfg, const Presentation& pres) {
  if (cfg.word.empty()) throw UsageError("--word is required");
  Word w;
  try {
    for (const auto& i : parse_integer_list(cfg.word)) {
      if (i < 0 || !i.fits_ulong_p()) throw std::invalid_argument("negative index");
      w.indices.push_back(i.get_ui());
    }
    validate_word(pres, w);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--word: ") + e.what());
  }
  return w;
}

class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path != "-") {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw std::runtime_error("cannot open '" + path + "' for writing: " + std::strerror(errno));
    }
  }
  std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void print_json(const Config& cfg, const json& j) {
  Sink sink(cfg.output);
  sink.out() << j.dump(2) << '\n';
}

bool want_json(const Config& cfg) {
  if (cfg.format == "json") return true;
  if (cfg.format == "text" || cfg.format.empty()) return false;
  throw UsageError("--format " + cfg.format + " is not available for this subcommand");
}

// ---- subcommands -------------------------------------------------------------

int cmd_orbit(const Config& cfg) {
  const UnicriticalPoly f(cfg.d, parse_integer(cfg.c, "c"));
  const Integer alpha = parse_integer(cfg.alpha, "alpha");
  const OrbitReport r = orbit_classify(f, alpha);

  // Prefix values that are epsilon * y^p for a prime p | d.
  json notes = json::array();
  std::vector<std::string> note_text;
  for (std::size_t n = 1; n < r.prefix.size(); ++n)
    for (unsigned p : prime_divisors(f.d))
      if (auto w = pth_power_witness(r.prefix[n], p)) {
        notes.push_back({{"n", n}, {"value", r.prefix[n]}, {"witness", *w}});
        note_text.push_back("f^" + std::to_string(n) + "(" + alpha.get_str() + ") = " + r.prefix[n].get_str() +
                            " = " + to_string(*w));
        break;
      }

  if (want_json(cfg)) {
    json j = {{"d", f.d}, {"c", f.c}, {"alpha", alpha}, {"orbit", r}, {"powers", notes}};
    print_json(cfg, j);
    return kOk;
  }
  Sink sink(cfg.output);
  auto& out = sink.out();
  out << "f = " << poly_text(f.d, f.c) << ", alpha = " << alpha << '\n';
  if (r.preperiodic())
    out << "Preperiodic: tail " << r.tail << ", period " << r.period << '\n';
  else
    out << "Escaping at index " << r.escape_index << '\n';
  out << "prefix: " << join(r.prefix) << '\n';
  for (const auto& t : note_text) out << "note: " << t << '\n';
  return kOk;
}

int cmd_powered_points(const Config& cfg) {
  const UnicriticalPoly f(cfg.d, parse_integer(cfg.c, "c"));
  const auto fixed = integer_fixed_points(f);
  const auto powered = powered_fixed_points(f);
  std::optional<std::vector<Integer>> cycles;
  if (f.d == 2) cycles = powered_two_cycles(f);

  if (want_json(cfg)) {
    json j = {{"d", f.d}, {"c", f.c}, {"fixed_points", fixed}, {"powered_fixed_points", powered}};
    if (cycles) j["powered_two_cycles"] = *cycles;
    print_json(cfg, j);
    return kOk;
  }
  Sink sink(cfg.output);
  auto& out = sink.out();
  out << "f = " << poly_text(f.d, f.c) << '\n';
  out << "integer fixed points: " << (fixed.empty() ? "none" : join(fixed)) << '\n';
  out << "powered fixed points:";
  if (powered.empty()) out << " none";
  for (const auto& w : powered) out << ' ' << w.value() << " = " << to_string(w) << ';';
  out << '\n';
  if (cycles) out << "powered 2-cycle points: " << (cycles->empty() ? "none" : join(*cycles)) << '\n';
  return kOk;
}

void print_verdict(std::ostream& out, const IrreducibilityVerdict& v) {
  out << "verdict: " << to_string(v.kind) << '\n';
  for (const auto& s : v.certificate) {
    out << "  step " << s.length << ": " << to_string(s.rule);
    if (s.rule == StepRule::CriticalValue) out << " (" << s.test_value << ")";
    if (s.rule == StepRule::ModQ) out << " (q = " << s.modulus << ")";
    out << '\n';
  }
  if (v.reducible_witness) {
    const auto& f = *v.reducible_witness;
    out << "  outer generator factors: ";
    out << (f.kind == BaseFactorization::Kind::PowerBinomial ? "X^p - y^p with " + to_string(*f.power)
                                                             : "X^4 + 4z^4 with z = " + f.z.get_str())
        << '\n';
  }
  if (v.blocking_witness)
    out << "  blocked after step " << v.blocking_step << ": " << v.blocking_value << " = "
        << to_string(*v.blocking_witness) << '\n';
  if (v.resolution && !v.resolution->resolved)
    out << "  mod-q: " << (v.resolution->skipped_for_degree ? "skipped (degree cap)" : "no prime proved it") << '\n';
}

int cmd_irreducible(const Config& cfg) {
  const Presentation pres = presentation_of(cfg);
  const Word w = word_of(cfg, pres);
  ResolverOptions resolver;
  resolver.enabled = cfg.resolve;
  const IrreducibilityVerdict v = certify(pres, w, resolver);
  const int code = v.irreducible() ? kOk : kFailure;

  if (want_json(cfg)) {
    print_json(cfg, {{"presentation", pres}, {"word", w}, {"result", v}});
    return code;
  }
  Sink sink(cfg.output);
  auto& out = sink.out();
  out << "word " << to_string(w) << ":";
  for (std::size_t k = 0; k < w.length(); ++k)
    out << (k ? " o " : " ") << "(" << poly_text(pres.degree(), pres.coeff(w.indices[k])) << ")";
  out << '\n';
  print_verdict(out, v);
  return code;
}

int cmd_classify(const Config& cfg) {
  const Presentation pres = presentation_of(cfg);
  const ClassificationOutcome o = classify_semigroup(pres);
  const bool certified = std::holds_alternative<CertifiedFamily>(o) || std::holds_alternative<PriorWorkResolvedD2>(o);
  const int code = certified ? kOk : kFailure;

  if (want_json(cfg)) {
    print_json(cfg, outcome_to_json(pres, o));
    return code;
  }
  Sink sink(cfg.output);
  auto& out = sink.out();
  out << "outcome: " << outcome_name(o) << '\n';
  auto gen = [&](std::size_t i) { return poly_text(pres.degree(), pres.coeff(i)); };
  if (const auto* fam = std::get_if<CertifiedFamily>(&o)) {
    out << "rule: " << to_string(fam->rule) << '\n';
    out << "f1 = " << gen(fam->f1) << '\n';
    if (fam->f2) out << "f2 = " << gen(*fam->f2) << '\n';
    out << "F = " << to_string(fam->F) << " (length " << fam->F.length() << ")\n";
    print_verdict(out, fam->certificate);
    out << "density lower bound: " << density_lower_bound(pres, o).get_str() << '\n';
  } else if (const auto* ex = std::get_if<ExceptionalFamily>(&o)) {
    out << "y = " << ex->y << ", p = " << ex->p << ", statement " << ex->statement
        << (ex->equality ? " (all forms present)" : "") << '\n';
    out << "f1 = " << gen(ex->f1) << '\n';
  } else if (const auto* pw = std::get_if<PriorWorkResolvedD2>(&o)) {
    out << "f1 = " << gen(pw->f1) << '\n';
  }
  return code;
}

int cmd_census(const Config& cfg) {
  const Presentation pres = presentation_of(cfg);
  if (cfg.max_len == 0) throw UsageError("--max-len must be positive");
  ReportFormat fmt;
  if (cfg.format == "csv" || cfg.format.empty()) fmt = ReportFormat::Csv;
  else if (cfg.format == "json") fmt = ReportFormat::Json;
  else throw UsageError("--format must be csv or json for census");
  CensusOptions options;
  options.resolver.enabled = cfg.resolve;
  options.workers = cfg.workers;
  const auto rows = run_census(pres, cfg.max_len, options);
  emit_report(rows, fmt, cfg.output, pres, options, cfg.max_len);
  return kOk;
}

json parse_params(const std::vector<std::string>& items) {
  json params = json::object();
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string text = item.substr(eq + 1);
    json value = json::parse(text, nullptr, false);
    if (value.is_discarded()) value = text;  // bare strings such as 1,-2
    params[key] = std::move(value);
  }
  return params;
}

int cmd_verify(const Config& cfg) {
  const bool as_json = want_json(cfg);
  std::vector<std::string> suites;
  if (cfg.suite == "all") suites = suite_ids();
  else suites.push_back(cfg.suite);
  const json params = parse_params(cfg.params);
  if (suites.size() > 1 && !params.empty()) throw UsageError("--param needs a single --suite");

  SuiteOptions options;
  options.workers = cfg.workers;
  std::vector<SuiteReport> reports;
  try {
    for (const auto& id : suites) reports.push_back(run_suite(id, params, options));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed();
  Sink sink(cfg.output);
  if (as_json) {
    if (reports.size() == 1) {
      sink.out() << reports[0].to_json().dump(2) << '\n';
    } else {
      json all = json::array();
      for (const auto& r : reports) all.push_back(r.to_json());
      sink.out() << all.dump(2) << '\n';
    }
  } else {
    for (const auto& r : reports) sink.out() << r.to_text();
  }
  return passed ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Irreducibility certificates and checks for compositions of x^d + c over the integers", "unicrit"};
  app.require_subcommand(1, 1);
  Config cfg;
  cfg.workers = default_workers();

  auto add_d = [&](CLI::App* sub) { sub->add_option("--d", cfg.d, "degree d >= 2")->check(CLI::Range(2u, 1u << 20)); };
  auto add_format = [&](CLI::App* sub, const char* choices) {
    sub->add_option("--format", cfg.format, std::string("output format: ") + choices);
  };
  auto add_output = [&](CLI::App* sub) { sub->add_option("--output,-o", cfg.output, "output path, - for stdout"); };
  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", cfg.workers, "worker threads (default: $UNICRIT_WORKERS or all cores)")
        ->check(CLI::Range(1u, 1024u));
  };

  auto* orbit = app.add_subcommand("orbit", "orbit of alpha under x^d + c");
  add_d(orbit);
  orbit->add_option("--c", cfg.c, "constant term")->required();
  orbit->add_option("--alpha", cfg.alpha, "starting point")->required();
  add_format(orbit, "text|json");
  add_output(orbit);

  auto* powered = app.add_subcommand("powered-points", "fixed points and powered fixed points / 2-cycles");
  add_d(powered);
  powered->add_option("--c", cfg.c, "constant term")->required();
  add_format(powered, "text|json");
  add_output(powered);

  auto* irr = app.add_subcommand("irreducible", "certify a composition of generators");
  add_d(irr);
  irr->add_option("--coeffs", cfg.coeffs, "comma-separated constants c_i")->required();
  irr->add_option("--word", cfg.word, "comma-separated generator indices, outermost first")->required();
  irr->add_flag("--resolve", cfg.resolve, "try mod-q irreducibility when the chain test blocks");
  add_format(irr, "text|json");
  add_output(irr);

  auto* classify = app.add_subcommand("classify", "classify the semigroup and certify a family");
  add_d(classify);
  classify->add_option("--coeffs", cfg.coeffs, "comma-separated constants c_i")->required();
  add_format(classify, "text|json");
  add_output(classify);

  auto* census = app.add_subcommand("census", "chain-test verdict counts over all words");
  add_d(census);
  census->add_option("--coeffs", cfg.coeffs, "comma-separated constants c_i")->required();
  census->add_option("--max-len", cfg.max_len, "longest word length")->required();
  census->add_flag("--resolve", cfg.resolve, "try mod-q irreducibility when the chain test blocks");
  add_format(census, "csv|json");
  add_output(census);
  add_workers(census);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", cfg.suite, "suite id or 'all'")->required();
  verify->add_option("--param", cfg.params, "override a suite parameter, key=value (JSON value)");
  add_format(verify, "text|json");
  add_output(verify);
  add_workers(verify);

  // Negative numbers such as `--c -460` or `--coeffs -252,4` are values,
  // never flags.
  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);

  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "unicrit: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }
  try {
    if (orbit->parsed()) return cmd_orbit(cfg);
    if (powered->parsed()) return cmd_powered_points(cfg);
    if (irr->parsed()) return cmd_irreducible(cfg);
    if (classify->parsed()) return cmd_classify(cfg);
    if (census->parsed()) return cmd_census(cfg);
    return cmd_verify(cfg);
  } catch (const UsageError& e) {
    std::cerr << "unicrit: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "unicrit: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "unicrit: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "unicrit: " << e.what() << '\n';
    return kFailure;
  }
}
