#include "unicrit/census.hpp"

#include "parallel.hpp"
#include "unicrit/json.hpp"
#include "unicrit/semigroup.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace unicrit {

namespace {

struct SubtreeWalker {
  const ChainCertifier& chain;
  std::size_t s;
  std::size_t max_len;
  std::vector<std::uint64_t> pow_s;  // s^k
  std::vector<CensusRow>& rows;
  PowerMemo memo{};

  void settle(std::size_t length, const IrreducibilityVerdict& v) {
    // The word of this length and every extension share the verdict.
    for (std::size_t len = length; len <= max_len; ++len) {
      const std::uint64_t n = pow_s[len - length];
      if (v.reducible()) rows[len - 1].reducible += n;
      else rows[len - 1].unknown += n;
    }
  }

  void visit(Word& w, const IrreducibilityVerdict& v) {
    const std::size_t length = w.length();
    if (!v.irreducible()) {
      settle(length, v);
      return;
    }
    rows[length - 1].irreducible += 1;
    if (v.used_modq()) rows[length - 1].resolved_by_modq += 1;
    if (length == max_len) return;
    for (std::size_t j = 0; j < s; ++j) {
      const IrreducibilityVerdict child = chain.extend(w, v, j, &memo);
      w.indices.push_back(j);
      visit(w, child);
      w.indices.pop_back();
    }
  }
};

}  // namespace

std::vector<CensusRow> run_census(const Presentation& pres, std::size_t max_len, const CensusOptions& options) {
  if (max_len == 0) throw std::invalid_argument("run_census: max_len must be positive");
  const std::size_t s = pres.size();

  std::vector<std::uint64_t> pow_s;
  std::uint64_t words = 0;
  for (std::size_t k = 0; k <= max_len; ++k) {
    const auto n = word_count(s, k);
    if (!n || (k > 0 && *n > options.budget - words))
      throw ResourceError("run_census: " + std::to_string(s) + "^" + std::to_string(max_len) +
                          " words exceed the enumeration budget of " + std::to_string(options.budget));
    pow_s.push_back(*n);
    if (k > 0) words += *n;
  }

  const ChainCertifier chain(pres, options.resolver);
  // One subtree per top-level generator; rows are summed afterwards, so the
  // result is independent of scheduling.
  std::vector<std::vector<CensusRow>> partial(s, std::vector<CensusRow>(max_len));
  detail::parallel_for(s, options.workers, [&](std::size_t top) {
    SubtreeWalker walker{chain, s, max_len, pow_s, partial[top], {}};
    Word w{{top}};
    walker.visit(w, chain.start(top));
  });

  std::vector<CensusRow> rows(max_len);
  for (std::size_t len = 1; len <= max_len; ++len) {
    CensusRow& r = rows[len - 1];
    r.length = len;
    r.total = pow_s[len];
    for (const auto& part : partial) {
      r.irreducible += part[len - 1].irreducible;
      r.reducible += part[len - 1].reducible;
      r.unknown += part[len - 1].unknown;
      r.resolved_by_modq += part[len - 1].resolved_by_modq;
    }
  }
  return rows;
}

std::string format_census(const std::vector<CensusRow>& rows, ReportFormat format, const Presentation& pres,
                          const CensusOptions& options, std::size_t max_len) {
  if (rows.empty()) throw std::invalid_argument("format_census: no rows to report");
  if (format == ReportFormat::Csv) {
    std::ostringstream out;
    out << "length,total,irreducible,reducible,unknown,resolved_by_modq\n";
    for (const auto& r : rows)
      out << r.length << ',' << r.total << ',' << r.irreducible << ',' << r.reducible << ',' << r.unknown << ','
          << r.resolved_by_modq << '\n';
    return out.str();
  }
  json j;
  j["presentation"] = pres;
  j["options"] = {{"max_len", max_len},
                  {"resolver", options.resolver.enabled},
                  {"primes", options.resolver.primes},
                  {"degree_cap", options.resolver.degree_cap}};
  j["rows"] = rows;
  return j.dump(2) + "\n";
}

void emit_report(const std::vector<CensusRow>& rows, ReportFormat format, const std::string& destination,
                 const Presentation& pres, const CensusOptions& options, std::size_t max_len) {
  const std::string text = format_census(rows, format, pres, options, max_len);
  if (destination == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + destination + "' for writing: " + std::strerror(errno));
  out << text;
  out.close();
  if (!out) throw std::runtime_error("failed writing '" + destination + "'");
}

std::vector<CensusRow> parse_census_json(std::string_view text) {
  const json j = json::parse(text);
  return j.at("rows").get<std::vector<CensusRow>>();
}

}  // namespace unicrit
