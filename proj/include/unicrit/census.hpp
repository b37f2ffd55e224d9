#pragma once

#include "unicrit/irreducibility.hpp"
#include "unicrit/presentation.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace unicrit {

/// Verdict counts over all s^length words of one length.
struct CensusRow {
  std::size_t length = 0;
  std::uint64_t total = 0;
  std::uint64_t irreducible = 0;
  std::uint64_t reducible = 0;
  std::uint64_t unknown = 0;
  std::uint64_t resolved_by_modq = 0;  // irreducible words whose certificate has a mod-q step

  bool operator==(const CensusRow&) const = default;
};

struct CensusOptions {
  ResolverOptions resolver;
  unsigned workers = 1;
  /// Upper bound on the number of words, summed over all lengths.
  std::uint64_t budget = 100'000'000;
};

/// One row per length 1..max_len. Reducible and unresolved-Unknown prefixes
/// settle their whole subtree without further evaluation. Results do not
/// depend on the worker count. Throws ResourceError past the budget.
std::vector<CensusRow> run_census(const Presentation& pres, std::size_t max_len, const CensusOptions& options = {});

enum class ReportFormat { Csv, Json };

/// CSV: `length,total,irreducible,reducible,unknown,resolved_by_modq` then one
/// line per row. JSON: the rows plus presentation and option metadata.
std::string format_census(const std::vector<CensusRow>& rows, ReportFormat format, const Presentation& pres,
                          const CensusOptions& options, std::size_t max_len);

/// Writes the formatted report to a file, or to stdout for "-". Throws
/// std::invalid_argument for empty rows and std::runtime_error naming the
/// path on I/O failure.
void emit_report(const std::vector<CensusRow>& rows, ReportFormat format, const std::string& destination,
                 const Presentation& pres, const CensusOptions& options, std::size_t max_len);

/// Rows from a JSON census report.
std::vector<CensusRow> parse_census_json(std::string_view text);

}  // namespace unicrit
