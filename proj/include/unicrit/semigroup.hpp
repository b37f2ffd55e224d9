#pragma once

#include "unicrit/irreducibility.hpp"
#include "unicrit/presentation.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace unicrit {

/// Lexicographic odometer over all words of a fixed length.
class WordEnumerator {
 public:
  WordEnumerator(std::size_t alphabet, std::size_t length);

  bool done() const { return done_; }
  const Word& current() const { return word_; }
  void advance();

 private:
  std::size_t alphabet_;
  Word word_;
  bool done_ = false;
};

/// All s^n words of length n in lexicographic index order.
std::vector<Word> enumerate_words(const Presentation& pres, std::size_t n);

/// s^n, or nothing on 64-bit overflow.
std::optional<std::uint64_t> word_count(std::size_t s, std::size_t n);

struct FreenessReport {
  bool passed = true;
  std::size_t max_len = 0;
  std::size_t trials = 0;
  std::uint64_t words_checked = 0;
  std::uint64_t pairs_compared = 0;
  std::vector<std::uint64_t> moduli;
  std::vector<std::pair<Word, Word>> collisions;
};

/// Compares every pair of distinct equal-length words up to max_len by
/// evaluating the compositions at random points modulo random ~62-bit
/// primes. Any pair whose fingerprints agree in every trial is reported.
FreenessReport freeness_spot_check(const Presentation& pres, std::size_t max_len, std::size_t trials,
                                   std::uint64_t seed = 0x5eed);

struct ExceptionalHit {
  Integer y;
  unsigned p = 0;
  int statement = 0;     // 2: d >= 4 even, 3: d >= 5 odd
  bool equality = false; // coefficient set equals the whole form set
};

/// First (y, p), by ascending p then |y| (nonnegative y first), with every
/// constant in {y^p - y^(pd), y^p, -y^p, -y^p - y^(pd)} (d >= 4 even) or
/// {y^p - y^(pd), y^p} (d >= 5 odd).
std::optional<ExceptionalHit> detect_exceptional(const Presentation& pres);

enum class FamilyRule {
  Stability,    // f1^N
  Sandwich,     // f1^3 o f2 o f1
  DoubleCube,   // f1^3 o f2^3
  PriorWorkD3,  // f1 o f2 o f1, d = 3
};

const char* to_string(FamilyRule r);

struct NoIrreducibleGenerator {};

/// {F o g : g in G} consists of irreducible polynomials.
struct CertifiedFamily {
  std::size_t f1 = 0;
  std::optional<std::size_t> f2;
  Word F;
  FamilyRule rule = FamilyRule::Stability;
  IrreducibilityVerdict certificate;
};

struct ExceptionalFamily {
  Integer y;
  unsigned p = 0;
  int statement = 0;
  bool equality = false;
  std::size_t f1 = 0;
};

/// d = 2 with every irreducible generator carrying a powered fixed point or
/// 2-cycle; settled by earlier work without a construction here.
struct PriorWorkResolvedD2 {
  std::size_t f1 = 0;
};

using ClassificationOutcome =
    std::variant<NoIrreducibleGenerator, CertifiedFamily, ExceptionalFamily, PriorWorkResolvedD2>;

const char* outcome_name(const ClassificationOutcome& o);

/// Decides which of the constructive families, the exceptional families or
/// the remaining cases applies to the presentation. Every CertifiedFamily
/// except PriorWorkD3 is checked with the chain test (mod-q resolution
/// allowed) before it is returned; PriorWorkD3 carries whatever verdict the
/// chain test reaches, typically Unknown.
ClassificationOutcome classify_semigroup(const Presentation& pres);

/// 1 / s^len(F). Throws std::invalid_argument for non-certified outcomes.
mpq_class density_lower_bound(const Presentation& pres, const ClassificationOutcome& outcome);

}  // namespace unicrit
