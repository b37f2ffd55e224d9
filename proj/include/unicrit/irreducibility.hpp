#pragma once

#include "unicrit/dynamics.hpp"
#include "unicrit/integer.hpp"
#include "unicrit/presentation.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace unicrit {

/// Dense integer polynomial, constant term first.
using Poly = std::vector<Integer>;

Poly poly_mul(const Poly& a, const Poly& b);

/// Explicit factorization of a reducible binomial x^d + c.
struct BaseFactorization {
  enum class Kind {
    PowerBinomial,  // -c = y^p with p | d:  X^p - y^p, X = x^(d/p)
    SophieGermain,  // c = 4 z^4 with 4 | d: X^4 + 4 z^4, X = x^(d/4)
  };

  Kind kind = Kind::PowerBinomial;
  std::optional<PowerWitness> power;  // PowerBinomial: witness for -c
  Integer z;                          // SophieGermain
  Poly first;
  Poly second;
};

/// A factorization of x^d + c over Q when it is reducible, nothing otherwise.
std::optional<BaseFactorization> base_reducibility(const UnicriticalPoly& f);

/// Whether x^d + c is irreducible over Q.
bool base_irreducible(const UnicriticalPoly& f);

enum class StepRule {
  Base,           // leftmost generator is an irreducible binomial
  Stability,      // step inside a leading run f o f o ... of one irreducible map
  CriticalValue,  // test value is not y^p for any prime p | d
  ModQ,           // prefix composition irreducible modulo a prime
};

const char* to_string(StepRule r);

struct CertificateStep {
  std::size_t length = 0;  // prefix length proven irreducible by this step
  StepRule rule = StepRule::Base;
  /// CriticalValue: (theta_1 o ... o theta_k)(c_{k+1}); unused otherwise.
  Integer test_value;
  std::uint64_t modulus = 0;  // ModQ only
};

struct ModqResolution {
  bool resolved = false;
  std::uint64_t prime = 0;
  std::size_t primes_tried = 0;
  bool skipped_for_degree = false;
};

struct IrreducibilityVerdict {
  enum class Kind { Irreducible, Reducible, Unknown };

  Kind kind = Kind::Unknown;

  /// Irreducible: one step per prefix length 1..n.
  std::vector<CertificateStep> certificate;

  /// Reducible: factorization of the leftmost generator. Composing each
  /// factor with the rest of the word factors the whole composition.
  std::optional<BaseFactorization> reducible_witness;

  /// Unknown: the step k whose test value blocks the chain (the prefix of
  /// length k is irreducible, the prefix of length k + 1 is undecided).
  std::size_t blocking_step = 0;
  Integer blocking_value;
  std::optional<PowerWitness> blocking_witness;
  std::optional<ModqResolution> resolution;

  bool irreducible() const { return kind == Kind::Irreducible; }
  bool reducible() const { return kind == Kind::Reducible; }
  bool unknown() const { return kind == Kind::Unknown; }
  bool used_modq() const;
};

const char* to_string(IrreducibilityVerdict::Kind k);

/// Odd primes up to 200.
std::vector<std::uint64_t> default_resolver_primes();

struct ResolverOptions {
  bool enabled = false;
  std::vector<std::uint64_t> primes = default_resolver_primes();
  std::size_t degree_cap = 4096;
};

/// Cache of prime-power tests keyed by the tested value. Not thread-safe;
/// use one per worker.
class PowerMemo {
 public:
  struct Hash {
    std::size_t operator()(const Integer& v) const;
  };

  const std::optional<PowerWitness>* find(const Integer& v) const;
  void store(const Integer& v, std::optional<PowerWitness> w);
  std::size_t size() const { return table_.size(); }
  std::uint64_t hits() const { return hits_; }

 private:
  std::unordered_map<Integer, std::optional<PowerWitness>, Hash> table_;
  mutable std::uint64_t hits_ = 0;
};

/// Incremental form of the chain test. A word is built left to right (outer
/// maps first); extending by index i appends theta_i as the new innermost map.
class ChainCertifier {
 public:
  explicit ChainCertifier(const Presentation& pres, ResolverOptions resolver = {});

  /// Verdict for the single generator i.
  IrreducibilityVerdict start(std::size_t i) const;

  /// Verdict for prefix ++ [i], given the verdict of prefix.
  IrreducibilityVerdict extend(const Word& prefix, const IrreducibilityVerdict& prefix_verdict,
                               std::size_t i, PowerMemo* memo = nullptr) const;

  IrreducibilityVerdict certify(const Word& w) const;

  const Presentation& presentation() const { return pres_; }

 private:
  std::optional<PowerWitness> blocking_power(const Integer& v, PowerMemo* memo) const;
  void try_resolve(const Word& w, IrreducibilityVerdict& v) const;

  const Presentation& pres_;
  ResolverOptions resolver_;
  std::vector<unsigned> primes_;
  std::vector<bool> base_ok_;
};

/// Chain test on a nonempty word, without mod-q resolution.
IrreducibilityVerdict chain_certify(const Presentation& pres, const Word& w);

/// Chain test on a nonempty word, with mod-q resolution of blocked steps
/// when the resolver is enabled.
IrreducibilityVerdict certify(const Presentation& pres, const Word& w, const ResolverOptions& resolver);

/// Exact integer coefficients of the composition. Throws ResourceError when
/// d^length exceeds degree_cap.
Poly expand_word_coefficients(const Presentation& pres, const Word& w, std::size_t degree_cap = 4096);

/// Coefficients of the composition reduced modulo q (q < 2^32).
std::vector<std::uint64_t> expand_word_mod(const Presentation& pres, const Word& w, std::uint64_t q,
                                           std::size_t degree_cap = 4096);

/// Rabin's test over F_q: x^(q^n) = x mod g and gcd(x^(q^(n/l)) - x, g) = 1
/// for each prime l | n. Coefficients are residues mod q, constant first.
/// Throws std::invalid_argument unless q is an odd prime below 2^32 and the
/// polynomial is monic of degree >= 1.
bool modq_irreducible(std::span<const std::uint64_t> coeffs, std::uint64_t q);

}  // namespace unicrit
