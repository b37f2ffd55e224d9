#pragma once

#include "unicrit/integer.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace unicrit {

/// Raised when a computation would exceed a configured size cap or budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The map x^d + c over the integers.
struct UnicriticalPoly {
  unsigned d;
  Integer c;

  UnicriticalPoly(unsigned degree, Integer constant);
};

Integer evaluate(const UnicriticalPoly& f, const Integer& x);

/// f^n(x), with f^0 the identity. A nonzero max_bits aborts with
/// ResourceError once an intermediate value is wider than that many bits.
Integer iterate(const UnicriticalPoly& f, Integer x, std::size_t n, std::size_t max_bits = 0);

/// |c| + 2 (or 2 when c = 0). Any orbit reaching this magnitude grows
/// strictly in absolute value from then on.
Integer escape_threshold(const UnicriticalPoly& f);

struct OrbitReport {
  enum class Kind { Preperiodic, Escaping };

  Kind kind = Kind::Escaping;
  std::size_t tail = 0;          // Preperiodic only
  std::size_t period = 0;        // Preperiodic only
  std::size_t escape_index = 0;  // Escaping only
  /// alpha, f(alpha), ... up to the first repeat (exclusive) or the first
  /// value past the escape threshold (inclusive).
  std::vector<Integer> prefix;

  bool preperiodic() const { return kind == Kind::Preperiodic; }
  bool periodic() const { return preperiodic() && tail == 0; }
};

/// Classifies the orbit of alpha: minimal (tail, period) when finite, or the
/// first index whose value reaches escape_threshold(f).
OrbitReport orbit_classify(const UnicriticalPoly& f, const Integer& alpha);

/// All integer x with f(x) = x, ascending.
std::vector<Integer> integer_fixed_points(const UnicriticalPoly& f);

/// Fixed points of the form y^p (p prime dividing d), one witness per fixed
/// value: smallest p first, nonnegative base for p = 2.
std::vector<PowerWitness> powered_fixed_points(const UnicriticalPoly& f);

/// For d = 2: the nonnegative squares lying on a cycle of exact period 2,
/// ascending. Throws std::invalid_argument for d != 2.
std::vector<Integer> powered_two_cycles(const UnicriticalPoly& f);

/// 4 when d = 2, 3 otherwise: the first iterate for which a prime-power
/// image forces preperiodicity.
std::size_t power_iterate_threshold(unsigned d);

/// Result of testing whether f^n(alpha) is a prime power with p | d.
struct IterateClassification {
  enum class Kind { NoPower, BelowThreshold, Classified };

  Kind kind = Kind::NoPower;
  Integer value;                       // f^n(alpha)
  std::optional<PowerWitness> witness;
  /// Which structural statement applies (1..4), Classified only:
  /// 1: d = 2; 2: d odd; 3: d >= 4 even with c != -1; 4: d >= 4 even with c = -1.
  int statement = 0;
  /// f^(n - N)(alpha): the point the structural shape is asserted about.
  Integer anchor;
  std::optional<OrbitReport> alpha_orbit;
  std::optional<OrbitReport> value_orbit;
  bool shape_holds = false;
};

/// Checks the structural shape for a Classified outcome.
bool statement_shape_holds(const UnicriticalPoly& f, const IterateClassification& r);

/// Computes f^n(alpha) and, when it is epsilon * y^p for a prime p | d with
/// n at or past the threshold, classifies the orbit and checks the shape.
/// Throws std::invalid_argument when c = 0.
IterateClassification classify_pth_power_iterate(const UnicriticalPoly& f, const Integer& alpha,
                                                 std::size_t n);

}  // namespace unicrit
