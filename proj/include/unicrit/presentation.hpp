#pragma once

#include "unicrit/dynamics.hpp"
#include "unicrit/integer.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace unicrit {

/// Generators x^d + c_1, ..., x^d + c_s of a composition semigroup.
/// Constants are sorted ascending and deduplicated on construction.
class Presentation {
 public:
  Presentation(unsigned d, std::vector<Integer> coeffs);

  unsigned degree() const { return d_; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& coeff(std::size_t i) const { return coeffs_.at(i); }
  UnicriticalPoly generator(std::size_t i) const { return {d_, coeffs_.at(i)}; }
  std::optional<std::size_t> index_of(const Integer& c) const;

 private:
  unsigned d_;
  std::vector<Integer> coeffs_;
};

/// A composition theta_1 o ... o theta_n of generators, given as indices
/// into the presentation. The first index is the outermost map, so
/// evaluation applies the last index first.
struct Word {
  std::vector<std::size_t> indices;

  std::size_t length() const { return indices.size(); }
  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;
};

/// `[0,1,1]`
std::string to_string(const Word& w);

/// Concatenation: outer applied after inner.
Word compose(const Word& outer, const Word& inner);

/// `count` copies of index i.
Word power_word(std::size_t i, std::size_t count);

/// Evaluates the composition at x.
Integer evaluate_word(const Presentation& pres, const Word& w, Integer x);

/// Throws std::invalid_argument unless every index is in range and the word
/// is nonempty.
void validate_word(const Presentation& pres, const Word& w);

/// Parses comma-separated integers, e.g. "-252,4,-4,-260".
std::vector<Integer> parse_integer_list(const std::string& text);

}  // namespace unicrit
