#include "unicrit/presentation.hpp"

#include <algorithm>
#include <stdexcept>

namespace unicrit {

Presentation::Presentation(unsigned d, std::vector<Integer> coeffs) : d_(d), coeffs_(std::move(coeffs)) {
  if (d_ < 2) throw std::invalid_argument("Presentation: degree must be at least 2");
  std::sort(coeffs_.begin(), coeffs_.end());
  coeffs_.erase(std::unique(coeffs_.begin(), coeffs_.end()), coeffs_.end());
  if (coeffs_.empty()) throw std::invalid_argument("Presentation: need at least one generator");
}

std::optional<std::size_t> Presentation::index_of(const Integer& c) const {
  auto it = std::lower_bound(coeffs_.begin(), coeffs_.end(), c);
  if (it == coeffs_.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - coeffs_.begin());
}

std::string to_string(const Word& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.indices.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.indices[i]);
  }
  return s + "]";
}

Word compose(const Word& outer, const Word& inner) {
  Word w = outer;
  w.indices.insert(w.indices.end(), inner.indices.begin(), inner.indices.end());
  return w;
}

Word power_word(std::size_t i, std::size_t count) { return Word{std::vector<std::size_t>(count, i)}; }

Integer evaluate_word(const Presentation& pres, const Word& w, Integer x) {
  for (auto it = w.indices.rbegin(); it != w.indices.rend(); ++it) {
    x = ipow(x, pres.degree());
    x += pres.coeff(*it);
  }
  return x;
}

void validate_word(const Presentation& pres, const Word& w) {
  if (w.indices.empty()) throw std::invalid_argument("word must be nonempty");
  for (auto i : w.indices)
    if (i >= pres.size())
      throw std::invalid_argument("word index " + std::to_string(i) + " out of range for " +
                                  std::to_string(pres.size()) + " generators");
}

std::vector<Integer> parse_integer_list(const std::string& text) {
  std::vector<Integer> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(start, end - start);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw std::invalid_argument("empty entry in integer list '" + text + "'");
    std::size_t digits = (item[0] == '-' || item[0] == '+') ? 1 : 0;
    if (digits == item.size() ||
        item.find_first_not_of("0123456789", digits) != std::string::npos)
      throw std::invalid_argument("not an integer: '" + item + "'");
    if (item[0] == '+') item.erase(0, 1);
    out.emplace_back(item, 10);
    start = end + 1;
  }
  return out;
}

}  // namespace unicrit
