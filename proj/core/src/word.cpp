#include "cfw/word.hpp"

#include <algorithm>
#include <stdexcept>

#include "cfw/errors.hpp"

namespace cfw {

namespace {
void require_positive_letters(const std::vector<Letter>& letters) {
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] < 1) {
      throw ContractError("letter at position " + std::to_string(i) +
                          " is " + std::to_string(letters[i]) +
                          "; partial quotients must be >= 1");
    }
  }
}
}  // namespace

FiniteWord::FiniteWord(std::initializer_list<Letter> letters)
    : letters_(letters) {
  require_positive_letters(letters_);
}

FiniteWord::FiniteWord(std::vector<Letter> letters)
    : letters_(std::move(letters)) {
  require_positive_letters(letters_);
}

FiniteWord FiniteWord::prefix(std::size_t n) const {
  if (n > size()) {
    throw ContractError("prefix length " + std::to_string(n) +
                        " exceeds word length " + std::to_string(size()));
  }
  return FiniteWord(std::vector<Letter>(letters_.begin(),
                                        letters_.begin() + n));
}

FiniteWord FiniteWord::factor(std::size_t pos, std::size_t len) const {
  auto v = factor_view(pos, len);
  return FiniteWord(std::vector<Letter>(v.begin(), v.end()));
}

std::span<const Letter> FiniteWord::factor_view(std::size_t pos,
                                                std::size_t len) const {
  if (pos > size() || len > size() - pos) {
    throw ContractError("factor [" + std::to_string(pos) + ", " +
                        std::to_string(pos + len) + ") out of range for word of length " +
                        std::to_string(size()));
  }
  return std::span<const Letter>(letters_).subspan(pos, len);
}

std::string FiniteWord::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

FiniteWord concat(const FiniteWord& a, const FiniteWord& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return FiniteWord(std::move(out));
}

FiniteWord mirror(const FiniteWord& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  return FiniteWord(std::move(out));
}

bool is_palindrome(const FiniteWord& w) {
  const auto& v = w.letters();
  return std::equal(v.begin(), v.begin() + v.size() / 2, v.rbegin());
}

FiniteWord rational_power(const FiniteWord& z, const mpq_class& r) {
  if (z.empty()) throw ContractError("rational power of an empty word");
  if (r <= 0) throw ContractError("rational power exponent must be > 0");
  const mpq_class total_q = r * mpq_class(static_cast<unsigned long>(z.size()));
  if (total_q.get_den() != 1) {
    throw ContractError("exponent " + r.get_str() + " times length " +
                        std::to_string(z.size()) + " is not an integer");
  }
  if (!total_q.get_num().fits_ulong_p()) {
    throw ContractError("rational power result too long");
  }
  const std::size_t total = total_q.get_num().get_ui();
  std::vector<Letter> out;
  out.reserve(total);
  for (std::size_t i = 0; i < total; ++i) out.push_back(z[i % z.size()]);
  return FiniteWord(std::move(out));
}

FiniteWord integer_power(const FiniteWord& z, std::uint64_t k) {
  std::vector<Letter> out;
  out.reserve(z.size() * k);
  for (std::uint64_t rep = 0; rep < k; ++rep)
    out.insert(out.end(), z.begin(), z.end());
  return FiniteWord(std::move(out));
}

}  // namespace cfw
