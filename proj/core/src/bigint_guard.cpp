#include "cfw/bigint_guard.hpp"

#include <cstdlib>
#include <string>

#include "cfw/errors.hpp"

namespace cfw::bigint_guard {

namespace {
std::optional<std::uint64_t> g_max_bits;
}

void set_max_bits(std::optional<std::uint64_t> bits) { g_max_bits = bits; }

std::optional<std::uint64_t> max_bits() { return g_max_bits; }

void init_from_env() {
  const char* raw = std::getenv("CFW_MAX_BIGINT_BITS");
  if (raw == nullptr) return;
  const std::string text(raw);
  std::size_t pos = 0;
  unsigned long long parsed = 0;
  try {
    parsed = std::stoull(text, &pos);
  } catch (const std::exception&) {
    throw SpecError("CFW_MAX_BIGINT_BITS",
                    "expected a positive integer, got \"" + text + "\"");
  }
  if (pos != text.size() || parsed == 0) {
    throw SpecError("CFW_MAX_BIGINT_BITS",
                    "expected a positive integer, got \"" + text + "\"");
  }
  g_max_bits = parsed;
}

void check(const mpz_class& value, const char* where) {
  if (!g_max_bits) return;
  const std::size_t bits = mpz_sizeinbase(value.get_mpz_t(), 2);
  if (bits > *g_max_bits) {
    throw BigintCapError(std::string(where) + ": operand of " +
                         std::to_string(bits) +
                         " bits exceeds CFW_MAX_BIGINT_BITS=" +
                         std::to_string(*g_max_bits));
  }
}

}  // namespace cfw::bigint_guard
