#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>

namespace cfw::bigint_guard {

/// Process-wide cap on integer operand size, in bits. Unset means unlimited.
/// The continued-fraction engine checks denominators against the cap as they
/// grow; exceeding it raises BigintCapError with the offending size.
void set_max_bits(std::optional<std::uint64_t> bits);
std::optional<std::uint64_t> max_bits();

/// Reads the CFW_MAX_BIGINT_BITS environment variable (if present) into the
/// process-wide cap. Invalid values raise SpecError.
void init_from_env();

void check(const mpz_class& value, const char* where);

}  // namespace cfw::bigint_guard
