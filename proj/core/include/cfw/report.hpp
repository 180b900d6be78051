#pragma once

#include <gmpxx.h>

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "cfw/criteria.hpp"
#include "cfw/rational_interval.hpp"
#include "cfw/witness.hpp"

namespace cfw {

inline constexpr const char* kToolName = "cfw";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

/// Exact values serialize canonically ("7/10", "3"); floats never appear in
/// reports, diagnostics go through a fixed "%.9e" rendering.
std::string rational_str(const mpq_class& q);
std::string integer_str(const mpz_class& z);
std::string diagnostic_str(double x);

nlohmann::ordered_json interval_json(const RationalInterval& i);
nlohmann::ordered_json word_letters_json(const FiniteWord& w);
nlohmann::ordered_json witness_json(const Witness& w, std::size_t index);
nlohmann::ordered_json chain_json(const WitnessChain& chain);
nlohmann::ordered_json record_json(const VerificationRecord& rec,
                                   std::size_t witness_index);
nlohmann::ordered_json quasi_report_json(const QuasiPeriodicReport& report,
                                         const mpq_class& eps);

/// The fixed report envelope: tool block, command block, spec echo, results.
nlohmann::ordered_json report_envelope(const std::string& command,
                                       nlohmann::ordered_json params,
                                       nlohmann::ordered_json spec_echo,
                                       nlohmann::ordered_json results);

/// dump(2) plus trailing newline; the single rendering used everywhere so
/// identical documents are byte-identical.
std::string render_report(const nlohmann::ordered_json& doc);

}  // namespace cfw
