#pragma once

#include <memory>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "cfw/automatic.hpp"
#include "cfw/sequence.hpp"
#include "cfw/word.hpp"

namespace cfw {

enum class SpecType { literal, automatic, quasiperiodic, eventually_periodic };

std::string to_string(SpecType t);

/// Parsed and validated sequence-spec document (schema_version 1). One of
/// the payloads is populated according to `type`.
struct SequenceSpec {
  SpecType type = SpecType::literal;
  std::string name;

  FiniteWord letters;                     // literal
  std::optional<Dfao> dfao;               // automatic
  std::optional<QuasiPeriodicSpec> quasi; // quasiperiodic
  FiniteWord preperiod;                   // eventually_periodic
  FiniteWord period;

  std::unique_ptr<SequenceSource> make_source() const;

  /// Canonical echo of the spec for reports; identical inputs echo
  /// byte-identically.
  nlohmann::ordered_json echo() const;
};

/// Parses a spec document. Errors carry the offending field path.
SequenceSpec parse_spec(const nlohmann::json& doc);

/// Reads and parses a spec file (JSON text).
SequenceSpec load_spec_file(const std::string& path);

}  // namespace cfw
