#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "cfw/criteria.hpp"
#include "cfw/spec_io.hpp"

namespace cfw {

struct DetectParams {
  DetectKind kind = DetectKind::either;
  std::size_t max_len = 256;
  mpq_class ratio_cap = 16;
};

std::string to_string(DetectKind k);
DetectKind parse_detect_kind(const std::string& text);  // SpecError on bad

struct PipelineResult {
  nlohmann::ordered_json report;
  bool any_indeterminate = false;
  bool any_failed = false;  // a decided exact-constant bound failed
};

/// 0 on success, 2 when an exact bound failed, 3 when indeterminate results
/// are present. Usage and contract errors surface as exceptions and are
/// mapped by the caller.
int exit_code_for(const PipelineResult& result);

/// "1\n2\n..." rendering of the first n letters.
std::string gen_lines(const SequenceSpec& spec, std::size_t n);

PipelineResult run_gen(const SequenceSpec& spec, std::size_t n);
PipelineResult run_complexity(const SequenceSpec& spec, std::size_t prefix_len,
                              std::size_t max_n);
PipelineResult run_detect(const SequenceSpec& spec, const DetectParams& params);
PipelineResult run_verify(const SequenceSpec& spec, const DetectParams& params,
                          std::size_t guard_depth,
                          std::optional<std::size_t> witness_index);
PipelineResult run_all(const SequenceSpec& spec, std::size_t n,
                       const DetectParams& params, std::size_t guard_depth);

}  // namespace cfw
