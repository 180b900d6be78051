#include "cfw/pipeline.hpp"

#include <algorithm>

#include "cfw/errors.hpp"
#include "cfw/factor_index.hpp"
#include "cfw/report.hpp"
#include "cfw/witness.hpp"

namespace cfw {

using nlohmann::ordered_json;

std::string to_string(DetectKind k) {
  switch (k) {
    case DetectKind::repeat: return "repeat";
    case DetectKind::mirror: return "mirror";
    case DetectKind::either: return "either";
  }
  return "either";
}

DetectKind parse_detect_kind(const std::string& text) {
  if (text == "repeat") return DetectKind::repeat;
  if (text == "mirror") return DetectKind::mirror;
  if (text == "either") return DetectKind::either;
  throw SpecError("kind", "expected repeat, mirror or either, got \"" + text +
                              "\"");
}

int exit_code_for(const PipelineResult& result) {
  if (result.any_failed) return 2;
  if (result.any_indeterminate) return 3;
  return 0;
}

namespace {

std::size_t clamp_to_source(const SequenceSpec& spec, std::size_t wanted) {
  const auto source = spec.make_source();
  const auto bound = source->length_bound();
  if (!bound) return wanted;
  return std::min<std::size_t>(wanted, static_cast<std::size_t>(*bound));
}

ordered_json detect_params_json(const DetectParams& params) {
  ordered_json out;
  out["kind"] = to_string(params.kind);
  out["max_len"] = params.max_len;
  out["ratio_cap"] = rational_str(params.ratio_cap);
  return out;
}

// Growth premise for the quasi-periodic report, derived from the finite
// lambda stream. The premise lambda_{k+1} > (1 + eps) lambda_k is strict, so
// eps is placed strictly below the observed infimum minus one.
mpq_class observed_eps(const QuasiPeriodicSpec& spec) {
  mpq_class inf = 0;
  bool first = true;
  for (std::size_t k = 0; k + 1 < spec.blocks.size(); ++k) {
    mpq_class r(static_cast<unsigned long>(spec.blocks[k + 1].repeat),
                static_cast<unsigned long>(spec.blocks[k].repeat));
    r.canonicalize();
    if (first || r < inf) inf = r;
    first = false;
  }
  mpq_class eps = (inf - 1) / 2;
  if (eps <= 0) eps = 1;  // no growth visible; nothing will qualify
  return eps;
}

ordered_json complexity_results(const SequenceSpec& spec,
                                std::size_t prefix_len, std::size_t max_n) {
  if (max_n < 1 || max_n > prefix_len) {
    throw ContractError("complexity range needs 1 <= max_n <= prefix_len");
  }
  const auto source = spec.make_source();
  const FactorIndex idx(source->prefix(prefix_len));
  ordered_json profile = ordered_json::array();
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::size_t count = idx.distinct_factor_count(n);
    mpq_class ratio(static_cast<unsigned long>(count),
                    static_cast<unsigned long>(n));
    ratio.canonicalize();
    ordered_json row;
    row["n"] = n;
    row["count"] = count;
    row["count_over_n"] = rational_str(ratio);
    profile.push_back(std::move(row));
  }
  ordered_json out;
  out["prefix_len"] = prefix_len;
  out["profile"] = std::move(profile);
  return out;
}

struct VerifySection {
  ordered_json results;
  bool any_indeterminate = false;
  bool any_failed = false;
};

VerifySection verify_section(const SequenceSpec& spec,
                             const DetectParams& params,
                             std::size_t guard_depth,
                             std::optional<std::size_t> witness_index) {
  const auto source = spec.make_source();
  const WitnessChain chain =
      detect_chain(*source, params.kind, params.max_len, params.ratio_cap);

  VerifySection section;
  std::vector<VerificationRecord> records;
  ordered_json record_rows = ordered_json::array();

  std::vector<std::size_t> selection;
  if (witness_index) {
    if (*witness_index >= chain.witnesses.size()) {
      throw ContractError("witness index " + std::to_string(*witness_index) +
                          " out of range; chain has " +
                          std::to_string(chain.witnesses.size()) +
                          " witnesses");
    }
    selection.push_back(*witness_index);
  } else {
    for (std::size_t i = 0; i < chain.witnesses.size(); ++i)
      selection.push_back(i);
  }

  for (const std::size_t i : selection) {
    const Witness& witness = chain.witnesses[i];
    VerificationRecord rec =
        witness.kind == WitnessKind::repeat
            ? verify_repeat(*source, witness, guard_depth)
            : verify_mirror(*source, witness, guard_depth);
    section.any_indeterminate |= rec.any_indeterminate;
    for (const auto& check : rec.checks) {
      section.any_failed |= check.outcome == Outcome::fail;
    }
    record_rows.push_back(record_json(rec, i));
    records.push_back(std::move(rec));
  }

  ordered_json diagnostics;
  {
    const std::size_t delta_len =
        std::min<std::size_t>(clamp_to_source(spec, params.max_len), 128);
    if (delta_len >= 1) {
      const DeltaEstimate est =
          estimate_delta(source->prefix(delta_len));
      ordered_json delta;
      delta["range_len"] = delta_len;
      delta["m_hat"] = rational_str(est.m_hat);
      delta["delta_hat"] = diagnostic_str(est.delta_hat);
      diagnostics["delta"] = std::move(delta);
    }
  }
  try {
    diagnostics["epsilon_hat"] = rational_str(exponent_fit(records));
  } catch (const ContractError&) {
    diagnostics["epsilon_hat"] = nullptr;
  }

  section.results["chain"] = chain_json(chain);
  section.results["records"] = std::move(record_rows);
  section.results["diagnostics"] = std::move(diagnostics);
  return section;
}

}  // namespace

std::string gen_lines(const SequenceSpec& spec, std::size_t n) {
  const auto source = spec.make_source();
  const FiniteWord word = source->prefix(n);
  std::string out;
  for (Letter x : word) {
    out += std::to_string(x);
    out += '\n';
  }
  return out;
}

PipelineResult run_gen(const SequenceSpec& spec, std::size_t n) {
  if (n < 1) throw ContractError("gen needs n >= 1");
  const auto source = spec.make_source();
  ordered_json params;
  params["n"] = n;
  ordered_json results;
  results["letters"] = word_letters_json(source->prefix(n));
  PipelineResult res;
  res.report = report_envelope("gen", std::move(params), spec.echo(),
                               std::move(results));
  return res;
}

PipelineResult run_complexity(const SequenceSpec& spec, std::size_t prefix_len,
                              std::size_t max_n) {
  ordered_json params;
  params["prefix_len"] = prefix_len;
  params["max_n"] = max_n;
  PipelineResult res;
  res.report =
      report_envelope("complexity", std::move(params), spec.echo(),
                      complexity_results(spec, prefix_len, max_n));
  return res;
}

PipelineResult run_detect(const SequenceSpec& spec,
                          const DetectParams& params) {
  const auto source = spec.make_source();
  const WitnessChain chain =
      detect_chain(*source, params.kind, params.max_len, params.ratio_cap);
  ordered_json results;
  results["chain"] = chain_json(chain);
  if (spec.type == SpecType::quasiperiodic) {
    const mpq_class eps = observed_eps(*spec.quasi);
    results["quasi_periodic"] =
        quasi_report_json(quasi_periodic_witnesses(*spec.quasi, eps), eps);
  }
  PipelineResult res;
  res.report = report_envelope("detect", detect_params_json(params),
                               spec.echo(), std::move(results));
  return res;
}

PipelineResult run_verify(const SequenceSpec& spec, const DetectParams& params,
                          std::size_t guard_depth,
                          std::optional<std::size_t> witness_index) {
  ordered_json cmd_params = detect_params_json(params);
  cmd_params["guard_depth"] = guard_depth;
  if (witness_index) {
    cmd_params["witness_index"] = *witness_index;
  } else {
    cmd_params["witness_index"] = nullptr;
  }
  VerifySection section =
      verify_section(spec, params, guard_depth, witness_index);
  PipelineResult res;
  res.any_indeterminate = section.any_indeterminate;
  res.any_failed = section.any_failed;
  res.report = report_envelope("verify", std::move(cmd_params), spec.echo(),
                               std::move(section.results));
  return res;
}

PipelineResult run_all(const SequenceSpec& spec, std::size_t n,
                       const DetectParams& params, std::size_t guard_depth) {
  if (n < 1) throw ContractError("all needs n >= 1");
  ordered_json cmd_params = detect_params_json(params);
  cmd_params["n"] = n;
  cmd_params["guard_depth"] = guard_depth;

  const auto source = spec.make_source();
  ordered_json results;
  const std::size_t gen_len = clamp_to_source(spec, n);
  results["letters"] = word_letters_json(source->prefix(gen_len));
  results["complexity"] =
      complexity_results(spec, gen_len, std::min<std::size_t>(gen_len, 64));

  VerifySection section =
      verify_section(spec, params, guard_depth, std::nullopt);
  for (auto& [key, value] : section.results.items()) {
    results[key] = std::move(value);
  }
  if (spec.type == SpecType::quasiperiodic) {
    const mpq_class eps = observed_eps(*spec.quasi);
    results["quasi_periodic"] =
        quasi_report_json(quasi_periodic_witnesses(*spec.quasi, eps), eps);
  }

  PipelineResult res;
  res.any_indeterminate = section.any_indeterminate;
  res.any_failed = section.any_failed;
  res.report = report_envelope("all", std::move(cmd_params), spec.echo(),
                               std::move(results));
  return res;
}

}  // namespace cfw
