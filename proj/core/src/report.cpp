#include "cfw/report.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

namespace cfw {

using nlohmann::ordered_json;

std::string rational_str(const mpq_class& q) { return q.get_str(); }

std::string integer_str(const mpz_class& z) { return z.get_str(); }

std::string diagnostic_str(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9e", x);
  return buf;
}

ordered_json interval_json(const RationalInterval& i) {
  ordered_json out;
  out["lo"] = rational_str(i.lo());
  out["hi"] = rational_str(i.hi());
  return out;
}

ordered_json word_letters_json(const FiniteWord& w) {
  ordered_json arr = ordered_json::array();
  for (Letter x : w) arr.push_back(x);
  return arr;
}

ordered_json witness_json(const Witness& w, std::size_t index) {
  ordered_json out;
  out["index"] = index;
  out["kind"] = w.kind == WitnessKind::repeat ? "repeat" : "mirror";
  out["prefix_len"] = w.prefix_len;
  out["w_len"] = w.w_part.size();
  out["u_len"] = w.u_part.size();
  out["v_len"] = w.v_part.size();
  out["w"] = word_letters_json(w.w_part);
  out["u"] = word_letters_json(w.u_part);
  out["v"] = word_letters_json(w.v_part);
  out["ratio_v_u"] = rational_str(w.ratio_v_u);
  out["ratio_w_u"] = rational_str(w.ratio_w_u);
  return out;
}

ordered_json chain_json(const WitnessChain& chain) {
  ordered_json out;
  out["length"] = chain.witnesses.size();
  out["sup_ratio_v_u"] = rational_str(chain.sup_ratio_v_u);
  out["sup_ratio_w_u"] = rational_str(chain.sup_ratio_w_u);
  ordered_json periodic;
  periodic["flag"] = chain.periodicity.periodic;
  if (chain.periodicity.periodic) {
    periodic["preperiod"] = chain.periodicity.preperiod;
    periodic["period"] = chain.periodicity.period;
  }
  out["periodic_prefix"] = std::move(periodic);
  ordered_json eps = ordered_json::array();
  for (const auto& e : chain.epsilon_stream) eps.push_back(rational_str(e));
  out["epsilon_stream"] = std::move(eps);
  ordered_json ws = ordered_json::array();
  for (std::size_t i = 0; i < chain.witnesses.size(); ++i) {
    ws.push_back(witness_json(chain.witnesses[i], i));
  }
  out["witnesses"] = std::move(ws);
  return out;
}

ordered_json record_json(const VerificationRecord& rec,
                         std::size_t witness_index) {
  ordered_json out;
  out["witness_index"] = witness_index;
  out["kind"] =
      rec.witness.kind == WitnessKind::repeat ? "repeat" : "mirror";
  ordered_json idx;
  if (rec.witness.kind == WitnessKind::repeat) {
    idx["w"] = rec.w;
    idx["u"] = rec.u;
    idx["v"] = rec.v;
  } else {
    idx["r"] = rec.r;
    idx["s"] = rec.s;
    idx["t"] = rec.t;
  }
  out["indices"] = std::move(idx);
  out["agreement_len"] = rec.agreement_len;
  out["guard_depth"] = rec.guard_depth;

  ordered_json snap = ordered_json::array();
  for (const auto& c : rec.snapshot) {
    ordered_json row;
    row["index"] = c.index;
    row["p"] = integer_str(c.p);
    row["q"] = integer_str(c.q);
    snap.push_back(std::move(row));
  }
  out["snapshot"] = std::move(snap);

  if (rec.palin_q) {
    ordered_json palin;
    palin["P"] = integer_str(*rec.palin_p);
    palin["Q"] = integer_str(*rec.palin_q);
    palin["P_prime"] = integer_str(*rec.palin_pp);
    palin["Q_prime"] = integer_str(*rec.palin_qp);
    out["palindromic"] = std::move(palin);
  }

  ordered_json checks = ordered_json::array();
  for (const auto& check : rec.checks) {
    ordered_json row;
    row["id"] = check.id;
    row["lhs"] = interval_json(check.lhs);
    row["rhs"] = rational_str(check.rhs);
    row["strict"] = check.strict;
    row["outcome"] = to_string(check.outcome);
    checks.push_back(std::move(row));
  }
  out["checks"] = std::move(checks);

  ordered_json ratios = ordered_json::array();
  for (const auto& ratio : rec.ratios) {
    ordered_json row;
    row["id"] = ratio.id;
    row["value"] = interval_json(ratio.value);
    row["scale"] = rational_str(ratio.scale);
    row["ratio"] = interval_json(ratio.ratio);
    ratios.push_back(std::move(row));
  }
  out["ratios"] = std::move(ratios);

  ordered_json forms = ordered_json::array();
  for (const auto& form : rec.forms) {
    ordered_json row;
    row["id"] = form.id;
    row["value"] = interval_json(form.value);
    forms.push_back(std::move(row));
  }
  out["forms"] = std::move(forms);

  out["product"] = interval_json(rec.product);
  out["product_base"] = integer_str(rec.product_base);
  out["product_positive"] = to_string(rec.product_positive);
  if (rec.instant_exponent) {
    out["instant_exponent"] = rational_str(*rec.instant_exponent);
  } else {
    out["instant_exponent"] = nullptr;
  }
  out["lprime_branch"] = rec.lprime_branch;
  out["indeterminate"] = rec.any_indeterminate;
  return out;
}

ordered_json quasi_report_json(const QuasiPeriodicReport& report,
                               const mpq_class& eps) {
  ordered_json out;
  out["eps"] = rational_str(eps);
  out["degenerate"] = report.degenerate;
  if (report.k0) {
    out["k0"] = *report.k0;
  } else {
    out["k0"] = nullptr;
  }
  ordered_json ratios = ordered_json::array();
  for (const auto& r : report.lambda_ratios) ratios.push_back(rational_str(r));
  out["lambda_ratios"] = std::move(ratios);
  if (report.ratio_infimum) {
    out["ratio_infimum"] = rational_str(*report.ratio_infimum);
  } else {
    out["ratio_infimum"] = nullptr;
  }
  ordered_json blocks = ordered_json::array();
  for (const auto& row : report.blocks) {
    ordered_json b;
    b["k"] = row.k;
    b["n_k"] = row.n_k;
    b["r_k"] = row.r_k;
    b["lambda_k"] = row.lambda_k;
    b["witness_emitted"] = row.witness_emitted;
    b["prefix_check"] = row.prefix_check;
    b["u_lower_bounds"] = row.u_lower_bounds;
    b["growth_qualified"] = row.growth_qualified;
    b["w_upper_bound"] = row.w_upper_bound;
    blocks.push_back(std::move(b));
  }
  out["blocks"] = std::move(blocks);
  out["chain"] = chain_json(report.chain);
  return out;
}

ordered_json report_envelope(const std::string& command, ordered_json params,
                             ordered_json spec_echo, ordered_json results) {
  ordered_json out;
  ordered_json tool;
  tool["name"] = kToolName;
  tool["version"] = kToolVersion;
  tool["report_schema"] = kReportSchema;
  out["tool"] = std::move(tool);
  ordered_json cmd;
  cmd["name"] = command;
  cmd["params"] = std::move(params);
  out["command"] = std::move(cmd);
  out["spec"] = std::move(spec_echo);
  out["results"] = std::move(results);
  return out;
}

std::string render_report(const ordered_json& doc) {
  return doc.dump(2) + "\n";
}

}  // namespace cfw
