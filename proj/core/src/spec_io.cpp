#include "cfw/spec_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cfw/errors.hpp"

namespace cfw {

using nlohmann::json;
using nlohmann::ordered_json;

std::string to_string(SpecType t) {
  switch (t) {
    case SpecType::literal: return "literal";
    case SpecType::automatic: return "automatic";
    case SpecType::quasiperiodic: return "quasiperiodic";
    case SpecType::eventually_periodic: return "eventually_periodic";
  }
  return "literal";
}

namespace {

const json& require_field(const json& doc, const std::string& path,
                          const char* key) {
  if (!doc.is_object()) throw SpecError(path, "expected an object");
  const auto it = doc.find(key);
  if (it == doc.end()) {
    throw SpecError(path.empty() ? key : path + "." + key, "missing field");
  }
  return *it;
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::uint64_t parse_uint(const json& node, const std::string& path,
                         std::uint64_t min_value) {
  if (!node.is_number_unsigned() &&
      !(node.is_number_integer() && node.get<std::int64_t>() >= 0)) {
    throw SpecError(path, "expected a non-negative integer");
  }
  const std::uint64_t v = node.get<std::uint64_t>();
  if (v < min_value) {
    throw SpecError(path, "value " + std::to_string(v) + " below minimum " +
                              std::to_string(min_value));
  }
  return v;
}

FiniteWord parse_word(const json& node, const std::string& path,
                      bool allow_empty) {
  if (!node.is_array()) throw SpecError(path, "expected an array of letters");
  if (!allow_empty && node.empty()) throw SpecError(path, "must be non-empty");
  std::vector<Letter> letters;
  letters.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    letters.push_back(
        parse_uint(node[i], path + "[" + std::to_string(i) + "]", 1));
  }
  return FiniteWord(std::move(letters));
}

Dfao parse_automaton(const json& node, const std::string& path) {
  const std::uint64_t base =
      parse_uint(require_field(node, path, "base"), join(path, "base"), 2);
  if (base > 64) throw SpecError(join(path, "base"), "base above 64");
  const std::uint64_t states = parse_uint(
      require_field(node, path, "states"), join(path, "states"), 1);
  const std::uint64_t initial = parse_uint(
      require_field(node, path, "initial"), join(path, "initial"), 0);
  if (initial >= states) {
    throw SpecError(join(path, "initial"), "initial state out of range");
  }

  const json& trans = require_field(node, path, "transitions");
  const std::string tpath = join(path, "transitions");
  if (!trans.is_array() || trans.size() != states) {
    throw SpecError(tpath, "expected one row per state (" +
                               std::to_string(states) + ")");
  }
  std::vector<std::vector<std::size_t>> table(states);
  for (std::size_t s = 0; s < states; ++s) {
    const std::string rpath = tpath + "[" + std::to_string(s) + "]";
    if (!trans[s].is_array() || trans[s].size() != base) {
      throw SpecError(rpath, "expected one target per digit (" +
                                 std::to_string(base) + ")");
    }
    for (std::size_t d = 0; d < base; ++d) {
      const std::uint64_t target =
          parse_uint(trans[s][d], rpath + "[" + std::to_string(d) + "]", 0);
      if (target >= states) {
        throw SpecError(rpath + "[" + std::to_string(d) + "]",
                        "target state out of range");
      }
      table[s].push_back(static_cast<std::size_t>(target));
    }
  }

  const json& outs = require_field(node, path, "outputs");
  const std::string opath = join(path, "outputs");
  if (!outs.is_array() || outs.size() != states) {
    throw SpecError(opath, "expected one output per state (" +
                               std::to_string(states) + ")");
  }
  std::vector<Letter> outputs;
  for (std::size_t s = 0; s < states; ++s) {
    outputs.push_back(
        parse_uint(outs[s], opath + "[" + std::to_string(s) + "]", 1));
  }
  return Dfao(static_cast<std::uint32_t>(base),
              static_cast<std::size_t>(initial), std::move(table),
              std::move(outputs));
}

QuasiPeriodicSpec parse_quasi(const json& doc) {
  QuasiPeriodicSpec spec;
  if (doc.contains("head")) {
    spec.head = parse_word(doc["head"], "head", /*allow_empty=*/true);
  }
  const json& blocks = require_field(doc, "", "blocks");
  if (!blocks.is_array() || blocks.empty()) {
    throw SpecError("blocks", "expected a non-empty array");
  }
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const std::string bpath = "blocks[" + std::to_string(k) + "]";
    QuasiPeriodicBlock blk;
    blk.block = parse_word(require_field(blocks[k], bpath, "block"),
                           bpath + ".block", /*allow_empty=*/false);
    blk.repeat =
        parse_uint(require_field(blocks[k], bpath, "lambda"),
                   bpath + ".lambda", 1);
    spec.blocks.push_back(std::move(blk));
  }
  return spec;
}

ordered_json word_json(const FiniteWord& w) {
  ordered_json arr = ordered_json::array();
  for (Letter x : w) arr.push_back(x);
  return arr;
}

}  // namespace

SequenceSpec parse_spec(const json& doc) {
  const std::uint64_t version =
      parse_uint(require_field(doc, "", "schema_version"), "schema_version", 1);
  if (version != 1) {
    throw SpecError("schema_version",
                    "unsupported version " + std::to_string(version));
  }
  SequenceSpec spec;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw SpecError("name", "expected a string");
    spec.name = doc["name"].get<std::string>();
  }
  const json& type_node = require_field(doc, "", "type");
  if (!type_node.is_string()) throw SpecError("type", "expected a string");
  const std::string type = type_node.get<std::string>();
  if (type == "literal") {
    spec.type = SpecType::literal;
    spec.letters = parse_word(require_field(doc, "", "letters"), "letters",
                              /*allow_empty=*/false);
  } else if (type == "automatic") {
    spec.type = SpecType::automatic;
    spec.dfao = parse_automaton(require_field(doc, "", "automaton"),
                                "automaton");
  } else if (type == "quasiperiodic") {
    spec.type = SpecType::quasiperiodic;
    spec.quasi = parse_quasi(doc);
  } else if (type == "eventually_periodic") {
    spec.type = SpecType::eventually_periodic;
    if (doc.contains("preperiod")) {
      spec.preperiod =
          parse_word(doc["preperiod"], "preperiod", /*allow_empty=*/true);
    }
    spec.period = parse_word(require_field(doc, "", "period"), "period",
                             /*allow_empty=*/false);
  } else {
    throw SpecError("type", "unknown type \"" + type +
                                "\"; expected literal, automatic, "
                                "quasiperiodic or eventually_periodic");
  }
  return spec;
}

SequenceSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError(path, "cannot open spec file");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw SpecError(path, std::string("invalid JSON: ") + e.what());
  }
  return parse_spec(doc);
}

std::unique_ptr<SequenceSource> SequenceSpec::make_source() const {
  switch (type) {
    case SpecType::literal:
      return std::make_unique<LiteralSource>(letters);
    case SpecType::automatic:
      return std::make_unique<AutomaticSource>(*dfao);
    case SpecType::quasiperiodic:
      return std::make_unique<QuasiPeriodicSource>(*quasi);
    case SpecType::eventually_periodic:
      return std::make_unique<EventuallyPeriodicSource>(preperiod, period);
  }
  throw ContractError("unreachable spec type");
}

ordered_json SequenceSpec::echo() const {
  ordered_json out;
  out["schema_version"] = 1;
  out["name"] = name;
  out["type"] = to_string(type);
  switch (type) {
    case SpecType::literal:
      out["letters"] = word_json(letters);
      break;
    case SpecType::automatic: {
      ordered_json automaton;
      automaton["base"] = dfao->base();
      automaton["states"] = dfao->state_count();
      automaton["initial"] = dfao->initial_state();
      automaton["transitions"] = dfao->transitions();
      automaton["outputs"] = dfao->outputs();
      out["automaton"] = std::move(automaton);
      break;
    }
    case SpecType::quasiperiodic: {
      out["head"] = word_json(quasi->head);
      ordered_json blocks = ordered_json::array();
      for (const auto& blk : quasi->blocks) {
        ordered_json b;
        b["block"] = word_json(blk.block);
        b["lambda"] = blk.repeat;
        blocks.push_back(std::move(b));
      }
      out["blocks"] = std::move(blocks);
      break;
    }
    case SpecType::eventually_periodic:
      out["preperiod"] = word_json(preperiod);
      out["period"] = word_json(period);
      break;
  }
  return out;
}

}  // namespace cfw
