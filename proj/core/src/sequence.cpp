#include "cfw/sequence.hpp"

#include <string>

#include "cfw/errors.hpp"

namespace cfw {

void SequenceSource::check_index(std::uint64_t ell) const {
  if (ell < 1) throw ContractError("sequence indices start at 1");
  const auto bound = length_bound();
  if (bound && ell > *bound) {
    throw ContractError("index " + std::to_string(ell) +
                        " beyond source length " + std::to_string(*bound));
  }
}

FiniteWord SequenceSource::prefix(std::size_t n) const {
  std::vector<Letter> out;
  out.reserve(n);
  for (std::uint64_t ell = 1; ell <= n; ++ell) out.push_back(letter(ell));
  return FiniteWord(std::move(out));
}

LiteralSource::LiteralSource(FiniteWord letters)
    : letters_(std::move(letters)) {}

std::optional<std::uint64_t> LiteralSource::length_bound() const {
  return letters_.size();
}

Letter LiteralSource::letter(std::uint64_t ell) const {
  check_index(ell);
  return letters_[static_cast<std::size_t>(ell - 1)];
}

FiniteWord LiteralSource::prefix(std::size_t n) const {
  if (n > letters_.size()) {
    throw ContractError("prefix of " + std::to_string(n) +
                        " letters requested from literal source of length " +
                        std::to_string(letters_.size()));
  }
  return letters_.prefix(n);
}

AutomaticSource::AutomaticSource(Dfao dfao) : dfao_(std::move(dfao)) {}

std::optional<std::uint64_t> AutomaticSource::length_bound() const {
  return std::nullopt;
}

Letter AutomaticSource::letter(std::uint64_t ell) const {
  check_index(ell);
  return dfao_.term(ell);
}

EventuallyPeriodicSource::EventuallyPeriodicSource(FiniteWord preperiod,
                                                   FiniteWord period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw ContractError("period must be non-empty");
}

std::optional<std::uint64_t> EventuallyPeriodicSource::length_bound() const {
  return std::nullopt;
}

Letter EventuallyPeriodicSource::letter(std::uint64_t ell) const {
  check_index(ell);
  const std::uint64_t i = ell - 1;
  if (i < preperiod_.size()) return preperiod_[static_cast<std::size_t>(i)];
  return period_[static_cast<std::size_t>((i - preperiod_.size()) %
                                          period_.size())];
}

void QuasiPeriodicSpec::validate() const {
  if (blocks.empty()) {
    throw ContractError("quasi-periodic spec needs at least one block");
  }
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (blocks[k].block.empty()) {
      throw ContractError("block " + std::to_string(k) + " is empty");
    }
    if (blocks[k].repeat < 1) {
      throw ContractError("block " + std::to_string(k) +
                          " has repeat count 0");
    }
  }
}

std::uint64_t QuasiPeriodicSpec::total_length() const {
  std::uint64_t total = head.size();
  for (const auto& b : blocks) total += b.repeat * b.block.size();
  return total;
}

std::uint64_t QuasiPeriodicSpec::block_start(std::size_t k) const {
  std::uint64_t start = head.size() + 1;
  for (std::size_t i = 0; i < k; ++i)
    start += blocks[i].repeat * blocks[i].block.size();
  return start;
}

QuasiPeriodicSource::QuasiPeriodicSource(QuasiPeriodicSpec spec)
    : spec_(std::move(spec)) {
  spec_.validate();
  std::vector<Letter> all(spec_.head.begin(), spec_.head.end());
  all.reserve(static_cast<std::size_t>(spec_.total_length()));
  for (const auto& b : spec_.blocks) {
    for (std::uint64_t rep = 0; rep < b.repeat; ++rep)
      all.insert(all.end(), b.block.begin(), b.block.end());
  }
  materialized_ = FiniteWord(std::move(all));
}

std::optional<std::uint64_t> QuasiPeriodicSource::length_bound() const {
  return materialized_.size();
}

Letter QuasiPeriodicSource::letter(std::uint64_t ell) const {
  check_index(ell);
  return materialized_[static_cast<std::size_t>(ell - 1)];
}

FiniteWord QuasiPeriodicSource::prefix(std::size_t n) const {
  if (n > materialized_.size()) {
    throw ContractError("prefix of " + std::to_string(n) +
                        " letters requested from quasi-periodic source of length " +
                        std::to_string(materialized_.size()));
  }
  return materialized_.prefix(n);
}

}  // namespace cfw
