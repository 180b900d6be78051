#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "cfw/automatic.hpp"
#include "cfw/word.hpp"

namespace cfw {

/// Pull-based producer of the prefix of an infinite (or long finite) word of
/// partial quotients. Letters are 1-based to match the a_1 a_2 ... indexing
/// of continued fractions. Implementations are immutable and pure.
class SequenceSource {
 public:
  virtual ~SequenceSource() = default;

  /// Letters available from this source; nullopt when unbounded.
  virtual std::optional<std::uint64_t> length_bound() const = 0;

  /// a_ell, ell >= 1. Throws ContractError past length_bound().
  virtual Letter letter(std::uint64_t ell) const = 0;

  /// a_1 ... a_n.
  virtual FiniteWord prefix(std::size_t n) const;

 protected:
  void check_index(std::uint64_t ell) const;
};

class LiteralSource final : public SequenceSource {
 public:
  explicit LiteralSource(FiniteWord letters);
  std::optional<std::uint64_t> length_bound() const override;
  Letter letter(std::uint64_t ell) const override;
  FiniteWord prefix(std::size_t n) const override;

 private:
  FiniteWord letters_;
};

class AutomaticSource final : public SequenceSource {
 public:
  explicit AutomaticSource(Dfao dfao);
  std::optional<std::uint64_t> length_bound() const override;
  Letter letter(std::uint64_t ell) const override;
  const Dfao& dfao() const noexcept { return dfao_; }

 private:
  Dfao dfao_;
};

class EventuallyPeriodicSource final : public SequenceSource {
 public:
  EventuallyPeriodicSource(FiniteWord preperiod, FiniteWord period);
  std::optional<std::uint64_t> length_bound() const override;
  Letter letter(std::uint64_t ell) const override;
  const FiniteWord& preperiod() const noexcept { return preperiod_; }
  const FiniteWord& period() const noexcept { return period_; }

 private:
  FiniteWord preperiod_;
  FiniteWord period_;
};

/// One repeated block of a quasi-periodic expansion: `block` of length r_k
/// written `repeat` = lambda_k times.
struct QuasiPeriodicBlock {
  FiniteWord block;
  std::uint64_t repeat = 1;
};

/// Quasi-periodic word a_1 .. a_{n_0 - 1} (head) followed by each block_k
/// repeated lambda_k times, so n_{k+1} = n_k + lambda_k r_k.
struct QuasiPeriodicSpec {
  FiniteWord head;
  std::vector<QuasiPeriodicBlock> blocks;

  void validate() const;  // throws ContractError on empty block or repeat 0
  std::uint64_t total_length() const;
  /// 1-based start index n_k of block k.
  std::uint64_t block_start(std::size_t k) const;
};

class QuasiPeriodicSource final : public SequenceSource {
 public:
  explicit QuasiPeriodicSource(QuasiPeriodicSpec spec);
  std::optional<std::uint64_t> length_bound() const override;
  Letter letter(std::uint64_t ell) const override;
  FiniteWord prefix(std::size_t n) const override;
  const QuasiPeriodicSpec& spec() const noexcept { return spec_; }

 private:
  QuasiPeriodicSpec spec_;
  FiniteWord materialized_;
};

}  // namespace cfw
