#pragma once

// Small-step execution in a Boolean-register environment and the "computes f" oracles.
//
// Input vectors are indexed by integers with b1 as the least significant bit: the vector
// (b1, ..., bn) has index sum(b_i << (i-1)).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nzt/instruction.hpp"

namespace nzt {

struct RegisterState {
  std::vector<bool> inputs;  // inputs[i-1] holds in:i
  bool output = false;
  std::map<std::uint32_t, bool> aux;  // absent entries hold 0

  /// Output 0, every aux 0.
  static RegisterState fresh(std::vector<bool> inputs);
  /// Fresh state for the input vector with the given index over n registers.
  static RegisterState fresh_from_index(std::uint32_t n, std::uint64_t index);

  bool aux_value(std::uint32_t i) const;
  friend bool operator==(const RegisterState&, const RegisterState&) = default;
};

enum class InactionReason : std::uint8_t { JumpZero, JumpPastEnd, FellOffEnd };

std::string to_string(InactionReason r);

struct Terminated {
  RegisterState final;
  std::size_t steps;
};

struct Inaction {
  InactionReason reason;
  std::size_t at;  // 1-based position of the instruction whose effect ended execution
  std::size_t steps;
};

using ExecOutcome = std::variant<Terminated, Inaction>;

struct TraceStep {
  std::size_t position;  // 1-based
  Instruction instruction;
  std::optional<bool> reply;  // absent for jumps and termination
};

using TraceSink = std::function<void(const TraceStep&)>;

/// Throws PreconditionError when X mentions in:i with i > init.inputs.size().
ExecOutcome execute(const InstructionSequence& x, RegisterState init, const TraceSink& trace = {});

class TruthFunction {
 public:
  /// Throws PreconditionError unless table.size() == 2^arity.
  TruthFunction(std::uint32_t arity, std::vector<bool> table);

  std::uint32_t arity() const noexcept { return arity_; }
  const std::vector<bool>& table() const noexcept { return table_; }
  bool operator()(std::uint64_t index) const { return table_[index]; }

 private:
  std::uint32_t arity_;
  std::vector<bool> table_;
};

/// n-ary OR. Throws PreconditionError for n = 0 or n > 30.
TruthFunction tstnz(std::uint32_t n);

struct CheckLimits {
  static constexpr std::uint32_t kDefaultCap = 24;
  static constexpr std::uint32_t kHardCap = 40;

  std::uint32_t cap = kDefaultCap;  // largest arity enumerated exhaustively
  unsigned jobs = 0;                // 0 selects std::thread::hardware_concurrency()
};

/// Throws CapExceeded when f.arity() > limits.cap, PreconditionError when X mentions in:j
/// with j > f.arity().
bool computes(const InstructionSequence& x, const TruthFunction& f, const CheckLimits& limits = {});

struct BruteForceReport {
  bool correct = false;
  /// Smallest failing input index; absent when correct or when n > 64.
  std::optional<std::uint64_t> counterexample;
  /// The same input as (b1, ..., bn); empty when correct.
  std::vector<bool> counterexample_inputs;
  /// Outcome on the counterexample.
  std::optional<ExecOutcome> outcome;
};

/// Decides whether X computes tstnz^n by enumerating all 2^n inputs. The reported
/// counterexample does not depend on limits.jobs.
BruteForceReport brute_force(const InstructionSequence& x, std::uint32_t n,
                             const CheckLimits& limits = {});
bool brute_force_check(const InstructionSequence& x, std::uint32_t n,
                       const CheckLimits& limits = {});

struct SymbolicLimits {
  std::size_t max_nodes = std::size_t{1} << 22;
  std::size_t max_states_per_position = 1024;
};

/// Exact decision of "X computes tstnz^n" by forward symbolic execution over reduced
/// ordered BDDs (variable order in:1 < ... < in:n), so it does not enumerate inputs. Reports
/// the same smallest counterexample as brute_force. Throws CapExceeded when the diagram or
/// the per-position state set outgrows `limits`, PreconditionError for n > 4096.
BruteForceReport symbolic_check(const InstructionSequence& x, std::uint32_t n,
                                const SymbolicLimits& limits = {});

}  // namespace nzt
