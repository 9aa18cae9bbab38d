#pragma once

// Polynomial correctness checks for good sequences: Y ; out.set:1 ; ! where Y holds only
// read instructions and jumps #l with l > 0. Very good sequences also read each register at
// most once.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "nzt/instruction.hpp"
#include "nzt/transforms.hpp"

namespace nzt {

struct GoodnessClass {
  bool is_good = false;
  bool is_very_good = false;
  std::map<std::uint32_t, std::size_t> multiply_read;  // registers read at least twice
};

GoodnessClass classify(const InstructionSequence& x);

/// Whether X terminates with output 1 for every content of the registers it reads.
/// Linear suffix DP; `consulted`, when given, receives the number of positions inspected.
/// Throws PreconditionError unless X is very good or is the lone suffix "!".
bool always_one(const InstructionSequence& x, std::size_t* consulted = nullptr);

struct VeryGoodReport {
  bool correct = false;
  int failing_step = 0;  // 1: all-zero input, 2: some register fixed to 1
  std::optional<std::uint32_t> failing_register;
};

/// Whether X computes tstnz^n. Requires X very good and iregs(X) = {1..n}.
VeryGoodReport check_very_good_report(const InstructionSequence& x, std::uint32_t n);
bool check_very_good(const InstructionSequence& x, std::uint32_t n);

struct GoodReport {
  bool correct = false;
  std::vector<std::uint32_t> multiply_read;  // R, ascending
  std::uint64_t m = 0;                       // len(X) - min_len(n)
  int failing_step = 0;                      // 1: |R| >= 6m, 2: alpha_0, 3: some other alpha
  std::optional<PartialAssignment> failing_alpha;
};

/// Whether X computes tstnz^n. Requires X good, iregs(X) = {1..n}, no other input register
/// mentioned, and len(X) > min_len(n). Throws CapExceeded when |R| > 30.
GoodReport check_good_report(const InstructionSequence& x, std::uint32_t n);
bool check_good(const InstructionSequence& x, std::uint32_t n);

}  // namespace nzt
