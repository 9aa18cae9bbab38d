#pragma once

// Syntactic decision of membership in the families of length-minimal OR programs.
//
// TSTNZpc(n): block structure, odd n with one isolated block at index m,
//   pair block      -in:a.get ; +in:b.get ; phi
//   isolated block  +in:a.get ; phi
// followed by a final `!`, where every register 1..n is read exactly once, every phi is a
// jump or an out.set:1 form, every jump chain ends on an out.set:1 form, and the last phi is
// out.set:1 or +out.set:1.
//
// TSTNZpce(n) adds sequences with a single register read twice, at positions k and l, such
// that X[l] = +in:i.get, X with position l replaced by #2 is in TSTNZpc(n), and a condition
// on jump reachability of l whose reading is selectable (PceReading).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nzt/instruction.hpp"

namespace nzt {

struct PatternBlock {
  bool isolated = false;
  std::size_t first_read = 0;  // 1-based
  std::size_t phi = 0;         // 1-based
};

struct PatternReport {
  std::uint32_t n = 0;
  bool odd = false;
  std::optional<std::uint32_t> m;  // pair blocks before the isolated one (odd n)
  std::vector<PatternBlock> blocks;
  std::vector<std::uint32_t> rho;  // register read at each read occurrence, in order

  bool member = false;
  // On rejection: short machine-readable tag, human reason, 1-based position (0 if none).
  std::string condition;
  std::string reason;
  std::size_t position = 0;

  // Duplicate case of TSTNZpce: the (k, l) pair the verdict refers to, 1-based.
  std::optional<std::pair<std::size_t, std::size_t>> duplicate;

  // check_shortest only: 1-based position of a constant-skip instruction standing in for the
  // #2 of a TSTNZpc(n) member.
  std::optional<std::size_t> constant_skip;
};

/// How the reachability condition on the duplicate read at l is read.
///  Literal: no chain of zero or more jumps beginning at or before k+2 leads to l.
///  ProofRestated: no chain beginning before k leads to l, and the chain beginning at k+1
///    (k+2 when X[k+1] is a read) does not lead to l.
///  Resolved: l < k, or the Literal condition. Semantically exact; the default.
/// In all readings (k, l) ranges over both orderings of the two occurrences.
enum class PceReading : std::uint8_t { Literal, ProofRestated, Resolved };

std::string to_string(PceReading r);

PatternReport is_member_pc(const InstructionSequence& x, std::uint32_t n);
PatternReport is_member_pce(const InstructionSequence& x, std::uint32_t n,
                            PceReading reading = PceReading::Resolved);

/// An instruction that, executed where no aux register has been written, always proceeds
/// two positions: +out.set:0, +aux:i.get, +aux:i.set:0, -aux:i.set:1.
bool is_constant_skip_two(const Instruction& u);

/// Whether X computes tstnz^n, for len(X) = min_len(n); throws PreconditionError otherwise.
/// X is accepted when it is in TSTNZpce(n) under the Resolved reading, or when it is a
/// TSTNZpc(n) member with its #2 replaced by a constant-skip instruction. The second family
/// lies outside TSTNZpce(n) but is correct: the replaced slot always proceeds to the
/// isolated block's phi, which leads to out.set:1.
bool check_shortest(const InstructionSequence& x, std::uint32_t n);
PatternReport check_shortest_report(const InstructionSequence& x, std::uint32_t n);

}  // namespace nzt
