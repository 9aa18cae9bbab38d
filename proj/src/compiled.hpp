#pragma once

// Flat encoding of an instruction sequence for inner loops that run it millions of times.
// Inputs come in as a bit mask (bit i-1 holds in:i), aux registers live in dense slots.

#include <cstdint>
#include <span>
#include <vector>

#include "nzt/instruction.hpp"

namespace nzt::detail {

enum class OpReg : std::uint8_t { Input, Output, Aux, None };

struct Op {
  InstructionKind kind;
  OpReg reg;
  bool get;
  bool bit;
  std::uint32_t arg;  // input bit index, aux slot, or jump length
};

enum class RunStatus : std::uint8_t { Terminated, Inaction };

struct RunResult {
  RunStatus status;
  bool output;
};

class CompiledProgram {
 public:
  CompiledProgram() = default;
  explicit CompiledProgram(std::span<const Instruction> x) { assign(x); }

  void assign(std::span<const Instruction> x) {
    ops_.clear();
    aux_index_.clear();
    for (const auto& u : x) ops_.push_back(lower(u));
    aux_.assign(aux_index_.size(), 0);
  }

  std::size_t size() const noexcept { return ops_.size(); }
  std::size_t aux_slots() const noexcept { return aux_.size(); }

  RunResult run(std::uint64_t inputs) {
    bool out = false;
    for (auto& a : aux_) a = 0;
    const std::size_t len = ops_.size();
    std::size_t pc = 0;
    while (pc < len) {
      const Op& op = ops_[pc];
      switch (op.kind) {
        case InstructionKind::Halt:
          return {RunStatus::Terminated, out};
        case InstructionKind::Jump:
          if (op.arg == 0) return {RunStatus::Inaction, out};
          pc += op.arg;
          continue;
        default:
          break;
      }
      bool reply;
      switch (op.reg) {
        case OpReg::Input:
          reply = (inputs >> op.arg) & 1U;
          break;
        case OpReg::Output:
          out = op.bit;
          reply = op.bit;
          break;
        default:
          if (op.get) {
            reply = aux_[op.arg];
          } else {
            aux_[op.arg] = op.bit;
            reply = op.bit;
          }
          break;
      }
      if (op.kind == InstructionKind::Plain) {
        pc += 1;
      } else if (op.kind == InstructionKind::PosTest) {
        pc += reply ? 1 : 2;
      } else {
        pc += reply ? 2 : 1;
      }
    }
    return {RunStatus::Inaction, out};
  }

 private:
  Op lower(const Instruction& u) {
    Op op{u.kind(), OpReg::None, false, false, 0};
    if (u.is_jump()) {
      op.arg = u.jump_length();
      return op;
    }
    if (u.is_halt()) return op;
    const auto& b = u.basic();
    op.get = b.is_get();
    op.bit = b.command().bit;
    switch (b.reg().kind()) {
      case RegisterKind::Input:
        op.reg = OpReg::Input;
        op.arg = b.reg().index() - 1;
        break;
      case RegisterKind::Output:
        op.reg = OpReg::Output;
        break;
      case RegisterKind::Aux: {
        op.reg = OpReg::Aux;
        const std::uint32_t idx = b.reg().index();
        std::uint32_t slot = 0;
        while (slot < aux_index_.size() && aux_index_[slot] != idx) ++slot;
        if (slot == aux_index_.size()) aux_index_.push_back(idx);
        op.arg = slot;
        break;
      }
    }
    return op;
  }

  std::vector<Op> ops_;
  std::vector<std::uint32_t> aux_index_;
  std::vector<std::uint8_t> aux_;
};

/// True when the run on `index` terminates with output tstnz(index).
inline bool tstnz_ok(CompiledProgram& p, std::uint64_t index) {
  const RunResult r = p.run(index);
  return r.status == RunStatus::Terminated && r.output == (index != 0);
}

}  // namespace nzt::detail
