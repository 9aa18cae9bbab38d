#include "nzt/transforms.hpp"

#include <vector>

#include "nzt/error.hpp"

namespace nzt {

InstructionSequence eliminate_unchecked(const InstructionSequence& x,
                                        const PartialAssignment& alpha) {
  // beta[j] for every input index j mentioned and not eliminated.
  const std::uint32_t top = max_input_index(x.instructions());
  std::vector<std::uint32_t> beta(top + 1, 0);
  std::uint32_t next = 0;
  for (std::uint32_t j = 1; j <= top; ++j)
    if (!alpha.contains(j)) beta[j] = ++next;

  std::vector<Instruction> out;
  out.reserve(x.size());
  for (const auto& u : x) {
    if (!u.has_basic() || u.basic().reg().kind() != RegisterKind::Input) {
      out.push_back(u);
      continue;
    }
    const std::uint32_t j = u.basic().reg().index();
    if (const auto it = alpha.find(j); it != alpha.end()) {
      const bool b = it->second;
      switch (u.kind()) {
        case InstructionKind::PosTest:
          out.push_back(Instruction::jump(b ? 1 : 2));
          break;
        case InstructionKind::NegTest:
          out.push_back(Instruction::jump(b ? 2 : 1));
          break;
        default:
          out.push_back(Instruction::jump(1));
          break;
      }
      continue;
    }
    const auto renamed = BasicInstruction::input_get(beta[j]);
    switch (u.kind()) {
      case InstructionKind::PosTest:
        out.push_back(Instruction::pos_test(renamed));
        break;
      case InstructionKind::NegTest:
        out.push_back(Instruction::neg_test(renamed));
        break;
      default:
        out.push_back(Instruction::plain(renamed));
        break;
    }
  }
  return InstructionSequence(std::move(out));
}

InstructionSequence eliminate(const InstructionSequence& x, const PartialAssignment& alpha) {
  const auto regs = iregs(x);
  if (!iregs_contiguous(x))
    throw PreconditionError("elimination requires iregs(X) = {1..n}");
  if (max_input_index(x.instructions()) > regs.size())
    throw PreconditionError("elimination requires every mentioned input register to be read");
  for (const auto& [i, b] : alpha)
    if (!regs.contains(i))
      throw PreconditionError("in:" + std::to_string(i) + " is not read by X");
  if (alpha.size() >= regs.size())
    throw PreconditionError("dom(alpha) must be a proper subset of iregs(X)");
  return eliminate_unchecked(x, alpha);
}

InstructionSequence fix_register(const InstructionSequence& x, std::uint32_t i, bool b) {
  return eliminate(x, PartialAssignment{{i, b}});
}

InstructionSequence chi(const InstructionSequence& x, std::uint32_t i) {
  std::vector<Instruction> out;
  out.reserve(x.size());
  for (const auto& u : x) {
    if (!u.mentions_aux() || u.basic().reg().index() != i) {
      out.push_back(u);
      continue;
    }
    const auto& b = u.basic();
    if (b.is_get()) {
      // Plain aux:i.get discards its reply and stays as is.
      if (u.kind() == InstructionKind::PosTest) {
        out.push_back(Instruction::neg_test(b));
      } else if (u.kind() == InstructionKind::NegTest) {
        out.push_back(Instruction::pos_test(b));
      } else {
        out.push_back(u);
      }
      continue;
    }
    const auto flipped = BasicInstruction::aux_set(i, !b.command().bit);
    switch (u.kind()) {
      case InstructionKind::PosTest:
        out.push_back(Instruction::neg_test(flipped));
        break;
      case InstructionKind::NegTest:
        out.push_back(Instruction::pos_test(flipped));
        break;
      default:
        out.push_back(Instruction::plain(flipped));
        break;
    }
  }
  return InstructionSequence(std::move(out));
}

InstructionSequence canonicalize_aux(const InstructionSequence& x) {
  std::map<std::uint32_t, std::uint32_t> rename;
  std::vector<Instruction> out;
  out.reserve(x.size());
  for (const auto& u : x) {
    if (!u.mentions_aux()) {
      out.push_back(u);
      continue;
    }
    const auto& b = u.basic();
    const auto [it, fresh] =
        rename.try_emplace(b.reg().index(), static_cast<std::uint32_t>(rename.size() + 1));
    const auto renamed = BasicInstruction::make(RegisterName::aux(it->second), b.command());
    switch (u.kind()) {
      case InstructionKind::PosTest:
        out.push_back(Instruction::pos_test(renamed));
        break;
      case InstructionKind::NegTest:
        out.push_back(Instruction::neg_test(renamed));
        break;
      default:
        out.push_back(Instruction::plain(renamed));
        break;
    }
  }
  return InstructionSequence(std::move(out));
}

}  // namespace nzt
