#include "nzt/generators.hpp"

#include <vector>

#include "nzt/error.hpp"

namespace nzt {

InstructionSequence gen_tstnz(std::uint32_t n) {
  if (n == 0) throw PreconditionError("n must be positive");
  std::vector<Instruction> out;
  out.reserve(2 * std::size_t{n} + 1);
  for (std::uint32_t i = 1; i <= n; ++i) {
    out.push_back(Instruction::pos_read(i));
    out.push_back(Instruction::out_set(true));
  }
  out.push_back(Instruction::halt());
  return InstructionSequence(std::move(out));
}

InstructionSequence gen_tstnz_prime(std::uint32_t n) {
  if (n == 0) throw PreconditionError("n must be positive");
  std::vector<Instruction> out;
  out.reserve(min_len(n));
  std::uint32_t first = 1;
  if (n % 2 == 1) {
    out.push_back(Instruction::pos_read(1));
    out.push_back(Instruction::out_set(true));
    first = 2;
  }
  for (std::uint32_t i = first; i < n; i += 2) {
    out.push_back(Instruction::neg_read(i));
    out.push_back(Instruction::pos_read(i + 1));
    out.push_back(Instruction::out_set(true));
  }
  out.push_back(Instruction::halt());
  return InstructionSequence(std::move(out));
}

std::uint64_t min_len(std::uint64_t n) {
  if (n == 0) throw PreconditionError("n must be positive");
  return n % 2 == 0 ? 3 * (n / 2) + 1 : 3 * ((n + 1) / 2);
}

}  // namespace nzt
