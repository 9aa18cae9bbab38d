#include "nzt/good.hpp"

#include "compiled.hpp"
#include "nzt/error.hpp"
#include "nzt/generators.hpp"

namespace nzt {

GoodnessClass classify(const InstructionSequence& x) {
  GoodnessClass c;
  const std::size_t len = x.size();
  if (len < 2 || !x[len - 1].is_halt() || x[len - 2] != Instruction::out_set(true)) return c;
  for (std::size_t p = 0; p + 2 < len; ++p) {
    const Instruction& u = x[p];
    if (!u.is_read() && !(u.is_jump() && u.jump_length() > 0)) return c;
  }
  c.is_good = true;
  for (const auto& [reg, count] : read_counts(x))
    if (count >= 2) c.multiply_read.emplace(reg, count);
  c.is_very_good = c.multiply_read.empty();
  return c;
}

bool always_one(const InstructionSequence& x, std::size_t* consulted) {
  // "!" is the length-1 suffix of every good sequence and is accepted as such.
  if (x.size() == 1 && x[0].is_halt()) {
    if (consulted) *consulted = 1;
    return false;
  }
  if (!classify(x).is_very_good) throw PreconditionError("always_one requires a very good sequence");
  const std::size_t len = x.size();
  // s[k]: every run of the suffix of length k ends with output 1.
  std::vector<bool> s(len + 1, false);
  s[1] = false;
  s[2] = true;
  std::size_t seen = 2;
  for (std::size_t k = 2; k < len; ++k) {
    const Instruction& head = x[len - k - 1];
    ++seen;
    if (head.is_read()) {
      s[k + 1] = s[k] && s[k - 1];
    } else {
      const std::size_t l = head.jump_length();
      s[k + 1] = l <= k && s[k + 1 - l];
    }
  }
  if (consulted) *consulted = seen;
  return s[len];
}

namespace {

// Very-good correctness for arity n >= 0 with iregs(X) = {1..n}.
VeryGoodReport very_good_correct(const InstructionSequence& x, std::uint32_t n) {
  VeryGoodReport r;
  detail::CompiledProgram prog(x.instructions());
  const auto zero = prog.run(0);
  if (zero.status != detail::RunStatus::Terminated || zero.output) {
    r.failing_step = 1;
    return r;
  }
  for (std::uint32_t i = 1; i <= n; ++i) {
    if (!always_one(eliminate_unchecked(x, {{i, true}}))) {
      r.failing_step = 2;
      r.failing_register = i;
      return r;
    }
  }
  r.correct = true;
  return r;
}

void require_registers(const InstructionSequence& x, std::uint32_t n) {
  const auto regs = iregs(x);
  if (!iregs_contiguous(x) || regs.size() != n)
    throw PreconditionError("requires iregs(X) = {1..n}");
  if (max_input_index(x.instructions()) > n)
    throw PreconditionError("sequence mentions in:j with j > n");
}

}  // namespace

VeryGoodReport check_very_good_report(const InstructionSequence& x, std::uint32_t n) {
  if (!classify(x).is_very_good) throw PreconditionError("sequence is not very good");
  if (n == 0) throw PreconditionError("n must be positive");
  require_registers(x, n);
  return very_good_correct(x, n);
}

bool check_very_good(const InstructionSequence& x, std::uint32_t n) {
  return check_very_good_report(x, n).correct;
}

GoodReport check_good_report(const InstructionSequence& x, std::uint32_t n) {
  const GoodnessClass cls = classify(x);
  if (!cls.is_good) throw PreconditionError("sequence is not good");
  if (n == 0) throw PreconditionError("n must be positive");
  require_registers(x, n);
  if (x.size() <= min_len(n))
    throw PreconditionError("check_good requires len(X) > min_len(n)");

  GoodReport r;
  r.m = x.size() - min_len(n);
  for (const auto& [reg, count] : cls.multiply_read) r.multiply_read.push_back(reg);
  const std::size_t card = r.multiply_read.size();

  // Step 1: a correct X reads fewer than 6m registers more than once.
  if (card >= 6 * r.m) {
    r.failing_step = 1;
    return r;
  }
  if (card > 30) throw CapExceeded("more than 30 multiply-read registers");

  // Step 2: all of R fixed to 0 leaves a very good sequence over n - |R| registers.
  PartialAssignment alpha;
  for (const auto reg : r.multiply_read) alpha[reg] = false;
  if (!very_good_correct(eliminate_unchecked(x, alpha), n - static_cast<std::uint32_t>(card))
           .correct) {
    r.failing_step = 2;
    r.failing_alpha = alpha;
    return r;
  }

  // Step 3: any 1 in R must force output 1. Gray-code order.
  const std::uint64_t total = std::uint64_t{1} << card;
  for (std::uint64_t t = 1; t < total; ++t) {
    const std::uint64_t g = t ^ (t >> 1);
    for (std::size_t j = 0; j < card; ++j) alpha[r.multiply_read[j]] = (g >> j) & 1U;
    if (!always_one(eliminate_unchecked(x, alpha))) {
      r.failing_step = 3;
      r.failing_alpha = alpha;
      return r;
    }
  }
  r.correct = true;
  return r;
}

bool check_good(const InstructionSequence& x, std::uint32_t n) {
  return check_good_report(x, n).correct;
}

}  // namespace nzt
