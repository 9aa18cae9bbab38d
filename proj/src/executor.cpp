#include "nzt/executor.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <thread>

#include "bdd.hpp"
#include "compiled.hpp"
#include "nzt/error.hpp"

namespace nzt {

RegisterState RegisterState::fresh(std::vector<bool> inputs) {
  RegisterState s;
  s.inputs = std::move(inputs);
  return s;
}

RegisterState RegisterState::fresh_from_index(std::uint32_t n, std::uint64_t index) {
  std::vector<bool> bits(n);
  for (std::uint32_t i = 0; i < n && i < 64; ++i) bits[i] = (index >> i) & 1U;
  return fresh(std::move(bits));
}

bool RegisterState::aux_value(std::uint32_t i) const {
  const auto it = aux.find(i);
  return it != aux.end() && it->second;
}

std::string to_string(InactionReason r) {
  switch (r) {
    case InactionReason::JumpZero:
      return "jump-zero";
    case InactionReason::JumpPastEnd:
      return "jump-past-end";
    case InactionReason::FellOffEnd:
      return "fell-off-end";
  }
  return "unknown";
}

ExecOutcome execute(const InstructionSequence& x, RegisterState state, const TraceSink& trace) {
  if (max_input_index(x.instructions()) > state.inputs.size())
    throw PreconditionError("sequence mentions an input register beyond the given inputs");

  const std::size_t len = x.size();
  std::size_t pc = 0;  // 0-based
  std::size_t steps = 0;
  while (true) {
    const Instruction& u = x[pc];
    ++steps;
    assert(steps <= len);
    std::size_t advance = 1;
    if (u.is_halt()) {
      if (trace) trace({pc + 1, u, std::nullopt});
      return Terminated{std::move(state), steps};
    }
    if (u.is_jump()) {
      if (trace) trace({pc + 1, u, std::nullopt});
      if (u.jump_length() == 0) return Inaction{InactionReason::JumpZero, pc + 1, steps};
      if (pc + u.jump_length() >= len)
        return Inaction{InactionReason::JumpPastEnd, pc + 1, steps};
      pc += u.jump_length();
      continue;
    }
    const BasicInstruction& b = u.basic();
    bool reply = false;
    switch (b.reg().kind()) {
      case RegisterKind::Input:
        reply = state.inputs[b.reg().index() - 1];
        break;
      case RegisterKind::Output:
        state.output = b.command().bit;
        reply = b.command().bit;
        break;
      case RegisterKind::Aux:
        if (b.is_get()) {
          reply = state.aux_value(b.reg().index());
        } else {
          state.aux[b.reg().index()] = b.command().bit;
          reply = b.command().bit;
        }
        break;
    }
    if (trace) trace({pc + 1, u, reply});
    if (u.kind() == InstructionKind::PosTest) {
      advance = reply ? 1 : 2;
    } else if (u.kind() == InstructionKind::NegTest) {
      advance = reply ? 2 : 1;
    }
    if (pc + advance >= len) return Inaction{InactionReason::FellOffEnd, pc + 1, steps};
    pc += advance;
  }
}

TruthFunction::TruthFunction(std::uint32_t arity, std::vector<bool> table)
    : arity_(arity), table_(std::move(table)) {
  if (arity_ >= 63 || table_.size() != (std::uint64_t{1} << arity_))
    throw PreconditionError("truth table length must be 2^arity");
}

TruthFunction tstnz(std::uint32_t n) {
  if (n == 0 || n > 30) throw PreconditionError("tstnz arity must lie in 1..30");
  std::vector<bool> table(std::size_t{1} << n, true);
  table[0] = false;
  return TruthFunction(n, std::move(table));
}

namespace {

std::uint32_t effective_cap(const CheckLimits& limits) {
  return std::min(limits.cap, CheckLimits::kHardCap);
}

void check_arity(const InstructionSequence& x, std::uint32_t n, const CheckLimits& limits) {
  if (n == 0) throw PreconditionError("arity must be positive");
  if (n > effective_cap(limits))
    throw CapExceeded("arity " + std::to_string(n) + " exceeds enumeration cap " +
                      std::to_string(effective_cap(limits)));
  if (max_input_index(x.instructions()) > n)
    throw PreconditionError("sequence mentions in:j with j > n");
}

unsigned worker_count(const CheckLimits& limits, std::uint64_t total) {
  if (total < (std::uint64_t{1} << 14)) return 1;
  unsigned jobs = limits.jobs ? limits.jobs : std::thread::hardware_concurrency();
  return std::max(1U, jobs);
}

// Smallest index in [0, total) failing `ok`, or total. Each worker scans a contiguous range
// and gives up once a smaller failure is known, so the answer is independent of `jobs`.
template <class MakeOk>
std::uint64_t first_failure(std::uint64_t total, unsigned jobs, MakeOk make_ok) {
  if (jobs <= 1) {
    auto ok = make_ok();
    for (std::uint64_t i = 0; i < total; ++i)
      if (!ok(i)) return i;
    return total;
  }
  std::atomic<std::uint64_t> best{total};
  std::vector<std::jthread> workers;
  const std::uint64_t chunk = (total + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    const std::uint64_t lo = w * chunk;
    const std::uint64_t hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([&, lo, hi] {
      auto ok = make_ok();
      for (std::uint64_t i = lo; i < hi; ++i) {
        if ((i & 0xFFF) == 0 && i >= best.load(std::memory_order_relaxed)) return;
        if (!ok(i)) {
          std::uint64_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    });
  }
  workers.clear();
  return best.load();
}

}  // namespace

bool computes(const InstructionSequence& x, const TruthFunction& f, const CheckLimits& limits) {
  check_arity(x, f.arity(), limits);
  const std::uint64_t total = std::uint64_t{1} << f.arity();
  const auto fail = first_failure(total, worker_count(limits, total), [&] {
    return [p = detail::CompiledProgram(x.instructions()), &f](std::uint64_t i) mutable {
      const auto r = p.run(i);
      return r.status == detail::RunStatus::Terminated && r.output == f(i);
    };
  });
  return fail == total;
}

BruteForceReport brute_force(const InstructionSequence& x, std::uint32_t n,
                             const CheckLimits& limits) {
  check_arity(x, n, limits);
  const std::uint64_t total = std::uint64_t{1} << n;
  const auto fail = first_failure(total, worker_count(limits, total), [&] {
    return [p = detail::CompiledProgram(x.instructions())](std::uint64_t i) mutable {
      return detail::tstnz_ok(p, i);
    };
  });
  BruteForceReport report;
  report.correct = fail == total;
  if (!report.correct) {
    report.counterexample = fail;
    auto init = RegisterState::fresh_from_index(n, fail);
    report.counterexample_inputs = init.inputs;
    report.outcome = execute(x, std::move(init));
  }
  return report;
}

bool brute_force_check(const InstructionSequence& x, std::uint32_t n, const CheckLimits& limits) {
  return brute_force(x, n, limits).correct;
}

namespace {

struct SymState {
  bool out = false;
  std::vector<std::uint32_t> aux_ones;  // sorted
  auto operator<=>(const SymState&) const = default;
};

}  // namespace

BruteForceReport symbolic_check(const InstructionSequence& x, std::uint32_t n,
                                const SymbolicLimits& limits) {
  using detail::BddManager;
  if (n == 0 || n > 4096) throw PreconditionError("symbolic check supports arity 1..4096");
  if (max_input_index(x.instructions()) > n)
    throw PreconditionError("sequence mentions in:j with j > n");

  BddManager bdd(limits.max_nodes);
  const std::size_t len = x.size();
  std::vector<std::map<SymState, BddManager::Ref>> at(len);
  BddManager::Ref halted_one = BddManager::kFalse;
  BddManager::Ref halted_zero = BddManager::kFalse;

  auto flow = [&](std::size_t q, const SymState& s, BddManager::Ref cond) {
    if (cond == BddManager::kFalse || q >= len) return;  // q >= len: inaction
    auto& slot = at[q];
    auto [it, inserted] = slot.try_emplace(s, cond);
    if (!inserted) it->second = bdd.lor(it->second, cond);
    if (slot.size() > limits.max_states_per_position)
      throw CapExceeded("symbolic state set exceeds limit");
  };

  at[0].emplace(SymState{}, BddManager::kTrue);
  for (std::size_t p = 0; p < len; ++p) {
    const Instruction& u = x[p];
    for (const auto& [s, cond] : at[p]) {
      if (u.is_halt()) {
        auto& acc = s.out ? halted_one : halted_zero;
        acc = bdd.lor(acc, cond);
        continue;
      }
      if (u.is_jump()) {
        if (u.jump_length() > 0) flow(p + u.jump_length(), s, cond);
        continue;
      }
      const BasicInstruction& b = u.basic();
      SymState next = s;
      BddManager::Ref reply = BddManager::kFalse;  // condition under which the reply is 1
      switch (b.reg().kind()) {
        case RegisterKind::Input:
          reply = bdd.var(b.reg().index() - 1);
          break;
        case RegisterKind::Output:
          next.out = b.command().bit;
          reply = b.command().bit ? BddManager::kTrue : BddManager::kFalse;
          break;
        case RegisterKind::Aux: {
          const std::uint32_t i = b.reg().index();
          auto pos = std::lower_bound(next.aux_ones.begin(), next.aux_ones.end(), i);
          const bool present = pos != next.aux_ones.end() && *pos == i;
          bool value;
          if (b.is_get()) {
            value = present;
          } else {
            value = b.command().bit;
            if (value && !present) next.aux_ones.insert(pos, i);
            if (!value && present) next.aux_ones.erase(pos);
          }
          reply = value ? BddManager::kTrue : BddManager::kFalse;
          break;
        }
      }
      const BddManager::Ref yes = bdd.land(cond, reply);
      const BddManager::Ref no = bdd.land(cond, bdd.lnot(reply));
      switch (u.kind()) {
        case InstructionKind::Plain:
          flow(p + 1, next, cond);
          break;
        case InstructionKind::PosTest:
          flow(p + 1, next, yes);
          flow(p + 2, next, no);
          break;
        default:
          flow(p + 1, next, no);
          flow(p + 2, next, yes);
          break;
      }
    }
    at[p].clear();
  }

  BddManager::Ref any = BddManager::kFalse;
  for (std::uint32_t v = 0; v < n; ++v) any = bdd.lor(any, bdd.var(v));
  const BddManager::Ref good =
      bdd.lor(bdd.land(halted_one, any), bdd.land(halted_zero, bdd.lnot(any)));
  BddManager::Ref failing = bdd.lnot(good);

  BruteForceReport report;
  report.correct = failing == BddManager::kFalse;
  if (report.correct) return report;
  // Smallest failing index: clear the most significant bits first.
  std::vector<bool> bits(n, false);
  for (std::uint32_t v = n; v-- > 0;) {
    const auto zero = bdd.restrict(failing, v, false);
    if (zero != BddManager::kFalse) {
      failing = zero;
    } else {
      failing = bdd.restrict(failing, v, true);
      bits[v] = true;
    }
  }
  if (n <= 64) {
    std::uint64_t index = 0;
    for (std::uint32_t v = 0; v < n; ++v)
      if (bits[v]) index |= std::uint64_t{1} << v;
    report.counterexample = index;
  }
  report.counterexample_inputs = bits;
  report.outcome = execute(x, RegisterState::fresh(std::move(bits)));
  return report;
}

}  // namespace nzt
