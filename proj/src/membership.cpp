#include "nzt/membership.hpp"

#include <array>

#include "nzt/error.hpp"
#include "nzt/generators.hpp"

namespace nzt {

std::string to_string(PceReading r) {
  switch (r) {
    case PceReading::Literal:
      return "literal";
    case PceReading::ProofRestated:
      return "proof-restated";
    case PceReading::Resolved:
      return "resolved";
  }
  return "unknown";
}

namespace {

bool is_neg_read(const Instruction& u) { return u.is_read() && u.kind() == InstructionKind::NegTest; }
bool is_pos_read(const Instruction& u) { return u.is_read() && u.kind() == InstructionKind::PosTest; }

bool is_phi(const Instruction& u) { return u.is_jump() || u.is_out_set1_form(); }

// leads[p]: a chain of zero or more jumps starting at p (0-based) ends on an out.set:1 form.
std::vector<bool> leads_to_out1(const InstructionSequence& x) {
  const std::size_t len = x.size();
  std::vector<bool> leads(len, false);
  for (std::size_t p = len; p-- > 0;) {
    const Instruction& u = x[p];
    if (u.is_out_set1_form()) {
      leads[p] = true;
    } else if (u.is_jump() && u.jump_length() > 0 && p + u.jump_length() < len) {
      leads[p] = leads[p + u.jump_length()];
    }
  }
  return leads;
}

// reached[p] (0-based) for every p reachable by a chain of zero or more jumps from a seed.
std::vector<bool> jump_closure(const InstructionSequence& x, std::vector<bool> reached) {
  const std::size_t len = x.size();
  for (std::size_t p = 0; p < len; ++p) {
    if (!reached[p] || !x[p].is_jump()) continue;
    const std::size_t l = x[p].jump_length();
    if (l > 0 && p + l < len) reached[p + l] = true;
  }
  return reached;
}

PatternReport& reject(PatternReport& r, std::string condition, std::string reason,
                      std::size_t position) {
  r.member = false;
  r.condition = std::move(condition);
  r.reason = std::move(reason);
  r.position = position;
  return r;
}

}  // namespace

PatternReport is_member_pc(const InstructionSequence& x, std::uint32_t n) {
  PatternReport r;
  r.n = n;
  r.odd = n % 2 == 1;
  if (n == 0) return reject(r, "arity", "n must be positive", 0);
  if (x.size() != min_len(n))
    return reject(r, "length", "length differs from min_len(n)", 0);

  // (i) block pattern, deterministic on the polarity of each block's first read.
  const std::size_t len = x.size();
  std::size_t p = 0;
  std::uint32_t pairs = 0;
  while (p + 1 < len) {
    const Instruction& u = x[p];
    PatternBlock block;
    block.first_read = p + 1;
    if (is_neg_read(u)) {
      if (p + 2 >= len - 1 || !is_pos_read(x[p + 1]))
        return reject(r, "pattern", "pair block needs -read ; +read ; phi", p + 2);
      r.rho.push_back(u.read_index());
      r.rho.push_back(x[p + 1].read_index());
      block.phi = p + 3;
      ++pairs;
    } else if (is_pos_read(u) && r.odd && !r.m) {
      if (p + 1 >= len - 1) return reject(r, "pattern", "isolated block needs +read ; phi", p + 1);
      r.m = pairs;
      block.isolated = true;
      r.rho.push_back(u.read_index());
      block.phi = p + 2;
    } else {
      return reject(r, "pattern", "expected the first read of a block", p + 1);
    }
    if (!is_phi(x[block.phi - 1]))
      return reject(r, "pattern", "phi slot must hold a jump or an out.set:1 form", block.phi);
    p = block.phi;
    r.blocks.push_back(block);
  }
  if (!x[len - 1].is_halt()) return reject(r, "pattern", "last instruction must be !", len);
  if (r.odd && !r.m) return reject(r, "pattern", "odd n needs one isolated block", 0);

  // (ii) each of in:1..in:n read exactly once.
  std::vector<bool> seen(n + 1, false);
  for (std::size_t j = 0; j < r.rho.size(); ++j) {
    const std::uint32_t reg = r.rho[j];
    if (reg > n || seen[reg]) {
      std::size_t at = 0;
      for (std::size_t q = 0, c = 0; q < len; ++q)
        if (x[q].is_read() && c++ == j) at = q + 1;
      return reject(r, "registers", "read registers must be in:1..in:n, each once", at);
    }
    seen[reg] = true;
  }

  // Final phi: out.set:1 or +out.set:1.
  const Instruction& last_phi = x[r.blocks.back().phi - 1];
  if (!last_phi.is_out_set1_form() || last_phi.kind() == InstructionKind::NegTest)
    return reject(r, "final-phi", "last phi must be out.set:1 or +out.set:1", r.blocks.back().phi);

  // (iii) every jump leads to an out.set:1 form.
  const auto leads = leads_to_out1(x);
  for (const auto& block : r.blocks)
    if (x[block.phi - 1].is_jump() && !leads[block.phi - 1])
      return reject(r, "jump-chain", "jump chain does not reach an out.set:1 form", block.phi);

  r.member = true;
  return r;
}

namespace {

bool duplicate_unreachable(const InstructionSequence& x, std::size_t k, std::size_t l,
                           PceReading reading) {
  // k, l are 1-based.
  const std::size_t len = x.size();
  std::vector<bool> seeds(len, false);
  switch (reading) {
    case PceReading::Resolved:
      if (l < k) return true;
      [[fallthrough]];
    case PceReading::Literal:
      for (std::size_t q = 1; q <= std::min(len, k + 2); ++q) seeds[q - 1] = true;
      break;
    case PceReading::ProofRestated: {
      for (std::size_t q = 1; q < k; ++q) seeds[q - 1] = true;
      const std::size_t start = (k < len && x[k].is_read()) ? k + 2 : k + 1;
      if (start <= len) seeds[start - 1] = true;
      break;
    }
  }
  return !jump_closure(x, std::move(seeds))[l - 1];
}

}  // namespace

PatternReport is_member_pce(const InstructionSequence& x, std::uint32_t n, PceReading reading) {
  const auto counts = read_counts(x);
  std::uint32_t dup = 0;
  std::size_t multiply = 0;
  for (const auto& [reg, c] : counts) {
    if (c > 2) {
      PatternReport r;
      r.n = n;
      r.odd = n % 2 == 1;
      return reject(r, "duplicates", "a register is read more than twice", 0);
    }
    if (c == 2) {
      ++multiply;
      dup = reg;
    }
  }
  if (multiply == 0) return is_member_pc(x, n);
  if (multiply > 1) {
    PatternReport r;
    r.n = n;
    r.odd = n % 2 == 1;
    return reject(r, "duplicates", "more than one register is read twice", 0);
  }

  std::array<std::size_t, 2> at{};
  for (std::size_t q = 0, c = 0; q < x.size(); ++q)
    if (x[q].is_read() && x[q].read_index() == dup) at[c++] = q + 1;

  // Keep the rejection that got furthest through (b), (c), (a).
  PatternReport best;
  int best_stage = -1;
  for (const auto& [k, l] : {std::pair{at[0], at[1]}, std::pair{at[1], at[0]}}) {
    PatternReport r;
    int stage = 0;
    const Instruction& ul = x[l - 1];
    if (!is_pos_read(ul) || ul.read_index() > n) {
      r.n = n;
      r.odd = n % 2 == 1;
      reject(r, "duplicate-polarity", "duplicate read at l must be +in:i.get with i <= n", l);
    } else {
      stage = 1;
      r = is_member_pc(x.with(l - 1, Instruction::jump(2)), n);
      if (!r.member) {
        reject(r, "duplicate-residual", "with #2 at l: " + r.reason, r.position);
      } else {
        stage = 2;
        r.rho.clear();
        for (const auto& u : x)
          if (u.is_read()) r.rho.push_back(u.read_index());
        if (!duplicate_unreachable(x, k, l, reading)) {
          reject(r, "duplicate-reachable", "jump chain reaches duplicate read", l);
        } else {
          r.member = true;
        }
      }
    }
    r.duplicate = std::pair{k, l};
    if (r.member) return r;
    if (stage > best_stage) {
      best = std::move(r);
      best_stage = stage;
    }
  }
  return best;
}

bool is_constant_skip_two(const Instruction& u) {
  if (!u.has_basic() || u.kind() == InstructionKind::Plain) return false;
  const auto& b = u.basic();
  const bool pos = u.kind() == InstructionKind::PosTest;
  switch (b.reg().kind()) {
    case RegisterKind::Output:
      return pos && !b.command().bit;
    case RegisterKind::Aux:
      if (b.is_get()) return pos;
      return pos != b.command().bit;
    default:
      return false;
  }
}

PatternReport check_shortest_report(const InstructionSequence& x, std::uint32_t n) {
  if (n == 0) throw PreconditionError("n must be positive");
  if (x.size() != min_len(n))
    throw PreconditionError("check_shortest requires len(X) = min_len(n)");
  PatternReport r = is_member_pce(x, n, PceReading::Resolved);
  if (r.member) return r;
  // A member of TSTNZpc(n) holds no aux or out.set:0, so at most one slot qualifies.
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (!is_constant_skip_two(x[p])) continue;
    PatternReport alt = is_member_pc(x.with(p, Instruction::jump(2)), n);
    if (alt.member) {
      alt.constant_skip = p + 1;
      return alt;
    }
    break;
  }
  return r;
}

bool check_shortest(const InstructionSequence& x, std::uint32_t n) {
  return check_shortest_report(x, n).member;
}

}  // namespace nzt
