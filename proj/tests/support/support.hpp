#pragma once

// Fixtures shared by unit and acceptance tests: definitional enumeration of TSTNZpc(n),
// seeded generators of random, good and very good sequences, mutation operators, and
// oracles that do not go through the library's deciders.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "nzt/dispatch.hpp"
#include "nzt/executor.hpp"
#include "nzt/generators.hpp"
#include "nzt/instruction.hpp"
#include "nzt/transforms.hpp"

namespace nzt::testing {

using Rng = std::mt19937_64;

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

// ---------------------------------------------------------------------------------------
// TSTNZpc(n) straight from its definition: every (rho, m, phi) triple, no pattern scan.

inline std::vector<Instruction> out1_forms() {
  const auto b = BasicInstruction::output_set(true);
  return {Instruction::plain(b), Instruction::pos_test(b), Instruction::neg_test(b)};
}

inline std::vector<Instruction> last_phi_forms() {
  const auto b = BasicInstruction::output_set(true);
  return {Instruction::plain(b), Instruction::pos_test(b)};
}

// Allowed phi instructions for slot j (1-based) out of `slots`; `m` is the isolated block
// index for odd n and absent for even n.
inline std::vector<Instruction> phi_options(std::uint32_t j, std::uint32_t slots,
                                            std::optional<std::uint32_t> m) {
  if (j == slots) return last_phi_forms();
  std::vector<Instruction> out = out1_forms();
  for (std::uint32_t k = 1; k <= slots - j; ++k) {
    if (m && j <= *m && *m < j + k) {
      out.push_back(Instruction::jump(3 * k - 1));
    } else {
      out.push_back(Instruction::jump(3 * k));
    }
  }
  return out;
}

template <class Visit>
void for_each_phi(std::uint32_t slots, std::optional<std::uint32_t> m, Visit visit) {
  std::vector<std::vector<Instruction>> options;
  for (std::uint32_t j = 1; j <= slots; ++j) options.push_back(phi_options(j, slots, m));
  std::vector<std::size_t> idx(slots, 0);
  while (true) {
    std::vector<Instruction> phi;
    for (std::uint32_t j = 0; j < slots; ++j) phi.push_back(options[j][idx[j]]);
    visit(phi);
    std::uint32_t j = 0;
    while (j < slots && ++idx[j] == options[j].size()) idx[j++] = 0;
    if (j == slots) return;
  }
}

inline InstructionSequence assemble_pc(std::uint32_t n, const std::vector<std::uint32_t>& rho,
                                       std::optional<std::uint32_t> m,
                                       const std::vector<Instruction>& phi) {
  // rho is 0-based storage of the bijection: rho[i-1] = rho(i).
  std::vector<Instruction> x;
  auto r = [&](std::uint32_t i) { return rho[i - 1]; };
  if (n % 2 == 0) {
    for (std::uint32_t i = 1; i <= n / 2; ++i) {
      x.push_back(Instruction::neg_read(r(2 * i - 1)));
      x.push_back(Instruction::pos_read(r(2 * i)));
      x.push_back(phi[i - 1]);
    }
  } else {
    for (std::uint32_t i = 1; i <= *m; ++i) {
      x.push_back(Instruction::neg_read(r(2 * i - 1)));
      x.push_back(Instruction::pos_read(r(2 * i)));
      x.push_back(phi[i - 1]);
    }
    x.push_back(Instruction::pos_read(r(2 * *m + 1)));
    x.push_back(phi[*m]);
    for (std::uint32_t i = *m + 1; i <= (n - 1) / 2; ++i) {
      x.push_back(Instruction::neg_read(r(2 * i)));
      x.push_back(Instruction::pos_read(r(2 * i + 1)));
      x.push_back(phi[i]);
    }
  }
  x.push_back(Instruction::halt());
  return InstructionSequence(std::move(x));
}

// Calls visit(X) for every member of TSTNZpc(n). With `all_rho` false only rho = id is used.
template <class Visit>
void for_each_definitional_pc(std::uint32_t n, bool all_rho, Visit visit) {
  std::vector<std::uint32_t> rho(n);
  std::iota(rho.begin(), rho.end(), 1U);
  const std::uint32_t slots = (n + 1) / 2;
  do {
    if (n % 2 == 0) {
      for_each_phi(slots, std::nullopt,
                   [&](const std::vector<Instruction>& phi) { visit(assemble_pc(n, rho, std::nullopt, phi)); });
    } else {
      for (std::uint32_t m = 0; m <= (n - 1) / 2; ++m)
        for_each_phi(slots, m,
                     [&](const std::vector<Instruction>& phi) { visit(assemble_pc(n, rho, m, phi)); });
    }
  } while (all_rho && std::next_permutation(rho.begin(), rho.end()));
}

// One random member of TSTNZpc(n), any n.
inline InstructionSequence random_pc_member(Rng& rng, std::uint32_t n) {
  std::vector<std::uint32_t> rho(n);
  std::iota(rho.begin(), rho.end(), 1U);
  std::shuffle(rho.begin(), rho.end(), rng);
  const std::uint32_t slots = (n + 1) / 2;
  std::optional<std::uint32_t> m;
  if (n % 2 == 1) m = static_cast<std::uint32_t>(uniform(rng, 0, (n - 1) / 2));
  std::vector<Instruction> phi;
  for (std::uint32_t j = 1; j <= slots; ++j) phi.push_back(pick(rng, phi_options(j, slots, m)));
  return assemble_pc(n, rho, m, phi);
}

// ---------------------------------------------------------------------------------------
// Random sequences and mutants over the canonical alphabet.

inline InstructionSequence random_sequence(Rng& rng, const std::vector<Instruction>& alphabet,
                                           std::size_t len) {
  std::vector<Instruction> x;
  for (std::size_t i = 0; i < len; ++i) x.push_back(pick(rng, alphabet));
  return InstructionSequence(std::move(x));
}

// One to three edits: substitution from the alphabet, swap of two positions, polarity flip
// of a test, or jump length change by +-1.
inline InstructionSequence mutate(Rng& rng, const InstructionSequence& x,
                                  const std::vector<Instruction>& alphabet) {
  std::vector<Instruction> v(x.begin(), x.end());
  const std::size_t edits = uniform(rng, 1, 3);
  for (std::size_t e = 0; e < edits; ++e) {
    const std::size_t p = uniform(rng, 0, v.size() - 1);
    switch (uniform(rng, 0, 3)) {
      case 0:
        v[p] = pick(rng, alphabet);
        break;
      case 1:
        std::swap(v[p], v[uniform(rng, 0, v.size() - 1)]);
        break;
      case 2:
        if (v[p].kind() == InstructionKind::PosTest) {
          v[p] = Instruction::neg_test(v[p].basic());
        } else if (v[p].kind() == InstructionKind::NegTest) {
          v[p] = Instruction::pos_test(v[p].basic());
        }
        break;
      default:
        if (v[p].is_jump()) {
          const std::uint32_t l = v[p].jump_length();
          v[p] = Instruction::jump(coin(rng) ? l + 1 : (l > 0 ? l - 1 : 0));
        }
        break;
    }
  }
  return InstructionSequence(std::move(v));
}

// Reads covering in:1..n plus up to n + 3 random canonical instructions (aux included),
// shuffled: iregs(X) = {1..n}, every mentioned input register is read.
inline InstructionSequence random_full_reader(Rng& rng, std::uint32_t n) {
  std::vector<Instruction> v;
  for (std::uint32_t i = 1; i <= n; ++i) v.push_back(coin(rng) ? Instruction::pos_read(i) : Instruction::neg_read(i));
  const auto alphabet = canonical_alphabet(n, 4);
  const std::size_t extra = uniform(rng, 0, n + 3);
  for (std::size_t e = 0; e < extra; ++e) v.push_back(pick(rng, alphabet));
  std::shuffle(v.begin(), v.end(), rng);
  return InstructionSequence(std::move(v));
}

// ---------------------------------------------------------------------------------------
// Good sequences. Built from blocks whose exits jump to a symbolic FINAL slot (the closing
// out.set:1), resolved once the layout is known.

struct Proto {
  Instruction instr;
  bool to_final = false;  // jump to the closing out.set:1
};

inline InstructionSequence resolve(const std::vector<Proto>& body) {
  std::vector<Instruction> x;
  const std::size_t final_pos = body.size();  // 0-based index of out.set:1
  for (std::size_t p = 0; p < body.size(); ++p) {
    if (body[p].to_final) {
      x.push_back(Instruction::jump(static_cast<std::uint32_t>(final_pos - p)));
    } else {
      x.push_back(body[p].instr);
    }
  }
  x.push_back(Instruction::out_set(true));
  x.push_back(Instruction::halt());
  return InstructionSequence(std::move(x));
}

// A correct good sequence reading registers 1..n: pair and single blocks in random order
// with exits to FINAL, the last block falling into out.set:1. `extra_reads` duplicate reads
// are inserted as early exits "+in:j ; #FINAL" and `noops` as "#1" or, when `read_noops`,
// "-in:j ; #1". With no extra reads and no read no-ops the result is very good.
inline InstructionSequence correct_good(Rng& rng, std::uint32_t n, std::size_t extra_reads,
                                        std::size_t noops, bool read_noops = true) {
  std::vector<std::uint32_t> regs(n);
  std::iota(regs.begin(), regs.end(), 1U);
  std::shuffle(regs.begin(), regs.end(), rng);
  // Group registers into pair (2) and single (1) blocks.
  std::vector<std::vector<std::uint32_t>> blocks;
  for (std::size_t i = 0; i < regs.size();) {
    if (i + 1 < regs.size() && coin(rng, 0.75)) {
      blocks.push_back({regs[i], regs[i + 1]});
      i += 2;
    } else {
      blocks.push_back({regs[i]});
      i += 1;
    }
  }
  std::vector<std::vector<Proto>> pieces;
  for (std::size_t b = 0; b + 1 < blocks.size(); ++b) {
    std::vector<Proto> piece;
    if (blocks[b].size() == 2) piece.push_back({Instruction::neg_read(blocks[b][0])});
    piece.push_back({Instruction::pos_read(blocks[b].back())});
    piece.push_back({Instruction::jump(0), true});
    pieces.push_back(std::move(piece));
  }
  for (std::size_t e = 0; e < extra_reads; ++e)
    pieces.push_back({{Instruction::pos_read(static_cast<std::uint32_t>(uniform(rng, 1, n)))},
                      {Instruction::jump(0), true}});
  for (std::size_t e = 0; e < noops; ++e) {
    if (!read_noops || coin(rng)) {
      pieces.push_back({{Instruction::jump(1)}});
    } else {
      pieces.push_back({{Instruction::neg_read(static_cast<std::uint32_t>(uniform(rng, 1, n)))},
                        {Instruction::jump(1)}});
    }
  }
  std::shuffle(pieces.begin(), pieces.end(), rng);
  std::vector<Proto> body;
  for (auto& piece : pieces) body.insert(body.end(), piece.begin(), piece.end());
  const auto& last = blocks.back();
  if (last.size() == 2) body.push_back({Instruction::neg_read(last[0])});
  body.push_back({Instruction::pos_read(last.back())});
  return resolve(body);
}

// Edits that keep the sequence good: retarget a jump (l > 0), flip a read's polarity,
// rename a read's register within 1..n, or swap two prefix positions.
inline InstructionSequence mutate_good(Rng& rng, const InstructionSequence& x, std::uint32_t n) {
  std::vector<Instruction> v(x.begin(), x.end());
  const std::size_t prefix = v.size() - 2;
  if (prefix == 0) return x;
  const std::size_t edits = uniform(rng, 1, 2);
  for (std::size_t e = 0; e < edits; ++e) {
    const std::size_t p = uniform(rng, 0, prefix - 1);
    switch (uniform(rng, 0, 3)) {
      case 0:
        if (v[p].is_jump())
          v[p] = Instruction::jump(static_cast<std::uint32_t>(uniform(rng, 1, v.size() - p)));
        break;
      case 1:
        if (v[p].is_read())
          v[p] = v[p].kind() == InstructionKind::PosTest ? Instruction::neg_read(v[p].read_index())
                                                         : Instruction::pos_read(v[p].read_index());
        break;
      case 2:
        if (v[p].is_read()) {
          const auto i = static_cast<std::uint32_t>(uniform(rng, 1, n));
          v[p] = v[p].kind() == InstructionKind::PosTest ? Instruction::pos_read(i)
                                                         : Instruction::neg_read(i);
        }
        break;
      default:
        std::swap(v[p], v[uniform(rng, 0, prefix - 1)]);
        break;
    }
  }
  return InstructionSequence(std::move(v));
}

// Reads and positive jumps only, `reads` read instructions over registers drawn so that
// every one of 1..n occurs, then out.set:1 ; !. With `spread` the extra reads go to distinct
// registers while possible, maximising the number of registers read twice.
inline InstructionSequence random_good(Rng& rng, std::uint32_t n, std::size_t reads,
                                       std::size_t jumps, bool spread = false) {
  std::vector<std::uint32_t> regs(n);
  std::iota(regs.begin(), regs.end(), 1U);
  std::vector<std::uint32_t> pool = regs;
  std::shuffle(pool.begin(), pool.end(), rng);
  for (std::size_t e = 0; regs.size() < reads; ++e)
    regs.push_back(spread && e < n ? pool[e] : static_cast<std::uint32_t>(uniform(rng, 1, n)));
  std::shuffle(regs.begin(), regs.end(), rng);
  std::vector<Instruction> v;
  for (auto r : regs) v.push_back(coin(rng) ? Instruction::pos_read(r) : Instruction::neg_read(r));
  for (std::size_t j = 0; j < jumps; ++j)
    v.insert(v.begin() + static_cast<std::ptrdiff_t>(uniform(rng, 0, v.size())), Instruction::jump(1));
  // Retarget jumps now that positions are fixed; lengths may overshoot the end.
  for (std::size_t p = 0; p < v.size(); ++p)
    if (v[p].is_jump())
      v[p] = Instruction::jump(static_cast<std::uint32_t>(uniform(rng, 1, v.size() + 2 - p)));
  v.push_back(Instruction::out_set(true));
  v.push_back(Instruction::halt());
  return InstructionSequence(std::move(v));
}

struct Case {
  InstructionSequence x;
  std::uint32_t n;
};

// Good X with iregs(X) = {1..n}, n <= max_n, and 1 <= len(X) - min_len(n) <= max_m. Mix of
// correct constructions, their good-preserving mutants, and dense read sequences that
// exercise the |R| >= 6m rejection.
inline Case random_good_case(Rng& rng, std::uint32_t max_n, std::size_t max_m) {
  while (true) {
    const auto n = static_cast<std::uint32_t>(uniform(rng, 1, max_n));
    const std::size_t m = uniform(rng, 1, max_m);
    const std::size_t target = min_len(n) + m;
    std::optional<InstructionSequence> x;
    switch (uniform(rng, 0, 3)) {
      case 0:
      case 1: {
        auto y = correct_good(rng, n, uniform(rng, 0, 3), uniform(rng, 0, 3));
        x = coin(rng, 0.4) ? y : mutate_good(rng, y, n);
        break;
      }
      case 2: {
        // Reads only (plus jumps when short of the target length).
        if (target < n + 2) continue;
        const std::size_t body = target - 2;
        const bool dense = coin(rng);
        const std::size_t reads = dense ? body : uniform(rng, n, body);
        x = random_good(rng, n, reads, body - reads, dense);
        break;
      }
      default: {
        auto y = random_pc_member(rng, n);
        // Members whose phis are all jumps are good; pad with #1 to reach m.
        std::vector<Instruction> v(y.begin(), y.end() - 2);
        bool good = true;
        for (const auto& u : v) good = good && (u.is_read() || (u.is_jump() && u.jump_length() > 0));
        if (!good) continue;
        std::vector<Proto> body;
        for (const auto& u : v) body.push_back({u});
        x = resolve(body);
        break;
      }
    }
    if (!x || x->size() != target) {
      // Pad or trim to the target with #1 no-ops at random prefix positions.
      if (!x || x->size() > target) continue;
      std::vector<Instruction> v(x->begin(), x->end());
      while (v.size() < target)
        v.insert(v.begin() + static_cast<std::ptrdiff_t>(uniform(rng, 0, v.size() - 2)), Instruction::jump(1));
      x = InstructionSequence(std::move(v));
    }
    if (iregs(*x).size() != n || !iregs_contiguous(*x)) continue;
    return {*x, n};
  }
}

// Very good X with 1 <= |iregs(X)| <= max_regs: random layouts, correct constructions with
// one register fixed to 1 (always-1 by construction), and their mutants.
inline InstructionSequence random_very_good(Rng& rng, std::uint32_t max_regs) {
  const auto n = static_cast<std::uint32_t>(uniform(rng, 1, max_regs));
  switch (uniform(rng, 0, 2)) {
    case 0:
      return random_good(rng, n, n, uniform(rng, 0, n));
    case 1: {
      const auto y = correct_good(rng, n + 1, 0, uniform(rng, 0, 2), false);
      return eliminate_unchecked(y, {{static_cast<std::uint32_t>(uniform(rng, 1, n + 1)), true}});
    }
    default: {
      const auto y = correct_good(rng, n + 1, 0, uniform(rng, 0, 2), false);
      auto z = eliminate_unchecked(y, {{static_cast<std::uint32_t>(uniform(rng, 1, n + 1)), true}});
      // Keep it very good: only retarget jumps and flip polarities.
      std::vector<Instruction> v(z.begin(), z.end());
      const std::size_t p = uniform(rng, 0, v.size() - 3);
      if (v[p].is_jump()) {
        v[p] = Instruction::jump(static_cast<std::uint32_t>(uniform(rng, 1, v.size() - p)));
      } else if (v[p].is_read()) {
        v[p] = v[p].kind() == InstructionKind::PosTest ? Instruction::neg_read(v[p].read_index())
                                                       : Instruction::pos_read(v[p].read_index());
      }
      return InstructionSequence(std::move(v));
    }
  }
}

// ---------------------------------------------------------------------------------------
// Oracles.

// Every assignment to the registers X reads (and mentions) gives termination with output 1.
inline bool brute_always_one(const InstructionSequence& x) {
  const auto regs = iregs(x);
  const std::uint32_t top = max_input_index(x.instructions());
  std::vector<std::uint32_t> mentioned(regs.begin(), regs.end());
  for (const auto& u : x)
    if (u.is_plain_input_get() &&
        std::find(mentioned.begin(), mentioned.end(), u.basic().reg().index()) == mentioned.end())
      mentioned.push_back(u.basic().reg().index());
  for (std::uint64_t row = 0; row < (std::uint64_t{1} << mentioned.size()); ++row) {
    std::vector<bool> in(top, false);
    for (std::size_t j = 0; j < mentioned.size(); ++j) in[mentioned[j] - 1] = (row >> j) & 1U;
    const auto out = execute(x, RegisterState::fresh(std::move(in)));
    const auto* t = std::get_if<Terminated>(&out);
    if (!t || !t->final.output) return false;
  }
  return true;
}

}  // namespace nzt::testing
