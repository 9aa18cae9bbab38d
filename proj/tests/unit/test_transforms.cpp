#include <gtest/gtest.h>

#include "nzt/dispatch.hpp"
#include "nzt/error.hpp"
#include "nzt/executor.hpp"
#include "nzt/generators.hpp"
#include "nzt/transforms.hpp"
#include "support/support.hpp"

namespace nzt {
namespace {

TEST(Eliminate, Examples) {
  EXPECT_THROW(eliminate(parse("+in:1.get ; out.set:1 ; !"), {{1, true}}), PreconditionError);
  const auto a = eliminate(gen_tstnz_prime(2), {{1, false}});
  EXPECT_EQ(render(a), "#1 ; +in:1.get ; out.set:1 ; !");
  EXPECT_TRUE(brute_force_check(a, 1));
  const auto b = eliminate(gen_tstnz_prime(2), {{2, true}});
  EXPECT_EQ(render(b), "-in:1.get ; #1 ; out.set:1 ; !");
  // in:2 = 1 forces the OR to 1: the residual yields 1 on both inputs.
  for (bool x1 : {false, true}) {
    const auto o = execute(b, RegisterState::fresh({x1}));
    ASSERT_TRUE(std::holds_alternative<Terminated>(o));
    EXPECT_TRUE(std::get<Terminated>(o).final.output);
  }
}

TEST(Eliminate, ReplacementTable) {
  const auto x = parse("+in:1.get ; -in:1.get ; in:1.get ; +in:2.get ; !");
  EXPECT_EQ(render(eliminate(x, {{1, true}})), "#1 ; #2 ; #1 ; +in:1.get ; !");
  EXPECT_EQ(render(eliminate(x, {{1, false}})), "#2 ; #1 ; #1 ; +in:1.get ; !");
}

TEST(Eliminate, Preconditions) {
  EXPECT_THROW(eliminate(parse("+in:2.get ; +in:3.get ; !"), {{2, true}}), PreconditionError);
  EXPECT_THROW(eliminate(gen_tstnz_prime(2), {{3, true}}), PreconditionError);
  EXPECT_THROW(eliminate(parse("+in:1.get ; +in:2.get ; in:3.get ; !"), {{1, true}}), PreconditionError);
}

TEST(Eliminate, UncheckedAllowsFullDomain) {
  const auto y = eliminate_unchecked(gen_tstnz_prime(2), {{1, false}, {2, false}});
  EXPECT_EQ(render(y), "#1 ; #2 ; out.set:1 ; !");
  const auto z = eliminate_unchecked(parse("+in:4.get ; -in:2.get ; !"), {{2, true}});
  EXPECT_EQ(render(z), "+in:3.get ; #2 ; !");
}

TEST(FixRegister, Examples) {
  EXPECT_EQ(fix_register(gen_tstnz_prime(2), 1, false), eliminate(gen_tstnz_prime(2), {{1, false}}));
  EXPECT_EQ(render(fix_register(gen_tstnz(2), 2, true)), "+in:1.get ; out.set:1 ; #1 ; out.set:1 ; !");
  EXPECT_THROW(fix_register(gen_tstnz(2), 3, true), PreconditionError);
}

TEST(Chi, Examples) {
  EXPECT_EQ(render(chi(parse("+aux:1.get ; !"), 1)), "-aux:1.get ; !");
  EXPECT_EQ(render(chi(parse("aux:2.set:1 ; !"), 2)), "aux:2.set:0 ; !");
  EXPECT_EQ(render(chi(parse("+aux:2.set:1 ; -aux:2.set:0 ; aux:2.get ; +aux:1.get ; !"), 2)),
            "-aux:2.set:0 ; +aux:2.set:1 ; aux:2.get ; +aux:1.get ; !");
}

TEST(CanonicalizeAux, FirstOccurrenceOrder) {
  const auto x = parse("aux:7.set:1 ; +aux:3.get ; -aux:7.get ; !");
  EXPECT_EQ(render(canonicalize_aux(x)), "aux:1.set:1 ; +aux:2.get ; -aux:1.get ; !");
  EXPECT_EQ(canonicalize_aux(canonicalize_aux(x)), canonicalize_aux(x));
}

// Same termination status and, when terminated, the same output. The inaction reason may
// differ: a read that falls off the end becomes a jump past it.
bool same_outcome(const ExecOutcome& a, const ExecOutcome& b) {
  if (a.index() != b.index()) return false;
  const auto* t = std::get_if<Terminated>(&a);
  return !t || t->final.output == std::get<Terminated>(b).final.output;
}

// Property: X_alpha on v behaves as X on the merged vector.
TEST(Property, EliminationSoundness) {
  testing::Rng rng(0x5eed0101);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::uint32_t>(testing::uniform(rng, 2, 7));
    const auto x = testing::random_full_reader(rng, n);
    PartialAssignment alpha;
    for (std::uint32_t i = 1; i <= n; ++i)
      if (testing::coin(rng, 0.4)) alpha[i] = testing::coin(rng);
    if (alpha.size() == n) alpha.erase(alpha.begin());
    if (alpha.empty()) alpha[1] = true;
    const auto y = eliminate(x, alpha);
    ASSERT_EQ(y.size(), x.size());
    std::vector<std::uint32_t> survivors;
    for (std::uint32_t i = 1; i <= n; ++i)
      if (!alpha.count(i)) survivors.push_back(i);
    EXPECT_EQ(iregs(y).size(), survivors.size());
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << survivors.size()); ++v) {
      std::vector<bool> merged(n), residual(survivors.size());
      for (const auto& [i, b] : alpha) merged[i - 1] = b;
      for (std::size_t j = 0; j < survivors.size(); ++j) {
        residual[j] = (v >> j) & 1U;
        merged[survivors[j] - 1] = residual[j];
      }
      ASSERT_TRUE(same_outcome(execute(x, RegisterState::fresh(merged)),
                               execute(y, RegisterState::fresh(residual))))
          << render(x) << " / " << render(y);
    }
  }
}

// Property: chi is a length-preserving involution; if X computes tstnz^n and begins with an
// aux:i.set:1 form, chi(X, i) computes tstnz^n too.
TEST(Property, ChiInvolutionAndCorrectness) {
  testing::Rng rng(0x5eed0102);
  const auto alphabet = canonical_alphabet(3, 6);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto x = testing::random_sequence(rng, alphabet, testing::uniform(rng, 1, 9));
    const auto i = static_cast<std::uint32_t>(testing::uniform(rng, 1, 6));
    ASSERT_EQ(chi(chi(x, i), i), x);
    ASSERT_EQ(chi(x, i).size(), x.size());
  }
  const std::vector<Instruction> heads{
      Instruction::plain(BasicInstruction::aux_set(1, true)),
      Instruction::pos_test(BasicInstruction::aux_set(1, true)),
      Instruction::neg_test(BasicInstruction::aux_set(1, true))};
  const auto aux_alphabet = canonical_alphabet(3, 2);
  std::size_t checked = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    auto y = testing::random_pc_member(rng, 3);
    y = testing::mutate(rng, y, aux_alphabet);
    std::vector<Instruction> v{testing::pick(rng, heads)};
    v.insert(v.end(), y.begin(), y.end());
    const InstructionSequence x(std::move(v));
    if (!brute_force_check(x, 3)) continue;
    ++checked;
    ASSERT_TRUE(brute_force_check(chi(x, 1), 3)) << render(x);
  }
  EXPECT_GT(checked, 50U);
}

}  // namespace
}  // namespace nzt
