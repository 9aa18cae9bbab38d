#include "nzt/dispatch.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "compiled.hpp"
#include "nzt/error.hpp"
#include "nzt/generators.hpp"
#include "nzt/transforms.hpp"

namespace nzt {

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::Auto:
      return "auto";
    case Strategy::Brute:
      return "brute";
    case Strategy::Shortest:
      return "shortest";
    case Strategy::Good:
      return "good";
    case Strategy::Symbolic:
      return "symbolic";
  }
  return "unknown";
}

std::string to_string(StrategyUsed s) {
  switch (s) {
    case StrategyUsed::LengthBound:
      return "length-bound";
    case StrategyUsed::Brute:
      return "brute";
    case StrategyUsed::Shortest:
      return "shortest";
    case StrategyUsed::Good:
      return "good";
    case StrategyUsed::Symbolic:
      return "symbolic";
  }
  return "unknown";
}

Strategy parse_strategy(std::string_view name) {
  for (auto s : {Strategy::Auto, Strategy::Brute, Strategy::Shortest, Strategy::Good,
                 Strategy::Symbolic})
    if (to_string(s) == name) return s;
  throw PreconditionError("unknown strategy '" + std::string(name) + "'");
}

namespace {

bool good_route_applies(const InstructionSequence& x, std::uint32_t n) {
  if (x.size() <= min_len(n) || !classify(x).is_good) return false;
  return iregs_contiguous(x) && iregs(x).size() == n && max_input_index(x.instructions()) <= n;
}

}  // namespace

Decision decide(const InstructionSequence& x, std::uint32_t n, Strategy strategy,
                const CheckLimits& limits) {
  if (n == 0) throw PreconditionError("n must be positive");
  Decision d;
  if (strategy == Strategy::Auto) {
    if (x.size() < min_len(n)) {
      d.strategy_used = StrategyUsed::LengthBound;
      d.result = false;
      return d;
    }
    if (x.size() == min_len(n)) {
      strategy = Strategy::Shortest;
    } else if (good_route_applies(x, n)) {
      strategy = Strategy::Good;
    } else {
      strategy = Strategy::Brute;
    }
  }
  switch (strategy) {
    case Strategy::Shortest:
      d.strategy_used = StrategyUsed::Shortest;
      d.pattern = check_shortest_report(x, n);
      d.result = d.pattern->member;
      break;
    case Strategy::Good:
      d.strategy_used = StrategyUsed::Good;
      d.good = check_good_report(x, n);
      d.result = d.good->correct;
      break;
    case Strategy::Symbolic:
      d.strategy_used = StrategyUsed::Symbolic;
      d.brute = symbolic_check(x, n);
      d.result = d.brute->correct;
      break;
    default:
      d.strategy_used = StrategyUsed::Brute;
      d.brute = brute_force(x, n, limits);
      d.result = d.brute->correct;
      break;
  }
  return d;
}

std::vector<Instruction> canonical_alphabet(std::uint32_t n, std::uint32_t max_len) {
  std::vector<Instruction> out;
  auto all_forms = [&](BasicInstruction b) {
    out.push_back(Instruction::plain(b));
    out.push_back(Instruction::pos_test(b));
    out.push_back(Instruction::neg_test(b));
  };
  for (std::uint32_t i = 1; i <= n; ++i) all_forms(BasicInstruction::input_get(i));
  for (bool b : {false, true}) all_forms(BasicInstruction::output_set(b));
  for (std::uint32_t i = 1; i <= max_len; ++i) {
    all_forms(BasicInstruction::aux_get(i));
    for (bool b : {false, true}) all_forms(BasicInstruction::aux_set(i, b));
  }
  for (std::uint32_t l = 0; l <= max_len; ++l) out.push_back(Instruction::jump(l));
  out.push_back(Instruction::halt());
  return out;
}

namespace {

// Witnesses of the given length whose first instruction is alphabet[first].
std::vector<std::vector<std::uint32_t>> search_prefix(const std::vector<Instruction>& alphabet,
                                                      std::uint32_t n, std::uint32_t len,
                                                      std::size_t first, std::uint64_t& examined) {
  std::vector<std::vector<std::uint32_t>> found;
  std::vector<std::uint32_t> digits(len, 0);
  digits[0] = static_cast<std::uint32_t>(first);
  std::vector<Instruction> seq(len, alphabet[first]);
  detail::CompiledProgram prog;
  const std::uint64_t inputs = std::uint64_t{1} << n;
  const std::size_t base = alphabet.size();
  while (true) {
    for (std::uint32_t p = 1; p < len; ++p) seq[p] = alphabet[digits[p]];
    prog.assign(seq);
    ++examined;
    bool ok = true;
    for (std::uint64_t v = 0; v < inputs && ok; ++v) ok = detail::tstnz_ok(prog, v);
    if (ok) found.push_back(digits);
    // Odometer over positions 1..len-1, last position fastest.
    std::uint32_t p = len;
    while (p > 1) {
      --p;
      if (++digits[p] < base) break;
      digits[p] = 0;
      if (p == 1) return found;
    }
    if (len == 1) return found;
  }
}

}  // namespace

SearchResult exhaustive_min_search(std::uint32_t n, std::uint32_t max_len,
                                   const SearchOptions& options) {
  if (n == 0 || max_len == 0) throw PreconditionError("n and max_len must be positive");
  if (!options.override_guard && (n > 2 || max_len > 6))
    throw CapExceeded("search guard: requires n <= 2 and max_len <= 6");
  if (n > 20) throw CapExceeded("search supports n <= 20");

  const auto alphabet = canonical_alphabet(n, max_len);
  unsigned jobs = options.jobs ? options.jobs : std::thread::hardware_concurrency();
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(alphabet.size())));

  SearchResult result;
  for (std::uint32_t len = 1; len <= max_len; ++len) {
    // Prefix partition: worker w takes first instructions w, w+jobs, ...
    std::vector<std::vector<std::vector<std::uint32_t>>> by_first(alphabet.size());
    std::vector<std::uint64_t> counts(jobs, 0);
    {
      std::vector<std::jthread> workers;
      for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
          for (std::size_t f = w; f < alphabet.size(); f += jobs)
            by_first[f] = search_prefix(alphabet, n, len, f, counts[w]);
        });
      }
    }
    for (auto c : counts) result.examined += c;
    std::set<std::string> canonical_seen;
    for (const auto& group : by_first) {
      for (const auto& digits : group) {
        std::vector<Instruction> instrs;
        for (auto d : digits) instrs.push_back(alphabet[d]);
        InstructionSequence w(std::move(instrs));
        auto canon = canonicalize_aux(w);
        if (canonicalize_aux(canon) != canon)
          throw Error("internal: aux canonicalization is not idempotent");
        if (canonical_seen.insert(render(canon)).second)
          result.canonical_witnesses.push_back(std::move(canon));
        result.witnesses.push_back(std::move(w));
      }
    }
    if (!result.witnesses.empty()) {
      result.min_found = len;
      return result;
    }
  }
  return result;
}

}  // namespace nzt
