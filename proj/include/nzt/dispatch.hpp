#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nzt/executor.hpp"
#include "nzt/good.hpp"
#include "nzt/instruction.hpp"
#include "nzt/membership.hpp"

namespace nzt {

enum class Strategy : std::uint8_t { Auto, Brute, Shortest, Good, Symbolic };
enum class StrategyUsed : std::uint8_t { LengthBound, Brute, Shortest, Good, Symbolic };

std::string to_string(Strategy s);
std::string to_string(StrategyUsed s);
/// Accepts auto, brute, shortest, good, symbolic; throws PreconditionError otherwise.
Strategy parse_strategy(std::string_view name);

/// Verdict plus the certificate of whichever procedure produced it.
struct Decision {
  bool result = false;
  StrategyUsed strategy_used = StrategyUsed::Brute;
  std::optional<BruteForceReport> brute;  // Brute, Symbolic
  std::optional<PatternReport> pattern;   // Shortest
  std::optional<GoodReport> good;         // Good
};

/// Decides whether X computes tstnz^n. Auto routes by length: below min_len(n) false,
/// at min_len(n) the membership decider, good sequences above it the good checker, anything
/// else brute force (CapExceeded when n > cap). Explicit strategies propagate their own
/// precondition errors.
Decision decide(const InstructionSequence& x, std::uint32_t n, Strategy strategy = Strategy::Auto,
                const CheckLimits& limits = {});

/// Every instruction over in:1..n, out, aux:1..max_len and jumps #0..#max_len, in all
/// admissible forms, plus !. The order is fixed and is the search's enumeration order.
std::vector<Instruction> canonical_alphabet(std::uint32_t n, std::uint32_t max_len);

struct SearchOptions {
  bool override_guard = false;  // lift the n <= 2, max_len <= 6 guard
  unsigned jobs = 0;            // 0 selects std::thread::hardware_concurrency()
};

struct SearchResult {
  std::optional<std::uint32_t> min_found;
  std::vector<InstructionSequence> witnesses;            // enumeration order
  std::vector<InstructionSequence> canonical_witnesses;  // aux-canonical, deduplicated
  std::uint64_t examined = 0;
};

/// Enumerates all sequences over canonical_alphabet(n, max_len) of lengths 1, 2, ... up to
/// max_len and stops at the first length where some sequence computes tstnz^n.
SearchResult exhaustive_min_search(std::uint32_t n, std::uint32_t max_len,
                                   const SearchOptions& options = {});

}  // namespace nzt
