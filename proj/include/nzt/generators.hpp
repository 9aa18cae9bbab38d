#pragma once

#include <cstdint>

#include "nzt/instruction.hpp"

namespace nzt {

/// n blocks (+in:i.get ; out.set:1) followed by !; length 2n+1.
InstructionSequence gen_tstnz(std::uint32_t n);

/// Even n: n/2 blocks (-in:2i-1.get ; +in:2i.get ; out.set:1), then !.
/// Odd n: (+in:1.get ; out.set:1), then (n-1)/2 blocks over in:2i, in:2i+1, then !.
InstructionSequence gen_tstnz_prime(std::uint32_t n);

/// len(gen_tstnz_prime(n)): 3n/2 + 1 for even n, 3(n+1)/2 for odd n.
/// Throws PreconditionError for n = 0.
std::uint64_t min_len(std::uint64_t n);

}  // namespace nzt
