#pragma once

// Register elimination X_alpha and the aux polarity flip chi_i. Both substitute one
// instruction for one instruction, so lengths and jump targets are preserved.

#include <cstdint>
#include <map>

#include "nzt/instruction.hpp"

namespace nzt {

/// Finite map from input register indices to bits.
using PartialAssignment = std::map<std::uint32_t, bool>;

/// Requires iregs(X) = {1..n} and dom(alpha) a proper subset of it; throws PreconditionError
/// otherwise. For i in dom(alpha): +in:i.get becomes #1 when alpha(i) = 1 and #2 otherwise,
/// -in:i.get the reverse, plain in:i.get becomes #1. Surviving in:j are renumbered onto
/// 1..n-|dom(alpha)| preserving order.
InstructionSequence eliminate(const InstructionSequence& x, const PartialAssignment& alpha);

/// eliminate(X, {i -> b}).
InstructionSequence fix_register(const InstructionSequence& x, std::uint32_t i, bool b);

/// Same substitution and renumbering as eliminate, but dom(alpha) may equal iregs(X) and
/// iregs(X) need not be contiguous. A surviving in:j becomes in:(j - |{d in dom(alpha) : d < j}|).
/// Used where the residual arity may drop to 0.
InstructionSequence eliminate_unchecked(const InstructionSequence& x,
                                        const PartialAssignment& alpha);

/// Flips the polarity of every use of aux:i; an involution.
InstructionSequence chi(const InstructionSequence& x, std::uint32_t i);

/// Renames aux indices to 1, 2, ... in order of first occurrence. Idempotent.
InstructionSequence canonicalize_aux(const InstructionSequence& x);

}  // namespace nzt
