#pragma once

// Propositions over x1, x2, ..., their compilation into branching instruction sequences,
// and the transformation Psi mapping a proposition to an instance of the correctness
// problem that is correct exactly when the proposition is unsatisfiable.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "nzt/instruction.hpp"

namespace nzt {

class Proposition {
 public:
  enum class Kind : std::uint8_t { Var, Not, And, Or };

  /// Throws PreconditionError for index 0.
  static Proposition var(std::uint32_t index);
  static Proposition negation(Proposition p);
  static Proposition conjunction(Proposition a, Proposition b);
  static Proposition disjunction(Proposition a, Proposition b);

  Kind kind() const noexcept;
  /// Precondition: kind() == Var.
  std::uint32_t var_index() const noexcept;
  /// Operand of Not, left operand of And/Or.
  const Proposition& lhs() const noexcept;
  /// Right operand of And/Or.
  const Proposition& rhs() const noexcept;

  /// Occurrences of variables and connectives.
  std::size_t length() const noexcept;
  std::uint32_t max_var() const noexcept;
  /// Bit i-1 of `assignment` is the value of x_i; requires max_var() <= 64.
  bool eval(std::uint64_t assignment) const;

  friend bool operator==(const Proposition& a, const Proposition& b);

 private:
  struct Node;
  static Proposition binary(Kind kind, Proposition a, Proposition b);
  explicit Proposition(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Proposition::Node {
  Kind kind;
  std::uint32_t var = 0;
  std::vector<Proposition> children;
  std::size_t length = 1;
  std::uint32_t max_var = 0;
};

inline Proposition::Kind Proposition::kind() const noexcept { return node_->kind; }
inline std::uint32_t Proposition::var_index() const noexcept { return node_->var; }
inline const Proposition& Proposition::lhs() const noexcept { return node_->children[0]; }
inline const Proposition& Proposition::rhs() const noexcept { return node_->children[1]; }
inline std::size_t Proposition::length() const noexcept { return node_->length; }
inline std::uint32_t Proposition::max_var() const noexcept { return node_->max_var; }

/// Grammar: or := and ("|" and)*, and := unary ("&" unary)*,
/// unary := "!" unary | "(" or ")" | "x" POSNAT. Binary operators associate to the left.
Proposition parse_prop(std::string_view text);
/// Fully parenthesized text that parse_prop maps back to the same tree.
std::string render(const Proposition& p);

/// Branching code for P: only read instructions on in:1..max_var(P) and positive jumps.
/// Control leaves at offset len+1 when P holds and len+2 when it does not. At most three
/// instructions per variable occurrence.
InstructionSequence compile_phi_star(const Proposition& p);

using Rational = boost::rational<std::int64_t>;

struct ReductionParams {
  static constexpr std::uint64_t kCompilerConstant = 4;  // len(Phi(P)) < 4 len(P)

  Rational q{2, 5};
  std::uint64_t m = 4;
  std::uint64_t c = kCompilerConstant;
  std::uint64_t c_prime = 0;  // filled by make()

  /// Validates q > 0, 1/q not an integer, m > 3, and computes the least c' with
  /// (c'-1) q < 1 < c' q. Throws PreconditionError otherwise.
  static ReductionParams make(Rational q, std::uint64_t m);
};

/// Parses "a/b" or "a". Throws PreconditionError on malformed text.
Rational parse_rational(std::string_view text);

struct PsiInstance {
  InstructionSequence psi;
  std::uint64_t n_registers;  // N = c c' len(P)
  std::size_t phi_len;        // len(Phi*(P)) + 2
  std::uint64_t bound;        // min_len(N) + ceil(q N) + m
};

/// TSTNZ'(N) without its final ! and with out renamed to aux:1, then Phi*(P), then
/// #4 ; +aux:1.get ; out.set:1 ; ! ; +aux:1.get ; +out.set:0 ; out.set:1 ; !.
/// Throws PreconditionError when max_var(P) > N.
PsiInstance build_psi(const Proposition& p, const ReductionParams& params);

struct SatResult {
  bool satisfiable = false;
  std::map<std::uint32_t, bool> witness;  // over the variables occurring in P
};

/// Truth-table scan over the distinct variables of P, smallest variable as least
/// significant bit; the witness is the first satisfying row. Throws CapExceeded for more
/// than 20 distinct variables.
SatResult sat_oracle(const Proposition& p);

/// All propositions of length <= max_len over x1..x_vars, by length, then structure.
std::vector<Proposition> enumerate_props(std::size_t max_len, std::uint32_t vars);
/// Random proposition of length uniform in 1..max_len over x1..x_vars.
Proposition random_prop(std::mt19937_64& rng, std::size_t max_len, std::uint32_t vars);

}  // namespace nzt
