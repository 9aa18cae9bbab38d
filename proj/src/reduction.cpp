#include "nzt/reduction.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "nzt/error.hpp"
#include "nzt/generators.hpp"

namespace nzt {

Proposition Proposition::var(std::uint32_t index) {
  if (index == 0) throw PreconditionError("variable index must be positive");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Var;
  node->var = index;
  node->max_var = index;
  return Proposition(std::move(node));
}

Proposition Proposition::negation(Proposition p) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Not;
  node->length = p.length() + 1;
  node->max_var = p.max_var();
  node->children.push_back(std::move(p));
  return Proposition(std::move(node));
}

Proposition Proposition::binary(Kind kind, Proposition a, Proposition b) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->length = a.length() + b.length() + 1;
  node->max_var = std::max(a.max_var(), b.max_var());
  node->children.push_back(std::move(a));
  node->children.push_back(std::move(b));
  return Proposition(std::move(node));
}

Proposition Proposition::conjunction(Proposition a, Proposition b) {
  return binary(Kind::And, std::move(a), std::move(b));
}

Proposition Proposition::disjunction(Proposition a, Proposition b) {
  return binary(Kind::Or, std::move(a), std::move(b));
}

bool Proposition::eval(std::uint64_t assignment) const {
  switch (kind()) {
    case Kind::Var:
      return (assignment >> (var_index() - 1)) & 1U;
    case Kind::Not:
      return !lhs().eval(assignment);
    case Kind::And:
      return lhs().eval(assignment) && rhs().eval(assignment);
    case Kind::Or:
      return lhs().eval(assignment) || rhs().eval(assignment);
  }
  return false;
}

bool operator==(const Proposition& a, const Proposition& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.length() != b.length()) return false;
  switch (a.kind()) {
    case Proposition::Kind::Var:
      return a.var_index() == b.var_index();
    case Proposition::Kind::Not:
      return a.lhs() == b.lhs();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

namespace {

class PropParser {
 public:
  explicit PropParser(std::string_view text) : text_(text) {}

  Proposition parse() {
    Proposition p = disjunction();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Proposition disjunction() {
    Proposition p = conjunction();
    while (accept('|')) p = Proposition::disjunction(std::move(p), conjunction());
    return p;
  }

  Proposition conjunction() {
    Proposition p = unary();
    while (accept('&')) p = Proposition::conjunction(std::move(p), unary());
    return p;
  }

  Proposition unary() {
    if (accept('!')) return Proposition::negation(unary());
    if (accept('(')) {
      Proposition p = disjunction();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (accept('x')) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::uint32_t v = 0;
      const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
      if (start == pos_ || ec != std::errc() || v == 0) {
        pos_ = start;
        fail("expected a positive variable index");
      }
      return Proposition::var(v);
    }
    skip();
    fail(pos_ == text_.size() ? "unexpected end of input" : "expected a variable, '!' or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Proposition parse_prop(std::string_view text) { return PropParser(text).parse(); }

std::string render(const Proposition& p) {
  switch (p.kind()) {
    case Proposition::Kind::Var:
      return "x" + std::to_string(p.var_index());
    case Proposition::Kind::Not:
      return "!" + render(p.lhs());
    case Proposition::Kind::And:
      return "(" + render(p.lhs()) + " & " + render(p.rhs()) + ")";
    case Proposition::Kind::Or:
      return "(" + render(p.lhs()) + " | " + render(p.rhs()) + ")";
  }
  return {};
}

namespace {

// Emits code backwards. A label is the number of instructions from it to the end of the
// finished code, so the true exit is 0 and the false exit is -1.
class PhiCompiler {
 public:
  std::vector<Instruction> finish() {
    std::reverse(rev_.begin(), rev_.end());
    return std::move(rev_);
  }

  void compile(const Proposition& p, std::int64_t t, std::int64_t f) {
    switch (p.kind()) {
      case Proposition::Kind::Var:
        emit_test(p.var_index(), t, f);
        break;
      case Proposition::Kind::Not:
        compile(p.lhs(), f, t);
        break;
      case Proposition::Kind::And: {
        compile(p.rhs(), t, f);
        const std::int64_t start_b = emitted();
        compile(p.lhs(), start_b, f);
        break;
      }
      case Proposition::Kind::Or: {
        compile(p.rhs(), t, f);
        const std::int64_t start_b = emitted();
        compile(p.lhs(), t, start_b);
        break;
      }
    }
  }

 private:
  std::int64_t emitted() const { return static_cast<std::int64_t>(rev_.size()); }

  // Jump placed so that it becomes the instruction with label emitted()+1.
  void emit_jump_to(std::int64_t target) {
    rev_.push_back(Instruction::jump(static_cast<std::uint32_t>(emitted() + 1 - target)));
  }

  void emit_test(std::uint32_t var, std::int64_t t, std::int64_t f) {
    const std::int64_t e = emitted();
    if (t == e && f == e - 1) {
      rev_.push_back(Instruction::pos_read(var));
    } else if (f == e && t == e - 1) {
      rev_.push_back(Instruction::neg_read(var));
    } else if (f == e) {
      emit_jump_to(t);
      rev_.push_back(Instruction::pos_read(var));
    } else if (t == e) {
      emit_jump_to(f);
      rev_.push_back(Instruction::neg_read(var));
    } else {
      emit_jump_to(f);
      emit_jump_to(t);
      rev_.push_back(Instruction::pos_read(var));
    }
  }

  std::vector<Instruction> rev_;
};

}  // namespace

InstructionSequence compile_phi_star(const Proposition& p) {
  PhiCompiler compiler;
  compiler.compile(p, 0, -1);
  return InstructionSequence(compiler.finish());
}

ReductionParams ReductionParams::make(Rational q, std::uint64_t m) {
  if (q <= 0) throw PreconditionError("q must be positive");
  if (m <= 3) throw PreconditionError("m must exceed 3");
  const Rational inv = 1 / q;
  if (inv.denominator() == 1)
    throw PreconditionError("1/q is an integer, so no c' satisfies (c'-1) q < 1 < c' q");
  ReductionParams params;
  params.q = q;
  params.m = m;
  params.c_prime = static_cast<std::uint64_t>(inv.numerator() / inv.denominator()) + 1;
  const Rational cp(static_cast<std::int64_t>(params.c_prime));
  if (!((cp - 1) * q < 1 && 1 < cp * q)) throw Error("internal: c' violates its defining bounds");
  return params;
}

Rational parse_rational(std::string_view text) {
  auto number = [&](std::string_view s) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      throw PreconditionError("malformed rational '" + std::string(text) + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(number(text));
  const std::int64_t den = number(text.substr(slash + 1));
  if (den == 0) throw PreconditionError("zero denominator");
  return Rational(number(text.substr(0, slash)), den);
}

PsiInstance build_psi(const Proposition& p, const ReductionParams& params) {
  const std::uint64_t n = p.length();
  const std::uint64_t big_n = params.c * params.c_prime * n;
  if (p.max_var() > big_n) throw PreconditionError("proposition variable exceeds N");
  if (big_n > UINT32_MAX) throw PreconditionError("N out of range");

  const InstructionSequence phi_star = compile_phi_star(p);
  const std::size_t phi_len = phi_star.size() + 2;
  if (phi_len >= params.c * n) throw Error("internal: len(Phi(P)) >= c len(P)");

  std::vector<Instruction> out;
  const auto prime = gen_tstnz_prime(static_cast<std::uint32_t>(big_n));
  for (std::size_t i = 0; i + 1 < prime.size(); ++i) {
    const Instruction& u = prime[i];
    if (u.has_basic() && u.basic().reg().kind() == RegisterKind::Output) {
      out.push_back(Instruction::plain(BasicInstruction::aux_set(1, u.basic().command().bit)));
    } else {
      out.push_back(u);
    }
  }
  out.insert(out.end(), phi_star.begin(), phi_star.end());
  const auto aux1 = BasicInstruction::aux_get(1);
  for (const Instruction& u :
       {Instruction::jump(4), Instruction::pos_test(aux1), Instruction::out_set(true),
        Instruction::halt(), Instruction::pos_test(aux1),
        Instruction::pos_test(BasicInstruction::output_set(false)), Instruction::out_set(true),
        Instruction::halt()})
    out.push_back(u);

  PsiInstance inst{InstructionSequence(std::move(out)), big_n, phi_len, 0};
  const Rational qn = params.q * Rational(static_cast<std::int64_t>(big_n));
  const std::int64_t ceil_qn =
      qn.numerator() / qn.denominator() + (qn.numerator() % qn.denominator() != 0 ? 1 : 0);
  inst.bound = min_len(big_n) + static_cast<std::uint64_t>(ceil_qn) + params.m;
  if (inst.psi.size() != min_len(big_n) + phi_len + 5)
    throw Error("internal: Psi length identity violated");
  if (inst.psi.size() > inst.bound) throw Error("internal: Psi length bound violated");
  return inst;
}

SatResult sat_oracle(const Proposition& p) {
  std::set<std::uint32_t> vars_set;
  auto collect = [&](auto&& self, const Proposition& q) -> void {
    if (q.kind() == Proposition::Kind::Var) {
      vars_set.insert(q.var_index());
      return;
    }
    self(self, q.lhs());
    if (q.kind() != Proposition::Kind::Not) self(self, q.rhs());
  };
  collect(collect, p);
  const std::vector<std::uint32_t> vars(vars_set.begin(), vars_set.end());
  if (vars.size() > 20) throw CapExceeded("sat_oracle supports at most 20 distinct variables");
  if (p.max_var() > 64) throw PreconditionError("variable index beyond 64");

  SatResult r;
  for (std::uint64_t row = 0; row < (std::uint64_t{1} << vars.size()); ++row) {
    std::uint64_t assignment = 0;
    for (std::size_t j = 0; j < vars.size(); ++j)
      if ((row >> j) & 1U) assignment |= std::uint64_t{1} << (vars[j] - 1);
    if (p.eval(assignment)) {
      r.satisfiable = true;
      for (std::size_t j = 0; j < vars.size(); ++j) r.witness[vars[j]] = (row >> j) & 1U;
      return r;
    }
  }
  return r;
}

std::vector<Proposition> enumerate_props(std::size_t max_len, std::uint32_t vars) {
  std::vector<std::vector<Proposition>> by_len(max_len + 1);
  for (std::size_t len = 1; len <= max_len; ++len) {
    auto& cur = by_len[len];
    if (len == 1) {
      for (std::uint32_t v = 1; v <= vars; ++v) cur.push_back(Proposition::var(v));
      continue;
    }
    for (const auto& p : by_len[len - 1]) cur.push_back(Proposition::negation(p));
    for (std::size_t a = 1; a + 1 < len; ++a) {
      const std::size_t b = len - 1 - a;
      for (const auto& lhs : by_len[a])
        for (const auto& rhs : by_len[b]) {
          cur.push_back(Proposition::conjunction(lhs, rhs));
          cur.push_back(Proposition::disjunction(lhs, rhs));
        }
    }
  }
  std::vector<Proposition> out;
  for (auto& group : by_len)
    for (auto& p : group) out.push_back(std::move(p));
  return out;
}

namespace {

Proposition random_of_length(std::mt19937_64& rng, std::size_t len, std::uint32_t vars) {
  if (len == 1) return Proposition::var(std::uniform_int_distribution<std::uint32_t>(1, vars)(rng));
  if (len == 2) return Proposition::negation(random_of_length(rng, 1, vars));
  // Choice 0 is a negation, choices 1..len-2 pick the left operand's length.
  const std::size_t choice = std::uniform_int_distribution<std::size_t>(0, len - 2)(rng);
  if (choice == 0) return Proposition::negation(random_of_length(rng, len - 1, vars));
  Proposition lhs = random_of_length(rng, choice, vars);
  Proposition rhs = random_of_length(rng, len - 1 - choice, vars);
  if (std::uniform_int_distribution<int>(0, 1)(rng))
    return Proposition::conjunction(std::move(lhs), std::move(rhs));
  return Proposition::disjunction(std::move(lhs), std::move(rhs));
}

}  // namespace

Proposition random_prop(std::mt19937_64& rng, std::size_t max_len, std::uint32_t vars) {
  if (max_len == 0 || vars == 0) throw PreconditionError("max_len and vars must be positive");
  const std::size_t len = std::uniform_int_distribution<std::size_t>(1, max_len)(rng);
  return random_of_length(rng, len, vars);
}

}  // namespace nzt
