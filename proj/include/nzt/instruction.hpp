#pragma once

// Instruction alphabet over Boolean registers, finite instruction sequences, and their
// textual form.
//
// Text format (one `.pga` file holds one sequence):
//
//   seq   := instr (";" instr)*
//   instr := basic | "+" basic | "-" basic | "#" NAT | "!"
//   basic := "in:" POSNAT ".get" | "out.set:" BIT
//          | "aux:" POSNAT ".get" | "aux:" POSNAT ".set:" BIT
//
// Whitespace between instructions is ignored and `//` starts a comment running to the end
// of the line. Rendering joins instructions with " ; ".

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nzt {

enum class RegisterKind : std::uint8_t { Input, Output, Aux };

class RegisterName {
 public:
  /// Throws PreconditionError for index 0.
  static RegisterName input(std::uint32_t index);
  static constexpr RegisterName output() noexcept { return RegisterName(RegisterKind::Output, 0); }
  static RegisterName aux(std::uint32_t index);

  RegisterKind kind() const noexcept { return kind_; }
  /// Zero for the output register.
  std::uint32_t index() const noexcept { return index_; }

  friend auto operator<=>(const RegisterName&, const RegisterName&) = default;

 private:
  constexpr RegisterName(RegisterKind kind, std::uint32_t index) noexcept
      : kind_(kind), index_(index) {}

  RegisterKind kind_;
  std::uint32_t index_;
};

enum class CommandKind : std::uint8_t { Get, Set };

struct Command {
  CommandKind kind = CommandKind::Get;
  bool bit = false;  // meaningful for Set only

  static constexpr Command get() noexcept { return {CommandKind::Get, false}; }
  static constexpr Command set(bool b) noexcept { return {CommandKind::Set, b}; }

  friend auto operator<=>(const Command&, const Command&) = default;
};

/// A register name paired with a command it admits: inputs admit only `get`, the output
/// admits only `set:b`, auxiliary registers admit both. Values violating this table cannot
/// be constructed.
class BasicInstruction {
 public:
  /// Throws PreconditionError when the register does not admit the command.
  static BasicInstruction make(RegisterName reg, Command cmd);

  static BasicInstruction input_get(std::uint32_t index) {
    return BasicInstruction(RegisterName::input(index), Command::get());
  }
  static BasicInstruction output_set(bool b) noexcept {
    return BasicInstruction(RegisterName::output(), Command::set(b));
  }
  static BasicInstruction aux_get(std::uint32_t index) {
    return BasicInstruction(RegisterName::aux(index), Command::get());
  }
  static BasicInstruction aux_set(std::uint32_t index, bool b) {
    return BasicInstruction(RegisterName::aux(index), Command::set(b));
  }

  RegisterName reg() const noexcept { return reg_; }
  Command command() const noexcept { return cmd_; }
  bool is_get() const noexcept { return cmd_.kind == CommandKind::Get; }

  friend auto operator<=>(const BasicInstruction&, const BasicInstruction&) = default;

 private:
  friend class Instruction;
  constexpr BasicInstruction(RegisterName reg, Command cmd) noexcept : reg_(reg), cmd_(cmd) {}

  RegisterName reg_;
  Command cmd_;
};

enum class InstructionKind : std::uint8_t { Plain, PosTest, NegTest, Jump, Halt };

/// One primitive instruction.
class Instruction {
 public:
  static Instruction plain(BasicInstruction b) noexcept { return {InstructionKind::Plain, b, 0}; }
  static Instruction pos_test(BasicInstruction b) noexcept {
    return {InstructionKind::PosTest, b, 0};
  }
  static Instruction neg_test(BasicInstruction b) noexcept {
    return {InstructionKind::NegTest, b, 0};
  }
  static Instruction jump(std::uint32_t length) noexcept {
    return {InstructionKind::Jump, kNoBasic, length};
  }
  static Instruction halt() noexcept { return {InstructionKind::Halt, kNoBasic, 0}; }

  // Shorthands for the forms that dominate this domain.
  static Instruction pos_read(std::uint32_t i) { return pos_test(BasicInstruction::input_get(i)); }
  static Instruction neg_read(std::uint32_t i) { return neg_test(BasicInstruction::input_get(i)); }
  static Instruction out_set(bool b) noexcept { return plain(BasicInstruction::output_set(b)); }

  InstructionKind kind() const noexcept { return kind_; }
  bool has_basic() const noexcept {
    return kind_ == InstructionKind::Plain || kind_ == InstructionKind::PosTest ||
           kind_ == InstructionKind::NegTest;
  }
  bool is_test() const noexcept {
    return kind_ == InstructionKind::PosTest || kind_ == InstructionKind::NegTest;
  }
  bool is_jump() const noexcept { return kind_ == InstructionKind::Jump; }
  bool is_halt() const noexcept { return kind_ == InstructionKind::Halt; }

  /// Precondition: has_basic().
  const BasicInstruction& basic() const noexcept { return basic_; }
  /// Precondition: is_jump().
  std::uint32_t jump_length() const noexcept { return jump_; }

  /// A read instruction is a positive or negative test on `in:i.get`.
  bool is_read() const noexcept {
    return is_test() && basic_.reg().kind() == RegisterKind::Input;
  }
  /// Index of the register read; precondition: is_read().
  std::uint32_t read_index() const noexcept { return basic_.reg().index(); }
  /// `in:i.get` without a test prefix.
  bool is_plain_input_get() const noexcept {
    return kind_ == InstructionKind::Plain && basic_.reg().kind() == RegisterKind::Input;
  }
  /// `out.set:1`, `+out.set:1` or `-out.set:1`.
  bool is_out_set1_form() const noexcept {
    return has_basic() && basic_.reg().kind() == RegisterKind::Output && basic_.command().bit;
  }
  bool mentions_aux() const noexcept {
    return has_basic() && basic_.reg().kind() == RegisterKind::Aux;
  }

  friend bool operator==(const Instruction&, const Instruction&) = default;

 private:
  static constexpr BasicInstruction kNoBasic{RegisterName::output(), Command::set(false)};

  Instruction(InstructionKind kind, BasicInstruction basic, std::uint32_t jump) noexcept
      : kind_(kind), basic_(basic), jump_(jump) {}

  InstructionKind kind_;
  BasicInstruction basic_;
  std::uint32_t jump_;
};

/// A finite, non-empty, immutable instruction sequence. Positions handed out by the
/// library's reports are 1-based, matching "the k-th primitive instruction"; indexing
/// through operator[] is 0-based.
class InstructionSequence {
 public:
  /// Throws PreconditionError when `instructions` is empty.
  explicit InstructionSequence(std::vector<Instruction> instructions);
  InstructionSequence(std::initializer_list<Instruction> instructions)
      : InstructionSequence(std::vector<Instruction>(instructions)) {}

  std::size_t size() const noexcept { return instrs_.size(); }
  const Instruction& operator[](std::size_t i) const noexcept { return instrs_[i]; }
  /// 1-based access.
  const Instruction& at_position(std::size_t pos) const { return instrs_.at(pos - 1); }
  std::span<const Instruction> instructions() const noexcept { return instrs_; }
  auto begin() const noexcept { return instrs_.begin(); }
  auto end() const noexcept { return instrs_.end(); }

  /// Copy with the instruction at 0-based index `i` replaced.
  InstructionSequence with(std::size_t i, Instruction instr) const;

  friend bool operator==(const InstructionSequence&, const InstructionSequence&) = default;

 private:
  std::vector<Instruction> instrs_;
};

/// Indices i such that in:i is read by some read instruction. Plain `in:i.get` does not count.
std::set<std::uint32_t> iregs(const InstructionSequence& x);
/// Per-register number of read-instruction occurrences.
std::map<std::uint32_t, std::size_t> read_counts(const InstructionSequence& x);
/// Largest i such that in:i occurs in any form, 0 if none.
std::uint32_t max_input_index(std::span<const Instruction> x) noexcept;
/// True when iregs(x) = {1..n} for n = |iregs(x)| (vacuously true when nothing is read).
bool iregs_contiguous(const InstructionSequence& x);

InstructionSequence parse(std::string_view text);
std::string render(const InstructionSequence& x);
std::string render(const Instruction& instr);
std::string render(const BasicInstruction& basic);

}  // namespace nzt
