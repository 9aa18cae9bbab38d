#include "nzt/instruction.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "nzt/error.hpp"

namespace nzt {

RegisterName RegisterName::input(std::uint32_t index) {
  if (index == 0) throw PreconditionError("input register index must be positive");
  return RegisterName(RegisterKind::Input, index);
}

RegisterName RegisterName::aux(std::uint32_t index) {
  if (index == 0) throw PreconditionError("aux register index must be positive");
  return RegisterName(RegisterKind::Aux, index);
}

BasicInstruction BasicInstruction::make(RegisterName reg, Command cmd) {
  if (reg.kind() == RegisterKind::Input && cmd.kind != CommandKind::Get)
    throw PreconditionError("input registers admit only get");
  if (reg.kind() == RegisterKind::Output && cmd.kind != CommandKind::Set)
    throw PreconditionError("the output register admits only set");
  return BasicInstruction(reg, cmd);
}

InstructionSequence::InstructionSequence(std::vector<Instruction> instructions)
    : instrs_(std::move(instructions)) {
  if (instrs_.empty()) throw PreconditionError("an instruction sequence has length >= 1");
}

InstructionSequence InstructionSequence::with(std::size_t i, Instruction instr) const {
  auto copy = instrs_;
  copy.at(i) = instr;
  return InstructionSequence(std::move(copy));
}

std::set<std::uint32_t> iregs(const InstructionSequence& x) {
  std::set<std::uint32_t> out;
  for (const auto& u : x)
    if (u.is_read()) out.insert(u.read_index());
  return out;
}

std::map<std::uint32_t, std::size_t> read_counts(const InstructionSequence& x) {
  std::map<std::uint32_t, std::size_t> out;
  for (const auto& u : x)
    if (u.is_read()) ++out[u.read_index()];
  return out;
}

std::uint32_t max_input_index(std::span<const Instruction> x) noexcept {
  std::uint32_t top = 0;
  for (const auto& u : x)
    if (u.has_basic() && u.basic().reg().kind() == RegisterKind::Input)
      top = std::max(top, u.basic().reg().index());
  return top;
}

bool iregs_contiguous(const InstructionSequence& x) {
  const auto regs = iregs(x);
  return regs.empty() || *regs.rbegin() == regs.size();
}

namespace {

class ProgramParser {
 public:
  explicit ProgramParser(std::string_view text) : text_(text) {}

  InstructionSequence parse() {
    std::vector<Instruction> out;
    skip_blank();
    out.push_back(instruction());
    skip_blank();
    while (pos_ < text_.size()) {
      expect(';', "expected ';' between instructions");
      skip_blank();
      out.push_back(instruction());
      skip_blank();
    }
    return InstructionSequence(std::move(out));
  }

 private:
  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  bool accept(std::string_view lit) {
    if (text_.substr(pos_, lit.size()) == lit) {
      pos_ += lit.size();
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(what);
    ++pos_;
  }

  std::uint32_t number(bool positive) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) {
      pos_ = start;
      fail("expected a number");
    }
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc()) {
      pos_ = start;
      fail("number out of range");
    }
    if (positive && value == 0) {
      pos_ = start;
      fail("register index must be positive");
    }
    return value;
  }

  bool bit() {
    if (accept("0")) return false;
    if (accept("1")) return true;
    fail("expected bit 0 or 1");
  }

  BasicInstruction basic() {
    const std::size_t start = pos_;
    RegisterName reg = RegisterName::output();
    if (accept("in:")) {
      reg = RegisterName::input(number(true));
    } else if (accept("aux:")) {
      reg = RegisterName::aux(number(true));
    } else if (accept("out")) {
      // output register carries no index
    } else {
      fail("expected a register name (in:i, out, aux:i)");
    }
    expect('.', "expected '.' after register name");
    Command cmd;
    if (accept("get")) {
      cmd = Command::get();
    } else if (accept("set:")) {
      cmd = Command::set(bit());
    } else {
      fail("expected command get or set:b");
    }
    if (reg.kind() == RegisterKind::Input && cmd.kind != CommandKind::Get)
      throw SemanticError("input registers admit only get", start);
    if (reg.kind() == RegisterKind::Output && cmd.kind != CommandKind::Set)
      throw SemanticError("the output register admits only set", start);
    return BasicInstruction::make(reg, cmd);
  }

  Instruction instruction() {
    if (pos_ >= text_.size()) fail("expected an instruction");
    switch (text_[pos_]) {
      case '!':
        ++pos_;
        return Instruction::halt();
      case '#':
        ++pos_;
        return Instruction::jump(number(false));
      case '+':
        ++pos_;
        return Instruction::pos_test(basic());
      case '-':
        ++pos_;
        return Instruction::neg_test(basic());
      default:
        return Instruction::plain(basic());
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

InstructionSequence parse(std::string_view text) { return ProgramParser(text).parse(); }

std::string render(const BasicInstruction& basic) {
  std::string out;
  const auto reg = basic.reg();
  switch (reg.kind()) {
    case RegisterKind::Input:
      out = "in:" + std::to_string(reg.index());
      break;
    case RegisterKind::Output:
      out = "out";
      break;
    case RegisterKind::Aux:
      out = "aux:" + std::to_string(reg.index());
      break;
  }
  if (basic.is_get()) return out + ".get";
  return out + (basic.command().bit ? ".set:1" : ".set:0");
}

std::string render(const Instruction& instr) {
  switch (instr.kind()) {
    case InstructionKind::Plain:
      return render(instr.basic());
    case InstructionKind::PosTest:
      return "+" + render(instr.basic());
    case InstructionKind::NegTest:
      return "-" + render(instr.basic());
    case InstructionKind::Jump:
      return "#" + std::to_string(instr.jump_length());
    case InstructionKind::Halt:
      return "!";
  }
  return {};
}

std::string render(const InstructionSequence& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += " ; ";
    out += render(x[i]);
  }
  return out;
}

}  // namespace nzt
