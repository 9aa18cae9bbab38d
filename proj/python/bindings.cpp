#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nzt/dispatch.hpp"
#include "nzt/error.hpp"
#include "nzt/executor.hpp"
#include "nzt/generators.hpp"
#include "nzt/good.hpp"
#include "nzt/instruction.hpp"
#include "nzt/membership.hpp"
#include "nzt/reduction.hpp"
#include "nzt/transforms.hpp"

namespace py = pybind11;
using namespace nzt;

namespace {

py::dict outcome_dict(const ExecOutcome& outcome) {
  py::dict d;
  if (const auto* t = std::get_if<Terminated>(&outcome)) {
    d["kind"] = "terminated";
    d["output"] = t->final.output;
    d["steps"] = t->steps;
    return d;
  }
  const auto& i = std::get<Inaction>(outcome);
  d["kind"] = "inaction";
  d["reason"] = to_string(i.reason);
  d["at"] = i.at;
  d["steps"] = i.steps;
  return d;
}

py::dict pattern_dict(const PatternReport& r) {
  py::dict d;
  d["member"] = r.member;
  d["condition"] = r.condition;
  d["reason"] = r.reason;
  d["position"] = r.position;
  d["duplicate"] = r.duplicate;
  d["constant_skip"] = r.constant_skip;
  return d;
}

py::dict decision_dict(const Decision& dec, const InstructionSequence& x, std::uint32_t n) {
  py::dict d;
  d["result"] = dec.result;
  d["n"] = n;
  d["len"] = x.size();
  d["min_len"] = min_len(n);
  d["strategy_used"] = to_string(dec.strategy_used);
  if (dec.brute && !dec.brute->correct) {
    d["counterexample_input"] = dec.brute->counterexample_inputs;
    d["outcome"] = outcome_dict(*dec.brute->outcome);
  }
  if (dec.pattern) d["pattern"] = pattern_dict(*dec.pattern);
  if (dec.good) {
    py::dict g;
    g["R"] = dec.good->multiply_read;
    g["m"] = dec.good->m;
    g["failing_step"] = dec.good->failing_step;
    g["failing_alpha"] = dec.good->failing_alpha;
    d["good"] = g;
  }
  return d;
}

CheckLimits limits_of(std::uint32_t cap, unsigned jobs) {
  CheckLimits l;
  l.cap = cap;
  l.jobs = jobs;
  return l;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Single-pass instruction sequences over Boolean registers and n-ary OR checkers";

  auto base = py::register_exception<Error>(m, "NztError", PyExc_RuntimeError);
  py::register_exception<SyntaxError>(m, "ProgramSyntaxError", base.ptr());
  py::register_exception<SemanticError>(m, "ProgramSemanticError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());

  py::class_<InstructionSequence>(m, "Program")
      .def(py::init([](const std::string& text) { return parse(text); }), py::arg("text"))
      .def("__len__", &InstructionSequence::size)
      .def("__str__", [](const InstructionSequence& x) { return render(x); })
      .def("__repr__", [](const InstructionSequence& x) { return "Program('" + render(x) + "')"; })
      .def("__eq__", [](const InstructionSequence& a, const InstructionSequence& b) {
        return render(a) == render(b);
      })
      .def("iregs", [](const InstructionSequence& x) { return iregs(x); });

  m.def("parse", &parse, py::arg("text"));
  m.def("min_len", &min_len, py::arg("n"));
  m.def("gen_tstnz", &gen_tstnz, py::arg("n"));
  m.def("gen_tstnz_prime", &gen_tstnz_prime, py::arg("n"));

  m.def(
      "execute",
      [](const InstructionSequence& x, std::vector<bool> inputs) {
        return outcome_dict(execute(x, RegisterState::fresh(std::move(inputs))));
      },
      py::arg("program"), py::arg("inputs"), "Run on inputs (b1, ..., bn).");

  m.def(
      "brute_force_check",
      [](const InstructionSequence& x, std::uint32_t n, std::uint32_t cap, unsigned jobs) {
        py::gil_scoped_release release;
        return brute_force_check(x, n, limits_of(cap, jobs));
      },
      py::arg("program"), py::arg("n"), py::arg("cap") = CheckLimits::kDefaultCap,
      py::arg("jobs") = 0);
  m.def("symbolic_check",
        [](const InstructionSequence& x, std::uint32_t n) { return symbolic_check(x, n).correct; },
        py::arg("program"), py::arg("n"));
  m.def("check_shortest", &check_shortest, py::arg("program"), py::arg("n"));
  m.def("check_good", &check_good, py::arg("program"), py::arg("n"));
  m.def("check_very_good", &check_very_good, py::arg("program"), py::arg("n"));
  m.def("always_one", [](const InstructionSequence& x) { return always_one(x); },
        py::arg("program"));
  m.def("is_member_pc",
        [](const InstructionSequence& x, std::uint32_t n) { return pattern_dict(is_member_pc(x, n)); },
        py::arg("program"), py::arg("n"));
  m.def(
      "is_member_pce",
      [](const InstructionSequence& x, std::uint32_t n) { return pattern_dict(is_member_pce(x, n)); },
      py::arg("program"), py::arg("n"));

  m.def(
      "classify",
      [](const InstructionSequence& x) {
        const auto c = classify(x);
        py::dict d;
        d["good"] = c.is_good;
        d["very_good"] = c.is_very_good;
        d["multiply_read"] = c.multiply_read;
        return d;
      },
      py::arg("program"));

  m.def(
      "decide",
      [](const InstructionSequence& x, std::uint32_t n, const std::string& strategy,
         std::uint32_t cap, unsigned jobs) {
        return decision_dict(decide(x, n, parse_strategy(strategy), limits_of(cap, jobs)), x, n);
      },
      py::arg("program"), py::arg("n"), py::arg("strategy") = "auto",
      py::arg("cap") = CheckLimits::kDefaultCap, py::arg("jobs") = 0);

  m.def("eliminate", &eliminate, py::arg("program"), py::arg("alpha"));
  m.def("fix_register", &fix_register, py::arg("program"), py::arg("i"), py::arg("b"));
  m.def("chi", &chi, py::arg("program"), py::arg("i"));

  m.def(
      "build_psi",
      [](const std::string& prop, const std::string& q, std::uint64_t m_param) {
        const auto inst = build_psi(parse_prop(prop), ReductionParams::make(parse_rational(q), m_param));
        py::dict d;
        d["program"] = inst.psi;
        d["n"] = inst.n_registers;
        d["phi_len"] = inst.phi_len;
        d["bound"] = inst.bound;
        return d;
      },
      py::arg("prop"), py::arg("q") = "2/5", py::arg("m") = 4);
  m.def(
      "satisfiable", [](const std::string& prop) { return sat_oracle(parse_prop(prop)).satisfiable; },
      py::arg("prop"));

  m.def(
      "exhaustive_min_search",
      [](std::uint32_t n, std::uint32_t max_len, unsigned jobs) {
        SearchOptions options;
        options.jobs = jobs;
        SearchResult r;
        {
          py::gil_scoped_release release;
          r = exhaustive_min_search(n, max_len, options);
        }
        py::dict d;
        d["min_found"] = r.min_found;
        d["witnesses"] = r.witnesses;
        d["examined"] = r.examined;
        return d;
      },
      py::arg("n"), py::arg("max_len"), py::arg("jobs") = 0);
}
