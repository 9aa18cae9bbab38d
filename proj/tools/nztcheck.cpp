// nztcheck: command-line front end to the nzt library.
//
// Exit status: 0 when a verdict or artifact was produced (a false verdict included), 1 on
// usage or input errors, 2 when a cap or search guard refused the work.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "nzt/dispatch.hpp"
#include "nzt/error.hpp"
#include "nzt/executor.hpp"
#include "nzt/generators.hpp"
#include "nzt/good.hpp"
#include "nzt/instruction.hpp"
#include "nzt/membership.hpp"
#include "nzt/reduction.hpp"
#include "nzt/transforms.hpp"

namespace {

using nlohmann::json;
using namespace nzt;

constexpr const char* kSchema = "nztcheck/1";

struct Common {
  bool json = false;
  unsigned jobs = 0;
  std::uint32_t cap = CheckLimits::kDefaultCap;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text << '\n';
}

InstructionSequence load_program(const std::string& path) { return parse(read_file(path)); }

// Input vectors print as b1 b2 ... bn.
std::string bits_string(const std::vector<bool>& bits) {
  std::string s;
  for (bool b : bits) s += b ? '1' : '0';
  return s;
}

std::vector<bool> parse_bits(const std::string& text) {
  std::vector<bool> bits;
  for (char c : text) {
    if (c != '0' && c != '1') throw UsageError("--inputs must be a string over {0,1}");
    bits.push_back(c == '1');
  }
  return bits;
}

json outcome_json(const ExecOutcome& outcome) {
  if (const auto* t = std::get_if<Terminated>(&outcome))
    return {{"kind", "terminated"}, {"output", t->final.output ? 1 : 0}, {"steps", t->steps}};
  const auto& i = std::get<Inaction>(outcome);
  return {{"kind", "inaction"}, {"reason", to_string(i.reason)}, {"at", i.at}, {"steps", i.steps}};
}

std::string outcome_text(const ExecOutcome& outcome) {
  if (const auto* t = std::get_if<Terminated>(&outcome))
    return std::string("terminated, output ") + (t->final.output ? "1" : "0");
  const auto& i = std::get<Inaction>(outcome);
  return "inaction (" + to_string(i.reason) + ") at position " + std::to_string(i.at);
}

json assignment_json(const PartialAssignment& alpha) {
  json j = json::object();
  for (const auto& [i, b] : alpha) j[std::to_string(i)] = b ? 1 : 0;
  return j;
}

PartialAssignment parse_assignment(const std::string& text) {
  PartialAssignment alpha;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--assign expects i=b pairs, e.g. 1=0,4=1");
    try {
      const unsigned long i = std::stoul(item.substr(0, eq));
      const std::string b = item.substr(eq + 1);
      if (i == 0 || (b != "0" && b != "1")) throw UsageError("bad --assign entry '" + item + "'");
      alpha[static_cast<std::uint32_t>(i)] = b == "1";
    } catch (const std::logic_error&) {
      throw UsageError("bad --assign entry '" + item + "'");
    }
  }
  return alpha;
}

json pattern_json(const PatternReport& r) {
  json j{{"member", r.member}};
  if (!r.member) {
    j["condition"] = r.condition;
    j["reason"] = r.reason;
    j["position"] = r.position;
  }
  if (r.duplicate) j["duplicate"] = {{"k", r.duplicate->first}, {"l", r.duplicate->second}};
  if (r.constant_skip) j["constant_skip"] = *r.constant_skip;
  return j;
}

json brute_json(const BruteForceReport& r) {
  json j = json::object();
  if (!r.correct) {
    j["counterexample_input"] = bits_string(r.counterexample_inputs);
    if (r.counterexample) j["counterexample_index"] = *r.counterexample;
    if (r.outcome) j["outcome"] = outcome_json(*r.outcome);
  }
  return j;
}

json good_json(const GoodReport& r) {
  json j{{"R", r.multiply_read}, {"m", r.m}};
  if (!r.correct) j["failing_step"] = r.failing_step;
  if (r.failing_alpha) j["failing_alpha"] = assignment_json(*r.failing_alpha);
  return j;
}

json decision_json(const Decision& d, const InstructionSequence& x, std::uint32_t n) {
  json j{{"schema", kSchema},
         {"command", "check"},
         {"result", d.result},
         {"n", n},
         {"len", x.size()},
         {"min_len", min_len(n)},
         {"strategy_used", to_string(d.strategy_used)}};
  if (d.brute) j["certificate"] = brute_json(*d.brute);
  if (d.pattern) j["certificate"] = pattern_json(*d.pattern);
  if (d.good) j["certificate"] = good_json(*d.good);
  if (!j.contains("certificate")) j["certificate"] = json::object();
  return j;
}

void emit(const Common& c, const json& j, const std::string& human) {
  if (c.json) {
    std::cout << j.dump() << '\n';
  } else {
    std::cout << human << '\n';
  }
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_flag("--json", c.json, "Emit one JSON object");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide and construct single-pass instruction sequences computing n-ary OR"};
  app.require_subcommand(1);

  Common common;
  if (const char* env = std::getenv("NZTCHECK_CAP")) {
    try {
      common.cap = static_cast<std::uint32_t>(std::stoul(env));
    } catch (const std::logic_error&) {
      std::cerr << "nztcheck: NZTCHECK_CAP must be a non-negative integer\n";
      return 1;
    }
  }

  std::uint32_t n = 0;
  std::string program_path;
  std::string out_path;

  auto* minlen_cmd = app.add_subcommand("minlen", "Length of the shortest program for n-ary OR");
  minlen_cmd->add_option("--n", n, "Arity")->required()->check(CLI::PositiveNumber);
  add_common(minlen_cmd, common);

  std::string family;
  std::uint32_t gen_len = 0;
  std::uint64_t seed = 1;
  auto* gen_cmd = app.add_subcommand("gen", "Emit a program");
  gen_cmd->add_option("--family", family, "tstnz, tstnz-prime or random")
      ->required()
      ->check(CLI::IsMember({"tstnz", "tstnz-prime", "random"}));
  gen_cmd->add_option("--n", n, "Arity")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--len", gen_len, "Length for the random family (default min_len(n))");
  gen_cmd->add_option("--seed", seed, "Seed for the random family");
  gen_cmd->add_option("--out", out_path, "Write the program here instead of stdout");
  add_common(gen_cmd, common);

  std::string inputs;
  bool trace = false;
  auto* run_cmd = app.add_subcommand("run", "Execute a program on one input vector");
  run_cmd->add_option("--program", program_path, ".pga file")->required();
  run_cmd->add_option("--inputs", inputs, "Bits b1 b2 ... bn, e.g. 0110")->required();
  run_cmd->add_flag("--trace", trace, "Print position, instruction and reply for every step");
  add_common(run_cmd, common);

  std::string strategy_name = "auto";
  auto* check_cmd = app.add_subcommand("check", "Decide whether a program computes n-ary OR");
  check_cmd->add_option("--program", program_path, ".pga file")->required();
  check_cmd->add_option("--n", n, "Arity")->required()->check(CLI::PositiveNumber);
  check_cmd->add_option("--strategy", strategy_name, "auto, brute, shortest, good or symbolic")
      ->check(CLI::IsMember({"auto", "brute", "shortest", "good", "symbolic"}));
  check_cmd->add_option("--cap", common.cap, "Largest arity enumerated by brute force");
  check_cmd->add_option("--jobs", common.jobs, "Worker threads (default: all cores)");
  add_common(check_cmd, common);

  std::optional<std::uint32_t> classify_n;
  auto* classify_cmd = app.add_subcommand("classify", "Syntactic classification of a program");
  classify_cmd->add_option("--program", program_path, ".pga file")->required();
  classify_cmd->add_option("--n", classify_n, "Arity (default: largest input index)");
  add_common(classify_cmd, common);

  std::string op;
  std::string assign_text;
  std::uint32_t aux_index = 0;
  auto* transform_cmd = app.add_subcommand("transform", "Register elimination or aux polarity flip");
  transform_cmd->add_option("--op", op, "eliminate, fix or chi")
      ->required()
      ->check(CLI::IsMember({"eliminate", "fix", "chi"}));
  transform_cmd->add_option("--program", program_path, ".pga file")->required();
  transform_cmd->add_option("--assign", assign_text, "Partial assignment, e.g. 1=0,4=1");
  transform_cmd->add_option("--aux-index", aux_index, "Aux register for chi")
      ->check(CLI::PositiveNumber);
  transform_cmd->add_option("--out", out_path, "Write the program here instead of stdout");
  add_common(transform_cmd, common);

  std::string prop_text;
  std::string q_text = "2/5";
  std::uint64_t m_param = 4;
  bool verify = false;
  auto* reduce_cmd = app.add_subcommand("reduce", "Build the OR-correctness instance of a proposition");
  reduce_cmd->add_option("--prop", prop_text, "Proposition over x1, x2, ... with ! & | ( )")
      ->required();
  reduce_cmd->add_option("--q", q_text, "Rational q > 0 with 1/q not an integer");
  reduce_cmd->add_option("--m", m_param, "Slack m > 3");
  reduce_cmd->add_option("--out", out_path, "Write the program here");
  reduce_cmd->add_flag("--verify", verify, "Check the instance against the SAT oracle");
  reduce_cmd->add_option("--cap", common.cap, "Largest N checked by brute force");
  reduce_cmd->add_option("--jobs", common.jobs, "Worker threads (default: all cores)");
  add_common(reduce_cmd, common);

  std::uint32_t max_len = 0;
  bool emit_witnesses = false;
  bool override_guard = false;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive shortest-program search");
  search_cmd->add_option("--n", n, "Arity")->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--max-len", max_len, "Largest length tried")
      ->required()
      ->check(CLI::PositiveNumber);
  search_cmd->add_flag("--emit-witnesses", emit_witnesses, "List every witness program");
  search_cmd->add_flag("--override-guard", override_guard, "Allow n > 2 or max-len > 6");
  search_cmd->add_option("--jobs", common.jobs, "Worker threads (default: all cores)");
  add_common(search_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (minlen_cmd->parsed()) {
      const auto len = min_len(n);
      emit(common, {{"schema", kSchema}, {"command", "minlen"}, {"n", n}, {"min_len", len}},
           std::to_string(len));
      return 0;
    }

    if (gen_cmd->parsed()) {
      const auto x = [&] {
        if (family == "tstnz") return gen_tstnz(n);
        if (family == "tstnz-prime") return gen_tstnz_prime(n);
        // Uniform over the canonical alphabet; the same seed gives the same program.
        const auto len = gen_len ? gen_len : static_cast<std::uint32_t>(min_len(n));
        const auto alphabet = canonical_alphabet(n, len);
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
        std::vector<Instruction> v;
        for (std::uint32_t i = 0; i < len; ++i) v.push_back(alphabet[pick(rng)]);
        return InstructionSequence(std::move(v));
      }();
      const std::string text = render(x);
      if (!out_path.empty()) write_text(out_path, text);
      if (common.json) {
        emit(common,
             {{"schema", kSchema}, {"command", "gen"}, {"family", family}, {"n", n},
              {"len", x.size()}, {"program", text}},
             "");
      } else if (out_path.empty()) {
        std::cout << text << '\n';
      }
      return 0;
    }

    if (run_cmd->parsed()) {
      const auto x = load_program(program_path);
      const auto bits = parse_bits(inputs);
      json steps = json::array();
      TraceSink sink;
      if (trace) {
        sink = [&](const TraceStep& s) {
          if (common.json) {
            json step{{"position", s.position}, {"instruction", render(s.instruction)}};
            if (s.reply) step["reply"] = *s.reply ? 1 : 0;
            steps.push_back(step);
          } else {
            std::cout << s.position << '\t' << render(s.instruction) << '\t'
                      << (s.reply ? (*s.reply ? "1" : "0") : "-") << '\n';
          }
        };
      }
      const auto outcome = execute(x, RegisterState::fresh(bits), sink);
      json j{{"schema", kSchema}, {"command", "run"}, {"len", x.size()},
             {"inputs", bits_string(bits)}, {"outcome", outcome_json(outcome)}};
      if (trace) j["trace"] = steps;
      emit(common, j, outcome_text(outcome));
      return 0;
    }

    if (check_cmd->parsed()) {
      const auto x = load_program(program_path);
      CheckLimits limits;
      limits.cap = common.cap;
      limits.jobs = common.jobs;
      const auto d = decide(x, n, parse_strategy(strategy_name), limits);
      const json j = decision_json(d, x, n);
      std::string human = std::string(d.result ? "true" : "false") + " (strategy " +
                          to_string(d.strategy_used) + ")";
      if (d.brute && !d.result)
        human += "; counterexample " + bits_string(d.brute->counterexample_inputs) + ": " +
                 outcome_text(*d.brute->outcome);
      if (d.pattern && !d.result) human += "; " + d.pattern->reason;
      if (d.pattern && d.pattern->constant_skip)
        human += "; constant skip at position " + std::to_string(*d.pattern->constant_skip);
      if (d.good && !d.result) human += "; failing step " + std::to_string(d.good->failing_step);
      emit(common, j, human);
      return 0;
    }

    if (classify_cmd->parsed()) {
      const auto x = load_program(program_path);
      const std::uint32_t cn = classify_n ? *classify_n : max_input_index(x.instructions());
      if (cn == 0) throw UsageError("program reads no input register; pass --n");
      const auto cls = classify(x);
      const bool shortest = x.size() == min_len(cn);
      const auto pc = is_member_pc(x, cn);
      const auto pce = is_member_pce(x, cn);
      json multiply = json::array();
      for (const auto& [reg, count] : cls.multiply_read) multiply.push_back(reg);
      json j{{"schema", kSchema},
             {"command", "classify"},
             {"n", cn},
             {"len", x.size()},
             {"min_len", min_len(cn)},
             {"good", cls.is_good},
             {"very_good", cls.is_very_good},
             {"multiply_read", multiply},
             {"shortest_length_for_n", shortest},
             {"member_pc", pc.member},
             {"member_pce", pce.member}};
      if (!pce.member && shortest) j["pce_rejection"] = pattern_json(pce);
      std::ostringstream h;
      h << "good " << cls.is_good << ", very good " << cls.is_very_good << ", shortest length "
        << shortest << ", TSTNZpc " << pc.member << ", TSTNZpce " << pce.member;
      emit(common, j, h.str());
      return 0;
    }

    if (transform_cmd->parsed()) {
      const auto x = load_program(program_path);
      InstructionSequence y = x;
      if (op == "chi") {
        if (aux_index == 0) throw UsageError("chi needs --aux-index");
        y = chi(x, aux_index);
      } else {
        if (assign_text.empty()) throw UsageError(op + " needs --assign");
        const auto alpha = parse_assignment(assign_text);
        if (op == "fix") {
          if (alpha.size() != 1) throw UsageError("fix takes exactly one i=b pair");
          y = fix_register(x, alpha.begin()->first, alpha.begin()->second);
        } else {
          y = eliminate(x, alpha);
        }
      }
      const std::string text = render(y);
      if (!out_path.empty()) write_text(out_path, text);
      if (common.json) {
        emit(common,
             {{"schema", kSchema}, {"command", "transform"}, {"op", op}, {"len", y.size()},
              {"program", text}},
             "");
      } else if (out_path.empty()) {
        std::cout << text << '\n';
      }
      return 0;
    }

    if (reduce_cmd->parsed()) {
      const auto prop = parse_prop(prop_text);
      const auto params = ReductionParams::make(parse_rational(q_text), m_param);
      const auto inst = build_psi(prop, params);
      const std::string text = render(inst.psi);
      if (!out_path.empty()) write_text(out_path, text);
      const auto big_n = static_cast<std::uint32_t>(inst.n_registers);
      json j{{"schema", kSchema},
             {"command", "reduce"},
             {"prop", render(prop)},
             {"prop_len", prop.length()},
             {"q", std::to_string(params.q.numerator()) + "/" + std::to_string(params.q.denominator())},
             {"m", params.m},
             {"c", params.c},
             {"c_prime", params.c_prime},
             {"n", big_n},
             {"len", inst.psi.size()},
             {"min_len", min_len(big_n)},
             {"phi_len", inst.phi_len},
             {"bound", inst.bound}};
      std::ostringstream h;
      h << "N " << big_n << ", len " << inst.psi.size() << ", bound " << inst.bound;
      if (verify) {
        const bool sat = sat_oracle(prop).satisfiable;
        CheckLimits limits;
        limits.cap = common.cap;
        limits.jobs = common.jobs;
        const auto d = decide(inst.psi, big_n,
                              big_n <= std::min(limits.cap, CheckLimits::kHardCap)
                                  ? Strategy::Brute
                                  : Strategy::Symbolic,
                              limits);
        j["verify"] = {{"satisfiable", sat},
                       {"result", d.result},
                       {"strategy_used", to_string(d.strategy_used)},
                       {"agrees", d.result == !sat}};
        h << "; satisfiable " << sat << ", correct " << d.result << " ("
          << to_string(d.strategy_used) << "), " << (d.result == !sat ? "agrees" : "DISAGREES");
      }
      if (out_path.empty() && !common.json) h << '\n' << text;
      emit(common, j, h.str());
      return 0;
    }

    if (search_cmd->parsed()) {
      SearchOptions options;
      options.override_guard = override_guard;
      options.jobs = common.jobs;
      const auto r = exhaustive_min_search(n, max_len, options);
      json j{{"schema", kSchema}, {"command", "search"}, {"n", n}, {"max_len", max_len},
             {"examined", r.examined}, {"witness_count", r.witnesses.size()},
             {"canonical_witness_count", r.canonical_witnesses.size()}};
      j["min_found"] = r.min_found ? json(*r.min_found) : json(nullptr);
      std::ostringstream h;
      h << "min_found " << (r.min_found ? std::to_string(*r.min_found) : "none") << ", "
        << r.witnesses.size() << " witnesses (" << r.canonical_witnesses.size()
        << " up to aux renaming), " << r.examined << " sequences examined";
      if (emit_witnesses) {
        json w = json::array();
        for (const auto& x : r.witnesses) {
          w.push_back(render(x));
          h << '\n' << render(x);
        }
        j["witnesses"] = w;
      }
      emit(common, j, h.str());
      return 0;
    }
  } catch (const CapExceeded& e) {
    std::cerr << "nztcheck: refused: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "nztcheck: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
