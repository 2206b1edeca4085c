#include "wfdl/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include "wfdl/dl_semantics.hpp"
#include "wfdl/errors.hpp"
#include "wfdl/lp_semantics.hpp"
#include "wfdl/operators.hpp"
#include "wfdl/proof.hpp"
#include "wfdl/text_format.hpp"
#include "wfdl/transform.hpp"

namespace wfdl::cli {

namespace {

using json = nlohmann::json;
using Input = std::variant<DefeasibleTheory, NormalProgram>;

struct Options {
  std::string path;
  std::string type; // "", "theory" or "program"
  bool json = false;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_program_input(const Options& o) {
  if (!o.type.empty()) return o.type == "program";
  return o.path.size() >= 3 && o.path.ends_with(".lp");
}

Input load(const Options& o, bool validate = true) {
  const std::string text = read_file(o.path);
  if (is_program_input(o)) return parse_program(text);
  return parse_theory(text, validate);
}

class UsageError : public Error {
public:
  using Error::Error;
};

const DefeasibleTheory& need_theory(const Input& in, std::string_view what) {
  if (const auto* d = std::get_if<DefeasibleTheory>(&in)) return *d;
  throw UsageError(std::string(what) + " needs a theory (.dfl) input");
}

const NormalProgram& need_program(const Input& in, std::string_view what) {
  if (const auto* p = std::get_if<NormalProgram>(&in)) return *p;
  throw UsageError(std::string(what) + " needs a program (.lp) input");
}

json to_json(const LiteralSet& s) {
  json out = json::array();
  for (const auto& l : s) out.push_back(l.str());
  return out;
}

std::string bracket(const LiteralSet& s) {
  std::string out = "[";
  for (const auto& l : s) {
    if (out.size() > 1) out += ", ";
    out += l.str();
  }
  return out + "]";
}

json to_json(const DefeasibleTheory& d) {
  json rules = json::array();
  for (const auto& r : d.rules())
    rules.push_back({{"id", r.id}, {"kind", to_string(r.kind)}, {"body", to_json(r.body)}, {"head", r.head.str()}});
  json conflicts = json::array();
  for (const auto& c : d.conflicts()) conflicts.push_back(to_json(c));
  json priority = json::array();
  for (const auto& p : d.priority()) priority.push_back({{"inferior", p.inferior}, {"superior", p.superior}});
  return {{"rules", rules}, {"conflicts", conflicts}, {"priority", priority}};
}

json to_json(const NormalProgram& p) {
  std::vector<LPRule> sorted = p.rules;
  std::stable_sort(sorted.begin(), sorted.end());
  json rules = json::array();
  for (const auto& r : sorted) {
    json j = {{"head", r.head.str()}, {"pos_body", to_json(r.pos_body)}, {"neg_body", to_json(r.neg_body)}};
    if (!r.origin.empty()) j["origin"] = r.origin;
    rules.push_back(std::move(j));
  }
  return {{"rules", rules}};
}

json to_json(const ArgumentNode& n) {
  json kids = json::array();
  for (const auto& c : n.children) kids.push_back(to_json(c));
  return {{"label", n.label().str()}, {"children", kids}};
}

LogicVariant variant_of(const std::string& s) { return s == "adl" ? LogicVariant::adl : LogicVariant::ndl; }
Operator operator_of(const std::string& s) { return s == "alpha" ? Operator::alpha : Operator::beta; }

// --- subcommands -----------------------------------------------------------

void cmd_wfm(const Options& o, std::string logic, std::ostream& out) {
  const Input in = load(o);
  const bool program = std::holds_alternative<NormalProgram>(in);
  if (logic.empty()) logic = program ? "wfs" : "ndl";

  Interpretation m;
  LiteralSet universe;
  if (program) {
    if (logic != "wfs") throw UsageError("logic " + logic + " needs a theory (.dfl) input");
    const auto& p = std::get<NormalProgram>(in);
    m = wfm_lp(p);
    universe = p.literals();
  } else {
    const auto& d = std::get<DefeasibleTheory>(in);
    universe = d.literals();
    if (logic == "wfs")
      m = restrict_to(wfm_lp(dl_to_lp(d), universe), universe);
    else if (logic == "alpha" || logic == "beta")
      m = wfm_operator(d, operator_of(logic));
    else
      m = wfm_dl(d, variant_of(logic));
  }
  const LiteralSet amb = m.ambiguous(universe);
  if (o.json) {
    out << json{{"logic", logic},
                {"well_founded", to_json(m.well_founded)},
                {"unfounded", to_json(m.unfounded)},
                {"ambiguous", to_json(amb)}}
               .dump(2)
        << '\n';
    return;
  }
  out << "logic = " << logic << '\n'
      << "well_founded = " << bracket(m.well_founded) << '\n'
      << "unfounded = " << bracket(m.unfounded) << '\n'
      << "ambiguous = " << bracket(amb) << '\n';
}

void cmd_translate(const Options& o, const std::string& dir, std::size_t cap, std::ostream& out) {
  const Input in = load(o);
  std::optional<DefeasibleTheory> theory;
  std::optional<NormalProgram> program;
  if (dir == "dl2lp") {
    program = dl_to_lp(need_theory(in, dir), cap);
  } else if (dir == "lp2dl") {
    theory = lp_to_dl(need_program(in, dir));
  } else if (dir == "explicit") {
    program = explicit_version(need_program(in, dir));
  } else if (dir == "compile") {
    theory = eliminate_defeaters_priorities(need_theory(in, dir), cap);
  } else {
    theory = close_conflicts(need_theory(in, dir));
  }
  if (o.json)
    out << (theory ? to_json(*theory) : to_json(*program)).dump(2) << '\n';
  else
    out << (theory ? serialize_theory(*theory) : serialize_program(*program, true));
}

void cmd_stable(const Options& o, const std::string& op, std::size_t cap, std::ostream& out) {
  const Input in = load(o);
  std::set<LiteralSet> sets;
  if (op == "gl") {
    const auto* p = std::get_if<NormalProgram>(&in);
    sets = stable_models_lp(p ? *p : dl_to_lp(std::get<DefeasibleTheory>(in)), cap);
  } else {
    sets = stable_sets(need_theory(in, "operator " + op), operator_of(op), cap);
  }
  if (o.json) {
    json arr = json::array();
    for (const auto& s : sets) arr.push_back(to_json(s));
    out << json{{"operator", op}, {"stable_sets", arr}}.dump(2) << '\n';
    return;
  }
  out << "operator = " << op << '\n' << "count = " << sets.size() << '\n';
  for (const auto& s : sets) out << "stable_set = " << bracket(s) << '\n';
}

int cmd_prove(const Options& o, const std::string& logic, const std::string& goal_text, std::size_t budget,
              std::ostream& out) {
  const DefeasibleTheory d = need_theory(load(o), "prove");
  SignedLiteral goal;
  try {
    goal = SignedLiteral::parse(goal_text);
  } catch (const Error& e) {
    throw UsageError("bad goal '" + goal_text + "': " + e.what());
  }
  const ProofResult r = prove(d, variant_of(logic), goal, budget);
  if (o.json) {
    json j = {{"goal", goal.str()}, {"logic", logic}, {"status", to_string(r.status)}, {"expanded", r.expanded}};
    j["tree"] = r.tree ? to_json(*r.tree) : json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << "goal = " << goal.str() << '\n'
        << "logic = " << logic << '\n'
        << "status = " << to_string(r.status) << '\n'
        << "expanded = " << r.expanded << '\n';
    if (r.tree) out << format_tree(*r.tree);
  }
  return r.status == ProofStatus::budget_exhausted ? kBudget : kOk;
}

void cmd_fixpoint(const Options& o, const std::string& op, std::ostream& out) {
  const DefeasibleTheory d = need_theory(load(o), "fixpoint");
  const XLimit x = x_limit(d, operator_of(op));
  const Interpretation m = wfm_operator(d, operator_of(op));
  if (o.json) {
    json trace = json::array();
    for (const auto& s : x.trace) trace.push_back(to_json(s));
    out << json{{"operator", op},
                {"trace", trace},
                {"limit", to_json(x.limit)},
                {"well_founded", to_json(m.well_founded)},
                {"unfounded", to_json(m.unfounded)}}
               .dump(2)
        << '\n';
    return;
  }
  out << "operator = " << op << '\n';
  for (std::size_t k = 0; k < x.trace.size(); ++k) out << "X" << k << " = " << bracket(x.trace[k]) << '\n';
  out << "limit = " << bracket(x.limit) << '\n'
      << "well_founded = " << bracket(m.well_founded) << '\n'
      << "unfounded = " << bracket(m.unfounded) << '\n';
}

int cmd_check(const Options& o, std::ostream& out) {
  const Input in = load(o, false);
  std::vector<Violation> violations;
  if (const auto* d = std::get_if<DefeasibleTheory>(&in)) violations = validate_theory(*d);
  if (o.json) {
    json arr = json::array();
    for (const auto& v : violations) arr.push_back(v.message);
    out << json{{"ok", violations.empty()}, {"violations", arr}}.dump(2) << '\n';
  } else if (violations.empty()) {
    out << "ok\n";
  } else {
    for (const auto& v : violations) out << "violation: " << v.message << '\n';
  }
  return violations.empty() ? kOk : kInvalid;
}

void cmd_scan(std::size_t count, std::uint32_t seed, bool as_json, std::ostream& out) {
  const ScanReport r = scan_open_question(count, seed);
  if (as_json) {
    json found = json::array();
    for (const auto& f : r.findings) found.push_back({{"literal", f.literal.str()}, {"theory", serialize_theory(f.theory)}});
    out << json{{"theories", r.theories}, {"literals", r.literals}, {"findings", found}}.dump(2) << '\n';
    return;
  }
  out << "theories = " << r.theories << '\n'
      << "literals = " << r.literals << '\n'
      << "findings = " << r.findings.size() << '\n';
  for (const auto& f : r.findings)
    out << "% refuted under alpha but not beta: " << f.literal.str() << '\n' << serialize_theory(f.theory);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Well-founded semantics for defeasible theories and normal logic programs", "wfdl"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  Options opts;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", opts.path, "Theory (.dfl) or program (.lp) file, '-' for stdin")->required();
    sub->add_option("--type", opts.type, "Override the input type guessed from the extension")
        ->check(CLI::IsMember({"theory", "program"}));
    sub->add_flag("--json", opts.json, "Emit JSON");
  };

  std::string logic, direction = "dl2lp", op = "beta", goal, fix_op = "beta";
  std::size_t cap = kDefaultStableCap, product_cap = kDefaultProductCap, budget = kDefaultProofBudget;
  std::string prove_logic = "ndl";
  std::size_t scan_count = 500;
  std::uint32_t scan_seed = 1;
  bool scan_json = false;

  auto* wfm = app.add_subcommand("wfm", "Well-founded model");
  add_input(wfm);
  wfm->add_option("--logic", logic, "ndl, adl, wfs, alpha or beta (default ndl, or wfs for programs)")
      ->check(CLI::IsMember({"ndl", "adl", "wfs", "alpha", "beta"}));

  auto* translate = app.add_subcommand("translate", "Translate between theories and programs");
  add_input(translate);
  translate->add_option("--direction", direction, "dl2lp, lp2dl, explicit, compile or close-conflicts")
      ->check(CLI::IsMember({"dl2lp", "lp2dl", "explicit", "compile", "close-conflicts"}))
      ->capture_default_str();
  translate->add_option("--cap", product_cap, "Bound on conflict-set products")->capture_default_str();

  auto* stable = app.add_subcommand("stable", "Enumerate stable sets or stable models");
  add_input(stable);
  stable->add_option("--operator", op, "alpha, beta or gl")
      ->check(CLI::IsMember({"alpha", "beta", "gl"}))
      ->capture_default_str();
  stable->add_option("--cap", cap, "Largest literal universe to enumerate")->capture_default_str();

  auto* prove_cmd = app.add_subcommand("prove", "Search for a proof tree");
  add_input(prove_cmd);
  prove_cmd->add_option("--logic", prove_logic, "ndl or adl")
      ->check(CLI::IsMember({"ndl", "adl"}))
      ->capture_default_str();
  prove_cmd->add_option("--goal", goal, "[+|-]literal; write --goal=-p for refutations")->required();
  prove_cmd->add_option("--budget", budget, "Maximum goal expansions")->capture_default_str();

  auto* fixpoint = app.add_subcommand("fixpoint", "Show the alternating fixpoint trace");
  add_input(fixpoint);
  fixpoint->add_option("--operator", fix_op, "alpha or beta")
      ->check(CLI::IsMember({"alpha", "beta"}))
      ->capture_default_str();

  auto* check = app.add_subcommand("check", "Validate a theory");
  add_input(check);

  auto* scan = app.add_subcommand("scan-open-question",
                                  "Look for literals refuted by alpha-stable sets but not by beta-stable sets");
  scan->add_option("--count", scan_count, "Random theories to try")->capture_default_str();
  scan->add_option("--seed", scan_seed, "Generator seed")->capture_default_str();
  scan->add_flag("--json", scan_json, "Emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*wfm) cmd_wfm(opts, logic, out);
    else if (*translate) cmd_translate(opts, direction, product_cap, out);
    else if (*stable) cmd_stable(opts, op, cap, out);
    else if (*prove_cmd) return cmd_prove(opts, prove_logic, goal, budget, out);
    else if (*fixpoint) cmd_fixpoint(opts, fix_op, out);
    else if (*check) return cmd_check(opts, out);
    else if (*scan) cmd_scan(scan_count, scan_seed, scan_json, out);
    return kOk;
  } catch (const ParseError& e) {
    err << "error: " << opts.path << ":" << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    for (const auto& v : e.violations()) err << "  " << v << '\n';
    return kInvalid;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCap;
  } catch (const Error& e) {
    // parse errors, unreadable files, bad goals and other usage problems
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

} // namespace wfdl::cli
