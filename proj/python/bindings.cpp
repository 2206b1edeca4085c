#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wfdl/dl_semantics.hpp"
#include "wfdl/errors.hpp"
#include "wfdl/lp_semantics.hpp"
#include "wfdl/operators.hpp"
#include "wfdl/proof.hpp"
#include "wfdl/text_format.hpp"
#include "wfdl/transform.hpp"

namespace py = pybind11;
using namespace wfdl;

namespace {

// Literals cross the boundary as strings ("p", "-p") and sets as Python sets.
using StrSet = std::set<std::string>;

StrSet strs(const LiteralSet& s) {
  StrSet out;
  for (const auto& l : s) out.insert(l.str());
  return out;
}

LiteralSet parse_set(const StrSet& s) {
  LiteralSet out;
  for (const auto& t : s) out.insert(Literal::parse(t));
  return out;
}

LogicVariant variant(const std::string& name) {
  if (name == "ndl") return LogicVariant::ndl;
  if (name == "adl") return LogicVariant::adl;
  throw py::value_error("logic must be 'ndl' or 'adl', got '" + name + "'");
}

Operator op(const std::string& name) {
  if (name == "alpha") return Operator::alpha;
  if (name == "beta") return Operator::beta;
  throw py::value_error("operator must be 'alpha' or 'beta', got '" + name + "'");
}

RuleKind kind(const std::string& name) {
  if (name == "strict") return RuleKind::strict;
  if (name == "defeasible") return RuleKind::defeasible;
  if (name == "defeater") return RuleKind::defeater;
  throw py::value_error("unknown rule kind '" + name + "'");
}

py::dict tree_dict(const ArgumentNode& n) {
  py::dict d;
  d["label"] = n.label().str();
  py::list children;
  for (const auto& c : n.children) children.append(tree_dict(c));
  d["children"] = children;
  return d;
}

ArgumentNode tree_from(const py::handle& h) {
  const auto d = h.cast<py::dict>();
  const auto label = SignedLiteral::parse(d["label"].cast<std::string>());
  ArgumentNode n{label.sign, label.literal, {}};
  if (d.contains("children"))
    for (const auto& c : d["children"]) n.children.push_back(tree_from(c));
  return n;
}

py::dict model(const Interpretation& i, const LiteralSet& universe) {
  py::dict d;
  d["well_founded"] = strs(i.well_founded);
  d["unfounded"] = strs(i.unfounded);
  d["ambiguous"] = strs(i.ambiguous(universe));
  return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Well-founded defeasible logic engine";

  auto base = py::register_exception<Error>(m, "WfdlError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());

  py::class_<DefeasibleTheory>(m, "Theory")
      .def(py::init([](const std::vector<std::tuple<std::string, std::string, StrSet, std::string>>& rules,
                       const std::vector<StrSet>& conflicts,
                       const std::vector<std::pair<std::string, std::string>>& priority, bool validate) {
             std::vector<DLRule> rs;
             for (const auto& [id, k, body, head] : rules) rs.push_back({id, kind(k), parse_set(body), Literal::parse(head)});
             std::set<ConflictSet> cs;
             for (const auto& c : conflicts) cs.insert(parse_set(c));
             std::set<Priority> ps;
             for (const auto& [inf, sup] : priority) ps.insert({inf, sup});
             DefeasibleTheory d(std::move(rs), std::move(cs), std::move(ps));
             if (validate) require_valid(d);
             return d;
           }),
           py::arg("rules"), py::arg("conflicts") = std::vector<StrSet>{},
           py::arg("priority") = std::vector<std::pair<std::string, std::string>>{}, py::arg("validate") = true,
           "rules: (id, kind, body, head) tuples; priority: (inferior, superior) pairs")
      .def_static("parse", &parse_theory, py::arg("text"), py::arg("validate") = true)
      .def_property_readonly("rules",
                             [](const DefeasibleTheory& d) {
                               std::vector<std::tuple<std::string, std::string, StrSet, std::string>> out;
                               for (const auto& r : d.rules())
                                 out.emplace_back(r.id, std::string(to_string(r.kind)), strs(r.body), r.head.str());
                               return out;
                             })
      .def_property_readonly("conflicts",
                             [](const DefeasibleTheory& d) {
                               std::vector<StrSet> out;
                               for (const auto& c : d.conflicts()) out.push_back(strs(c));
                               return out;
                             })
      .def_property_readonly("priority",
                             [](const DefeasibleTheory& d) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (const auto& p : d.priority()) out.emplace_back(p.inferior, p.superior);
                               return out;
                             })
      .def("literals", [](const DefeasibleTheory& d) { return strs(d.literals()); })
      .def("violations",
           [](const DefeasibleTheory& d) {
             std::vector<std::string> out;
             for (const auto& v : validate_theory(d)) out.push_back(v.message);
             return out;
           })
      .def("__eq__", [](const DefeasibleTheory& a, const DefeasibleTheory& b) { return a == b; })
      .def("__str__", &serialize_theory)
      .def("__repr__", [](const DefeasibleTheory& d) {
        return "<Theory with " + std::to_string(d.rules().size()) + " rules>";
      });

  py::class_<NormalProgram>(m, "Program")
      .def(py::init([](const std::vector<std::tuple<std::string, StrSet, StrSet>>& rules) {
             NormalProgram p;
             for (const auto& [head, pos, neg] : rules)
               p.rules.push_back({Literal::parse(head), parse_set(pos), parse_set(neg), {}});
             return p;
           }),
           py::arg("rules"), "rules: (head, positive body, default-negated body) tuples")
      .def_static("parse", &parse_program, py::arg("text"))
      .def_property_readonly("rules",
                             [](const NormalProgram& p) {
                               std::vector<std::tuple<std::string, StrSet, StrSet>> out;
                               for (const auto& r : p.rules) out.emplace_back(r.head.str(), strs(r.pos_body), strs(r.neg_body));
                               return out;
                             })
      .def("literals", [](const NormalProgram& p) { return strs(p.literals()); })
      .def("__eq__", [](const NormalProgram& a, const NormalProgram& b) { return a.same_rules(b); })
      .def("__str__", [](const NormalProgram& p) { return serialize_program(p); })
      .def("to_text", &serialize_program, py::arg("provenance") = false)
      .def("__repr__", [](const NormalProgram& p) {
        return "<Program with " + std::to_string(p.rules.size()) + " rules>";
      });

  m.def("wfm_dl", [](const DefeasibleTheory& d, const std::string& logic) {
        return model(wfm_dl(d, variant(logic)), d.literals());
      }, py::arg("theory"), py::arg("logic") = "ndl",
      "Well-founded model of a theory as a dict of well_founded, unfounded and ambiguous literals.");
  m.def("wfm_lp", [](const NormalProgram& p) { return model(wfm_lp(p), p.literals()); }, py::arg("program"));
  m.def("wfm_via_gamma", [](const NormalProgram& p) { return model(wfm_via_gamma(p), p.literals()); },
        py::arg("program"));
  m.def("wfm_operator", [](const DefeasibleTheory& d, const std::string& o) {
        return model(wfm_operator(d, op(o)), d.literals());
      }, py::arg("theory"), py::arg("operator") = "beta");
  m.def("entails", [](const DefeasibleTheory& d, const std::string& l, const std::string& logic) {
        return entails(d, variant(logic), Literal::parse(l));
      }, py::arg("theory"), py::arg("literal"), py::arg("logic") = "ndl");
  m.def("refutes", [](const DefeasibleTheory& d, const std::string& l, const std::string& logic) {
        return refutes(d, variant(logic), Literal::parse(l));
      }, py::arg("theory"), py::arg("literal"), py::arg("logic") = "ndl");

  m.def("stable_models", [](const NormalProgram& p, std::size_t cap) {
        std::vector<StrSet> out;
        for (const auto& s : stable_models_lp(p, cap)) out.push_back(strs(s));
        return out;
      }, py::arg("program"), py::arg("cap") = kDefaultStableCap);
  m.def("stable_sets", [](const DefeasibleTheory& d, const std::string& o, std::size_t cap) {
        std::vector<StrSet> out;
        for (const auto& s : stable_sets(d, op(o), cap)) out.push_back(strs(s));
        return out;
      }, py::arg("theory"), py::arg("operator") = "beta", py::arg("cap") = kDefaultStableCap);
  m.def("apply_operator", [](const DefeasibleTheory& d, const std::string& o, const StrSet& s) {
        return strs(apply(op(o), d, parse_set(s)));
      }, py::arg("theory"), py::arg("operator"), py::arg("s"));
  m.def("gamma", [](const NormalProgram& p, const StrSet& s) { return strs(gamma(p, parse_set(s))); },
        py::arg("program"), py::arg("s"));
  m.def("x_limit", [](const DefeasibleTheory& d, const std::string& o) {
        const auto x = x_limit(d, op(o));
        std::vector<StrSet> trace;
        for (const auto& s : x.trace) trace.push_back(strs(s));
        return py::make_tuple(strs(x.limit), trace);
      }, py::arg("theory"), py::arg("operator") = "beta", "Returns (limit, trace).");

  m.def("dl_to_lp", &dl_to_lp, py::arg("theory"), py::arg("cap") = kDefaultProductCap);
  m.def("lp_to_dl", &lp_to_dl, py::arg("program"));
  m.def("explicit_version", &explicit_version, py::arg("program"));
  m.def("encode_signs", &encode_signs, py::arg("program"));
  m.def("decode_signs", &decode_signs, py::arg("program"));
  m.def("close_conflicts", &close_conflicts, py::arg("theory"));
  m.def("eliminate_defeaters_priorities", &eliminate_defeaters_priorities, py::arg("theory"),
        py::arg("cap") = kDefaultProductCap);

  m.def("prove", [](const DefeasibleTheory& d, const std::string& goal, const std::string& logic, std::size_t budget) {
        const auto r = prove(d, variant(logic), SignedLiteral::parse(goal), budget);
        py::dict out;
        out["status"] = std::string(to_string(r.status));
        out["expanded"] = r.expanded;
        out["tree"] = r.tree ? py::object(tree_dict(*r.tree)) : py::none();
        return out;
      }, py::arg("theory"), py::arg("goal"), py::arg("logic") = "ndl", py::arg("budget") = kDefaultProofBudget,
      "goal is '+p', '-p' or 'p'; the tree is nested {label, children} dicts.");
  m.def("validate_tree", [](const DefeasibleTheory& d, const py::dict& tree, const std::string& logic) {
        const auto check = validate_tree(d, variant(logic), tree_from(tree));
        std::vector<std::tuple<std::vector<std::size_t>, std::string, std::string>> diags;
        for (const auto& x : check.diagnostics) diags.emplace_back(x.path, x.label, x.message);
        return py::make_tuple(check.valid, diags);
      }, py::arg("theory"), py::arg("tree"), py::arg("logic") = "ndl", "Returns (valid, diagnostics).");
  m.def("format_tree", [](const py::dict& tree) { return format_tree(tree_from(tree)); }, py::arg("tree"));
}
