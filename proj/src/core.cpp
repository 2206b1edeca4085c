#include <algorithm>
#include <map>

#include "wfdl/errors.hpp"
#include "wfdl/interpretation.hpp"
#include "wfdl/literal.hpp"
#include "wfdl/program.hpp"
#include "wfdl/theory.hpp"

namespace wfdl {

bool is_valid_atom(std::string_view atom) {
  if (atom.empty()) return false;
  return std::all_of(atom.begin(), atom.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '\'';
  });
}

Literal Literal::parse(std::string_view text) {
  bool pos = true;
  if (!text.empty() && text.front() == '-') {
    pos = false;
    text.remove_prefix(1);
  }
  if (!is_valid_atom(text)) throw Error("malformed literal '" + std::string(text) + "'");
  return Literal{std::string(text), pos};
}

LiteralSet lits(std::initializer_list<std::string_view> texts) {
  LiteralSet out;
  for (auto t : texts) out.insert(Literal::parse(t));
  return out;
}

std::string to_string(const LiteralSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : s) {
    if (!first) out += ", ";
    out += l.str();
    first = false;
  }
  return out + "}";
}

std::string_view to_string(RuleKind k) {
  switch (k) {
  case RuleKind::strict: return "strict";
  case RuleKind::defeasible: return "defeasible";
  case RuleKind::defeater: return "defeater";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// DefeasibleTheory

DefeasibleTheory::DefeasibleTheory(std::vector<DLRule> rules, std::set<ConflictSet> conflicts,
                                   std::set<Priority> priority)
    : rules_(std::move(rules)), conflicts_(std::move(conflicts)), priority_(std::move(priority)) {
  for (const auto& a : atoms()) conflicts_.insert(ConflictSet{Literal{a, true}, Literal{a, false}});
}

bool operator==(const DefeasibleTheory& a, const DefeasibleTheory& b) {
  if (a.conflicts_ != b.conflicts_ || a.priority_ != b.priority_) return false;
  auto ra = a.rules_;
  auto rb = b.rules_;
  std::sort(ra.begin(), ra.end());
  std::sort(rb.begin(), rb.end());
  return ra == rb;
}

std::set<std::string> DefeasibleTheory::atoms() const {
  std::set<std::string> out;
  for (const auto& r : rules_) {
    out.insert(r.head.atom);
    for (const auto& b : r.body) out.insert(b.atom);
  }
  for (const auto& c : conflicts_)
    for (const auto& l : c) out.insert(l.atom);
  return out;
}

LiteralSet DefeasibleTheory::literals() const {
  LiteralSet out;
  for (const auto& a : atoms()) {
    out.emplace(a, true);
    out.emplace(a, false);
  }
  return out;
}

const DLRule* DefeasibleTheory::find_rule(std::string_view id) const {
  for (const auto& r : rules_)
    if (r.id == id) return &r;
  return nullptr;
}

bool DefeasibleTheory::has_defeaters() const {
  return std::any_of(rules_.begin(), rules_.end(), [](const DLRule& r) { return r.is_defeater(); });
}

bool is_minimal_conflict(const ConflictSet& c) {
  return c.size() == 2 && c.begin()->atom == std::next(c.begin())->atom;
}

bool DefeasibleTheory::has_minimal_conflicts() const {
  return std::all_of(conflicts_.begin(), conflicts_.end(), is_minimal_conflict);
}

bool DefeasibleTheory::inferior(std::string_view s, std::string_view r) const {
  return priority_.contains(Priority{std::string(s), std::string(r)});
}

std::vector<Violation> validate_theory(const DefeasibleTheory& d) {
  std::vector<Violation> out;
  std::map<std::string, const DLRule*> by_id;
  for (const auto& r : d.rules()) {
    if (r.id.empty()) {
      out.push_back({ViolationKind::duplicate_rule_id, "rule with empty id"});
      continue;
    }
    if (!by_id.emplace(r.id, &r).second)
      out.push_back({ViolationKind::duplicate_rule_id, "rule id '" + r.id + "' used more than once"});
  }

  std::map<std::string, std::vector<std::string>> superiors;
  for (const auto& pr : d.priority()) {
    bool known = true;
    for (const auto* id : {&pr.inferior, &pr.superior}) {
      auto it = by_id.find(*id);
      if (it == by_id.end()) {
        out.push_back({ViolationKind::unknown_rule_in_priority,
                       "priority mentions unknown rule '" + *id + "'"});
        known = false;
      } else if (it->second->is_strict()) {
        out.push_back({ViolationKind::priority_on_strict_rule,
                       "priority mentions strict rule '" + *id + "'"});
      }
    }
    if (known) superiors[pr.inferior].push_back(pr.superior);
  }

  // Cycle detection over inferior -> superior edges.
  std::map<std::string, int> colour; // 0 new, 1 on stack, 2 done
  std::set<std::string> reported;
  auto visit = [&](auto&& self, const std::string& v) -> void {
    colour[v] = 1;
    for (const auto& w : superiors[v]) {
      if (colour[w] == 1) {
        if (reported.insert(w).second)
          out.push_back({ViolationKind::priority_cycle,
                         "priority relation has a cycle through rule '" + w + "'"});
      } else if (colour[w] == 0) {
        self(self, w);
      }
    }
    colour[v] = 2;
  };
  for (const auto& [v, _] : superiors)
    if (colour[v] == 0) visit(visit, v);

  for (const auto& a : d.atoms()) {
    if (!d.conflicts().contains(ConflictSet{Literal{a, true}, Literal{a, false}}))
      out.push_back({ViolationKind::missing_minimal_conflict,
                     "minimal conflict set {" + a + ", -" + a + "} is missing"});
  }
  for (const auto& c : d.conflicts()) {
    if (c.size() < 2)
      out.push_back({ViolationKind::undersized_conflict,
                     "conflict set " + to_string(c) + " has fewer than two literals"});
  }
  return out;
}

void require_valid(const DefeasibleTheory& d) {
  auto v = validate_theory(d);
  if (v.empty()) return;
  std::vector<std::string> msgs;
  for (auto& x : v) msgs.push_back(x.message);
  const std::string what = "theory is not admissible: " + msgs.front();
  throw ValidationError(what, std::move(msgs));
}

// ---------------------------------------------------------------------------
// Programs

LiteralSet NormalProgram::literals() const {
  LiteralSet out;
  for (const auto& r : rules) {
    out.insert(r.head);
    out.insert(r.pos_body.begin(), r.pos_body.end());
    out.insert(r.neg_body.begin(), r.neg_body.end());
  }
  return out;
}

bool NormalProgram::is_definite() const {
  return std::all_of(rules.begin(), rules.end(), [](const LPRule& r) { return r.neg_body.empty(); });
}

bool NormalProgram::same_rules(const NormalProgram& other) const {
  std::set<LPRule> a(rules.begin(), rules.end());
  std::set<LPRule> b(other.rules.begin(), other.rules.end());
  return a == b;
}

DefiniteProgram::DefiniteProgram(NormalProgram p) : program_(std::move(p)) {
  if (!program_.is_definite()) throw PreconditionError("program contains default literals");
}

// ---------------------------------------------------------------------------
// Interpretations

bool Interpretation::coherent() const {
  return std::none_of(well_founded.begin(), well_founded.end(),
                      [&](const Literal& l) { return unfounded.contains(l); });
}

LiteralSet Interpretation::ambiguous(const LiteralSet& universe) const {
  LiteralSet out;
  for (const auto& l : universe)
    if (!well_founded.contains(l) && !unfounded.contains(l)) out.insert(l);
  return out;
}

bool knowledge_leq(const Interpretation& a, const Interpretation& b) {
  return std::includes(b.well_founded.begin(), b.well_founded.end(), a.well_founded.begin(),
                       a.well_founded.end()) &&
         std::includes(b.unfounded.begin(), b.unfounded.end(), a.unfounded.begin(),
                       a.unfounded.end());
}

Interpretation restrict_to(const Interpretation& i, const LiteralSet& universe) {
  Interpretation out;
  for (const auto& l : i.well_founded)
    if (universe.contains(l)) out.well_founded.insert(l);
  for (const auto& l : i.unfounded)
    if (universe.contains(l)) out.unfounded.insert(l);
  return out;
}

} // namespace wfdl
