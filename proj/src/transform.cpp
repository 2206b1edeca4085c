#include "wfdl/transform.hpp"

#include <map>
#include <vector>

#include "wfdl/errors.hpp"

namespace wfdl {

namespace {

constexpr std::string_view kNegSuffix = "__neg";

std::vector<ConflictSet> conflicts_of(const DefeasibleTheory& d, const Literal& p) {
  std::vector<ConflictSet> out;
  for (const auto& c : d.conflicts())
    if (c.contains(p)) out.push_back(c);
  return out;
}

// Visits every tuple of the cartesian product of `factors`. An empty factor
// makes the product empty.
template <class T, class F>
void for_each_choice(const std::vector<std::vector<T>>& factors, std::size_t cap,
                     const std::string& what, F&& visit) {
  std::size_t total = 1;
  for (const auto& f : factors) {
    if (f.empty()) return;
    if (f.size() > cap / total) throw CapExceeded(what + ": product exceeds cap " + std::to_string(cap));
    total *= f.size();
  }
  std::vector<std::size_t> idx(factors.size(), 0);
  std::vector<T> pick(factors.size());
  for (;;) {
    for (std::size_t i = 0; i < factors.size(); ++i) pick[i] = factors[i][idx[i]];
    visit(pick);
    std::size_t i = 0;
    for (; i < factors.size(); ++i) {
      if (++idx[i] < factors[i].size()) break;
      idx[i] = 0;
    }
    if (i == factors.size()) return;
  }
}

void require_positive_program(const NormalProgram& p, std::string_view op) {
  for (const auto& l : p.literals())
    if (!l.positive)
      throw PreconditionError(std::string(op) + " needs a program over positive atoms; found " +
                              l.str() + " (encode signs first)");
}

Literal neg(const std::string& atom) { return Literal{atom, false}; }

} // namespace

DefeasibleTheory close_conflicts(const DefeasibleTheory& d) {
  std::set<ConflictSet> closed = d.conflicts();
  std::vector<ConflictSet> work(closed.begin(), closed.end());
  while (!work.empty()) {
    ConflictSet c = std::move(work.back());
    work.pop_back();
    for (const auto& r : d.rules()) {
      if (!r.is_strict() || !c.contains(r.head)) continue;
      ConflictSet next = r.body;
      for (const auto& q : c)
        if (q != r.head) next.insert(q);
      if (next.size() < 2) continue;
      if (closed.insert(next).second) work.push_back(std::move(next));
    }
  }
  return DefeasibleTheory(d.rules(), closed, d.priority());
}

std::set<LiteralSet> prod_conflicts(const DefeasibleTheory& d, const Literal& p, std::size_t cap) {
  std::vector<std::vector<Literal>> factors;
  for (const auto& c : conflicts_of(d, p)) {
    std::vector<Literal> rivals;
    for (const auto& q : c)
      if (q != p) rivals.push_back(q);
    factors.push_back(std::move(rivals));
  }
  std::set<LiteralSet> out;
  for_each_choice(factors, cap, "Prod(C[" + p.str() + "])", [&](const std::vector<Literal>& pick) {
    out.insert(LiteralSet(pick.begin(), pick.end()));
  });
  return out;
}

NormalProgram dl_to_lp(const DefeasibleTheory& d, std::size_t cap) {
  if (d.has_defeaters()) throw PreconditionError("dl_to_lp: theory has defeaters");
  if (d.has_priorities()) throw PreconditionError("dl_to_lp: theory has priorities");
  NormalProgram out;
  std::map<Literal, std::set<LiteralSet>> prods;
  for (const auto& r : d.rules()) {
    if (r.is_strict()) {
      out.rules.push_back({r.head, r.body, {}, r.id});
      continue;
    }
    auto it = prods.find(r.head);
    if (it == prods.end()) it = prods.emplace(r.head, prod_conflicts(d, r.head, cap)).first;
    for (const auto& x : it->second) out.rules.push_back({r.head, r.body, x, r.id});
  }
  return out;
}

NormalProgram explicit_version(const NormalProgram& p) {
  require_positive_program(p, "explicit_version");
  NormalProgram out;
  for (const auto& r : p.rules) {
    LPRule e{r.head, r.pos_body, {}, r.origin};
    for (const auto& b : r.neg_body) e.pos_body.insert(neg(b.atom));
    out.rules.push_back(std::move(e));
  }
  for (const auto& a : p.literals()) out.rules.push_back({neg(a.atom), {}, {a}, {}});
  return out;
}

DefeasibleTheory lp_to_dl(const NormalProgram& p) {
  require_positive_program(p, "lp_to_dl");
  std::vector<DLRule> rules;
  int n = 0;
  for (const auto& r : p.rules) {
    DLRule s{"r" + std::to_string(++n), RuleKind::strict, r.pos_body, r.head};
    for (const auto& b : r.neg_body) s.body.insert(neg(b.atom));
    rules.push_back(std::move(s));
  }
  for (const auto& a : p.literals())
    rules.push_back({"not_" + a.atom, RuleKind::defeasible, {}, neg(a.atom)});
  return DefeasibleTheory(std::move(rules));
}

Literal encode_sign(const Literal& l) {
  return l.positive ? l : Literal{l.atom + std::string(kNegSuffix)};
}

Literal decode_sign(const Literal& l) {
  if (l.positive && l.atom.size() > kNegSuffix.size() && l.atom.ends_with(kNegSuffix))
    return neg(l.atom.substr(0, l.atom.size() - kNegSuffix.size()));
  return l;
}

namespace {

template <class F>
NormalProgram map_literals(const NormalProgram& p, F&& f) {
  NormalProgram out;
  auto map_set = [&](const LiteralSet& s) {
    LiteralSet m;
    for (const auto& l : s) m.insert(f(l));
    return m;
  };
  for (const auto& r : p.rules)
    out.rules.push_back({f(r.head), map_set(r.pos_body), map_set(r.neg_body), r.origin});
  return out;
}

} // namespace

NormalProgram encode_signs(const NormalProgram& p) {
  const LiteralSet all = p.literals();
  for (const auto& l : all) {
    if (l.positive && decode_sign(l) != l)
      throw PreconditionError("atom " + l.atom + " clashes with the sign encoding");
  }
  return map_literals(p, encode_sign);
}

NormalProgram decode_signs(const NormalProgram& p) { return map_literals(p, decode_sign); }

std::string su_atom(std::string_view rule_id) { return "su__" + std::string(rule_id); }
std::string fi_atom(std::string_view rule_id) { return "fi__" + std::string(rule_id); }

DefeasibleTheory eliminate_defeaters_priorities(const DefeasibleTheory& d, std::size_t cap) {
  const auto atoms = d.atoms();
  std::vector<std::string> clashes;
  for (const auto& r : d.rules())
    for (const auto& a : {su_atom(r.id), fi_atom(r.id)})
      if (atoms.contains(a)) clashes.push_back("fresh atom " + a + " already occurs in the theory");
  if (!clashes.empty()) throw ValidationError("cannot compile theory", clashes);

  std::map<Literal, std::vector<const DLRule*>> rules_for;
  for (const auto& r : d.rules()) rules_for[r.head].push_back(&r);

  std::vector<DLRule> out;
  for (const auto& r : d.rules()) {
    const Literal su{su_atom(r.id)};
    const Literal fi{fi_atom(r.id)};
    out.push_back({r.id + "__su", RuleKind::strict, r.body, su});
    out.push_back({r.id + "__fi", r.is_strict() ? RuleKind::strict : RuleKind::defeasible, {su}, fi});
    if (!r.is_defeater()) out.push_back({r.id + "__head", RuleKind::strict, {fi}, r.head});
    if (!r.is_defeasible()) continue;

    std::set<std::pair<RuleKind, LiteralSet>> defeats;
    for (const auto& c : conflicts_of(d, r.head)) {
      std::vector<std::vector<const DLRule*>> factors;
      for (const auto& q : c) {
        if (q == r.head) continue;
        std::vector<const DLRule*> usable;
        for (const DLRule* s : rules_for[q])
          if (!d.inferior(s->id, r.id)) usable.push_back(s);
        factors.push_back(std::move(usable));
      }
      for_each_choice(factors, cap, "defeat rules for " + r.id, [&](const std::vector<const DLRule*>& pick) {
        LiteralSet body;
        bool strict = true;
        for (const DLRule* s : pick) {
          body.insert(Literal{su_atom(s->id)});
          strict = strict && (s->is_strict() || d.inferior(r.id, s->id));
        }
        defeats.insert({strict ? RuleKind::strict : RuleKind::defeasible, std::move(body)});
      });
    }
    int k = 0;
    for (const auto& [kind, body] : defeats)
      out.push_back({r.id + "__def" + std::to_string(++k), kind, body, neg(fi.atom)});
  }

  std::set<ConflictSet> minimal;
  for (const auto& a : atoms) minimal.insert({Literal{a}, neg(a)});
  return DefeasibleTheory(std::move(out), std::move(minimal));
}

} // namespace wfdl
