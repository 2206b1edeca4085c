#include "wfdl/dl_semantics.hpp"

#include "dl_kernel.hpp"
#include "wfdl/errors.hpp"

namespace wfdl {

using detail::IndexedTheory;
using detail::Mask;

std::string_view to_string(LogicVariant l) { return l == LogicVariant::ndl ? "ndl" : "adl"; }

namespace detail {

// Clause (2b) of the unfounded-set definition: some conflict set of p has,
// for each rival literal, an applicable rule that may defeat r.
bool defeated_by_conflict(const IndexedTheory& it, int r, const Mask& t, LogicVariant l) {
  const int p = it.rules[static_cast<std::size_t>(r)].head;
  for (int ci : it.conflicts_of[static_cast<std::size_t>(p)]) {
    bool all_rivals = true;
    for (int q : it.conflicts[static_cast<std::size_t>(ci)]) {
      if (q == p) continue;
      bool found = false;
      for (int s : it.rules_for[static_cast<std::size_t>(q)]) {
        const auto& rs = it.rules[static_cast<std::size_t>(s)];
        if (!all_in(rs.body, t)) continue;
        bool may_defeat = l == LogicVariant::ndl ? !it.below(s, r)
                                                 : (rs.kind == RuleKind::strict || it.below(r, s));
        if (may_defeat) {
          found = true;
          break;
        }
      }
      if (!found) {
        all_rivals = false;
        break;
      }
    }
    if (all_rivals) return true;
  }
  return false;
}

bool has_witness(const IndexedTheory& it, int r, const Mask& t, const Mask& f) {
  const auto& rule = it.rules[static_cast<std::size_t>(r)];
  if (rule.kind == RuleKind::defeater || !all_in(rule.body, t)) return false;
  if (rule.kind == RuleKind::strict) return true;
  for (int ci : it.conflicts_of[static_cast<std::size_t>(rule.head)]) {
    bool some_rival_out = false;
    for (int q : it.conflicts[static_cast<std::size_t>(ci)]) {
      if (q == rule.head) continue;
      bool all_out = true;
      for (int s : it.rules_for[static_cast<std::size_t>(q)]) {
        if (it.below(s, r) || any_in(it.rules[static_cast<std::size_t>(s)].body, f)) continue;
        all_out = false;
        break;
      }
      if (all_out) {
        some_rival_out = true;
        break;
      }
    }
    if (!some_rival_out) return false;
  }
  return true;
}

Mask consequences(const IndexedTheory& it, const Mask& t, const Mask& f) {
  Mask out = it.lits.empty_mask();
  for (int r = 0; r < static_cast<int>(it.rules.size()); ++r)
    if (has_witness(it, r, t, f)) out[static_cast<std::size_t>(it.rules[static_cast<std::size_t>(r)].head)] = 1;
  return out;
}

Mask greatest_unfounded(const IndexedTheory& it, const Mask& t, const Mask& f, LogicVariant l) {
  // (2b) does not mention S, so evaluate it once per rule.
  std::vector<char> defeated(it.rules.size(), 0);
  for (int r = 0; r < static_cast<int>(it.rules.size()); ++r)
    if (it.rules[static_cast<std::size_t>(r)].kind == RuleKind::defeasible)
      defeated[static_cast<std::size_t>(r)] = defeated_by_conflict(it, r, t, l);

  Mask s = it.lits.full_mask();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 0; p < it.size(); ++p) {
      if (!s[static_cast<std::size_t>(p)]) continue;
      for (int r : it.rules_for[static_cast<std::size_t>(p)]) {
        const auto& rule = it.rules[static_cast<std::size_t>(r)];
        if (rule.kind == RuleKind::defeater) continue;
        if (any_in(rule.body, f, s)) continue;
        if (rule.kind == RuleKind::defeasible && defeated[static_cast<std::size_t>(r)]) continue;
        s[static_cast<std::size_t>(p)] = 0;
        changed = true;
        break;
      }
    }
  }
  return s;
}

std::vector<std::pair<Mask, Mask>> wfm_stages(const IndexedTheory& it, LogicVariant l) {
  Mask t = it.lits.empty_mask();
  Mask f = it.lits.empty_mask();
  std::vector<std::pair<Mask, Mask>> out{{t, f}};
  for (;;) {
    Mask nt = consequences(it, t, f);
    Mask nf = greatest_unfounded(it, t, f, l);
    if (nt == t && nf == f) return out;
    t = std::move(nt);
    f = std::move(nf);
    out.emplace_back(t, f);
  }
}

} // namespace detail

bool is_unfounded_set(const DefeasibleTheory& d, const Interpretation& i, const LiteralSet& s,
                      LogicVariant l) {
  IndexedTheory it(d);
  for (const auto& x : s)
    if (it.lits.id(x) < 0) throw PreconditionError("literal " + x.str() + " is not in Lit(D)");
  const Mask t = it.lits.mask(i.well_founded);
  const Mask f = it.lits.mask(i.unfounded);
  const Mask sm = it.lits.mask(s);
  for (const auto& x : s) {
    for (int r : it.rules_for[static_cast<std::size_t>(it.lits.id(x))]) {
      const auto& rule = it.rules[static_cast<std::size_t>(r)];
      if (rule.kind == RuleKind::defeater) continue;
      if (detail::any_in(rule.body, f, sm)) continue;
      if (rule.kind == RuleKind::defeasible && detail::defeated_by_conflict(it, r, t, l)) continue;
      return false;
    }
  }
  return true;
}

LiteralSet greatest_unfounded_dl(const DefeasibleTheory& d, const Interpretation& i, LogicVariant l) {
  IndexedTheory it(d);
  return it.lits.set(
      detail::greatest_unfounded(it, it.lits.mask(i.well_founded), it.lits.mask(i.unfounded), l));
}

LiteralSet immediate_consequences_dl(const DefeasibleTheory& d, const Interpretation& i,
                                     LogicVariant) {
  IndexedTheory it(d);
  return it.lits.set(
      detail::consequences(it, it.lits.mask(i.well_founded), it.lits.mask(i.unfounded)));
}

std::vector<Interpretation> wfm_dl_trace(const DefeasibleTheory& d, LogicVariant l) {
  IndexedTheory it(d);
  std::vector<Interpretation> out;
  for (const auto& [t, f] : detail::wfm_stages(it, l)) out.push_back({it.lits.set(t), it.lits.set(f)});
  return out;
}

Interpretation wfm_dl(const DefeasibleTheory& d, LogicVariant l) { return wfm_dl_trace(d, l).back(); }

static void require_literal(const DefeasibleTheory& d, const Literal& p) {
  if (!d.literals().contains(p)) throw PreconditionError("literal " + p.str() + " is not in Lit(D)");
}

bool entails(const DefeasibleTheory& d, LogicVariant l, const Literal& p) {
  require_literal(d, p);
  return wfm_dl(d, l).well_founded.contains(p);
}

bool refutes(const DefeasibleTheory& d, LogicVariant l, const Literal& p) {
  require_literal(d, p);
  return wfm_dl(d, l).unfounded.contains(p);
}

} // namespace wfdl
