#include "wfdl/operators.hpp"

#include <algorithm>
#include <random>

#include "fixpoints.hpp"
#include "index.hpp"
#include "wfdl/errors.hpp"
#include "wfdl/generate.hpp"

namespace wfdl {

using detail::IndexedTheory;
using detail::Mask;

std::string_view to_string(Operator op) { return op == Operator::alpha ? "alpha" : "beta"; }

namespace {

void require_alpha_domain(const DefeasibleTheory& d) {
  if (d.has_defeaters()) throw PreconditionError("alpha is undefined for theories with defeaters");
  if (d.has_priorities()) throw PreconditionError("alpha is undefined for theories with priorities");
}

std::vector<char> reduct(const IndexedTheory& it, Operator op, const Mask& s) {
  std::vector<char> keep(it.rules.size(), 0);
  for (int r = 0; r < static_cast<int>(it.rules.size()); ++r) {
    const auto& rule = it.rules[static_cast<std::size_t>(r)];
    if (rule.kind == RuleKind::strict) {
      keep[static_cast<std::size_t>(r)] = 1;
      continue;
    }
    if (rule.kind == RuleKind::defeater) continue;
    bool ok = true;
    for (int ci : it.conflicts_of[static_cast<std::size_t>(rule.head)]) {
      bool escape = false;
      for (int q : it.conflicts[static_cast<std::size_t>(ci)]) {
        if (q == rule.head) continue;
        if (op == Operator::alpha) {
          escape = !s[static_cast<std::size_t>(q)];
        } else {
          escape = true;
          for (int t : it.rules_for[static_cast<std::size_t>(q)]) {
            if (!detail::all_in(it.rules[static_cast<std::size_t>(t)].body, s) || it.below(t, r)) continue;
            escape = false;
            break;
          }
        }
        if (escape) break;
      }
      if (!escape) {
        ok = false;
        break;
      }
    }
    keep[static_cast<std::size_t>(r)] = ok;
  }
  return keep;
}

Mask closure(const IndexedTheory& it, const std::vector<char>& keep) {
  Mask out = it.lits.empty_mask();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t r = 0; r < it.rules.size(); ++r) {
      const auto& rule = it.rules[r];
      if (!keep[r] || out[static_cast<std::size_t>(rule.head)]) continue;
      if (detail::all_in(rule.body, out)) {
        out[static_cast<std::size_t>(rule.head)] = 1;
        changed = true;
      }
    }
  }
  return out;
}

detail::SetOperator bind(const IndexedTheory& it, Operator op) {
  return [&it, op](const Mask& s) { return closure(it, reduct(it, op, s)); };
}

IndexedTheory index_for(const DefeasibleTheory& d, Operator op) {
  if (op == Operator::alpha) require_alpha_domain(d);
  return IndexedTheory(d);
}

std::vector<DLRule> select(const DefeasibleTheory& d, const std::vector<char>& keep) {
  std::vector<DLRule> out;
  for (std::size_t i = 0; i < keep.size(); ++i)
    if (keep[i]) out.push_back(d.rules()[i]);
  return out;
}

} // namespace

std::vector<DLRule> alpha_reduct(const DefeasibleTheory& d, const LiteralSet& s) {
  IndexedTheory it = index_for(d, Operator::alpha);
  return select(d, reduct(it, Operator::alpha, it.lits.mask(s)));
}

std::vector<DLRule> beta_reduct(const DefeasibleTheory& d, const LiteralSet& s) {
  IndexedTheory it(d);
  return select(d, reduct(it, Operator::beta, it.lits.mask(s)));
}

LiteralSet rule_closure(const std::vector<DLRule>& rules) {
  for (const auto& r : rules)
    if (r.is_defeater()) throw PreconditionError("rule_closure: " + r.id + " is a defeater");
  LiteralSet out;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : rules) {
      if (out.contains(r.head) || !std::includes(out.begin(), out.end(), r.body.begin(), r.body.end()))
        continue;
      out.insert(r.head);
      changed = true;
    }
  }
  return out;
}

LiteralSet apply(Operator op, const DefeasibleTheory& d, const LiteralSet& s) {
  IndexedTheory it = index_for(d, op);
  return it.lits.set(bind(it, op)(it.lits.mask(s)));
}

LiteralSet alpha(const DefeasibleTheory& d, const LiteralSet& s) { return apply(Operator::alpha, d, s); }
LiteralSet beta(const DefeasibleTheory& d, const LiteralSet& s) { return apply(Operator::beta, d, s); }

XLimit x_limit(const DefeasibleTheory& d, Operator op) {
  IndexedTheory it = index_for(d, op);
  std::vector<Mask> stages;
  const Mask limit = detail::squared_lfp(bind(it, op), static_cast<std::size_t>(it.size()), &stages);
  XLimit out{it.lits.set(limit), {}};
  for (const auto& m : stages) out.trace.push_back(it.lits.set(m));
  return out;
}

Interpretation wfm_operator(const DefeasibleTheory& d, Operator op) {
  IndexedTheory it = index_for(d, op);
  const auto f = bind(it, op);
  const Mask x = detail::squared_lfp(f, static_cast<std::size_t>(it.size()));
  Mask rest = f(x);
  for (auto& b : rest) b = !b;
  return {it.lits.set(x), it.lits.set(rest)};
}

std::set<LiteralSet> stable_sets(const DefeasibleTheory& d, Operator op, std::size_t cap) {
  IndexedTheory it = index_for(d, op);
  if (static_cast<std::size_t>(it.size()) > cap)
    throw CapExceeded("theory has " + std::to_string(it.size()) + " literals, cap is " +
                      std::to_string(cap));
  std::set<LiteralSet> out;
  for (const auto& m : detail::antimonotone_fixpoints(bind(it, op), static_cast<std::size_t>(it.size())))
    out.insert(it.lits.set(m));
  return out;
}

static void require_literal(const DefeasibleTheory& d, const Literal& p) {
  if (!d.literals().contains(p)) throw PreconditionError("literal " + p.str() + " is not in Lit(D)");
}

bool entails_stable(const DefeasibleTheory& d, Operator op, const Literal& p, std::size_t cap) {
  require_literal(d, p);
  const auto sets = stable_sets(d, op, cap);
  return std::all_of(sets.begin(), sets.end(), [&](const LiteralSet& s) { return s.contains(p); });
}

bool refutes_stable(const DefeasibleTheory& d, Operator op, const Literal& p, std::size_t cap) {
  require_literal(d, p);
  const auto sets = stable_sets(d, op, cap);
  return std::none_of(sets.begin(), sets.end(), [&](const LiteralSet& s) { return s.contains(p); });
}

ScanReport scan_open_question(std::size_t count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  ScanReport report;
  for (std::size_t i = 0; i < count; ++i) {
    const auto profile = i % 2 == 0 ? TheoryProfile::plain : TheoryProfile::extended_conflicts;
    const DefeasibleTheory d = random_theory(rng, profile);
    const auto a = stable_sets(d, Operator::alpha);
    const auto b = stable_sets(d, Operator::beta);
    ++report.theories;
    for (const auto& p : d.literals()) {
      ++report.literals;
      const bool refuted_a = std::none_of(a.begin(), a.end(), [&](const LiteralSet& s) { return s.contains(p); });
      const bool refuted_b = std::none_of(b.begin(), b.end(), [&](const LiteralSet& s) { return s.contains(p); });
      if (refuted_a && !refuted_b) report.findings.push_back({d, p});
    }
  }
  return report;
}

} // namespace wfdl
