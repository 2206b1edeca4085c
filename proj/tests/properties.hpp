#pragma once
// Property checks shared by the doctest suite and the acceptance runner.
// Each check returns an empty string on success and a short description of
// the first violation otherwise.

#include <random>
#include <string>

#include "oracles.hpp"
#include "wfdl/dl_semantics.hpp"
#include "wfdl/lp_semantics.hpp"
#include "wfdl/operators.hpp"
#include "wfdl/proof.hpp"
#include "wfdl/text_format.hpp"
#include "wfdl/transform.hpp"

namespace props {

using namespace wfdl;

inline constexpr LogicVariant kVariants[] = {LogicVariant::ndl, LogicVariant::adl};

inline bool plain_rules(const DefeasibleTheory& d) { return !d.has_defeaters() && !d.has_priorities(); }

inline std::string show(const Interpretation& i) {
  return "<" + to_string(i.well_founded) + ", " + to_string(i.unfounded) + ">";
}

inline std::string fail(const std::string& what, const DefeasibleTheory& d) {
  return what + "\n" + serialize_theory(d);
}

inline std::string fail(const std::string& what, const NormalProgram& p) {
  return what + "\n" + serialize_program(p);
}

/// A random coherent interpretation over `universe`.
inline Interpretation random_interpretation(std::mt19937& rng, const LiteralSet& universe) {
  Interpretation i;
  std::uniform_int_distribution<int> pick(0, 2);
  for (const auto& l : universe) {
    switch (pick(rng)) {
    case 0: i.well_founded.insert(l); break;
    case 1: i.unfounded.insert(l); break;
    default: break;
    }
  }
  return i;
}

// ADL soundness against the WFS of the translation.
inline std::string soundness(const DefeasibleTheory& d) {
  const auto lits = d.literals();
  const auto adl = wfm_dl(d, LogicVariant::adl);
  const auto wfs = wfm_lp(dl_to_lp(d), lits);
  if (!oracle::subset(adl.well_founded, wfs.well_founded) || !oracle::subset(adl.unfounded, wfs.unfounded))
    return fail("soundness: adl " + show(adl) + " wfs " + show(wfs), d);
  return {};
}

// With minimal conflicts the two models coincide.
inline std::string completeness(const DefeasibleTheory& d) {
  const auto lits = d.literals();
  const auto adl = wfm_dl(d, LogicVariant::adl);
  const auto wfs = restrict_to(wfm_lp(dl_to_lp(d), lits), lits);
  if (adl != wfs) return fail("completeness: adl " + show(adl) + " wfs " + show(wfs), d);
  return {};
}

inline Literal neg(const Literal& l) { return complement(l); }

// Stage-wise: -b enters T exactly one stage after b enters F, and vice versa.
inline std::string explicit_stages(const NormalProgram& p) {
  const auto trace = wfm_lp_trace(explicit_version(p));
  for (std::size_t k = 0; k < trace.size(); ++k) {
    for (const auto& b : p.literals()) {
      const bool t_neg = trace[k].well_founded.contains(neg(b));
      const bool f_neg = trace[k].unfounded.contains(neg(b));
      const bool f_b = k > 0 && trace[k - 1].unfounded.contains(b);
      const bool t_b = k > 0 && trace[k - 1].well_founded.contains(b);
      if (t_neg != f_b || f_neg != t_b)
        return fail("explicit stages: atom " + b.str() + " at stage " + std::to_string(k), p);
    }
  }
  return {};
}

inline std::string explicit_agrees(const NormalProgram& p) {
  const auto atoms = p.literals();
  const auto a = wfm_lp(p);
  const auto b = restrict_to(wfm_lp(explicit_version(p)), atoms);
  if (restrict_to(a, atoms) != b) return fail("explicit agreement: " + show(a) + " vs " + show(b), p);
  return {};
}

// D_Π under ADL treats p and -p as complements.
inline std::string lp_to_dl_symmetric(const NormalProgram& p) {
  const auto m = wfm_dl(lp_to_dl(p), LogicVariant::adl);
  for (const auto& a : p.literals()) {
    if (m.well_founded.contains(a) != m.unfounded.contains(neg(a)) ||
        m.unfounded.contains(a) != m.well_founded.contains(neg(a)))
      return fail("lp_to_dl symmetry at " + a.str() + ": " + show(m), p);
  }
  return {};
}

inline std::string lp_to_dl_faithful(const NormalProgram& p) {
  const auto atoms = p.literals();
  const auto wfs = restrict_to(wfm_lp(p), atoms);
  const auto adl = restrict_to(wfm_dl(lp_to_dl(p), LogicVariant::adl), atoms);
  if (wfs != adl) return fail("lp_to_dl faithfulness: wfs " + show(wfs) + " adl " + show(adl), p);
  return {};
}

inline std::string round_trip(const NormalProgram& p) {
  if (!dl_to_lp(lp_to_dl(p)).same_rules(explicit_version(p)))
    return fail("dl_to_lp(lp_to_dl(P)) differs from explicit_version(P)", p);
  return {};
}

// α(S) = γ(Π_D, S) for every S ⊆ Lit(D).
inline std::string alpha_is_gamma(const DefeasibleTheory& d) {
  const auto prog = dl_to_lp(d);
  for (const auto& s : oracle::subsets(d.literals())) {
    if (alpha(d, s) != gamma(prog, s)) return fail("alpha vs gamma at S = " + to_string(s), d);
  }
  return {};
}

inline std::string beta_is_ndl(const DefeasibleTheory& d) {
  const auto a = wfm_beta(d);
  const auto b = wfm_dl(d, LogicVariant::ndl);
  if (a != b) return fail("beta wfm " + show(a) + " ndl " + show(b), d);
  return {};
}

inline std::string wfm_within_stable(const DefeasibleTheory& d, Operator op, LogicVariant l) {
  const auto m = wfm_dl(d, l);
  for (const auto& s : stable_sets(d, op)) {
    if (!oracle::subset(m.well_founded, s))
      return fail(std::string(to_string(op)) + "-stable set " + to_string(s) + " misses T", d);
    if (oracle::meets(m.unfounded, apply(op, d, s)))
      return fail(std::string(to_string(op)) + "-stable set " + to_string(s) + " meets F", d);
  }
  return {};
}

inline std::string wfm_within_stable(const DefeasibleTheory& d) {
  if (auto f = wfm_within_stable(d, Operator::beta, LogicVariant::ndl); !f.empty()) return f;
  if (plain_rules(d)) return wfm_within_stable(d, Operator::alpha, LogicVariant::adl);
  return {};
}

inline std::string stable_antichain(const DefeasibleTheory& d) {
  for (const auto op : {Operator::alpha, Operator::beta}) {
    if (op == Operator::alpha && !plain_rules(d)) continue;
    const auto sets = stable_sets(d, op);
    for (const auto& a : sets)
      for (const auto& b : sets)
        if (a != b && oracle::subset(a, b))
          return fail(std::string(to_string(op)) + "-stable sets nested: " + to_string(a) + " in " + to_string(b), d);
  }
  return {};
}

// M ↦ M ∪ {-p | p ∉ M} maps stable models of P onto α-stable sets of D_P.
inline std::string stable_bijection(const NormalProgram& p) {
  const auto atoms = p.literals();
  std::set<LiteralSet> expected;
  for (const auto& m : stable_models_lp(p)) {
    LiteralSet ext = m;
    for (const auto& a : atoms)
      if (!m.contains(a)) ext.insert(neg(a));
    expected.insert(ext);
  }
  const auto got = stable_sets(lp_to_dl(p), Operator::alpha);
  if (got != expected) return fail("alpha-stable sets of D_P do not match the stable models", p);
  return {};
}

inline std::string compile_equivalent(const DefeasibleTheory& d) {
  const auto lits = d.literals();
  const auto e = eliminate_defeaters_priorities(d);
  for (const auto l : kVariants) {
    const auto a = restrict_to(wfm_dl(d, l), lits);
    const auto b = restrict_to(wfm_dl(e, l), lits);
    if (a != b)
      return fail("compiled theory differs under " + std::string(to_string(l)) + ": " + show(a) + " vs " + show(b), d);
  }
  return {};
}

inline std::string adl_conservative(const DefeasibleTheory& d) {
  const auto a = wfm_dl(d, LogicVariant::adl);
  const auto n = wfm_dl(d, LogicVariant::ndl);
  if (!oracle::subset(a.well_founded, n.well_founded) || !oracle::subset(a.unfounded, n.unfounded))
    return fail("adl " + show(a) + " not below ndl " + show(n), d);
  return {};
}

inline std::string stages_coherent(const DefeasibleTheory& d) {
  for (const auto l : kVariants) {
    const auto trace = wfm_dl_trace(d, l);
    for (std::size_t k = 0; k < trace.size(); ++k) {
      if (!trace[k].coherent()) return fail("incoherent stage " + std::to_string(k), d);
      if (k > 0 && !knowledge_leq(trace[k - 1], trace[k])) return fail("non-monotone stage " + std::to_string(k), d);
    }
  }
  return {};
}

// Every literal, both signs, both variants: a tree exists exactly when the
// model says so, and each returned tree validates.
inline std::string proofs_match(const DefeasibleTheory& d) {
  for (const auto l : kVariants) {
    const auto m = wfm_dl(d, l);
    Prover prover(d, l);
    for (const auto& p : d.literals()) {
      for (const auto sign : {Sign::plus, Sign::minus}) {
        const SignedLiteral goal{sign, p};
        const auto r = prover.prove(goal);
        const bool expected = sign == Sign::plus ? m.well_founded.contains(p) : m.unfounded.contains(p);
        const std::string where = goal.str() + " under " + std::string(to_string(l));
        if (r.status == ProofStatus::budget_exhausted) return fail("budget exhausted on " + where, d);
        if ((r.status == ProofStatus::proved) != expected)
          return fail(std::string(expected ? "no proof" : "unexpected proof") + " for " + where, d);
        if (r.tree) {
          if (r.tree->label() != goal) return fail("tree root mismatch for " + where, d);
          if (!validate_tree(d, l, *r.tree).valid) return fail("invalid tree for " + where, d);
        }
      }
    }
  }
  return {};
}

inline std::string unfounded_oracle(const DefeasibleTheory& d, const Interpretation& i) {
  for (const auto l : kVariants) {
    if (greatest_unfounded_dl(d, i, l) != oracle::greatest_unfounded_dl(d, i, l))
      return fail("U_D differs from oracle under " + std::string(to_string(l)) + " at " + show(i), d);
  }
  return {};
}

inline std::string unfounded_oracle(const NormalProgram& p, const Interpretation& i) {
  const auto u = p.literals();
  if (greatest_unfounded_lp(p, i) != oracle::greatest_unfounded_lp(p, i, u))
    return fail("U_P differs from oracle at " + show(i), p);
  return {};
}

inline std::string gamma_wfm(const NormalProgram& p) {
  const auto a = wfm_lp(p);
  const auto b = wfm_via_gamma(p);
  if (a != b) return fail("wfm_lp " + show(a) + " vs gamma " + show(b), p);
  return {};
}

inline std::string stable_contains_wfm(const NormalProgram& p) {
  const auto m = wfm_lp(p);
  for (const auto& s : stable_models_lp(p))
    if (!oracle::subset(m.well_founded, s) || oracle::meets(m.unfounded, s))
      return fail("stable model " + to_string(s) + " disagrees with wfm", p);
  return {};
}

} // namespace props
