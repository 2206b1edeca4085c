#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string_view>
#include <vector>

#include "wfdl/interpretation.hpp"
#include "wfdl/lp_semantics.hpp"
#include "wfdl/theory.hpp"

namespace wfdl {

/// α propagates ambiguity (theories without defeaters or priorities only);
/// β blocks it and accepts any theory.
enum class Operator { alpha, beta };

std::string_view to_string(Operator op);

/// D_α^S. Throws PreconditionError on defeaters or priorities.
std::vector<DLRule> alpha_reduct(const DefeasibleTheory& d, const LiteralSet& s);
/// D_β^S. Never contains defeaters.
std::vector<DLRule> beta_reduct(const DefeasibleTheory& d, const LiteralSet& s);

/// Cl(R), the least set closed under the rules. Throws PreconditionError on a defeater.
LiteralSet rule_closure(const std::vector<DLRule>& rules);

LiteralSet alpha(const DefeasibleTheory& d, const LiteralSet& s);
LiteralSet beta(const DefeasibleTheory& d, const LiteralSet& s);
LiteralSet apply(Operator op, const DefeasibleTheory& d, const LiteralSet& s);

struct XLimit {
  LiteralSet limit;
  /// X↑0 = ∅, X↑1, ... up to the limit, both ends included.
  std::vector<LiteralSet> trace;
};

/// Iterates S ↦ op(op(S)) from ∅ to its least fixpoint.
XLimit x_limit(const DefeasibleTheory& d, Operator op);

/// ⟨X, Lit(D) − op(X)⟩ with X the limit of x_limit. Under β this is the NDL
/// well-founded model.
Interpretation wfm_operator(const DefeasibleTheory& d, Operator op);
inline Interpretation wfm_beta(const DefeasibleTheory& d) { return wfm_operator(d, Operator::beta); }
inline Interpretation wfm_alpha(const DefeasibleTheory& d) { return wfm_operator(d, Operator::alpha); }

/// Every S ⊆ Lit(D) with op(D, S) = S. Throws CapExceeded when |Lit(D)| > cap.
std::set<LiteralSet> stable_sets(const DefeasibleTheory& d, Operator op,
                                 std::size_t cap = kDefaultStableCap);

/// p belongs to every stable set / to none. Throw PreconditionError when p ∉ Lit(D).
bool entails_stable(const DefeasibleTheory& d, Operator op, const Literal& p,
                    std::size_t cap = kDefaultStableCap);
bool refutes_stable(const DefeasibleTheory& d, Operator op, const Literal& p,
                    std::size_t cap = kDefaultStableCap);

/// A literal refuted by the α-stable sets but not by the β-stable sets.
struct ScanFinding {
  DefeasibleTheory theory;
  Literal literal;
};

struct ScanReport {
  std::size_t theories = 0;
  std::size_t literals = 0;
  std::vector<ScanFinding> findings;
};

/// Searches random theories without defeaters or priorities for a literal p
/// with D ⫤_α p but not D ⫤_β p. Only reports; whether such a theory exists
/// is not settled.
ScanReport scan_open_question(std::size_t count, std::uint32_t seed);

} // namespace wfdl
