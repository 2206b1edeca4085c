#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "wfdl/interpretation.hpp"
#include "wfdl/program.hpp"

namespace wfdl {

/// Default bound on the literal universe for exhaustive stable enumeration.
inline constexpr std::size_t kDefaultStableCap = 20;

// Several operations take an optional `base`: literals that belong to the
// program's language without occurring in any rule (for instance Lit(D) of
// the theory a program was translated from). They have no rules, so they end
// up unfounded.

/// T_Π(I) = {head(r) | body⁺ ⊆ T, body⁻ ⊆ F}.
LiteralSet immediate_consequences_lp(const NormalProgram& p, const Interpretation& i);

/// Checks the two unfounded-set conditions for every member of `s`.
bool is_unfounded_set_lp(const NormalProgram& p, const Interpretation& i, const LiteralSet& s);

/// U_Π(I), the union of all unfounded sets.
LiteralSet greatest_unfounded_lp(const NormalProgram& p, const Interpretation& i,
                                 const LiteralSet& base = {});

/// lfp(W_Π) by iteration from ⟨∅, ∅⟩.
Interpretation wfm_lp(const NormalProgram& p, const LiteralSet& base = {});

/// Every stage I_0 = ⊥, I_1, ... up to and including the fixpoint.
std::vector<Interpretation> wfm_lp_trace(const NormalProgram& p, const LiteralSet& base = {});

/// Π^S: drop rules blocked by S, then strip default literals.
DefiniteProgram gl_reduct(const NormalProgram& p, const LiteralSet& s);

/// Least model of a definite program.
LiteralSet definite_closure(const DefiniteProgram& p);
/// Same, throwing PreconditionError when `p` has default literals.
LiteralSet definite_closure(const NormalProgram& p);

/// γ_Π(S) = Cl(Π^S).
LiteralSet gamma(const NormalProgram& p, const LiteralSet& s);

/// ⟨lfp(γ²), universe − γ(lfp(γ²))⟩.
Interpretation wfm_via_gamma(const NormalProgram& p, const LiteralSet& base = {});

/// All S over the program's literals with γ(S) = S.
/// Throws CapExceeded when the program has more than `cap` literals.
std::set<LiteralSet> stable_models_lp(const NormalProgram& p, std::size_t cap = kDefaultStableCap);

} // namespace wfdl
