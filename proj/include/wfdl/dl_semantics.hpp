#pragma once

#include <string_view>
#include <vector>

#include "wfdl/interpretation.hpp"
#include "wfdl/theory.hpp"

namespace wfdl {

/// NDL blocks ambiguity, ADL propagates it. The two differ only in which
/// rules may defeat a defeasible rule when building unfounded sets.
enum class LogicVariant { ndl, adl };

std::string_view to_string(LogicVariant l);

/// Throws PreconditionError when `s` has literals outside Lit(D).
bool is_unfounded_set(const DefeasibleTheory& d, const Interpretation& i, const LiteralSet& s,
                      LogicVariant l);

/// U_D(I) under the given variant.
LiteralSet greatest_unfounded_dl(const DefeasibleTheory& d, const Interpretation& i, LogicVariant l);

/// T_D(I): literals with a witness of provability. `l` is accepted for
/// symmetry with the other operations; T_D does not depend on it.
LiteralSet immediate_consequences_dl(const DefeasibleTheory& d, const Interpretation& i,
                                     LogicVariant l);

Interpretation wfm_dl(const DefeasibleTheory& d, LogicVariant l);
std::vector<Interpretation> wfm_dl_trace(const DefeasibleTheory& d, LogicVariant l);

/// D ⊨_L p and D ⫤_L p. Throw PreconditionError when p ∉ Lit(D).
bool entails(const DefeasibleTheory& d, LogicVariant l, const Literal& p);
bool refutes(const DefeasibleTheory& d, LogicVariant l, const Literal& p);

} // namespace wfdl
