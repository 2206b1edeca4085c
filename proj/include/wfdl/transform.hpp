#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>

#include "wfdl/program.hpp"
#include "wfdl/theory.hpp"

namespace wfdl {

/// Default bound on the number of tuples a product of conflict sets (or of
/// rule choices in the defeater elimination) may enumerate.
inline constexpr std::size_t kDefaultProductCap = 4096;

/// Least superset of C closed under: c ∈ C, A → p strict, p ∈ c gives
/// A ∪ (c − {p}) ∈ C. Derived sets with fewer than two literals are not
/// conflict sets and are dropped.
DefeasibleTheory close_conflicts(const DefeasibleTheory& d);

/// Prod(C[p]): one literal other than p from each conflict set containing p.
std::set<LiteralSet> prod_conflicts(const DefeasibleTheory& d, const Literal& p,
                                    std::size_t cap = kDefaultProductCap);

/// Π_D. Requires no defeaters and no priorities. Every emitted rule
/// records the id of the rule it came from in `origin`.
NormalProgram dl_to_lp(const DefeasibleTheory& d, std::size_t cap = kDefaultProductCap);

/// Φ: `not b` becomes the body literal -b, plus -p :- not p per atom.
/// Requires a program over positive atoms only (see encode_signs).
NormalProgram explicit_version(const NormalProgram& p);

/// D_Π: program rules become strict rules (with `not b` read as -b), plus
/// the presumption => -p per atom. Same precondition as explicit_version.
DefeasibleTheory lp_to_dl(const NormalProgram& p);

/// Renames -a to the positive atom a__neg so that a program with signed
/// atoms can be fed to explicit_version or lp_to_dl.
NormalProgram encode_signs(const NormalProgram& p);
/// Inverse of encode_signs.
NormalProgram decode_signs(const NormalProgram& p);
Literal encode_sign(const Literal& l);
Literal decode_sign(const Literal& l);

std::string su_atom(std::string_view rule_id);
std::string fi_atom(std::string_view rule_id);

/// The defeater- and priority-free form E of D. The result has only strict
/// and defeasible rules, no priorities and minimal conflicts; its literal
/// set contains Lit(D). Throws ValidationError when a fresh su__/fi__ atom
/// is already used by D, CapExceeded when a rule-choice product is too big.
DefeasibleTheory eliminate_defeaters_priorities(const DefeasibleTheory& d,
                                                std::size_t cap = kDefaultProductCap);

} // namespace wfdl
