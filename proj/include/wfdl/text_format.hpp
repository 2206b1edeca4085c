#pragma once

#include <string>
#include <string_view>

#include "wfdl/program.hpp"
#include "wfdl/theory.hpp"

namespace wfdl {

// Theory files (.dfl):
//
//   % comment
//   bird => flies.              defeasible, gets an automatic id
//   r4: has_a_wife -> married.  strict, named
//   penguin ~> -flies.          defeater
//   => p.   true => p.          empty body
//   conflict {dove, hawk}.
//   prefer r1 > r2.             r2 ≺ r1
//
// Program files (.lp):
//
//   p :- q, -r, not s.
//   q.
//
// `true` is reserved as the empty body and `not` as the default negation
// keyword.

/// Throws ParseError on bad syntax and, when `validate` is set, ValidationError
/// on an inadmissible theory.
DefeasibleTheory parse_theory(std::string_view text, bool validate = true);
NormalProgram parse_program(std::string_view text);

/// Canonical text: rules sorted by id, then non-minimal conflicts, then
/// priorities. Parsing the result gives back an equal theory.
std::string serialize_theory(const DefeasibleTheory& d);
/// Rules in sorted order. With `provenance`, each rule carries its origin as
/// a trailing comment.
std::string serialize_program(const NormalProgram& p, bool provenance = false);

std::string format_rule(const DLRule& r);
std::string format_rule(const LPRule& r);

} // namespace wfdl
