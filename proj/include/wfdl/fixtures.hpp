#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wfdl/program.hpp"
#include "wfdl/theory.hpp"

// Small reference theories and programs, shipped with the library.
namespace wfdl::fixtures {

/// Names of the embedded fixture files, e.g. "amb.dfl".
std::vector<std::string> names();
/// Contents of an embedded file. Throws wfdl::Error for an unknown name.
std::string_view text(std::string_view name);

DefeasibleTheory amb();
DefeasibleTheory strict();
DefeasibleTheory nixon();
DefeasibleTheory joint();
DefeasibleTheory bach();
DefeasibleTheory contra_theory();
NormalProgram contra_program();
NormalProgram loop();

/// q_i :- q_{i+1} for i < n, and p :- not q_0. Nothing supports q_n.
NormalProgram chain(int n);

} // namespace wfdl::fixtures
