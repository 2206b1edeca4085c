#pragma once

#include <cstdint>
#include <random>

#include "wfdl/program.hpp"
#include "wfdl/theory.hpp"

namespace wfdl {

/// What a random theory may contain.
enum class TheoryProfile {
  plain,              // strict and defeasible rules, minimal conflicts only
  extended_conflicts, // plain plus a few larger conflict sets
  full,               // everything: defeaters, priorities, extra conflicts
};

struct GeneratorOptions {
  int max_atoms = 4;
  int max_rules = 6;
  int max_body = 2;
};

/// A small random admissible theory. Deterministic for a given engine state.
DefeasibleTheory random_theory(std::mt19937& rng, TheoryProfile profile,
                               const GeneratorOptions& opts = {});

/// A small random normal program. With `signed_atoms` false every literal is
/// a positive atom.
NormalProgram random_program(std::mt19937& rng, bool signed_atoms = false,
                             const GeneratorOptions& opts = {});

} // namespace wfdl
