#include "wfdl/generate.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace wfdl {

namespace {

int uniform(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool chance(std::mt19937& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::string atom_name(int i) { return std::string(1, static_cast<char>('a' + i)); }

Literal random_literal(std::mt19937& rng, int atoms, bool allow_negative = true) {
  return Literal{atom_name(uniform(rng, 0, atoms - 1)), !allow_negative || chance(rng, 0.5)};
}

LiteralSet random_body(std::mt19937& rng, int atoms, int max_body, bool allow_negative = true) {
  LiteralSet body;
  const int n = uniform(rng, 0, max_body);
  for (int i = 0; i < n; ++i) body.insert(random_literal(rng, atoms, allow_negative));
  return body;
}

} // namespace

DefeasibleTheory random_theory(std::mt19937& rng, TheoryProfile profile, const GeneratorOptions& opts) {
  const int atoms = uniform(rng, 1, opts.max_atoms);
  const int n = uniform(rng, 1, opts.max_rules);
  std::vector<DLRule> rules;
  for (int i = 0; i < n; ++i) {
    RuleKind kind = chance(rng, 0.3) ? RuleKind::strict : RuleKind::defeasible;
    if (profile == TheoryProfile::full && kind == RuleKind::defeasible && chance(rng, 0.2))
      kind = RuleKind::defeater;
    rules.push_back({"r" + std::to_string(i + 1), kind, random_body(rng, atoms, opts.max_body),
                     random_literal(rng, atoms)});
  }

  std::set<ConflictSet> conflicts;
  if (profile != TheoryProfile::plain) {
    const int extra = uniform(rng, 0, 2);
    for (int i = 0; i < extra; ++i) {
      ConflictSet c;
      const int size = uniform(rng, 2, 3);
      for (int k = 0; k < size; ++k) c.insert(random_literal(rng, atoms));
      if (c.size() >= 2) conflicts.insert(std::move(c));
    }
  }

  // Orienting every pair along one random ranking keeps ≺ acyclic.
  std::set<Priority> priority;
  if (profile == TheoryProfile::full) {
    std::vector<std::size_t> rank(rules.size());
    for (std::size_t i = 0; i < rank.size(); ++i) rank[i] = i;
    std::shuffle(rank.begin(), rank.end(), rng);
    for (std::size_t i = 0; i < rules.size(); ++i)
      for (std::size_t j = 0; j < rules.size(); ++j) {
        if (rank[i] >= rank[j] || rules[i].is_strict() || rules[j].is_strict()) continue;
        if (chance(rng, 0.25)) priority.insert({rules[i].id, rules[j].id});
      }
  }
  return DefeasibleTheory(std::move(rules), std::move(conflicts), std::move(priority));
}

NormalProgram random_program(std::mt19937& rng, bool signed_atoms, const GeneratorOptions& opts) {
  const int atoms = uniform(rng, 1, opts.max_atoms);
  const int n = uniform(rng, 1, opts.max_rules);
  NormalProgram p;
  for (int i = 0; i < n; ++i) {
    p.rules.push_back({random_literal(rng, atoms, signed_atoms),
                       random_body(rng, atoms, opts.max_body, signed_atoms),
                       random_body(rng, atoms, opts.max_body, signed_atoms),
                       {}});
  }
  return p;
}

} // namespace wfdl
