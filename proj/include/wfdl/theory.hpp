#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "wfdl/literal.hpp"

namespace wfdl {

enum class RuleKind { strict, defeasible, defeater };

std::string_view to_string(RuleKind k);

/// `body -> head`, `body => head` or `body ~> head`.
struct DLRule {
  std::string id;
  RuleKind kind = RuleKind::defeasible;
  LiteralSet body;
  Literal head;

  bool is_strict() const { return kind == RuleKind::strict; }
  bool is_defeasible() const { return kind == RuleKind::defeasible; }
  bool is_defeater() const { return kind == RuleKind::defeater; }

  friend auto operator<=>(const DLRule&, const DLRule&) = default;
  friend bool operator==(const DLRule&, const DLRule&) = default;
};

using ConflictSet = LiteralSet;

/// `inferior ≺ superior`: the superior rule wins over the inferior one.
struct Priority {
  std::string inferior;
  std::string superior;

  friend auto operator<=>(const Priority&, const Priority&) = default;
  friend bool operator==(const Priority&, const Priority&) = default;
};

/// A ground defeasible theory ⟨R, C, ≺⟩.
///
/// The constructor inserts the minimal conflict set {p, -p} for every atom
/// that occurs in a rule or in a user conflict set. Nothing else is checked
/// here; see validate_theory.
class DefeasibleTheory {
public:
  DefeasibleTheory() = default;
  explicit DefeasibleTheory(std::vector<DLRule> rules, std::set<ConflictSet> conflicts = {},
                            std::set<Priority> priority = {});

  const std::vector<DLRule>& rules() const { return rules_; }
  const std::set<ConflictSet>& conflicts() const { return conflicts_; }
  const std::set<Priority>& priority() const { return priority_; }

  std::set<std::string> atoms() const;
  /// Lit(D): every atom and its complement.
  LiteralSet literals() const;

  const DLRule* find_rule(std::string_view id) const;

  bool has_defeaters() const;
  bool has_priorities() const { return !priority_.empty(); }
  /// True when every conflict set has the form {p, -p}.
  bool has_minimal_conflicts() const;
  /// True when s ≺ r is recorded for the given rule ids.
  bool inferior(std::string_view s, std::string_view r) const;

  /// Rules compare as a set; their order is irrelevant.
  friend bool operator==(const DefeasibleTheory& a, const DefeasibleTheory& b);

private:
  std::vector<DLRule> rules_;
  std::set<ConflictSet> conflicts_;
  std::set<Priority> priority_;
};

bool is_minimal_conflict(const ConflictSet& c);

enum class ViolationKind {
  duplicate_rule_id,
  unknown_rule_in_priority,
  priority_on_strict_rule,
  priority_cycle,
  missing_minimal_conflict,
  undersized_conflict,
};

struct Violation {
  ViolationKind kind;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Lists every reason the theory is not admissible. Empty iff admissible.
std::vector<Violation> validate_theory(const DefeasibleTheory& d);

/// Throws ValidationError carrying the messages when validate_theory reports anything.
void require_valid(const DefeasibleTheory& d);

} // namespace wfdl
