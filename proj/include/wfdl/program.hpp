#pragma once

#include <string>
#include <vector>

#include "wfdl/literal.hpp"

namespace wfdl {

/// `head :- pos_body, not neg_body.`
///
/// Signed atoms are opaque: `-a` is just another atom as far as the
/// program semantics is concerned. `origin` records which defeasible rule a
/// translated rule came from; it takes no part in comparisons.
struct LPRule {
  Literal head;
  LiteralSet pos_body;
  LiteralSet neg_body;
  std::string origin;

  friend bool operator==(const LPRule& a, const LPRule& b) {
    return a.head == b.head && a.pos_body == b.pos_body && a.neg_body == b.neg_body;
  }
  friend bool operator<(const LPRule& a, const LPRule& b) {
    if (a.head != b.head) return a.head < b.head;
    if (a.pos_body != b.pos_body) return a.pos_body < b.pos_body;
    return a.neg_body < b.neg_body;
  }
};

struct NormalProgram {
  std::vector<LPRule> rules;

  /// Every literal occurring in a head or body.
  LiteralSet literals() const;
  bool is_definite() const;
  /// Equality as rule sets: order, duplicates and provenance are ignored.
  bool same_rules(const NormalProgram& other) const;
};

/// A program without default literals.
class DefiniteProgram {
public:
  DefiniteProgram() = default;
  /// Throws PreconditionError if any rule has a default literal.
  explicit DefiniteProgram(NormalProgram p);

  const NormalProgram& program() const { return program_; }
  const std::vector<LPRule>& rules() const { return program_.rules; }

private:
  NormalProgram program_;
};

} // namespace wfdl
