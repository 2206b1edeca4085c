#pragma once

// Dense integer views of theories and programs. Every algorithm in the
// library runs over these; the public API converts at the boundary.

#include <map>
#include <string>
#include <vector>

#include "wfdl/literal.hpp"
#include "wfdl/program.hpp"
#include "wfdl/theory.hpp"

namespace wfdl::detail {

using Mask = std::vector<char>;

class LiteralTable {
public:
  LiteralTable() = default;
  explicit LiteralTable(const LiteralSet& universe);

  int size() const { return static_cast<int>(lits_.size()); }
  /// -1 when the literal is not part of the table.
  int id(const Literal& l) const;
  const Literal& at(int i) const { return lits_[static_cast<std::size_t>(i)]; }

  Mask empty_mask() const { return Mask(lits_.size(), 0); }
  Mask full_mask() const { return Mask(lits_.size(), 1); }
  /// Literals outside the table are dropped.
  Mask mask(const LiteralSet& s) const;
  LiteralSet set(const Mask& m) const;

private:
  std::vector<Literal> lits_;
  std::map<Literal, int> ids_;
};

inline bool all_in(const std::vector<int>& xs, const Mask& m) {
  for (int x : xs)
    if (!m[static_cast<std::size_t>(x)]) return false;
  return true;
}

inline bool any_in(const std::vector<int>& xs, const Mask& m) {
  for (int x : xs)
    if (m[static_cast<std::size_t>(x)]) return true;
  return false;
}

inline bool any_in(const std::vector<int>& xs, const Mask& a, const Mask& b) {
  for (int x : xs)
    if (a[static_cast<std::size_t>(x)] || b[static_cast<std::size_t>(x)]) return true;
  return false;
}

struct IndexedRule {
  RuleKind kind;
  int head;
  std::vector<int> body;
};

struct IndexedTheory {
  explicit IndexedTheory(const DefeasibleTheory& d);

  LiteralTable lits;
  std::vector<IndexedRule> rules;
  std::vector<std::vector<int>> rules_for;    // R[q]
  std::vector<std::vector<int>> conflicts;    // literal ids per conflict set
  std::vector<std::vector<int>> conflicts_of; // C[p] as indices into `conflicts`

  /// s ≺ r
  bool below(int s, int r) const {
    return prec_[static_cast<std::size_t>(s) * rules.size() + static_cast<std::size_t>(r)] != 0;
  }

  int size() const { return lits.size(); }

private:
  std::vector<char> prec_;
};

struct IndexedLPRule {
  int head;
  std::vector<int> pos;
  std::vector<int> neg;
};

struct IndexedProgram {
  /// The universe is every literal of the program plus `base`.
  IndexedProgram(const NormalProgram& p, const LiteralSet& base);

  LiteralTable lits;
  std::vector<IndexedLPRule> rules;
  std::vector<std::vector<int>> rules_for;

  int size() const { return lits.size(); }
};

} // namespace wfdl::detail
