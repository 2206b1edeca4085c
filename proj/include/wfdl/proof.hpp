#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wfdl/dl_semantics.hpp"
#include "wfdl/theory.hpp"

namespace wfdl {

enum class Sign { plus, minus };

/// `+p` (p is proved) or `-p` (p is refuted).
struct SignedLiteral {
  Sign sign = Sign::plus;
  Literal literal;

  /// A leading `+` or `-` is the sign and the rest is the literal; without
  /// one the sign is `+`. So `-q` refutes q and `+-q` proves -q.
  static SignedLiteral parse(std::string_view text);
  std::string str() const;
  friend auto operator<=>(const SignedLiteral&, const SignedLiteral&) = default;
};

struct ArgumentNode {
  Sign sign = Sign::plus;
  Literal literal;
  std::vector<ArgumentNode> children;

  SignedLiteral label() const { return {sign, literal}; }
  std::size_t size() const;
  std::size_t depth() const;
  friend bool operator==(const ArgumentNode&, const ArgumentNode&) = default;
};

/// Indented text, one node per line, two spaces per level.
std::string format_tree(const ArgumentNode& root);

struct NodeDiagnostic {
  std::vector<std::size_t> path; // child indices from the root
  std::string label;
  std::string message;
};

struct TreeCheck {
  bool valid = true;
  std::vector<NodeDiagnostic> diagnostics;
};

/// Checks every node against the NDL or ADL proof conditions. Throws
/// PreconditionError when a label is not in Lit(D).
TreeCheck validate_tree(const DefeasibleTheory& d, LogicVariant l, const ArgumentNode& root);

/// Dep_D(p). Throws PreconditionError when p ∉ Lit(D).
LiteralSet dep_set(const DefeasibleTheory& d, const Literal& p);

/// Finite theories always are; kept for completeness of the interface.
bool is_locally_finite(const DefeasibleTheory& d);

inline constexpr std::size_t kDefaultProofBudget = 1'000'000;

enum class ProofStatus { proved, no_proof, budget_exhausted };

std::string_view to_string(ProofStatus s);

struct ProofResult {
  ProofStatus status = ProofStatus::no_proof;
  std::optional<ArgumentNode> tree;
  std::size_t expanded = 0; // goals expanded, cache hits excluded
};

/// Depth-first proof search with memoisation. The cache is kept across
/// calls, so one prover answers many goals over the same theory cheaply.
/// Not thread-safe; use one instance per thread.
class Prover {
public:
  Prover(const DefeasibleTheory& d, LogicVariant l, std::size_t budget = kDefaultProofBudget);
  ~Prover();
  Prover(const Prover&) = delete;
  Prover& operator=(const Prover&) = delete;

  /// Throws PreconditionError when the goal literal is not in Lit(D).
  ProofResult prove(const SignedLiteral& goal);

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

ProofResult prove(const DefeasibleTheory& d, LogicVariant l, const SignedLiteral& goal,
                  std::size_t budget = kDefaultProofBudget);

} // namespace wfdl
