#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "index.hpp"

namespace wfdl::detail {

using SetOperator = std::function<Mask(const Mask&)>;

/// Iterates S ↦ op(op(S)) from ∅ until it stops growing. `trace` receives
/// every stage when given.
Mask squared_lfp(const SetOperator& op, std::size_t n, std::vector<Mask>* trace = nullptr);

/// Every fixpoint of an antimonotone operator over an n-literal universe.
///
/// Any fixpoint M satisfies lfp(op²) ⊆ M ⊆ op(lfp(op²)), so only the literals
/// between those bounds are enumerated. The result is the same as checking
/// all 2^n subsets.
std::vector<Mask> antimonotone_fixpoints(const SetOperator& op, std::size_t n);

} // namespace wfdl::detail
