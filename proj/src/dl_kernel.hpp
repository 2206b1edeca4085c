#pragma once

#include <utility>
#include <vector>

#include "index.hpp"
#include "wfdl/dl_semantics.hpp"

namespace wfdl::detail {

bool defeated_by_conflict(const IndexedTheory& it, int r, const Mask& t, LogicVariant l);
bool has_witness(const IndexedTheory& it, int r, const Mask& t, const Mask& f);
Mask consequences(const IndexedTheory& it, const Mask& t, const Mask& f);
Mask greatest_unfounded(const IndexedTheory& it, const Mask& t, const Mask& f, LogicVariant l);
/// ⟨T_k, F_k⟩ from ⊥ to the fixpoint, both ends included.
std::vector<std::pair<Mask, Mask>> wfm_stages(const IndexedTheory& it, LogicVariant l);

} // namespace wfdl::detail
