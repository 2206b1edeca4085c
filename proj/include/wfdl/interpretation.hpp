#pragma once

#include "wfdl/literal.hpp"

namespace wfdl {

/// ⟨T, F⟩: well-founded and unfounded literals. What is in neither is ambiguous.
struct Interpretation {
  LiteralSet well_founded;
  LiteralSet unfounded;

  bool coherent() const;
  LiteralSet ambiguous(const LiteralSet& universe) const;

  friend bool operator==(const Interpretation&, const Interpretation&) = default;
};

/// The knowledge ordering ⊑.
bool knowledge_leq(const Interpretation& a, const Interpretation& b);

/// Keeps only literals in `universe` on both sides.
Interpretation restrict_to(const Interpretation& i, const LiteralSet& universe);

} // namespace wfdl
