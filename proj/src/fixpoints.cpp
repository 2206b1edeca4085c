#include "fixpoints.hpp"

#include <cstdint>

#include "wfdl/errors.hpp"

namespace wfdl::detail {

Mask squared_lfp(const SetOperator& op, std::size_t n, std::vector<Mask>* trace) {
  Mask cur(n, 0);
  if (trace) trace->push_back(cur);
  for (;;) {
    Mask next = op(op(cur));
    if (next == cur) return cur;
    cur = std::move(next);
    if (trace) trace->push_back(cur);
  }
}

std::vector<Mask> antimonotone_fixpoints(const SetOperator& op, std::size_t n) {
  const Mask lower = squared_lfp(op, n);
  const Mask upper = op(lower);
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i) {
    if (lower[i] && !upper[i]) return {}; // no fixpoint can contain lower
    if (upper[i] && !lower[i]) free.push_back(i);
  }
  if (free.size() >= 63) throw CapExceeded("too many undecided literals to enumerate");

  std::vector<Mask> out;
  const std::uint64_t count = std::uint64_t{1} << free.size();
  Mask candidate = lower;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    for (std::size_t k = 0; k < free.size(); ++k) candidate[free[k]] = (bits >> k) & 1U;
    if (op(candidate) == candidate) out.push_back(candidate);
  }
  return out;
}

} // namespace wfdl::detail
