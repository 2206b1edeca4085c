#include "index.hpp"

#include <algorithm>

namespace wfdl::detail {

LiteralTable::LiteralTable(const LiteralSet& universe) : lits_(universe.begin(), universe.end()) {
  for (std::size_t i = 0; i < lits_.size(); ++i) ids_.emplace(lits_[i], static_cast<int>(i));
}

int LiteralTable::id(const Literal& l) const {
  auto it = ids_.find(l);
  return it == ids_.end() ? -1 : it->second;
}

Mask LiteralTable::mask(const LiteralSet& s) const {
  Mask m = empty_mask();
  for (const auto& l : s)
    if (int i = id(l); i >= 0) m[static_cast<std::size_t>(i)] = 1;
  return m;
}

LiteralSet LiteralTable::set(const Mask& m) const {
  LiteralSet out;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) out.insert(lits_[i]);
  return out;
}

static std::vector<int> ids_of(const LiteralTable& t, const LiteralSet& s) {
  std::vector<int> out;
  out.reserve(s.size());
  for (const auto& l : s) out.push_back(t.id(l));
  return out;
}

IndexedTheory::IndexedTheory(const DefeasibleTheory& d) : lits(d.literals()) {
  const auto n = static_cast<std::size_t>(lits.size());
  rules_for.resize(n);
  conflicts_of.resize(n);
  std::map<std::string, std::vector<int>> by_id;
  for (const auto& r : d.rules()) {
    int idx = static_cast<int>(rules.size());
    rules.push_back({r.kind, lits.id(r.head), ids_of(lits, r.body)});
    rules_for[static_cast<std::size_t>(rules.back().head)].push_back(idx);
    by_id[r.id].push_back(idx);
  }
  for (const auto& c : d.conflicts()) {
    int idx = static_cast<int>(conflicts.size());
    conflicts.push_back(ids_of(lits, c));
    for (int l : conflicts.back()) conflicts_of[static_cast<std::size_t>(l)].push_back(idx);
  }
  prec_.assign(rules.size() * rules.size(), 0);
  for (const auto& pr : d.priority()) {
    auto lo = by_id.find(pr.inferior);
    auto hi = by_id.find(pr.superior);
    if (lo == by_id.end() || hi == by_id.end()) continue;
    for (int s : lo->second)
      for (int r : hi->second)
        prec_[static_cast<std::size_t>(s) * rules.size() + static_cast<std::size_t>(r)] = 1;
  }
}

IndexedProgram::IndexedProgram(const NormalProgram& p, const LiteralSet& base) {
  LiteralSet universe = p.literals();
  universe.insert(base.begin(), base.end());
  lits = LiteralTable(universe);
  rules_for.resize(static_cast<std::size_t>(lits.size()));
  for (const auto& r : p.rules) {
    int idx = static_cast<int>(rules.size());
    rules.push_back({lits.id(r.head), ids_of(lits, r.pos_body), ids_of(lits, r.neg_body)});
    rules_for[static_cast<std::size_t>(rules.back().head)].push_back(idx);
  }
}

} // namespace wfdl::detail
