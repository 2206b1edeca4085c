#include "wfdl/lp_semantics.hpp"

#include "fixpoints.hpp"
#include "index.hpp"
#include "wfdl/errors.hpp"

namespace wfdl {

using detail::IndexedProgram;
using detail::Mask;

namespace {

Mask consequences(const IndexedProgram& ip, const Mask& t, const Mask& f) {
  Mask out = ip.lits.empty_mask();
  for (const auto& r : ip.rules)
    if (detail::all_in(r.pos, t) && detail::all_in(r.neg, f))
      out[static_cast<std::size_t>(r.head)] = 1;
  return out;
}

// A literal stays in the candidate set while each of its rules has a
// positive body member in F ∪ S or a default literal in T. Removing
// literals only makes the condition harder, so deletion to a fixpoint gives
// the greatest unfounded set.
Mask greatest_unfounded(const IndexedProgram& ip, const Mask& t, const Mask& f) {
  Mask s = ip.lits.full_mask();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 0; p < ip.size(); ++p) {
      if (!s[static_cast<std::size_t>(p)]) continue;
      for (int ri : ip.rules_for[static_cast<std::size_t>(p)]) {
        const auto& r = ip.rules[static_cast<std::size_t>(ri)];
        if (!detail::any_in(r.pos, f, s) && !detail::any_in(r.neg, t)) {
          s[static_cast<std::size_t>(p)] = 0;
          changed = true;
          break;
        }
      }
    }
  }
  return s;
}

Mask closure(const IndexedProgram& ip, const std::vector<char>& active) {
  Mask out = ip.lits.empty_mask();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < ip.rules.size(); ++i) {
      const auto& r = ip.rules[i];
      if (!active[i] || out[static_cast<std::size_t>(r.head)]) continue;
      if (detail::all_in(r.pos, out)) {
        out[static_cast<std::size_t>(r.head)] = 1;
        changed = true;
      }
    }
  }
  return out;
}

Mask gamma_mask(const IndexedProgram& ip, const Mask& s) {
  std::vector<char> active(ip.rules.size());
  for (std::size_t i = 0; i < ip.rules.size(); ++i) active[i] = !detail::any_in(ip.rules[i].neg, s);
  return closure(ip, active);
}

} // namespace

LiteralSet immediate_consequences_lp(const NormalProgram& p, const Interpretation& i) {
  IndexedProgram ip(p, {});
  // Literals of I outside the program cannot occur in any body, so dropping
  // them from the masks changes nothing.
  return ip.lits.set(consequences(ip, ip.lits.mask(i.well_founded), ip.lits.mask(i.unfounded)));
}

bool is_unfounded_set_lp(const NormalProgram& p, const Interpretation& i, const LiteralSet& s) {
  for (const auto& a : s) {
    for (const auto& r : p.rules) {
      if (r.head != a) continue;
      bool ok = false;
      for (const auto& q : r.pos_body)
        if (i.unfounded.contains(q) || s.contains(q)) ok = true;
      for (const auto& q : r.neg_body)
        if (i.well_founded.contains(q)) ok = true;
      if (!ok) return false;
    }
  }
  return true;
}

LiteralSet greatest_unfounded_lp(const NormalProgram& p, const Interpretation& i,
                                 const LiteralSet& base) {
  IndexedProgram ip(p, base);
  return ip.lits.set(greatest_unfounded(ip, ip.lits.mask(i.well_founded), ip.lits.mask(i.unfounded)));
}

std::vector<Interpretation> wfm_lp_trace(const NormalProgram& p, const LiteralSet& base) {
  IndexedProgram ip(p, base);
  Mask t = ip.lits.empty_mask();
  Mask f = ip.lits.empty_mask();
  std::vector<Interpretation> trace{Interpretation{}};
  for (;;) {
    Mask nt = consequences(ip, t, f);
    Mask nf = greatest_unfounded(ip, t, f);
    if (nt == t && nf == f) return trace;
    t = std::move(nt);
    f = std::move(nf);
    trace.push_back({ip.lits.set(t), ip.lits.set(f)});
  }
}

Interpretation wfm_lp(const NormalProgram& p, const LiteralSet& base) {
  return wfm_lp_trace(p, base).back();
}

DefiniteProgram gl_reduct(const NormalProgram& p, const LiteralSet& s) {
  NormalProgram out;
  for (const auto& r : p.rules) {
    bool blocked = false;
    for (const auto& q : r.neg_body)
      if (s.contains(q)) blocked = true;
    if (!blocked) out.rules.push_back(LPRule{r.head, r.pos_body, {}, r.origin});
  }
  return DefiniteProgram(std::move(out));
}

LiteralSet definite_closure(const DefiniteProgram& p) {
  IndexedProgram ip(p.program(), {});
  return ip.lits.set(closure(ip, std::vector<char>(ip.rules.size(), 1)));
}

LiteralSet definite_closure(const NormalProgram& p) { return definite_closure(DefiniteProgram(p)); }

LiteralSet gamma(const NormalProgram& p, const LiteralSet& s) {
  return definite_closure(gl_reduct(p, s));
}

Interpretation wfm_via_gamma(const NormalProgram& p, const LiteralSet& base) {
  IndexedProgram ip(p, base);
  auto op = [&](const Mask& s) { return gamma_mask(ip, s); };
  Mask t = detail::squared_lfp(op, static_cast<std::size_t>(ip.size()));
  Mask g = op(t);
  Mask f = ip.lits.empty_mask();
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = !g[i];
  return {ip.lits.set(t), ip.lits.set(f)};
}

std::set<LiteralSet> stable_models_lp(const NormalProgram& p, std::size_t cap) {
  IndexedProgram ip(p, {});
  if (static_cast<std::size_t>(ip.size()) > cap)
    throw CapExceeded("program has " + std::to_string(ip.size()) + " literals, cap is " +
                      std::to_string(cap));
  std::set<LiteralSet> out;
  auto op = [&](const Mask& s) { return gamma_mask(ip, s); };
  for (const auto& m : detail::antimonotone_fixpoints(op, static_cast<std::size_t>(ip.size())))
    out.insert(ip.lits.set(m));
  return out;
}

} // namespace wfdl
