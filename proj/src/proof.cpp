#include "wfdl/proof.hpp"

#include <climits>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

#include "index.hpp"
#include "wfdl/errors.hpp"

namespace wfdl {

using detail::IndexedTheory;
using detail::IndexedRule;
using detail::Mask;

SignedLiteral SignedLiteral::parse(std::string_view text) {
  Sign sign = Sign::plus;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    sign = text.front() == '+' ? Sign::plus : Sign::minus;
    text.remove_prefix(1);
  }
  return {sign, Literal::parse(text)};
}

std::string SignedLiteral::str() const { return (sign == Sign::plus ? "+" : "-") + literal.str(); }

std::size_t ArgumentNode::size() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.size();
  return n;
}

std::size_t ArgumentNode::depth() const {
  std::size_t d = 0;
  for (const auto& c : children) d = std::max(d, c.depth());
  return d + 1;
}

std::string format_tree(const ArgumentNode& root) {
  std::ostringstream out;
  std::function<void(const ArgumentNode&, std::size_t)> walk = [&](const ArgumentNode& n, std::size_t level) {
    out << std::string(2 * level, ' ') << n.label().str() << '\n';
    for (const auto& c : n.children) walk(c, level + 1);
  };
  walk(root, 0);
  return out.str();
}

std::string_view to_string(ProofStatus s) {
  switch (s) {
  case ProofStatus::proved: return "proved";
  case ProofStatus::no_proof: return "no_proof";
  case ProofStatus::budget_exhausted: return "budget_exhausted";
  }
  return "?";
}

namespace {

bool may_defeat(const IndexedTheory& it, LogicVariant l, int s, int r) {
  if (l == LogicVariant::ndl) return !it.below(s, r);
  return it.rules[static_cast<std::size_t>(s)].kind == RuleKind::strict || it.below(r, s);
}

// Condition checks at one node, given which literals have + and - children.
struct NodeView {
  const IndexedTheory& it;
  LogicVariant l;
  const Mask& plus;
  const Mask& minus;

  bool succeeds(const std::vector<int>& a) const { return detail::all_in(a, plus); }
  bool fails(const std::vector<int>& a) const { return detail::any_in(a, minus); }
  const IndexedRule& rule(int r) const { return it.rules[static_cast<std::size_t>(r)]; }

  bool proved(int p) const {
    for (int r : it.rules_for[static_cast<std::size_t>(p)]) {
      const auto& rr = rule(r);
      if (rr.kind == RuleKind::defeater || !succeeds(rr.body)) continue;
      if (rr.kind == RuleKind::strict) return true;
      bool all_c = true;
      for (int ci : it.conflicts_of[static_cast<std::size_t>(p)]) {
        bool some_q = false;
        for (int q : it.conflicts[static_cast<std::size_t>(ci)]) {
          if (q == p) continue;
          bool all_s = true;
          for (int s : it.rules_for[static_cast<std::size_t>(q)])
            if (!fails(rule(s).body) && !it.below(s, r)) {
              all_s = false;
              break;
            }
          if (all_s) {
            some_q = true;
            break;
          }
        }
        if (!some_q) {
          all_c = false;
          break;
        }
      }
      if (all_c) return true;
    }
    return false;
  }

  bool defeated(int r) const {
    const int p = rule(r).head;
    for (int ci : it.conflicts_of[static_cast<std::size_t>(p)]) {
      bool all_q = true;
      for (int q : it.conflicts[static_cast<std::size_t>(ci)]) {
        if (q == p) continue;
        bool some_s = false;
        for (int s : it.rules_for[static_cast<std::size_t>(q)])
          if (succeeds(rule(s).body) && may_defeat(it, l, s, r)) {
            some_s = true;
            break;
          }
        if (!some_s) {
          all_q = false;
          break;
        }
      }
      if (all_q) return true;
    }
    return false;
  }

  bool refuted(int p) const {
    for (int r : it.rules_for[static_cast<std::size_t>(p)]) {
      const auto& rr = rule(r);
      if (rr.kind == RuleKind::strict && !fails(rr.body)) return false;
      if (rr.kind == RuleKind::defeasible && !fails(rr.body) && !defeated(r)) return false;
    }
    return true;
  }
};

int require_id(const IndexedTheory& it, const Literal& p) {
  const int id = it.lits.id(p);
  if (id < 0) throw PreconditionError("literal " + p.str() + " is not in Lit(D)");
  return id;
}

} // namespace

TreeCheck validate_tree(const DefeasibleTheory& d, LogicVariant l, const ArgumentNode& root) {
  IndexedTheory it(d);
  std::function<void(const ArgumentNode&)> check_labels = [&](const ArgumentNode& n) {
    require_id(it, n.literal);
    for (const auto& c : n.children) check_labels(c);
  };
  check_labels(root);

  TreeCheck out;
  std::vector<std::size_t> path;
  // `chain` holds the labels of the unbroken run of negative ancestors.
  std::function<void(const ArgumentNode&, const Mask&)> walk = [&](const ArgumentNode& n, const Mask& chain) {
    const int p = it.lits.id(n.literal);
    Mask plus = it.lits.empty_mask();
    Mask minus = it.lits.empty_mask();
    for (const auto& c : n.children) (c.sign == Sign::plus ? plus : minus)[static_cast<std::size_t>(it.lits.id(c.literal))] = 1;
    NodeView view{it, l, plus, minus};

    bool ok;
    if (n.sign == Sign::plus)
      ok = view.proved(p);
    else
      ok = chain[static_cast<std::size_t>(p)] || view.refuted(p);
    if (!ok) {
      out.valid = false;
      out.diagnostics.push_back(
          {path, n.label().str(),
           n.sign == Sign::plus ? "no rule for the literal is established by the children"
                                : "children do not refute every rule and no negative loop closes here"});
    }

    Mask next = it.lits.empty_mask();
    if (n.sign == Sign::minus) {
      next = chain;
      next[static_cast<std::size_t>(p)] = 1;
    }
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      path.push_back(i);
      walk(n.children[i], next);
      path.pop_back();
    }
  };
  walk(root, it.lits.empty_mask());
  return out;
}

LiteralSet dep_set(const DefeasibleTheory& d, const Literal& p) {
  if (!d.literals().contains(p)) throw PreconditionError("literal " + p.str() + " is not in Lit(D)");
  LiteralSet out{p};
  std::vector<Literal> work{p};
  auto add = [&](const Literal& q) {
    if (out.insert(q).second) work.push_back(q);
  };
  while (!work.empty()) {
    const Literal q = work.back();
    work.pop_back();
    for (const auto& c : d.conflicts())
      if (c.contains(q))
        for (const auto& x : c) add(x);
    for (const auto& r : d.rules())
      if (r.head == q)
        for (const auto& x : r.body) add(x);
  }
  return out;
}

bool is_locally_finite(const DefeasibleTheory&) { return true; }

// ---------------------------------------------------------------------------

namespace {

struct PNode {
  bool plus;
  int lit;
  std::vector<std::shared_ptr<const PNode>> kids;
};
using PNodePtr = std::shared_ptr<const PNode>;

struct Outcome {
  PNodePtr node; // null on failure
  int low = INT_MAX; // shallowest open positive goal a failure depended on
};

struct BudgetHit {};

ArgumentNode to_tree(const IndexedTheory& it, const PNode& n) {
  ArgumentNode out{n.plus ? Sign::plus : Sign::minus, it.lits.at(n.lit), {}};
  for (const auto& k : n.kids) out.children.push_back(to_tree(it, *k));
  return out;
}

} // namespace

struct Prover::Impl {
  IndexedTheory it;
  LogicVariant l;
  std::size_t budget;
  std::size_t expanded = 0;
  std::vector<int> open_at; // depth of the open +p goal, or -1
  std::map<std::tuple<bool, int, Mask>, PNodePtr> memo; // null = no proof

  Impl(const DefeasibleTheory& d, LogicVariant lv, std::size_t b) : it(d), l(lv), budget(b) {}

  const IndexedRule& rule(int r) const { return it.rules[static_cast<std::size_t>(r)]; }

  void tick() {
    if (++expanded > budget) throw BudgetHit{};
  }

  // Proves every literal of `a` (children +q); false as soon as one fails.
  bool prove_all(const std::vector<int>& a, int depth, std::vector<PNodePtr>& kids, int& low) {
    for (int q : a) {
      Outcome o = solve(true, q, it.lits.empty_mask(), depth);
      if (!o.node) {
        low = std::min(low, o.low);
        return false;
      }
      kids.push_back(o.node);
    }
    return true;
  }

  // Refutes some literal of `a` (one child -t).
  bool refute_one(const std::vector<int>& a, const Mask& chain, int depth, std::vector<PNodePtr>& kids, int& low) {
    for (int t : a) {
      Outcome o = solve(false, t, chain, depth);
      if (o.node) {
        kids.push_back(o.node);
        return true;
      }
      low = std::min(low, o.low);
    }
    return false;
  }

  PNodePtr expand_plus(int p, int depth, int& low) {
    const Mask none = it.lits.empty_mask();
    for (int pass = 0; pass < 2; ++pass) {
      const RuleKind want = pass == 0 ? RuleKind::strict : RuleKind::defeasible;
      for (int r : it.rules_for[static_cast<std::size_t>(p)]) {
        if (rule(r).kind != want) continue;
        std::vector<PNodePtr> kids;
        if (!prove_all(rule(r).body, depth + 1, kids, low)) continue;
        if (want == RuleKind::defeasible && !beat_rivals(p, r, none, depth, kids, low)) continue;
        return std::make_shared<PNode>(PNode{true, p, std::move(kids)});
      }
    }
    return nullptr;
  }

  // For every conflict set of p, some rival q whose non-inferior rules all fail.
  bool beat_rivals(int p, int r, const Mask& none, int depth, std::vector<PNodePtr>& kids, int& low) {
    for (int ci : it.conflicts_of[static_cast<std::size_t>(p)]) {
      bool done = false;
      for (int q : it.conflicts[static_cast<std::size_t>(ci)]) {
        if (q == p) continue;
        std::vector<PNodePtr> trial;
        bool all_s = true;
        for (int s : it.rules_for[static_cast<std::size_t>(q)]) {
          if (it.below(s, r)) continue;
          if (!refute_one(rule(s).body, none, depth + 1, trial, low)) {
            all_s = false;
            break;
          }
        }
        if (all_s) {
          kids.insert(kids.end(), trial.begin(), trial.end());
          done = true;
          break;
        }
      }
      if (!done) return false;
    }
    return true;
  }

  PNodePtr expand_minus(int p, const Mask& chain, int depth, int& low) {
    Mask next = chain;
    next[static_cast<std::size_t>(p)] = 1;
    std::vector<PNodePtr> kids;
    for (int r : it.rules_for[static_cast<std::size_t>(p)]) {
      const auto& rr = rule(r);
      if (rr.kind == RuleKind::defeater) continue;
      if (refute_one(rr.body, next, depth + 1, kids, low)) continue;
      if (rr.kind == RuleKind::strict || !defeat(p, r, depth, kids, low)) return nullptr;
    }
    return std::make_shared<PNode>(PNode{false, p, std::move(kids)});
  }

  // Some conflict set of p where every rival has an applicable rule allowed to defeat r.
  bool defeat(int p, int r, int depth, std::vector<PNodePtr>& kids, int& low) {
    for (int ci : it.conflicts_of[static_cast<std::size_t>(p)]) {
      std::vector<PNodePtr> trial;
      bool all_q = true;
      for (int q : it.conflicts[static_cast<std::size_t>(ci)]) {
        if (q == p) continue;
        bool some_s = false;
        for (int s : it.rules_for[static_cast<std::size_t>(q)]) {
          if (!may_defeat(it, l, s, r)) continue;
          std::vector<PNodePtr> sk;
          if (prove_all(rule(s).body, depth + 1, sk, low)) {
            trial.insert(trial.end(), sk.begin(), sk.end());
            some_s = true;
            break;
          }
        }
        if (!some_s) {
          all_q = false;
          break;
        }
      }
      if (all_q) {
        kids.insert(kids.end(), trial.begin(), trial.end());
        return true;
      }
    }
    return false;
  }

  Outcome solve(bool plus, int p, const Mask& chain, int depth) {
    if (plus && open_at[static_cast<std::size_t>(p)] >= 0) return {nullptr, open_at[static_cast<std::size_t>(p)]};
    if (!plus && chain[static_cast<std::size_t>(p)])
      return {std::make_shared<PNode>(PNode{false, p, {}}), INT_MAX};

    auto key = std::make_tuple(plus, p, plus ? it.lits.empty_mask() : chain);
    if (auto hit = memo.find(key); hit != memo.end()) return {hit->second, INT_MAX};
    tick();

    int low = INT_MAX;
    PNodePtr node;
    if (plus) {
      open_at[static_cast<std::size_t>(p)] = depth;
      node = expand_plus(p, depth, low);
      open_at[static_cast<std::size_t>(p)] = -1;
    } else {
      node = expand_minus(p, chain, depth, low);
    }
    // A failure caused by pruning against a goal above this one only holds in
    // the current context, so it is not cached.
    if (node || low >= depth) memo.emplace(std::move(key), node);
    return {node, low};
  }
};

Prover::Prover(const DefeasibleTheory& d, LogicVariant l, std::size_t budget)
    : impl_(std::make_unique<Impl>(d, l, budget)) {}

Prover::~Prover() = default;

ProofResult Prover::prove(const SignedLiteral& goal) {
  Impl& m = *impl_;
  const int p = require_id(m.it, goal.literal);
  m.open_at.assign(static_cast<std::size_t>(m.it.size()), -1);
  m.expanded = 0;
  ProofResult out;
  try {
    Outcome o = m.solve(goal.sign == Sign::plus, p, m.it.lits.empty_mask(), 0);
    if (o.node) {
      out.status = ProofStatus::proved;
      out.tree = to_tree(m.it, *o.node);
    }
  } catch (const BudgetHit&) {
    out.status = ProofStatus::budget_exhausted;
  }
  out.expanded = m.expanded;
  return out;
}

ProofResult prove(const DefeasibleTheory& d, LogicVariant l, const SignedLiteral& goal, std::size_t budget) {
  return Prover(d, l, budget).prove(goal);
}

} // namespace wfdl
