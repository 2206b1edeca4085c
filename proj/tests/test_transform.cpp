#include <doctest.h>

#include "oracles.hpp"
#include "wfdl/dl_semantics.hpp"
#include "wfdl/errors.hpp"
#include "wfdl/fixtures.hpp"
#include "wfdl/lp_semantics.hpp"
#include "wfdl/transform.hpp"

using namespace wfdl;

namespace {

LPRule rule(const char* head, LiteralSet pos = {}, LiteralSet neg = {}) {
  return {lit(head), std::move(pos), std::move(neg), {}};
}

const DLRule* find(const DefeasibleTheory& d, std::string_view id) {
  const DLRule* r = d.find_rule(id);
  REQUIRE(r != nullptr);
  return r;
}

std::size_t count_rules_for(const DefeasibleTheory& d, const Literal& head) {
  std::size_t n = 0;
  for (const auto& r : d.rules()) n += r.head == head;
  return n;
}

} // namespace

TEST_CASE("closing conflict sets under strict rules") {
  DefeasibleTheory bach({{"r1", RuleKind::defeasible, {}, lit("married")},
                         {"r2", RuleKind::strict, lits({"married"}), lit("-bachelor")},
                         {"r3", RuleKind::defeasible, {}, lit("bachelor")}});
  const auto closed = close_conflicts(bach);
  CHECK(closed.conflicts().contains(lits({"married", "bachelor"})));
  CHECK(closed == fixtures::bach());

  DefeasibleTheory strict({{"r1", RuleKind::strict, {}, lit("p")},
                           {"r2", RuleKind::defeasible, {}, lit("-p")},
                           {"r3", RuleKind::defeasible, {}, lit("q")},
                           {"r4", RuleKind::strict, lits({"q"}), lit("p")}});
  const auto s = close_conflicts(strict);
  CHECK(s.conflicts().contains(lits({"q", "-p"})));
  CHECK(s == fixtures::strict());

  // No strict rules: nothing to add.
  CHECK(close_conflicts(fixtures::amb()).conflicts() == fixtures::amb().conflicts());
}

TEST_CASE("closure never produces singleton conflict sets") {
  const auto closed = close_conflicts(fixtures::strict());
  for (const auto& c : closed.conflicts()) CHECK(c.size() >= 2);
}

TEST_CASE("Prod of conflict sets") {
  CHECK(prod_conflicts(fixtures::amb(), lit("p")) == std::set<LiteralSet>{lits({"-p"})});
  CHECK(prod_conflicts(fixtures::strict(), lit("q")) == std::set<LiteralSet>{lits({"-q", "-p"})});
  CHECK(prod_conflicts(fixtures::strict(), lit("q")) == oracle::prod(fixtures::strict(), lit("q")));

  DefeasibleTheory d({{"r1", RuleKind::defeasible, {}, lit("p")}}, {lits({"p", "a"}), lits({"p", "b", "c"})});
  // {p, -p} is also in C[p], contributing -p to every member.
  const auto prod = prod_conflicts(d, lit("p"));
  CHECK(prod == std::set<LiteralSet>{lits({"a", "b", "-p"}), lits({"a", "c", "-p"})});
  CHECK(prod == oracle::prod(d, lit("p")));
  CHECK_THROWS_AS(prod_conflicts(d, lit("p"), 1), CapExceeded);
}

TEST_CASE("defeasible theory to logic program") {
  const auto amb = dl_to_lp(fixtures::amb());
  CHECK(amb.same_rules(NormalProgram{{rule("p", {}, lits({"-p"})), rule("-p", {}, lits({"p"})),
                                      rule("-q", lits({"p"}), lits({"q"})), rule("q", {}, lits({"-q"}))}}));

  // -p also conflicts with q here, so its rule carries both default literals.
  const auto strict = dl_to_lp(fixtures::strict());
  CHECK(strict.same_rules(NormalProgram{{rule("p"), rule("-p", {}, lits({"p", "q"})),
                                         rule("q", {}, lits({"-q", "-p"})), rule("p", lits({"q"}))}}));

  const auto nixon = dl_to_lp(fixtures::nixon());
  CHECK(nixon.rules.size() == 9);
  CHECK(nixon.same_rules(NormalProgram{{
      rule("nixon"),
      rule("republican", lits({"nixon"})),
      rule("quaker", lits({"nixon"})),
      rule("dove", lits({"quaker"}), lits({"-dove", "hawk"})),
      rule("hawk", lits({"republican"}), lits({"-hawk", "dove"})),
      rule("-dove", lits({"hawk"})),
      rule("-hawk", lits({"dove"})),
      rule("extremist", lits({"hawk"}), lits({"-extremist"})),
      rule("extremist", lits({"dove"}), lits({"-extremist"})),
  }}));
}

TEST_CASE("translated rules remember their origin") {
  for (const auto& r : dl_to_lp(fixtures::nixon()).rules) {
    const DLRule* src = fixtures::nixon().find_rule(r.origin);
    REQUIRE(src != nullptr);
    CHECK(src->head == r.head);
    CHECK(src->body == r.pos_body);
  }
}

TEST_CASE("dl_to_lp preconditions") {
  DefeasibleTheory defeater({{"r1", RuleKind::defeater, {}, lit("p")}});
  CHECK_THROWS_AS(dl_to_lp(defeater), PreconditionError);
  DefeasibleTheory pri({{"a", RuleKind::defeasible, {}, lit("p")}, {"b", RuleKind::defeasible, {}, lit("-p")}}, {},
                       {{"a", "b"}});
  CHECK_THROWS_AS(dl_to_lp(pri), PreconditionError);
}

TEST_CASE("explicit version") {
  const auto phi = explicit_version(fixtures::loop());
  CHECK(phi.same_rules(NormalProgram{{rule("p", lits({"-q"})), rule("q", lits({"-p"})), rule("-q", {}, lits({"q"})),
                                      rule("-p", {}, lits({"p"}))}}));
  CHECK(explicit_version(NormalProgram{{rule("p")}}).same_rules(NormalProgram{{rule("p"), rule("-p", {}, lits({"p"}))}}));
  CHECK(explicit_version(fixtures::chain(1))
            .same_rules(NormalProgram{{rule("p", lits({"-q0"})), rule("q0", lits({"q1"})), rule("-p", {}, lits({"p"})),
                                       rule("-q0", {}, lits({"q0"})), rule("-q1", {}, lits({"q1"}))}}));
  CHECK_THROWS_AS(explicit_version(fixtures::contra_program()), PreconditionError);
}

TEST_CASE("logic program to defeasible theory") {
  const auto d = lp_to_dl(fixtures::loop());
  CHECK(d.rules().size() == 4);
  CHECK(d.has_minimal_conflicts());
  CHECK(d.priority().empty());
  std::set<std::tuple<RuleKind, LiteralSet, Literal>> shape;
  for (const auto& r : d.rules()) shape.insert({r.kind, r.body, r.head});
  CHECK(shape == std::set<std::tuple<RuleKind, LiteralSet, Literal>>{
                     {RuleKind::strict, lits({"-q"}), lit("p")},
                     {RuleKind::strict, lits({"-p"}), lit("q")},
                     {RuleKind::defeasible, {}, lit("-q")},
                     {RuleKind::defeasible, {}, lit("-p")}});

  const auto fact = lp_to_dl(NormalProgram{{rule("p")}});
  CHECK(fact.rules().size() == 2);
  CHECK(validate_theory(d).empty());
  CHECK_THROWS_AS(lp_to_dl(fixtures::contra_program()), PreconditionError);
}

TEST_CASE("round trip through a theory gives the explicit version") {
  CHECK(dl_to_lp(lp_to_dl(fixtures::loop())).same_rules(explicit_version(fixtures::loop())));
  CHECK(dl_to_lp(lp_to_dl(fixtures::chain(4))).same_rules(explicit_version(fixtures::chain(4))));
}

TEST_CASE("sign encoding") {
  const auto enc = encode_signs(fixtures::contra_program());
  for (const auto& l : enc.literals()) CHECK(l.positive);
  CHECK(enc.literals().contains(lit("p__neg")));
  CHECK(decode_signs(enc).same_rules(fixtures::contra_program()));
  CHECK(decode_sign(encode_sign(lit("-x"))) == lit("-x"));
  CHECK_THROWS_AS(encode_signs(NormalProgram{{rule("a__neg")}}), PreconditionError);
  CHECK_NOTHROW(explicit_version(enc));
}

TEST_CASE("compiling away a priority") {
  DefeasibleTheory d({{"r", RuleKind::defeasible, {}, lit("p")}, {"s", RuleKind::defeasible, {}, lit("-p")}}, {},
                     {{"s", "r"}});
  const auto e = eliminate_defeaters_priorities(d);
  CHECK_FALSE(e.has_defeaters());
  CHECK_FALSE(e.has_priorities());
  CHECK(e.has_minimal_conflicts());
  CHECK(validate_theory(e).empty());

  CHECK(count_rules_for(e, Literal{fi_atom("r"), false}) == 0);
  CHECK(count_rules_for(e, Literal{fi_atom("s"), false}) == 1);
  const DLRule* def = find(e, "s__def1");
  CHECK(def->is_strict());
  CHECK(def->body == LiteralSet{Literal{su_atom("r")}});

  CHECK(find(e, "r__su")->is_strict());
  CHECK(find(e, "r__fi")->is_defeasible());
  CHECK(find(e, "r__head")->is_strict());
  CHECK(find(e, "r__head")->head == lit("p"));

  for (auto l : {LogicVariant::ndl, LogicVariant::adl}) {
    const auto m = restrict_to(wfm_dl(e, l), d.literals());
    CHECK(m == Interpretation{lits({"p"}), lits({"-p"})});
    CHECK(m == wfm_dl(d, l));
  }
}

TEST_CASE("compiling away a defeater") {
  DefeasibleTheory d({{"r", RuleKind::defeater, {}, lit("-f")}, {"t", RuleKind::defeasible, {}, lit("f")}});
  const auto e = eliminate_defeaters_priorities(d);
  CHECK(e.find_rule("r__su") != nullptr);
  CHECK(e.find_rule("r__fi")->is_defeasible());
  CHECK(e.find_rule("r__head") == nullptr);
  for (auto l : {LogicVariant::ndl, LogicVariant::adl}) {
    const auto m = restrict_to(wfm_dl(e, l), d.literals());
    CHECK_FALSE(m.well_founded.contains(lit("f")));
    CHECK(m == wfm_dl(d, l));
  }
}

TEST_CASE("compiling a plain theory preserves both semantics") {
  for (const auto& d : {fixtures::amb(), fixtures::joint(), fixtures::nixon()}) {
    const auto e = eliminate_defeaters_priorities(d);
    CHECK(e.literals().size() > d.literals().size());
    for (auto l : {LogicVariant::ndl, LogicVariant::adl})
      CHECK(restrict_to(wfm_dl(e, l), d.literals()) == wfm_dl(d, l));
  }
}

TEST_CASE("compile rejects clashing fresh atoms and enforces the cap") {
  DefeasibleTheory clash({{"r", RuleKind::defeasible, {}, lit("su__r")}});
  CHECK_THROWS_AS(eliminate_defeaters_priorities(clash), ValidationError);

  std::vector<DLRule> rules{{"r", RuleKind::defeasible, {}, lit("p")}};
  for (int i = 0; i < 6; ++i) rules.push_back({"s" + std::to_string(i), RuleKind::defeasible, {}, lit("-p")});
  CHECK_THROWS_AS(eliminate_defeaters_priorities(DefeasibleTheory(rules), 3), CapExceeded);
}
