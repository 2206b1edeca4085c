#include <doctest.h>

#include "wfdl/errors.hpp"
#include "wfdl/fixtures.hpp"
#include "wfdl/interpretation.hpp"
#include "wfdl/program.hpp"
#include "wfdl/theory.hpp"

using namespace wfdl;

namespace {

bool has_kind(const std::vector<Violation>& vs, ViolationKind k) {
  for (const auto& v : vs)
    if (v.kind == k) return true;
  return false;
}

} // namespace

TEST_CASE("complement flips the sign and keeps the atom") {
  CHECK(complement(lit("p")) == lit("-p"));
  CHECK(complement(lit("-p")) == lit("p"));
  CHECK(complement(complement(lit("q"))) == lit("q"));
  CHECK(complement(lit("-p")).atom == "p");
}

TEST_CASE("literal parsing and printing") {
  CHECK(lit("-abc").str() == "-abc");
  CHECK_FALSE(lit("-abc").positive);
  CHECK(lit("x_1'").atom == "x_1'");
  CHECK_THROWS_AS(Literal::parse(""), Error);
  CHECK_THROWS_AS(Literal::parse("-"), Error);
  CHECK_THROWS_AS(Literal::parse("a b"), Error);
  CHECK_THROWS_AS(Literal::parse("--a"), Error);
}

TEST_CASE("literals order atom first, positive before negative") {
  CHECK(lit("p") < lit("-p"));
  CHECK(lit("-p") < lit("q"));
  CHECK(to_string(lits({"q", "-p", "p"})) == "{p, -p, q}");
}

TEST_CASE("minimal conflicts are inserted for every atom") {
  DefeasibleTheory d({{"r1", RuleKind::defeasible, lits({"a"}), lit("-b")}}, {lits({"c", "d"})});
  for (const char* a : {"a", "b", "c", "d"})
    CHECK(d.conflicts().contains(LiteralSet{Literal{a}, Literal{a, false}}));
  CHECK(d.literals().size() == 8);
  CHECK_FALSE(d.has_minimal_conflicts());
  CHECK(fixtures::amb().has_minimal_conflicts());
}

TEST_CASE("fixture theories are admissible") {
  for (const auto& d : {fixtures::amb(), fixtures::strict(), fixtures::nixon(), fixtures::joint(),
                        fixtures::bach(), fixtures::contra_theory()})
    CHECK(validate_theory(d).empty());
}

TEST_CASE("priority cycles are reported") {
  DefeasibleTheory d({{"r1", RuleKind::defeasible, {}, lit("p")}, {"r2", RuleKind::defeasible, {}, lit("-p")}}, {},
                     {{"r2", "r1"}, {"r1", "r2"}});
  CHECK(has_kind(validate_theory(d), ViolationKind::priority_cycle));
  CHECK_THROWS_AS(require_valid(d), ValidationError);
}

TEST_CASE("priorities on strict rules are reported") {
  DefeasibleTheory d({{"r1", RuleKind::strict, {}, lit("p")}, {"r2", RuleKind::defeasible, {}, lit("-p")}}, {},
                     {{"r2", "r1"}});
  CHECK(has_kind(validate_theory(d), ViolationKind::priority_on_strict_rule));
}

TEST_CASE("other admissibility violations") {
  DefeasibleTheory dup({{"r", RuleKind::defeasible, {}, lit("p")}, {"r", RuleKind::defeasible, {}, lit("q")}});
  CHECK(has_kind(validate_theory(dup), ViolationKind::duplicate_rule_id));

  DefeasibleTheory unknown({{"r1", RuleKind::defeasible, {}, lit("p")}}, {}, {{"r1", "nope"}});
  CHECK(has_kind(validate_theory(unknown), ViolationKind::unknown_rule_in_priority));

  DefeasibleTheory small({{"r1", RuleKind::defeasible, {}, lit("p")}}, {lits({"p"})});
  CHECK(has_kind(validate_theory(small), ViolationKind::undersized_conflict));
}

TEST_CASE("validation is pure") {
  DefeasibleTheory d({{"r1", RuleKind::strict, {}, lit("p")}, {"r1", RuleKind::defeasible, {}, lit("-p")}}, {},
                     {{"r1", "r1"}});
  CHECK(validate_theory(d) == validate_theory(d));
  CHECK_FALSE(validate_theory(d).empty());
}

TEST_CASE("inferior follows the recorded pairs only") {
  DefeasibleTheory d({{"a", RuleKind::defeasible, {}, lit("p")},
                      {"b", RuleKind::defeasible, {}, lit("-p")},
                      {"c", RuleKind::defeasible, {}, lit("q")}},
                     {}, {{"a", "b"}, {"b", "c"}});
  CHECK(d.inferior("a", "b"));
  CHECK_FALSE(d.inferior("b", "a"));
  CHECK_FALSE(d.inferior("a", "c")); // not transitively closed
}

TEST_CASE("theory equality ignores rule order") {
  DLRule a{"r1", RuleKind::defeasible, {}, lit("p")};
  DLRule b{"r2", RuleKind::strict, lits({"p"}), lit("q")};
  CHECK(DefeasibleTheory({a, b}) == DefeasibleTheory({b, a}));
  CHECK_FALSE(DefeasibleTheory({a}) == DefeasibleTheory({a, b}));
}

TEST_CASE("knowledge ordering") {
  Interpretation bottom;
  Interpretation i{lits({"p"}), lits({"q"})};
  Interpretation j{lits({"p", "r"}), lits({"q"})};
  Interpretation k{lits({"r"}), {}};
  CHECK(knowledge_leq(bottom, i));
  CHECK(knowledge_leq(i, i));
  CHECK(knowledge_leq(i, j));
  CHECK_FALSE(knowledge_leq(j, i));
  CHECK_FALSE(knowledge_leq(i, k));
  CHECK_FALSE(knowledge_leq(k, i));
}

TEST_CASE("interpretation helpers") {
  Interpretation i{lits({"p"}), lits({"-p", "q"})};
  CHECK(i.coherent());
  CHECK(i.ambiguous(lits({"p", "-p", "q", "-q"})) == lits({"-q"}));
  CHECK(restrict_to(i, lits({"p", "q"})) == Interpretation{lits({"p"}), lits({"q"})});
  CHECK_FALSE(Interpretation{lits({"p"}), lits({"p"})}.coherent());
}

TEST_CASE("definite programs reject default literals") {
  NormalProgram p{{{lit("p"), {}, lits({"q"}), {}}}};
  CHECK_FALSE(p.is_definite());
  CHECK_THROWS_AS(DefiniteProgram{p}, PreconditionError);
  CHECK_NOTHROW(DefiniteProgram{NormalProgram{{{lit("p"), lits({"q"}), {}, {}}}}});
}

TEST_CASE("program rule comparison ignores provenance") {
  NormalProgram a{{{lit("p"), {}, lits({"q"}), "r1"}, {lit("q"), {}, {}, {}}}};
  NormalProgram b{{{lit("q"), {}, {}, "x"}, {lit("p"), {}, lits({"q"}), {}}}};
  CHECK(a.same_rules(b));
  CHECK(a.literals() == lits({"p", "q"}));
}
