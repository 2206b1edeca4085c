#include "wfdl/fixtures.hpp"

#include "fixture_data.hpp"
#include "wfdl/errors.hpp"
#include "wfdl/text_format.hpp"

namespace wfdl::fixtures {

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& f : detail::kFixtureFiles) out.emplace_back(f.name);
  return out;
}

std::string_view text(std::string_view name) {
  for (const auto& f : detail::kFixtureFiles)
    if (f.name == name) return f.text;
  throw Error("no fixture named " + std::string(name));
}

DefeasibleTheory amb() { return parse_theory(text("amb.dfl")); }
DefeasibleTheory strict() { return parse_theory(text("strict.dfl")); }
DefeasibleTheory nixon() { return parse_theory(text("nixon.dfl")); }
DefeasibleTheory joint() { return parse_theory(text("joint.dfl")); }
DefeasibleTheory bach() { return parse_theory(text("bach.dfl")); }
DefeasibleTheory contra_theory() { return parse_theory(text("contra.dfl")); }
NormalProgram contra_program() { return parse_program(text("contra.lp")); }
NormalProgram loop() { return parse_program(text("loop.lp")); }

NormalProgram chain(int n) {
  NormalProgram out;
  auto q = [](int i) { return Literal{"q" + std::to_string(i)}; };
  for (int i = 0; i < n; ++i) out.rules.push_back({q(i), {q(i + 1)}, {}, {}});
  out.rules.push_back({Literal{"p"}, {}, {q(0)}, {}});
  return out;
}

} // namespace wfdl::fixtures
