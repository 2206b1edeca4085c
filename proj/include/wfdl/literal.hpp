#pragma once

#include <compare>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>

namespace wfdl {

/// A signed ground atom. Negative literals print as `-atom`.
struct Literal {
  std::string atom;
  bool positive = true;

  Literal() = default;
  explicit Literal(std::string a, bool pos = true) : atom(std::move(a)), positive(pos) {}

  /// Parses `p` or `-p`. Throws wfdl::Error on an empty or malformed atom.
  static Literal parse(std::string_view text);

  std::string str() const { return positive ? atom : "-" + atom; }

  // Atom-major, positive before negative: p < -p < q.
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
    if (auto c = a.atom <=> b.atom; c != 0) return c;
    if (a.positive == b.positive) return std::strong_ordering::equal;
    return a.positive ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  friend bool operator==(const Literal&, const Literal&) = default;
};

inline Literal complement(const Literal& p) { return Literal{p.atom, !p.positive}; }

using LiteralSet = std::set<Literal>;

/// `{p, -p, q}` in literal order.
std::string to_string(const LiteralSet& s);

/// Shorthand for Literal::parse, used heavily by fixtures and tests.
inline Literal lit(std::string_view text) { return Literal::parse(text); }
LiteralSet lits(std::initializer_list<std::string_view> texts);

/// True for nonempty tokens drawn from [A-Za-z0-9_'].
bool is_valid_atom(std::string_view atom);

} // namespace wfdl
