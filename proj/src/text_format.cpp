#include "wfdl/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

#include "wfdl/errors.hpp"

namespace wfdl {

namespace {

enum class Tok { ident, minus, arrow_strict, arrow_def, arrow_defeater, neck, colon, comma, lbrace, rbrace, gt, dot, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (c == '%') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t l0 = line, c0 = col;
    auto two = [&](std::string_view t) { return s.substr(i, 2) == t; };
    if (ident_char(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Tok::ident, std::string(s.substr(i, j - i)), l0, c0});
      advance(j - i);
      continue;
    }
    Tok kind;
    std::size_t len = 1;
    if (two("->")) kind = Tok::arrow_strict, len = 2;
    else if (two("=>")) kind = Tok::arrow_def, len = 2;
    else if (two("~>")) kind = Tok::arrow_defeater, len = 2;
    else if (two(":-")) kind = Tok::neck, len = 2;
    else if (c == '-') kind = Tok::minus;
    else if (c == ':') kind = Tok::colon;
    else if (c == ',') kind = Tok::comma;
    else if (c == '{') kind = Tok::lbrace;
    else if (c == '}') kind = Tok::rbrace;
    else if (c == '>') kind = Tok::gt;
    else if (c == '.') kind = Tok::dot;
    else throw ParseError(std::string("unexpected character '") + c + "'", l0, c0);
    out.push_back({kind, std::string(s.substr(i, len)), l0, c0});
    advance(len);
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

std::string describe(const Token& t) {
  return t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
}

class Parser {
public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at(Tok k, std::size_t ahead = 0) const { return peek(ahead).kind == k; }
  bool at_word(std::string_view w, std::size_t ahead = 0) const {
    return at(Tok::ident, ahead) && peek(ahead).text == w;
  }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    throw ParseError("expected " + expected + ", found " + describe(t), t.line, t.column);
  }

  const Token& expect(Tok k, const std::string& what) {
    if (!at(k)) fail(what);
    return take();
  }

  Literal literal() {
    const bool negative = at(Tok::minus);
    if (negative) take();
    const Token& t = expect(Tok::ident, "an atom");
    return Literal{t.text, !negative};
  }

  std::vector<DLRule> rules;
  std::vector<std::optional<std::string>> explicit_ids;
  std::set<ConflictSet> conflicts;
  std::set<Priority> priority;

  void theory_statement() {
    if (at_word("conflict") && at(Tok::lbrace, 1)) {
      take();
      take();
      ConflictSet c;
      if (!at(Tok::rbrace)) {
        c.insert(literal());
        while (at(Tok::comma)) {
          take();
          c.insert(literal());
        }
      }
      expect(Tok::rbrace, "'}'");
      expect(Tok::dot, "'.'");
      conflicts.insert(std::move(c));
      return;
    }
    if (at_word("prefer") && at(Tok::ident, 1) && at(Tok::gt, 2)) {
      take();
      std::string superior = take().text;
      take();
      std::string inferior = expect(Tok::ident, "a rule id").text;
      expect(Tok::dot, "'.'");
      priority.insert({std::move(inferior), std::move(superior)});
      return;
    }

    std::optional<std::string> id;
    if (at(Tok::ident) && at(Tok::colon, 1)) {
      id = take().text;
      take();
    }
    LiteralSet body;
    if (at_word("true") && is_arrow(peek(1).kind)) {
      take();
    } else if (!is_arrow(peek().kind)) {
      body.insert(literal());
      while (at(Tok::comma)) {
        take();
        body.insert(literal());
      }
    }
    RuleKind kind;
    switch (peek().kind) {
    case Tok::arrow_strict: kind = RuleKind::strict; break;
    case Tok::arrow_def: kind = RuleKind::defeasible; break;
    case Tok::arrow_defeater: kind = RuleKind::defeater; break;
    default: fail("'->', '=>' or '~>'");
    }
    take();
    Literal head = literal();
    expect(Tok::dot, "'.'");
    rules.push_back({id.value_or(""), kind, std::move(body), std::move(head)});
    explicit_ids.push_back(std::move(id));
  }

  static bool is_arrow(Tok k) {
    return k == Tok::arrow_strict || k == Tok::arrow_def || k == Tok::arrow_defeater;
  }

  void assign_ids() {
    std::set<std::string> used;
    for (const auto& id : explicit_ids)
      if (id) used.insert(*id);
    int next = 1;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if (explicit_ids[i]) continue;
      std::string id;
      do {
        id = "r" + std::to_string(next++);
      } while (used.contains(id));
      used.insert(id);
      rules[i].id = std::move(id);
    }
  }

  NormalProgram program;

  void program_statement() {
    LPRule r;
    r.head = literal();
    if (at(Tok::neck)) {
      take();
      do {
        if (at_word("not") && (at(Tok::ident, 1) || at(Tok::minus, 1))) {
          take();
          r.neg_body.insert(literal());
        } else {
          r.pos_body.insert(literal());
        }
      } while (at(Tok::comma) && (take(), true));
    }
    expect(Tok::dot, at(Tok::neck) ? "'.'" : "':-' or '.'");
    program.rules.push_back(std::move(r));
  }

private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string join(const LiteralSet& s, std::string_view prefix = "") {
  std::string out;
  for (const auto& l : s) {
    if (!out.empty()) out += ", ";
    out += prefix;
    out += l.str();
  }
  return out;
}

std::string_view arrow(RuleKind k) {
  switch (k) {
  case RuleKind::strict: return "->";
  case RuleKind::defeasible: return "=>";
  case RuleKind::defeater: return "~>";
  }
  return "?";
}

} // namespace

DefeasibleTheory parse_theory(std::string_view text, bool validate) {
  Parser p(text);
  while (!p.at(Tok::end)) p.theory_statement();
  p.assign_ids();
  DefeasibleTheory d(std::move(p.rules), std::move(p.conflicts), std::move(p.priority));
  if (validate) require_valid(d);
  return d;
}

NormalProgram parse_program(std::string_view text) {
  Parser p(text);
  while (!p.at(Tok::end)) p.program_statement();
  return std::move(p.program);
}

std::string format_rule(const DLRule& r) {
  std::string out = r.id + ": ";
  if (!r.body.empty()) out += join(r.body) + " ";
  out += std::string(arrow(r.kind)) + " " + r.head.str() + ".";
  return out;
}

std::string format_rule(const LPRule& r) {
  std::string out = r.head.str();
  std::string body = join(r.pos_body);
  const std::string neg = join(r.neg_body, "not ");
  if (!body.empty() && !neg.empty()) body += ", ";
  body += neg;
  if (!body.empty()) out += " :- " + body;
  return out + ".";
}

std::string serialize_theory(const DefeasibleTheory& d) {
  std::ostringstream out;
  std::vector<DLRule> rules = d.rules();
  std::sort(rules.begin(), rules.end(), [](const DLRule& a, const DLRule& b) { return a.id < b.id; });
  for (const auto& r : rules) out << format_rule(r) << '\n';

  // Minimal conflicts come back on their own unless the atom is otherwise
  // absent from the text.
  std::set<std::string> mentioned;
  for (const auto& r : rules) {
    mentioned.insert(r.head.atom);
    for (const auto& b : r.body) mentioned.insert(b.atom);
  }
  for (const auto& c : d.conflicts())
    if (!is_minimal_conflict(c))
      for (const auto& l : c) mentioned.insert(l.atom);
  for (const auto& c : d.conflicts())
    if (!is_minimal_conflict(c) || !mentioned.contains(c.begin()->atom))
      out << "conflict {" << join(c) << "}.\n";
  for (const auto& pr : d.priority()) out << "prefer " << pr.superior << " > " << pr.inferior << ".\n";
  return out.str();
}

std::string serialize_program(const NormalProgram& p, bool provenance) {
  std::vector<LPRule> rules = p.rules;
  std::stable_sort(rules.begin(), rules.end());
  std::ostringstream out;
  for (const auto& r : rules) {
    out << format_rule(r);
    if (provenance && !r.origin.empty()) out << "  % " << r.origin;
    out << '\n';
  }
  return out.str();
}

} // namespace wfdl
