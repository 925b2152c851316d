#pragma once

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ontocdm/class_expression.hpp"
#include "ontocdm/diagnostics.hpp"
#include "ontocdm/names.hpp"
#include "ontocdm/ontology.hpp"

namespace ontocdm {

struct ParseResult {
  Ontology ontology;
  std::vector<Diagnostic> diagnostics;
};

namespace detail {

struct Token {
  enum Type { Word, LParen, RParen, Comma, End } type = End;
  std::string text;
  int column = 0;
};

// One statement per line; '#' starts a comment; blank lines are skipped.
// Words are runs of [A-Za-z0-9_:-]; ':' only survives classification as an
// xsd datatype token.
inline bool tokenize_line(std::string_view line, int line_no, std::vector<Token>& out,
                          std::vector<Diagnostic>& diags) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    const int col = static_cast<int>(i) + 1;
    if (c == '(') {
      out.push_back({Token::LParen, "(", col});
      ++i;
    } else if (c == ')') {
      out.push_back({Token::RParen, ")", col});
      ++i;
    } else if (c == ',') {
      out.push_back({Token::Comma, ",", col});
      ++i;
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == ':') {
      std::size_t j = i;
      while (j < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_' ||
              line[j] == '-' || line[j] == ':'))
        ++j;
      out.push_back({Token::Word, std::string(line.substr(i, j - i)), col});
      i = j;
    } else {
      diags.push_back(make_error("PARSE_SYNTAX",
                                 std::string("unexpected character '") + c + "'", line_no, col));
      return false;
    }
  }
  return true;
}

class LineParser {
 public:
  LineParser(const std::vector<Token>& tokens, int line_no, std::vector<Diagnostic>& diags)
      : tokens_(tokens), line_(line_no), diags_(diags) {}

  const Token& peek() const {
    static const Token end_token{Token::End, "", 0};
    return pos_ < tokens_.size() ? tokens_[pos_] : end_token;
  }

  Token next() {
    Token t = peek();
    if (pos_ < tokens_.size()) ++pos_;
    return t;
  }

  bool at_end() const { return pos_ >= tokens_.size(); }

  bool expect(Token::Type type, const char* what) {
    if (peek().type == type) {
      next();
      return true;
    }
    error("PARSE_SYNTAX", std::string("expected ") + what);
    return false;
  }

  void error(const char* code, std::string message) {
    diags_.push_back(make_error(code, std::move(message), line_, peek().column));
  }

  // Plain name: letters, digits, hyphen, underscore. A ':' means the token
  // was written as a datatype where a name is required.
  std::optional<std::string> parse_name(const char* what) {
    if (peek().type != Token::Word) {
      error("PARSE_SYNTAX", std::string("expected ") + what);
      return std::nullopt;
    }
    Token t = next();
    if (t.text.find(':') != std::string::npos) {
      diags_.push_back(make_error("PARSE_SYNTAX",
                                  std::string("expected ") + what + ", got '" + t.text + "'",
                                  line_, t.column));
      return std::nullopt;
    }
    return normalize_name(t.text);
  }

  std::optional<unsigned> parse_number() {
    if (peek().type != Token::Word) {
      error("PARSE_SYNTAX", "expected a non-negative integer");
      return std::nullopt;
    }
    Token t = next();
    if (t.text.empty() ||
        t.text.find_first_not_of("0123456789") != std::string::npos) {
      diags_.push_back(make_error("PARSE_NUMBER",
                                  "'" + t.text + "' is not a non-negative integer", line_,
                                  t.column));
      return std::nullopt;
    }
    try {
      unsigned long v = std::stoul(t.text);
      if (v > 0xffffffffUL) throw std::out_of_range("overflow");
      return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      diags_.push_back(
          make_error("PARSE_NUMBER", "cardinality '" + t.text + "' out of range", line_, t.column));
      return std::nullopt;
    }
  }

  std::optional<DatatypeName> parse_xsd() {
    if (peek().type != Token::Word) {
      error("PARSE_SYNTAX", "expected an xsd datatype");
      return std::nullopt;
    }
    Token t = next();
    auto dt = parse_datatype(t.text);
    if (!dt) {
      diags_.push_back(
          make_error("PARSE_DATATYPE", "unknown datatype '" + t.text + "'", line_, t.column));
      return std::nullopt;
    }
    return dt;
  }

  std::optional<ClassExpression> parse_expr() {
    if (peek().type != Token::Word) {
      error("PARSE_SYNTAX", "expected a class expression");
      return std::nullopt;
    }
    Token head = next();
    if (peek().type != Token::LParen) {
      // Bare concept name.
      if (head.text.find(':') != std::string::npos) {
        diags_.push_back(make_error(
            "PARSE_SYNTAX", "datatype '" + head.text + "' is not a class expression", line_,
            head.column));
        return std::nullopt;
      }
      return ClassExpression::atomic(head.text);
    }
    next();  // consume '('

    if (name_eq(head.text, "And") || name_eq(head.text, "Or")) {
      std::vector<ClassExpression> operands;
      auto first = parse_expr();
      if (!first) return std::nullopt;
      operands.push_back(std::move(*first));
      while (peek().type == Token::Comma) {
        next();
        auto op = parse_expr();
        if (!op) return std::nullopt;
        operands.push_back(std::move(*op));
      }
      if (!expect(Token::RParen, "')'")) return std::nullopt;
      if (operands.size() < 2) {
        diags_.push_back(make_error("PARSE_ARITY",
                                    head.text + " requires at least two operands", line_,
                                    head.column));
        return std::nullopt;
      }
      return name_eq(head.text, "And") ? ClassExpression::intersection(std::move(operands))
                                       : ClassExpression::union_of(std::move(operands));
    }

    if (name_eq(head.text, "Some") || name_eq(head.text, "Only")) {
      auto prop = parse_name("a property name");
      if (!prop) return std::nullopt;
      if (peek().type != Token::Comma) {
        diags_.push_back(make_error("PARSE_ARITY", head.text + " requires a filler", line_,
                                    head.column));
        return std::nullopt;
      }
      next();
      auto filler = parse_expr();
      if (!filler) return std::nullopt;
      if (!expect(Token::RParen, "')'")) return std::nullopt;
      return name_eq(head.text, "Some")
                 ? ClassExpression::exists(*prop, std::move(*filler))
                 : ClassExpression::for_all(*prop, std::move(*filler));
    }

    if (name_eq(head.text, "Min") || name_eq(head.text, "Max") || name_eq(head.text, "Exact")) {
      auto prop = parse_name("a property name");
      if (!prop) return std::nullopt;
      if (peek().type != Token::Comma) {
        diags_.push_back(make_error("PARSE_ARITY",
                                    head.text + " requires a cardinality", line_, head.column));
        return std::nullopt;
      }
      next();
      auto n = parse_number();
      if (!n) return std::nullopt;
      std::optional<ClassExpression> filler;
      if (peek().type == Token::Comma) {
        next();
        auto f = parse_expr();
        if (!f) return std::nullopt;
        filler = std::move(*f);
      }
      if (!expect(Token::RParen, "')'")) return std::nullopt;
      if (name_eq(head.text, "Min")) return ClassExpression::min_card(*prop, *n, std::move(filler));
      if (name_eq(head.text, "Max")) return ClassExpression::max_card(*prop, *n, std::move(filler));
      return ClassExpression::exact_card(*prop, *n, std::move(filler));
    }

    if (name_eq(head.text, "DataSome") || name_eq(head.text, "DataOnly")) {
      auto prop = parse_name("a property name");
      if (!prop) return std::nullopt;
      if (peek().type != Token::Comma) {
        diags_.push_back(
            make_error("PARSE_ARITY", head.text + " requires a datatype", line_, head.column));
        return std::nullopt;
      }
      next();
      auto dt = parse_xsd();
      if (!dt) return std::nullopt;
      if (!expect(Token::RParen, "')'")) return std::nullopt;
      return name_eq(head.text, "DataSome") ? ClassExpression::data_exists(*prop, *dt)
                                            : ClassExpression::data_for_all(*prop, *dt);
    }

    // Constructs with no mapping rule are rejected, not silently dropped.
    for (const char* unsupported :
         {"Not", "ComplementOf", "OneOf", "HasValue", "Value", "HasSelf"}) {
      if (name_eq(head.text, unsupported)) {
        diags_.push_back(make_error(
            "PARSE_UNSUPPORTED", head.text + " is not part of the supported subset", line_,
            head.column));
        return std::nullopt;
      }
    }
    diags_.push_back(make_error("PARSE_SYNTAX",
                                "unknown expression constructor '" + head.text + "'", line_,
                                head.column));
    return std::nullopt;
  }

 private:
  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
  int line_;
  std::vector<Diagnostic>& diags_;
};

struct RawStatement {
  enum Kind {
    ClassDecl,
    ObjectPropDecl,
    DatatypePropDecl,
    SubClassOf,
    EquivalentClasses,
    Domain,
    Range,
    InverseOf,
    Functional,
  } kind = ClassDecl;
  int line = 0;
  std::string a;  // first name argument
  std::string b;  // second name argument (Domain/Range/InverseOf)
  std::optional<ClassExpression> expr;
  std::optional<DatatypeName> range_datatype;  // Range(P, xsd:...)
};

inline std::optional<RawStatement> parse_statement(const std::vector<Token>& tokens, int line_no,
                                                   std::vector<Diagnostic>& diags) {
  LineParser p(tokens, line_no, diags);
  if (p.peek().type != Token::Word) {
    p.error("PARSE_SYNTAX", "expected a statement");
    return std::nullopt;
  }
  Token head = p.next();

  RawStatement st;
  st.line = line_no;

  auto finish = [&](RawStatement&& s) -> std::optional<RawStatement> {
    if (!p.expect(Token::RParen, "')'")) return std::nullopt;
    if (!p.at_end()) {
      p.error("PARSE_SYNTAX", "unexpected trailing input after statement");
      return std::nullopt;
    }
    return std::move(s);
  };

  auto expect_comma = [&](const char* ctx) {
    if (p.peek().type == Token::Comma) {
      p.next();
      return true;
    }
    diags.push_back(make_error("PARSE_ARITY", std::string(ctx) + " requires two arguments",
                               line_no, head.column));
    return false;
  };

  if (!p.expect(Token::LParen, "'('")) return std::nullopt;

  if (name_eq(head.text, "Class") || name_eq(head.text, "ObjectProperty") ||
      name_eq(head.text, "DatatypeProperty") || name_eq(head.text, "Functional")) {
    auto n = p.parse_name("a name");
    if (!n) return std::nullopt;
    st.a = *n;
    st.kind = name_eq(head.text, "Class")            ? RawStatement::ClassDecl
              : name_eq(head.text, "ObjectProperty") ? RawStatement::ObjectPropDecl
              : name_eq(head.text, "DatatypeProperty")
                  ? RawStatement::DatatypePropDecl
                  : RawStatement::Functional;
    return finish(std::move(st));
  }

  if (name_eq(head.text, "SubClassOf") || name_eq(head.text, "EquivalentClasses")) {
    auto n = p.parse_name("a class name");
    if (!n) return std::nullopt;
    st.a = *n;
    if (!expect_comma(head.text.c_str())) return std::nullopt;
    auto e = p.parse_expr();
    if (!e) return std::nullopt;
    st.expr = std::move(*e);
    st.kind = name_eq(head.text, "SubClassOf") ? RawStatement::SubClassOf
                                               : RawStatement::EquivalentClasses;
    return finish(std::move(st));
  }

  if (name_eq(head.text, "Domain") || name_eq(head.text, "InverseOf")) {
    auto n = p.parse_name("a property name");
    if (!n) return std::nullopt;
    st.a = *n;
    if (!expect_comma(head.text.c_str())) return std::nullopt;
    auto m = p.parse_name(name_eq(head.text, "Domain") ? "a class name" : "a property name");
    if (!m) return std::nullopt;
    st.b = *m;
    st.kind = name_eq(head.text, "Domain") ? RawStatement::Domain : RawStatement::InverseOf;
    return finish(std::move(st));
  }

  if (name_eq(head.text, "Range")) {
    auto n = p.parse_name("a property name");
    if (!n) return std::nullopt;
    st.a = *n;
    if (!expect_comma("Range")) return std::nullopt;
    st.kind = RawStatement::Range;
    if (p.peek().type == Token::Word && p.peek().text.find(':') != std::string::npos) {
      auto dt = p.parse_xsd();
      if (!dt) return std::nullopt;
      st.range_datatype = *dt;
    } else {
      auto m = p.parse_name("a class name or xsd datatype");
      if (!m) return std::nullopt;
      st.b = *m;
    }
    return finish(std::move(st));
  }

  diags.push_back(make_error("PARSE_STATEMENT", "unknown statement '" + head.text + "'", line_no,
                             head.column));
  return std::nullopt;
}

}  // namespace detail

// Parses the line-oriented ontology text. Total: every input yields an
// ontology plus diagnostics; a malformed line is reported and skipped.
inline ParseResult parse_ontology(std::string_view text) {
  ParseResult result;
  std::vector<detail::RawStatement> statements;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    std::vector<detail::Token> tokens;
    if (!detail::tokenize_line(line, line_no, tokens, result.diagnostics)) continue;
    if (tokens.empty()) continue;
    auto st = detail::parse_statement(tokens, line_no, result.diagnostics);
    if (st) statements.push_back(std::move(*st));
    if (eol == std::string_view::npos) break;
  }

  Ontology& o = result.ontology;
  auto& diags = result.diagnostics;

  // Declarations first so statement order never matters.
  for (const auto& st : statements) {
    switch (st.kind) {
      case detail::RawStatement::ClassDecl:
        o.classes.insert(st.a);  // redeclaration is a no-op
        break;
      case detail::RawStatement::ObjectPropDecl:
        if (o.datatype_properties.count(st.a)) {
          diags.push_back(make_error(
              "DUPLICATE_PROPERTY", "'" + st.a + "' is already a datatype property", st.line));
        } else if (!o.object_properties.count(st.a)) {
          ObjectPropertyInfo info;
          info.line = st.line;
          o.object_properties.emplace(st.a, std::move(info));
        }
        break;
      case detail::RawStatement::DatatypePropDecl:
        if (o.object_properties.count(st.a)) {
          diags.push_back(make_error(
              "DUPLICATE_PROPERTY", "'" + st.a + "' is already an object property", st.line));
        } else if (!o.datatype_properties.count(st.a)) {
          DatatypePropertyInfo info;
          info.line = st.line;
          o.datatype_properties.emplace(st.a, std::move(info));
        }
        break;
      default:
        break;
    }
  }

  auto undeclared = [&](const std::string& prop, int line) {
    diags.push_back(
        make_error("UNDECLARED_PROPERTY", "property '" + prop + "' is not declared", line));
  };

  for (auto& st : statements) {
    switch (st.kind) {
      case detail::RawStatement::SubClassOf: {
        const std::string* spelled = o.class_spelling(st.a);
        o.subclass_axioms.push_back({spelled ? *spelled : st.a, std::move(*st.expr), st.line});
        break;
      }
      case detail::RawStatement::EquivalentClasses: {
        const std::string* spelled = o.class_spelling(st.a);
        o.equivalence_axioms.push_back({spelled ? *spelled : st.a, std::move(*st.expr), st.line});
        break;
      }
      case detail::RawStatement::Domain: {
        auto oit = o.object_properties.find(st.a);
        auto dit = o.datatype_properties.find(st.a);
        std::optional<std::string>* slot = nullptr;
        if (oit != o.object_properties.end()) slot = &oit->second.domain;
        else if (dit != o.datatype_properties.end()) slot = &dit->second.domain;
        if (!slot) {
          undeclared(st.a, st.line);
          break;
        }
        if (*slot && !name_eq(**slot, st.b)) {
          diags.push_back(make_warning(
              "REDEFINED", "domain of '" + st.a + "' already set to '" + **slot + "'", st.line));
        } else if (!*slot) {
          const std::string* spelled = o.class_spelling(st.b);
          *slot = spelled ? *spelled : st.b;
        }
        break;
      }
      case detail::RawStatement::Range: {
        auto oit = o.object_properties.find(st.a);
        auto dit = o.datatype_properties.find(st.a);
        if (oit != o.object_properties.end()) {
          if (st.range_datatype) {
            diags.push_back(make_error(
                "PARSE_RANGE_KIND",
                "object property '" + st.a + "' cannot have an xsd range", st.line));
            break;
          }
          if (oit->second.range && !name_eq(*oit->second.range, st.b)) {
            diags.push_back(make_warning(
                "REDEFINED",
                "range of '" + st.a + "' already set to '" + *oit->second.range + "'", st.line));
          } else if (!oit->second.range) {
            const std::string* spelled = o.class_spelling(st.b);
            oit->second.range = spelled ? *spelled : st.b;
          }
        } else if (dit != o.datatype_properties.end()) {
          if (!st.range_datatype) {
            diags.push_back(make_error(
                "PARSE_RANGE_KIND",
                "datatype property '" + st.a + "' requires an xsd range", st.line));
            break;
          }
          if (dit->second.range && *dit->second.range != *st.range_datatype) {
            diags.push_back(make_warning("REDEFINED",
                                         "range of '" + st.a + "' already set", st.line));
          } else {
            dit->second.range = *st.range_datatype;
          }
        } else {
          undeclared(st.a, st.line);
        }
        break;
      }
      case detail::RawStatement::InverseOf: {
        auto pit = o.object_properties.find(st.a);
        auto qit = o.object_properties.find(st.b);
        bool bad = false;
        for (const auto& [name, declared_datatype] :
             {std::pair{st.a, o.datatype_properties.count(st.a) > 0},
              std::pair{st.b, o.datatype_properties.count(st.b) > 0}}) {
          if (declared_datatype) {
            diags.push_back(make_error(
                "INVERSE_CONFLICT",
                "datatype property '" + name + "' cannot take part in InverseOf", st.line));
            bad = true;
          }
        }
        if (bad) break;
        if (pit == o.object_properties.end()) {
          undeclared(st.a, st.line);
          break;
        }
        if (qit == o.object_properties.end()) {
          undeclared(st.b, st.line);
          break;
        }
        auto assign = [&](ObjectPropertyInfo& info, const std::string& self,
                          const std::string& other) {
          if (info.inverse_of && !name_eq(*info.inverse_of, other)) {
            diags.push_back(make_error("INVERSE_CONFLICT",
                                       "'" + self + "' already has inverse '" +
                                           *info.inverse_of + "'",
                                       st.line));
            return;
          }
          info.inverse_of = other;
        };
        assign(pit->second, pit->first, qit->first);
        assign(qit->second, qit->first, pit->first);
        break;
      }
      case detail::RawStatement::Functional: {
        auto oit = o.object_properties.find(st.a);
        if (oit != o.object_properties.end()) {
          oit->second.functional = true;
        } else if (o.datatype_properties.count(st.a)) {
          diags.push_back(make_warning(
              "FUNCTIONAL_DATATYPE",
              "Functional has no effect on datatype property '" + st.a + "'", st.line));
        } else {
          undeclared(st.a, st.line);
        }
        break;
      }
      default:
        break;
    }
  }

  return result;
}

namespace detail {

inline void check_expression_properties(const Ontology& o, const ClassExpression& e, int line,
                                        std::vector<Diagnostic>& diags) {
  if (e.is_object_restriction()) {
    if (o.datatype_properties.count(e.name())) {
      diags.push_back(make_error("PROPERTY_KIND",
                                 "'" + e.name() + "' is a datatype property but is used in an "
                                 "object restriction",
                                 line));
    } else if (!o.object_properties.count(e.name())) {
      diags.push_back(make_error("UNDECLARED_PROPERTY",
                                 "property '" + e.name() + "' is not declared", line));
    }
  } else if (e.is_data_restriction()) {
    if (o.object_properties.count(e.name())) {
      diags.push_back(make_error("PROPERTY_KIND",
                                 "'" + e.name() + "' is an object property but is used in a "
                                 "data restriction",
                                 line));
    } else if (!o.datatype_properties.count(e.name())) {
      diags.push_back(make_error("UNDECLARED_PROPERTY",
                                 "property '" + e.name() + "' is not declared", line));
    }
  }
  for (const auto& child : e.operands()) check_expression_properties(o, child, line, diags);
}

}  // namespace detail

// Referential checks over a parsed ontology. Completes symmetric inverse_of
// links in place; diagnostics are the only other output.
inline std::vector<Diagnostic> validate(Ontology& o) {
  std::vector<Diagnostic> diags;

  for (const auto& ax : o.subclass_axioms)
    detail::check_expression_properties(o, ax.superclass, ax.line, diags);
  for (const auto& ax : o.equivalence_axioms)
    detail::check_expression_properties(o, ax.definition, ax.line, diags);

  // Class references: a warning, not an error; the engine still materializes
  // such names as relationship targets.
  std::set<std::string, NameLess> reported;
  auto warn_class = [&](const std::string& name, int line) {
    if (o.has_class(name) || reported.count(name)) return;
    reported.insert(name);
    diags.push_back(
        make_warning("UNDECLARED_CLASS", "class '" + name + "' is not declared", line));
  };
  for (const auto& ax : o.subclass_axioms) {
    warn_class(ax.subject, ax.line);
    for (const auto& n : atomic_names(ax.superclass)) warn_class(n, ax.line);
  }
  for (const auto& ax : o.equivalence_axioms) {
    warn_class(ax.subject, ax.line);
    for (const auto& n : atomic_names(ax.definition)) warn_class(n, ax.line);
  }
  for (const auto& [name, info] : o.object_properties) {
    if (info.domain) warn_class(*info.domain, info.line);
    if (info.range) warn_class(*info.range, info.line);
  }
  for (const auto& [name, info] : o.datatype_properties)
    if (info.domain) warn_class(*info.domain, info.line);

  // Inverse links must be symmetric; complete the missing direction.
  for (auto& [name, info] : o.object_properties) {
    if (!info.inverse_of) continue;
    auto qit = o.object_properties.find(*info.inverse_of);
    if (qit == o.object_properties.end()) {
      diags.push_back(make_error("UNDECLARED_PROPERTY",
                                 "inverse property '" + *info.inverse_of + "' of '" + name +
                                     "' is not declared",
                                 info.line));
      continue;
    }
    if (!qit->second.inverse_of) {
      qit->second.inverse_of = name;
    } else if (!name_eq(*qit->second.inverse_of, name)) {
      diags.push_back(make_error("INVERSE_CONFLICT",
                                 "'" + qit->first + "' has inverse '" + *qit->second.inverse_of +
                                     "', expected '" + name + "'",
                                 qit->second.line));
    }
  }

  for (const auto& [name, info] : o.object_properties) {
    if (!info.domain && !info.range)
      diags.push_back(make_warning("NO_DOMAIN_RANGE",
                                   "object property '" + name + "' has neither domain nor range",
                                   info.line));
  }
  for (const auto& [name, info] : o.datatype_properties) {
    if (!info.domain && !info.range)
      diags.push_back(make_warning(
          "NO_DOMAIN_RANGE", "datatype property '" + name + "' has neither domain nor range",
          info.line));
  }

  // Cycle check over bare-atomic SubClassOf axioms.
  std::map<std::string, std::vector<std::string>, NameLess> up;
  for (const auto& ax : o.subclass_axioms)
    if (ax.superclass.kind() == ExprKind::Atomic)
      up[ax.subject].push_back(ax.superclass.name());
  std::set<std::string, NameLess> done;
  std::set<std::string, NameLess> in_cycle;
  for (const auto& [start, ignored] : up) {
    if (done.count(start)) continue;
    std::vector<std::string> stack{start};
    std::set<std::string, NameLess> path;
    std::function<void(const std::string&)> visit = [&](const std::string& node) {
      if (path.count(node)) {
        if (!in_cycle.count(node)) {
          in_cycle.insert(node);
          diags.push_back(make_error("SUBSUMPTION_CYCLE",
                                     "subsumption cycle through '" + node + "'"));
        }
        return;
      }
      if (done.count(node)) return;
      path.insert(node);
      auto it = up.find(node);
      if (it != up.end())
        for (const auto& super : it->second) visit(super);
      path.erase(node);
      done.insert(node);
    };
    visit(start);
  }

  return diags;
}

namespace detail {

// Derived subsumption edges: bare-atomic SubClassOf plus atomic conjuncts at
// the top of complex superclasses and equivalence definitions. Union members
// are generalization material (partitions), not taxonomy edges.
inline std::map<std::string, std::vector<std::string>, NameLess> super_edges(const Ontology& o) {
  std::map<std::string, std::vector<std::string>, NameLess> edges;
  auto add = [&](const std::string& sub, const std::string& super) {
    auto& v = edges[sub];
    for (const auto& existing : v)
      if (name_eq(existing, super)) return;
    v.push_back(super);
  };
  auto scan = [&](const std::string& subject, const ClassExpression& e) {
    if (e.kind() == ExprKind::Atomic) {
      add(subject, e.name());
      return;
    }
    if (e.kind() == ExprKind::Intersection)
      for (const auto& op : e.operands())
        if (op.kind() == ExprKind::Atomic) add(subject, op.name());
  };
  for (const auto& ax : o.subclass_axioms) scan(ax.subject, ax.superclass);
  for (const auto& ax : o.equivalence_axioms) scan(ax.subject, ax.definition);
  return edges;
}

}  // namespace detail

// Concepts with a subsumption path up to `concept_name`, excluding it.
inline std::set<std::string, NameLess> subconcepts_of(const Ontology& o,
                                                      std::string_view concept_name) {
  if (!o.has_class(concept_name))
    throw std::invalid_argument("unknown concept '" + std::string(concept_name) + "'");

  auto up = detail::super_edges(o);
  std::map<std::string, std::vector<std::string>, NameLess> down;
  for (const auto& [sub, supers] : up)
    for (const auto& super : supers) down[super].push_back(sub);

  std::set<std::string, NameLess> out;
  std::deque<std::string> queue{std::string(concept_name)};
  std::set<std::string, NameLess> seen{std::string(concept_name)};
  while (!queue.empty()) {
    std::string node = std::move(queue.front());
    queue.pop_front();
    auto it = down.find(node);
    if (it == down.end()) continue;
    for (const auto& sub : it->second) {
      if (seen.count(sub)) continue;
      seen.insert(sub);
      out.insert(sub);
      queue.push_back(sub);
    }
  }
  return out;
}

// Direct children in the derived subsumption graph, sorted by folded name.
inline std::vector<std::string> direct_subconcepts(const Ontology& o,
                                                   std::string_view concept_name) {
  auto up = detail::super_edges(o);
  std::set<std::string, NameLess> subs;
  for (const auto& [sub, supers] : up)
    for (const auto& super : supers)
      if (name_eq(super, concept_name)) subs.insert(sub);
  return {subs.begin(), subs.end()};
}

// Writes the ontology back in the statement grammar; parsing the result
// reproduces the ontology structurally.
inline std::string serialize_ontology(const Ontology& o) {
  std::ostringstream os;
  for (const auto& c : o.classes) os << "Class(" << c << ")\n";
  for (const auto& [name, info] : o.object_properties) {
    os << "ObjectProperty(" << name << ")\n";
    if (info.domain) os << "Domain(" << name << ", " << *info.domain << ")\n";
    if (info.range) os << "Range(" << name << ", " << *info.range << ")\n";
    if (info.functional) os << "Functional(" << name << ")\n";
  }
  for (const auto& [name, info] : o.object_properties) {
    if (!info.inverse_of) continue;
    // one statement per pair
    if (name_lt(name, *info.inverse_of) || name_eq(name, *info.inverse_of)) {
      const ObjectPropertyInfo* other = o.object_property(*info.inverse_of);
      if (!other || !other->inverse_of || !name_eq(*other->inverse_of, name) ||
          name_eq(name, *info.inverse_of))
        os << "InverseOf(" << name << ", " << *info.inverse_of << ")\n";
      else
        os << "InverseOf(" << name << ", " << *info.inverse_of << ")\n";
    } else {
      const ObjectPropertyInfo* other = o.object_property(*info.inverse_of);
      if (!other || !other->inverse_of || !name_eq(*other->inverse_of, name))
        os << "InverseOf(" << name << ", " << *info.inverse_of << ")\n";
    }
  }
  for (const auto& [name, info] : o.datatype_properties) {
    os << "DatatypeProperty(" << name << ")\n";
    if (info.domain) os << "Domain(" << name << ", " << *info.domain << ")\n";
    if (info.range) os << "Range(" << name << ", " << to_string(*info.range) << ")\n";
  }
  for (const auto& ax : o.subclass_axioms)
    os << "SubClassOf(" << ax.subject << ", " << ax.superclass.to_string() << ")\n";
  for (const auto& ax : o.equivalence_axioms)
    os << "EquivalentClasses(" << ax.subject << ", " << ax.definition.to_string() << ")\n";
  return os.str();
}

}  // namespace ontocdm
