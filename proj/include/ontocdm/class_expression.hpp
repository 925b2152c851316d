#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ontocdm/names.hpp"

namespace ontocdm {

// Closed set of attribute datatypes.
enum class DatatypeName { String, Integer, Float, Boolean, Date };

inline const char* to_string(DatatypeName dt) {
  switch (dt) {
    case DatatypeName::String: return "xsd:string";
    case DatatypeName::Integer: return "xsd:integer";
    case DatatypeName::Float: return "xsd:float";
    case DatatypeName::Boolean: return "xsd:boolean";
    case DatatypeName::Date: return "xsd:date";
  }
  return "xsd:string";
}

// Short form without the xsd: prefix, used in diagram text.
inline const char* short_name(DatatypeName dt) {
  switch (dt) {
    case DatatypeName::String: return "string";
    case DatatypeName::Integer: return "integer";
    case DatatypeName::Float: return "float";
    case DatatypeName::Boolean: return "boolean";
    case DatatypeName::Date: return "date";
  }
  return "string";
}

inline std::optional<DatatypeName> parse_datatype(std::string_view token) {
  if (name_eq(token, "xsd:string")) return DatatypeName::String;
  if (name_eq(token, "xsd:integer")) return DatatypeName::Integer;
  if (name_eq(token, "xsd:float")) return DatatypeName::Float;
  if (name_eq(token, "xsd:boolean")) return DatatypeName::Boolean;
  if (name_eq(token, "xsd:date")) return DatatypeName::Date;
  return std::nullopt;
}

enum class ExprKind {
  Atomic,
  Intersection,
  Union,
  Exists,      // Some(P, CE)
  ForAll,      // Only(P, CE)
  MinCard,     // Min(P, n [, CE])
  MaxCard,     // Max(P, n [, CE])
  ExactCard,   // Exact(P, n [, CE])
  DataExists,  // DataSome(P, xsd:...)
  DataForAll,  // DataOnly(P, xsd:...)
};

// Immutable description-logic class expression. Intersections and unions are
// flattened on construction, so an operand list never directly contains a
// node of the same connective.
class ClassExpression {
 public:
  static ClassExpression atomic(std::string_view name) {
    ClassExpression e(ExprKind::Atomic);
    e.name_ = normalize_name(name);
    if (e.name_.empty()) throw std::invalid_argument("atomic concept name is empty");
    return e;
  }

  static ClassExpression intersection(std::vector<ClassExpression> operands) {
    return connective(ExprKind::Intersection, std::move(operands));
  }

  static ClassExpression union_of(std::vector<ClassExpression> operands) {
    return connective(ExprKind::Union, std::move(operands));
  }

  static ClassExpression exists(std::string_view property, ClassExpression filler) {
    return object_restriction(ExprKind::Exists, property, std::move(filler));
  }

  static ClassExpression for_all(std::string_view property, ClassExpression filler) {
    return object_restriction(ExprKind::ForAll, property, std::move(filler));
  }

  static ClassExpression min_card(std::string_view property, unsigned n,
                                  std::optional<ClassExpression> filler = std::nullopt) {
    return cardinality(ExprKind::MinCard, property, n, std::move(filler));
  }

  static ClassExpression max_card(std::string_view property, unsigned n,
                                  std::optional<ClassExpression> filler = std::nullopt) {
    return cardinality(ExprKind::MaxCard, property, n, std::move(filler));
  }

  static ClassExpression exact_card(std::string_view property, unsigned n,
                                    std::optional<ClassExpression> filler = std::nullopt) {
    return cardinality(ExprKind::ExactCard, property, n, std::move(filler));
  }

  static ClassExpression data_exists(std::string_view property, DatatypeName dt) {
    return data_restriction(ExprKind::DataExists, property, dt);
  }

  static ClassExpression data_for_all(std::string_view property, DatatypeName dt) {
    return data_restriction(ExprKind::DataForAll, property, dt);
  }

  ExprKind kind() const { return kind_; }

  // Atomic: the concept name. Restrictions: the property name.
  const std::string& name() const { return name_; }

  const std::vector<ClassExpression>& operands() const { return children_; }

  bool has_filler() const { return is_object_restriction() && !children_.empty(); }

  const ClassExpression& filler() const { return children_.front(); }

  unsigned cardinality() const { return card_; }

  DatatypeName datatype() const { return datatype_; }

  bool is_cardinality() const {
    return kind_ == ExprKind::MinCard || kind_ == ExprKind::MaxCard ||
           kind_ == ExprKind::ExactCard;
  }

  bool is_object_restriction() const {
    return kind_ == ExprKind::Exists || kind_ == ExprKind::ForAll || is_cardinality();
  }

  bool is_data_restriction() const {
    return kind_ == ExprKind::DataExists || kind_ == ExprKind::DataForAll;
  }

  bool is_restriction() const { return is_object_restriction() || is_data_restriction(); }

  bool is_connective() const {
    return kind_ == ExprKind::Intersection || kind_ == ExprKind::Union;
  }

  friend bool operator==(const ClassExpression& a, const ClassExpression& b) {
    if (a.kind_ != b.kind_) return false;
    if (!name_eq(a.name_, b.name_)) return false;
    if (a.card_ != b.card_) return false;
    if (a.is_data_restriction() && a.datatype_ != b.datatype_) return false;
    return a.children_ == b.children_;
  }

  friend bool operator!=(const ClassExpression& a, const ClassExpression& b) {
    return !(a == b);
  }

  // Textual form in the ontology grammar, e.g. And(A, Some(p, B)).
  std::string to_string() const {
    std::ostringstream os;
    print(os);
    return os.str();
  }

 private:
  explicit ClassExpression(ExprKind kind) : kind_(kind) {}

  static ClassExpression connective(ExprKind kind, std::vector<ClassExpression> operands) {
    ClassExpression e(kind);
    for (auto& op : operands) {
      if (op.kind_ == kind) {
        for (auto& nested : op.children_) e.children_.push_back(std::move(nested));
      } else {
        e.children_.push_back(std::move(op));
      }
    }
    if (e.children_.size() < 2)
      throw std::invalid_argument("connective requires at least two operands");
    return e;
  }

  static ClassExpression object_restriction(ExprKind kind, std::string_view property,
                                            ClassExpression filler) {
    ClassExpression e(kind);
    e.name_ = normalize_name(property);
    if (e.name_.empty()) throw std::invalid_argument("property name is empty");
    e.children_.push_back(std::move(filler));
    return e;
  }

  static ClassExpression cardinality(ExprKind kind, std::string_view property, unsigned n,
                                     std::optional<ClassExpression> filler) {
    ClassExpression e(kind);
    e.name_ = normalize_name(property);
    if (e.name_.empty()) throw std::invalid_argument("property name is empty");
    e.card_ = n;
    if (filler) e.children_.push_back(std::move(*filler));
    return e;
  }

  static ClassExpression data_restriction(ExprKind kind, std::string_view property,
                                          DatatypeName dt) {
    ClassExpression e(kind);
    e.name_ = normalize_name(property);
    if (e.name_.empty()) throw std::invalid_argument("property name is empty");
    e.datatype_ = dt;
    return e;
  }

  void print(std::ostream& os) const {
    switch (kind_) {
      case ExprKind::Atomic:
        os << name_;
        return;
      case ExprKind::Intersection:
      case ExprKind::Union:
        os << (kind_ == ExprKind::Intersection ? "And(" : "Or(");
        for (std::size_t i = 0; i < children_.size(); ++i) {
          if (i) os << ", ";
          children_[i].print(os);
        }
        os << ')';
        return;
      case ExprKind::Exists:
      case ExprKind::ForAll:
        os << (kind_ == ExprKind::Exists ? "Some(" : "Only(") << name_ << ", ";
        children_.front().print(os);
        os << ')';
        return;
      case ExprKind::MinCard:
      case ExprKind::MaxCard:
      case ExprKind::ExactCard:
        os << (kind_ == ExprKind::MinCard ? "Min("
                                          : kind_ == ExprKind::MaxCard ? "Max(" : "Exact(")
           << name_ << ", " << card_;
        if (!children_.empty()) {
          os << ", ";
          children_.front().print(os);
        }
        os << ')';
        return;
      case ExprKind::DataExists:
      case ExprKind::DataForAll:
        os << (kind_ == ExprKind::DataExists ? "DataSome(" : "DataOnly(") << name_ << ", "
           << ontocdm::to_string(datatype_) << ')';
        return;
    }
  }

  ExprKind kind_;
  std::string name_;
  std::vector<ClassExpression> children_;  // operands, or the filler (at most one)
  unsigned card_ = 0;
  DatatypeName datatype_ = DatatypeName::String;
};

// Operand list of a top-level intersection or union; any other expression is
// its own single operand. Never empty, order preserved.
inline std::vector<ClassExpression> deconstruct(const ClassExpression& expr) {
  if (expr.is_connective()) return expr.operands();
  return {expr};
}

using NameSet = std::set<std::string, NameLess>;

namespace detail {
inline void collect_atomic_names(const ClassExpression& expr, NameSet& out) {
  if (expr.kind() == ExprKind::Atomic) {
    out.insert(expr.name());
    return;
  }
  for (const auto& child : expr.operands()) collect_atomic_names(child, out);
}
}  // namespace detail

// All atomic concept names in the expression tree, restriction fillers included.
inline NameSet atomic_names(const ClassExpression& expr) {
  NameSet out;
  detail::collect_atomic_names(expr, out);
  return out;
}

}  // namespace ontocdm
