#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontocdm/class_expression.hpp"
#include "ontocdm/names.hpp"

namespace ontocdm {

struct SubclassAxiom {
  std::string subject;
  ClassExpression superclass;
  int line = 0;

  friend bool operator==(const SubclassAxiom& a, const SubclassAxiom& b) {
    return name_eq(a.subject, b.subject) && a.superclass == b.superclass;
  }
};

struct EquivalenceAxiom {
  std::string subject;
  ClassExpression definition;
  int line = 0;

  friend bool operator==(const EquivalenceAxiom& a, const EquivalenceAxiom& b) {
    return name_eq(a.subject, b.subject) && a.definition == b.definition;
  }
};

struct ObjectPropertyInfo {
  std::optional<std::string> domain;
  std::optional<std::string> range;
  std::optional<std::string> inverse_of;
  bool functional = false;
  int line = 0;

  friend bool operator==(const ObjectPropertyInfo& a, const ObjectPropertyInfo& b) {
    auto eq = [](const std::optional<std::string>& x, const std::optional<std::string>& y) {
      if (x.has_value() != y.has_value()) return false;
      return !x || name_eq(*x, *y);
    };
    return eq(a.domain, b.domain) && eq(a.range, b.range) && eq(a.inverse_of, b.inverse_of) &&
           a.functional == b.functional;
  }
};

struct DatatypePropertyInfo {
  std::optional<std::string> domain;
  std::optional<DatatypeName> range;
  int line = 0;

  friend bool operator==(const DatatypePropertyInfo& a, const DatatypePropertyInfo& b) {
    if (a.domain.has_value() != b.domain.has_value()) return false;
    if (a.domain && !name_eq(*a.domain, *b.domain)) return false;
    return a.range == b.range;
  }
};

// Asserted axioms over named classes and properties. Immutable once parsed
// and validated; safe to share between threads.
struct Ontology {
  std::set<std::string, NameLess> classes;
  std::vector<SubclassAxiom> subclass_axioms;
  std::vector<EquivalenceAxiom> equivalence_axioms;
  std::map<std::string, ObjectPropertyInfo, NameLess> object_properties;
  std::map<std::string, DatatypePropertyInfo, NameLess> datatype_properties;

  bool has_class(std::string_view name) const { return classes.count(name) > 0; }

  // Stored spelling for a fold-equal class name, if declared.
  const std::string* class_spelling(std::string_view name) const {
    auto it = classes.find(name);
    return it == classes.end() ? nullptr : &*it;
  }

  const ObjectPropertyInfo* object_property(std::string_view name) const {
    auto it = object_properties.find(name);
    return it == object_properties.end() ? nullptr : &it->second;
  }

  const DatatypePropertyInfo* datatype_property(std::string_view name) const {
    auto it = datatype_properties.find(name);
    return it == datatype_properties.end() ? nullptr : &it->second;
  }

  const std::string* object_property_spelling(std::string_view name) const {
    auto it = object_properties.find(name);
    return it == object_properties.end() ? nullptr : &it->first;
  }

  const std::string* datatype_property_spelling(std::string_view name) const {
    auto it = datatype_properties.find(name);
    return it == datatype_properties.end() ? nullptr : &it->first;
  }

  friend bool operator==(const Ontology& a, const Ontology& b) {
    auto set_eq = [](const auto& x, const auto& y) {
      if (x.size() != y.size()) return false;
      auto i = x.begin();
      auto j = y.begin();
      for (; i != x.end(); ++i, ++j)
        if (!name_eq(*i, *j)) return false;
      return true;
    };
    auto map_eq = [](const auto& x, const auto& y) {
      if (x.size() != y.size()) return false;
      auto i = x.begin();
      auto j = y.begin();
      for (; i != x.end(); ++i, ++j) {
        if (!name_eq(i->first, j->first)) return false;
        if (!(i->second == j->second)) return false;
      }
      return true;
    };
    return set_eq(a.classes, b.classes) && a.subclass_axioms == b.subclass_axioms &&
           a.equivalence_axioms == b.equivalence_axioms &&
           map_eq(a.object_properties, b.object_properties) &&
           map_eq(a.datatype_properties, b.datatype_properties);
  }
};

}  // namespace ontocdm
