#pragma once

#include <algorithm>
#include <optional>
#include <string>

namespace ontocdm {

// Participation interval [lower, upper] at a relationship end; an absent
// upper bound means unbounded (rendered "*").
struct Multiplicity {
  unsigned lower = 0;
  std::optional<unsigned> upper;  // nullopt = unbounded

  static Multiplicity at_least(unsigned n) { return {n, std::nullopt}; }
  static Multiplicity between(unsigned lo, unsigned hi) { return {lo, hi}; }
  static Multiplicity exactly(unsigned n) { return {n, n}; }
  static Multiplicity any() { return {0, std::nullopt}; }          // 0..*
  static Multiplicity optional_one() { return {0, 1u}; }           // 0..1

  bool bounded() const { return upper.has_value(); }

  bool contains(unsigned n) const { return n >= lower && (!upper || n <= *upper); }

  // UML notation, e.g. "1..*", "0..1".
  std::string to_string() const {
    std::string s = std::to_string(lower) + "..";
    s += upper ? std::to_string(*upper) : "*";
    return s;
  }

  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;
};

// Interval intersection; empty result (lower > upper) comes back as nullopt.
inline std::optional<Multiplicity> intersect_multiplicity(const Multiplicity& a,
                                                          const Multiplicity& b) {
  Multiplicity out;
  out.lower = std::max(a.lower, b.lower);
  if (a.upper && b.upper)
    out.upper = std::min(*a.upper, *b.upper);
  else if (a.upper)
    out.upper = a.upper;
  else
    out.upper = b.upper;
  if (out.upper && out.lower > *out.upper) return std::nullopt;
  return out;
}

}  // namespace ontocdm
