#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace ontocdm {

enum class Severity { Error, Warning, Info };

inline const char* to_string(Severity s) {
  switch (s) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Info: return "info";
  }
  return "?";
}

// Errors block downstream transformation; warnings and infos do not.
struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  int line = 0;    // 1-based; 0 when there is no source location
  int column = 0;

  std::string to_string() const {
    std::ostringstream os;
    os << ontocdm::to_string(severity) << '[' << code << ']';
    if (line > 0) {
      os << " line " << line;
      if (column > 0) os << ", col " << column;
    }
    os << ": " << message;
    return os.str();
  }
};

inline Diagnostic make_error(std::string code, std::string message, int line = 0, int column = 0) {
  return Diagnostic{Severity::Error, std::move(code), std::move(message), line, column};
}

inline Diagnostic make_warning(std::string code, std::string message, int line = 0, int column = 0) {
  return Diagnostic{Severity::Warning, std::move(code), std::move(message), line, column};
}

inline Diagnostic make_info(std::string code, std::string message) {
  return Diagnostic{Severity::Info, std::move(code), std::move(message), 0, 0};
}

inline bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

}  // namespace ontocdm
