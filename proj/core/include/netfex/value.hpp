#pragma once

#include <string>
#include <string_view>
#include <variant>

namespace netfex {

enum class ColumnKind { numeric, nominal };

// One data cell: missing, a numeric value, or a nominal symbol.
using Value = std::variant<std::monostate, double, std::string>;

inline bool is_missing(const Value& v) { return std::holds_alternative<std::monostate>(v); }
inline bool is_numeric(const Value& v) { return std::holds_alternative<double>(v); }
inline bool is_nominal(const Value& v) { return std::holds_alternative<std::string>(v); }
inline double as_numeric(const Value& v) { return std::get<double>(v); }
inline const std::string& as_nominal(const Value& v) { return std::get<std::string>(v); }

inline Value missing_value() { return Value{std::monostate{}}; }

// Shortest decimal form that parses back to the same double. Locale-independent.
std::string format_double(double x);

// Strict parse: the whole token must be consumed.
double parse_double(std::string_view token);

}  // namespace netfex
