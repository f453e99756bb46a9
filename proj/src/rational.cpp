#include "ellweyl/rational.hpp"

#include <charconv>
#include <sstream>

namespace ellweyl {

namespace {

long long parse_integer(std::string_view text, const std::string& where) {
  long long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ConstructionError(where + ": malformed integer '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rat parse_rational(std::string_view text, const std::string& where) {
  if (text.empty()) throw ConstructionError(where + ": empty rational");
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rat(parse_integer(text, where));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (num.empty() || den.empty() || den.find('/') != std::string_view::npos) {
    throw ConstructionError(where + ": malformed rational '" + std::string(text) + "'");
  }
  const long long d = parse_integer(den, where);
  if (d == 0) throw ConstructionError(where + ": zero denominator in '" + std::string(text) + "'");
  return Rat(parse_integer(num, where), d);
}

std::string format_rational(const Rat& q) {
  if (is_integer(q)) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string format_rational_vector(const std::vector<Rat>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << format_rational(v[i]);
  }
  out << ")";
  return out.str();
}

}  // namespace ellweyl
