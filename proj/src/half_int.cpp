#include "tac/half_int.hpp"

#include <charconv>

#include "tac/errors.hpp"

namespace tac {

namespace {

long parse_long(std::string_view text, std::string_view whole) {
  long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw InvalidInput("not a spin value: '" + std::string(whole) + "'");
  return value;
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_int(parse_long(text, text));
  const long num = parse_long(text.substr(0, slash), text);
  const long den = parse_long(text.substr(slash + 1), text);
  if (den == 1) return from_int(num);
  if (den == 2) return from_twice(num);
  throw InvalidInput("spin must be an integer or half-integer: '" + std::string(text) + "'");
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

void require_spin(HalfInt j) {
  if (j.twice() < 0) throw InvalidInput("spin must be non-negative, got " + j.str());
}

bool is_label_of(HalfInt m, HalfInt j) {
  return j.twice() >= 0 && m.twice() <= j.twice() && m.twice() >= -j.twice() &&
         (j.twice() - m.twice()) % 2 == 0;
}

long ladder_factor(HalfInt j, HalfInt m) {
  // (j - m)(j + m + 1) with both factors integers for a valid label
  const long a = (j.twice() - m.twice()) / 2;
  const long b = (j.twice() + m.twice() + 2) / 2;
  return a * b;
}

BasisOrdering::BasisOrdering(HalfInt j) : j_(j) {
  require_spin(j);
  labels_.reserve(static_cast<size_t>(dimension(j)));
  for (long t = j.twice(); t >= -j.twice(); t -= 2) labels_.push_back(HalfInt::from_twice(t));
}

long BasisOrdering::index_of(HalfInt m) const {
  if (!is_label_of(m, j_)) throw InvalidInput(m.str() + " is not a label of spin " + j_.str());
  return (j_.twice() - m.twice()) / 2;
}

}  // namespace tac
