#include "plp/interval.hpp"

#include <stdexcept>

namespace plp {

std::vector<long> Interval::elements() const {
  std::vector<long> out;
  for (long j = lo; j <= hi; ++j) out.push_back(j);
  return out;
}

std::vector<Interval> Interval::subintervals() const {
  std::vector<Interval> out{empty_interval()};
  for (long a = lo; a <= hi; ++a)
    for (long b = a; b <= hi; ++b) out.emplace_back(a, b);
  return out;
}

std::string Interval::to_string() const {
  if (empty()) return "{}";
  return std::to_string(lo) + ".." + std::to_string(hi);
}

namespace {

long parse_long(std::string_view s, std::string_view whole) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(std::string(s), &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size())
    throw std::invalid_argument("malformed interval: '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Interval parse_interval(std::string_view text) {
  if (text == "{}" || text.empty()) return Interval::empty_interval();
  if (auto dots = text.find(".."); dots != std::string_view::npos)
    return Interval(parse_long(text.substr(0, dots), text), parse_long(text.substr(dots + 2), text));
  char open = text.front();
  if ((open == '[' || open == ']') && text.back() == ']') {
    auto comma = text.find(',');
    if (comma == std::string_view::npos)
      throw std::invalid_argument("malformed interval: '" + std::string(text) + "'");
    long a = parse_long(text.substr(1, comma - 1), text);
    long b = parse_long(text.substr(comma + 1, text.size() - comma - 2), text);
    return open == '[' ? Interval(a, b) : Interval::left_open(a, b);
  }
  long a = parse_long(text, text);
  return Interval(a, a);
}

}  // namespace plp
