#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace plp {

// Finite integer interval {lo, ..., hi}; empty when lo > hi.
struct Interval {
  long lo = 0;
  long hi = -1;

  Interval() = default;
  Interval(long lo_, long hi_) : lo(lo_), hi(hi_) {}

  // ]a, b] = {a+1, ..., b}
  static Interval left_open(long a, long b) { return Interval(a + 1, b); }
  static Interval empty_interval() { return Interval(0, -1); }

  bool empty() const { return lo > hi; }
  long size() const { return empty() ? 0 : hi - lo + 1; }
  bool contains(long j) const { return lo <= j && j <= hi; }
  bool contains(const Interval& other) const {
    return other.empty() || (!empty() && lo <= other.lo && other.hi <= hi);
  }
  std::vector<long> elements() const;
  // All subintervals, the empty one first.
  std::vector<Interval> subintervals() const;

  friend bool operator==(const Interval& a, const Interval& b) {
    return (a.empty() && b.empty()) || (a.lo == b.lo && a.hi == b.hi);
  }

  // "lo..hi", or "{}" for the empty interval
  std::string to_string() const;
};

// Accepts "a..b", "[a,b]", "]a,b]", a single integer "a", or "{}".
Interval parse_interval(std::string_view text);

}  // namespace plp
