#pragma once

namespace hilb {

// Outcome of a cone-membership or inequality test. When member is false the
// certificate pinpoints one reason: a negative series coefficient, a violated
// facet inequality (index identifies which), or the limiting inequality that
// only binds in the tail ("infinity").
struct Certificate {
  enum class Kind { None, Coefficient, Facet, Infinity };

  bool member = true;
  Kind kind = Kind::None;
  long index = 0;  // coefficient position or facet index; unused otherwise

  static Certificate ok() { return {}; }
  static Certificate coefficient(long j) { return {false, Kind::Coefficient, j}; }
  static Certificate facet(long i) { return {false, Kind::Facet, i}; }
  static Certificate infinity() { return {false, Kind::Infinity, 0}; }

  friend bool operator==(const Certificate& a, const Certificate& b) {
    return a.member == b.member && a.kind == b.kind &&
           (a.kind == Kind::None || a.kind == Kind::Infinity || a.index == b.index);
  }
};

}  // namespace hilb
