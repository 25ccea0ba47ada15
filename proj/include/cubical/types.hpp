#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cubical {

// Raised when an input document or argument violates a structural invariant.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a computation exceeds a configured cap (vertex budget, face
// budget, iteration budget).
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a window-based stabilization check fails, i.e. the finitely
// presented instance did not settle into a constant regime inside the
// inspected index band.
struct LimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Side : std::uint8_t { minus = 0, plus = 1 };

inline Side opposite(Side s) { return s == Side::plus ? Side::minus : Side::plus; }
inline char sideChar(Side s) { return s == Side::plus ? '+' : '-'; }

// A hyperplane of a finitely presented pocset: family index plus position in
// the family's descending chain. Finite pocsets given by explicit tables use
// family = -1 and index = position in the table.
struct HypId {
  int family = -1;
  long index = 0;

  auto operator<=>(const HypId&) const = default;
};

inline std::string to_string(const HypId& h) {
  return std::to_string(h.family) + ":" + std::to_string(h.index);
}

// An oriented halfspace.
struct HalfSpace {
  HypId hyp;
  Side side = Side::plus;

  auto operator<=>(const HalfSpace&) const = default;
};

}  // namespace cubical
