#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace loopcalc {

/// Topological type of a connected oriented cobordism: genus, number of
/// incoming and outgoing parametrized boundary circles.
struct Surface {
  std::int64_t genus = 0;
  std::int64_t inputs = 0;
  std::int64_t outputs = 1;

  static Surface make(std::int64_t genus, std::int64_t inputs,
                      std::int64_t outputs) {
    if (genus < 0) throw std::invalid_argument("genus must be >= 0");
    if (inputs < 0) throw std::invalid_argument("inputs must be >= 0");
    if (outputs < 1) throw std::invalid_argument("outputs must be >= 1");
    return Surface{genus, inputs, outputs};
  }

  friend bool operator==(const Surface&, const Surface&) = default;
};

inline std::int64_t euler_char(const Surface& s) {
  return 2 - 2 * s.genus - s.inputs - s.outputs;
}

/// Glues every output circle of s1 to an input circle of s2.
inline Surface sew(const Surface& s1, const Surface& s2) {
  if (s1.outputs != s2.inputs)
    throw std::invalid_argument(
        "cannot sew: " + std::to_string(s1.outputs) + " outputs against " +
        std::to_string(s2.inputs) + " inputs");
  const std::int64_t chi = euler_char(s1) + euler_char(s2);
  const std::int64_t twice_genus = 2 - s1.inputs - s2.outputs - chi;
  // twice_genus = 2(g1 + g2) + 2(q1 - 1), always even and >= 0 for q1 >= 1.
  return Surface::make(twice_genus / 2, s1.inputs, s2.outputs);
}

enum class Vanishing { GenusAtLeastOne, ThreeOrMoreOutputs, NotAPriori };

inline Vanishing vanishing_certificate(const Surface& s) {
  if (s.genus >= 1) return Vanishing::GenusAtLeastOne;
  if (s.outputs >= 3) return Vanishing::ThreeOrMoreOutputs;
  return Vanishing::NotAPriori;
}

inline const char* to_string(Vanishing v) {
  switch (v) {
    case Vanishing::GenusAtLeastOne: return "GenusAtLeastOne";
    case Vanishing::ThreeOrMoreOutputs: return "ThreeOrMoreOutputs";
    case Vanishing::NotAPriori: return "NotAPriori";
  }
  return "?";
}

inline std::ostream& operator<<(std::ostream& os, const Surface& s) {
  return os << "(" << s.genus << "," << s.inputs << "," << s.outputs << ")";
}

}  // namespace loopcalc
