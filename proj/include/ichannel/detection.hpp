#pragma once

#include <string>

#include "ichannel/errors.hpp"

namespace ichannel {

/// Receiver front-end choices.
enum class Detection {
  Homodyne,
  Heterodyne,
  Joint,
  MinEntropySimultaneous,
};

constexpr bool is_coherent(Detection det) {
  return det == Detection::Homodyne || det == Detection::Heterodyne;
}

/// The exponent i in the coherent-detection formulas: 1 for homodyne,
/// 0 for heterodyne. Undefined for the other strategies.
inline int detection_index(Detection det) {
  switch (det) {
    case Detection::Homodyne:
      return 1;
    case Detection::Heterodyne:
      return 0;
    default:
      throw StrategyError("detection_index is defined only for homodyne and heterodyne");
  }
}

inline std::string to_string(Detection det) {
  switch (det) {
    case Detection::Homodyne:
      return "homodyne";
    case Detection::Heterodyne:
      return "heterodyne";
    case Detection::Joint:
      return "joint";
    case Detection::MinEntropySimultaneous:
      return "min-entropy-simultaneous";
  }
  return "unknown";
}

}  // namespace ichannel
