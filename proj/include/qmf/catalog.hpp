#pragma once

#include "qmf/extremal.hpp"
#include "qmf/qseries.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qmf {

enum class Level { SL2Z, Gamma0_2, Gamma0_4, Gamma_2 };
std::string to_string(Level level);

struct FormDescriptor {
  std::string label;
  int weight = 0;
  int depth = 0;
  Level level = Level::SL2Z;
  std::function<FourierSeries(std::size_t)> build;
  // Present for X_{w,1}: the (A_w, B_{w-2}) split used by the transformed
  // evaluation near t = 0.
  std::function<extremal::Depth1Components(std::size_t)> components;
};

// Resolve a label such as "E4", "Delta", "X12_1", "Y8_2", "Xtilde12_2", "P2".
// Throws UnknownLabel without building anything.
FormDescriptor lookup_form(const std::string& label);

// Human-readable list of the accepted labels (parametric ones as patterns).
std::vector<std::string> label_patterns();

}  // namespace qmf
