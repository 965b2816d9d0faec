#pragma once

#include <string>

#include "quivalg/path_algebra.hpp"
#include "quivalg/quiver.hpp"
#include "quivalg/reports.hpp"

namespace testing_support {

inline std::string fixture(const std::string& name) { return std::string(QUIVALG_FIXTURE_DIR) + "/" + name; }

inline quivalg::PathAlgebra algebra(const std::string& text, quivalg::Field f = quivalg::Field::rationals()) {
  return quivalg::PathAlgebra::build(quivalg::parse_quiver(text), f);
}

inline quivalg::PathAlgebra fixture_algebra(const std::string& name, quivalg::Field f = quivalg::Field::rationals()) {
  return algebra(quivalg::read_text_file(fixture(name)), f);
}

/// Line quiver 1 -> 2 -> ... -> n.
inline std::string line_quiver(int n) {
  std::string text = "vertex";
  for (int v = 1; v <= n; ++v) text += " " + std::to_string(v);
  text += "\n";
  for (int v = 1; v < n; ++v) {
    text += "arrow a" + std::to_string(v) + " " + std::to_string(v) + " " + std::to_string(v + 1) + "\n";
  }
  return text;
}

}  // namespace testing_support
