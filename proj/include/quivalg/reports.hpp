#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "quivalg/derivations.hpp"
#include "quivalg/path_algebra.hpp"
#include "quivalg/structure.hpp"

namespace quivalg {

using Json = nlohmann::ordered_json;

/// "num/den" for rationals, the decimal residue for prime fields.
std::string scalar_json(const Scalar& s);

/// [[label, coeff], ...] over the nonzero coordinates.
Json element_json(const PathAlgebra& a, const Vector& x);

Json algebra_report(const PathAlgebra& a);
Json subspace_report(const PathAlgebra& a, const Subspace& s);
Json map_json(const PathAlgebra& a, const LinMap& m);
Json map_space_report(const PathAlgebra& a, const MapSpace& s);
Json decomposition_report(const PathAlgebra& a, const Decomposition& d);
Json pierce_report(const PathAlgebra& a, const PierceBlocks& b);
Json faithfulness_report(const PathAlgebra& a, const Faithfulness& f);
Json w_report(const PathAlgebra& a, const WSaturation& w);
Json strip_report(const StripReport& r);

/// Reads a map file. Missing image keys are zero maps on that element;
/// unknown path labels are errors; the label "1" denotes the unit.
/// Throws InputError.
LinMap map_from_json(const PathAlgebra& a, const Json& j);
LinMap load_map_file(const PathAlgebra& a, const std::string& path);

/// Reads a whole file; throws InputError when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace quivalg
