#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "quivalg/field.hpp"
#include "quivalg/path_algebra.hpp"
#include "quivalg/quiver.hpp"

namespace quivalg {

struct CorpusParams {
  std::size_t count = 200;
  std::size_t max_vertices = 8;
  std::size_t max_arrows = 12;
  std::size_t max_relations = 3;
  /// Instances whose algebra dimension exceeds this are redrawn.
  std::size_t max_dim = 30;
  std::uint64_t seed = 1;
};

/// Random acyclic quivers with monomial or binomial relations. Arrows run
/// from lower to higher rank of a random vertex ranking; relation
/// coefficients are drawn from {-2, -1, 1, 2, 3}, nonzero in every
/// characteristic above 3. Deterministic for a given seed.
std::vector<QuiverDocument> generate_corpus(const CorpusParams& params);

/// The checks `verify` can run, one per structural statement.
enum class Check {
  JordanIsDerivation,        // JDer = Der
  LieStandardForm,           // LieDer = Der + Phi, unique decompositions
  CentralDerivationsVanish,  // Der meets center-valued maps in 0
  WSaturationFull,           // idempotents + commutators generate A
  LieVertexConstants,        // relation-free connected: Phi(e_i) in K 1, support pattern
  GeneralizedPairs,          // generalized-Jordan pair spaces give generalized derivations
  LieAgreesOnPaths,          // relation-free connected: D = Theta on nontrivial paths
  StripRecursion,            // block forms at every peeling level
};

/// Accepts the documented numeric keys and the descriptive names.
/// Throws InputError for unknown keys.
Check parse_check(std::string_view key);
std::string check_name(Check c);
std::vector<Check> parse_check_list(std::string_view comma_separated);

struct CheckOutcome {
  Check check;
  std::size_t checked = 0;
  /// Instances where the hypotheses do not apply (e.g. relations present).
  std::size_t not_applicable = 0;
  std::size_t violations = 0;
  std::vector<std::string> failures;
};

struct FieldOutcome {
  std::string field;
  std::vector<CheckOutcome> checks;
};

struct VerifyReport {
  std::size_t instances = 0;
  std::uint64_t seed = 0;
  std::vector<FieldOutcome> fields;
  double seconds = 0;
  bool ok() const;
};

/// Runs the checks on one algebra, accumulating into `outcomes` (aligned
/// with `checks`). `label` names the instance in failure messages.
void run_checks(const PathAlgebra& a, const std::vector<Check>& checks, std::vector<CheckOutcome>& outcomes,
                const std::string& label);

VerifyReport verify_corpus(const std::vector<QuiverDocument>& corpus, const std::vector<Check>& checks,
                           const std::vector<Field>& fields, std::uint64_t seed);

}  // namespace quivalg
