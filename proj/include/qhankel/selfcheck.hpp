#ifndef QHANKEL_SELFCHECK_HPP
#define QHANKEL_SELFCHECK_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qhankel/scalar.hpp"

namespace qhankel {

enum class Execution { Serial, Parallel };

/// Default instance counts for every randomized property.
struct SweepSizes {
  std::size_t algebra = 1000;
  std::size_t adjoint = 100;
  std::size_t rank_methods = 200;
  std::size_t symmetric = 200;
  std::size_t hankel = 200;
  std::size_t adversarial = 30;
  std::size_t kronecker = 50;
  std::size_t plateau_per_order = 10;
  std::size_t roundtrip = 50;
  std::size_t periodicity = 20;
  std::size_t numeric = 50;
  std::size_t transpose = 100;
  std::size_t solve = 100;

  /// Every count multiplied by `factor` (at least one instance each).
  SweepSizes scaled(double factor) const;
};

struct SelfCheckOptions {
  std::uint64_t seed = 42;
  Regime regime = Regime::Exact;
  Execution execution = Execution::Parallel;
  SweepSizes sizes;
};

struct PropertyResult {
  std::string name;
  std::string description;
  std::size_t instances = 0;
  std::size_t failures = 0;
  bool skipped = false;
  /// Description of the lowest-index failing instance.
  std::string first_failure;

  bool passed() const { return skipped || failures == 0; }
  friend bool operator==(const PropertyResult&, const PropertyResult&) = default;
};

/// Names of all property suites, in run order.
std::vector<std::string> property_names();

/// Runs one suite. Exact-only suites are reported as skipped under the float
/// regime. Throws std::out_of_range for an unknown name.
PropertyResult run_property(std::string_view name, const SelfCheckOptions& options);

std::vector<PropertyResult> run_selfcheck(const SelfCheckOptions& options);

}  // namespace qhankel

#endif  // QHANKEL_SELFCHECK_HPP
