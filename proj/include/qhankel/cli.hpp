#ifndef QHANKEL_CLI_HPP
#define QHANKEL_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "qhankel/rank.hpp"
#include "qhankel/scalar.hpp"
#include "qhankel/selfcheck.hpp"

namespace qhankel::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kDisagreement = 2,
  kUnderdetermined = 3,
};

enum class Output { Text, Json };
enum class SideSelection { Left, Right, Both };

struct Config {
  /// Unset means "whatever the input file holds".
  std::optional<Regime> regime;
  double tol = kDefaultRankTolerance;
  /// Empty means the regime default (all exact methods, or numeric).
  std::vector<RankMethod> methods;
  std::uint64_t seed = 42;
  double scale = 1.0;
  Output output = Output::Text;
  SideSelection side = SideSelection::Both;

  /// Throws DomainError when tol <= 0 or scale <= 0.
  void validate() const;
};

// Each command writes its report to `out`, diagnostics to `err`, and returns
// an ExitCode.

int cmd_rank(const std::filesystem::path& matrix_file, const Config& config, std::ostream& out,
             std::ostream& err);

int cmd_analyze(const std::filesystem::path& sequence_file, const Config& config, std::ostream& out,
                std::ostream& err);

int cmd_fit(const std::filesystem::path& sequence_file, std::size_t order, const Config& config,
            std::ostream& out, std::ostream& err);

/// With a spec file, continues the sequence with that recurrence seeded by
/// its last `order` terms; without one, uses the minimal extension.
int cmd_extend(const std::filesystem::path& sequence_file,
               const std::optional<std::filesystem::path>& spec_file, std::size_t count,
               const Config& config, std::ostream& out, std::ostream& err);

int cmd_selfcheck(const Config& config, std::ostream& out, std::ostream& err);

}  // namespace qhankel::cli

#endif  // QHANKEL_CLI_HPP
