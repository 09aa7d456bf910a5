#ifndef FLOWBOUND_CLI_HPP_
#define FLOWBOUND_CLI_HPP_

#include <iosfwd>
#include <string>

#include "flowbound/config.hpp"
#include "flowbound/forces.hpp"

namespace flowbound::cli {

// Stable exit-code contract.
inline constexpr int kExitCertified = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNotCertified = 2;
inline constexpr int kExitOracleFailure = 3;

struct OutputOptions {
  std::string out_path;  // also written here when nonempty
  forces::GradBoundKind grad_bound = forces::GradBoundKind::Rough;
};

// Writes the certificate JSON to `out` (and out_path); exit code 0/2 by
// certification status.  Input problems raise ConfigError /
// std::invalid_argument / std::runtime_error, mapped to exit 1 by main.
int cmd_certify(const config::RunConfig& cfg, const OutputOptions& opts,
                std::ostream& out);

// Drag/lift pipeline for a cubic box with the analytic inlet profile.
int cmd_forces(const config::RunConfig& cfg, const OutputOptions& opts,
               std::ostream& out);

// One CSV row per sweep value; geometry-invalid rows are marked `invalid`
// and the run continues.  Rows are evaluated concurrently and written in
// input order.
int cmd_sweep(const config::RunConfig& cfg, const OutputOptions& opts,
              std::ostream& out);

// Oracle verification suite; exit 0 or 3.
int cmd_verify(std::ostream& out);

}  // namespace flowbound::cli

#endif  // FLOWBOUND_CLI_HPP_
