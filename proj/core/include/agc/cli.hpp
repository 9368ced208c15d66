#ifndef AGC_CLI_HPP
#define AGC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace agc::cli {

// Exit codes: 0 success, 2 validation failure, 3 internal-consistency
// failure, 64 usage error, 66 file error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitInternal = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitFile = 66;

/// Runs one subcommand (invariants, galois, check, enumerate, local-model,
/// monodromy).  `args` excludes the program name.  Output is byte-for-byte
/// deterministic for --format json.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace agc::cli

#endif
