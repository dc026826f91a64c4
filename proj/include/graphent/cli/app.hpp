#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace graphent::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kMaxQubitsEnv = "GRAPHENT_MAX_QUBITS";

/// Qubit cap: the flag if given, else $GRAPHENT_MAX_QUBITS, else the
/// library default. Throws std::invalid_argument on a malformed env value.
std::size_t resolve_max_qubits(std::optional<std::size_t> flag);

/// Entry point shared by the executable and the tests. `args` includes the
/// program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace graphent::cli
