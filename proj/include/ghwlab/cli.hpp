#ifndef GHWLAB_CLI_HPP
#define GHWLAB_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ghwlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 2;
inline constexpr int kExitParameter = 3;
inline constexpr int kExitBudget = 4;

/// Oracle work (subspace x point tests) allowed without --force.
inline constexpr std::uint64_t kForceThreshold = 10'000'000;

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ghwlab::cli

#endif  // GHWLAB_CLI_HPP
