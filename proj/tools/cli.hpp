#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace c2crystal::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `c2crystal` tool. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload for tests: `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes `content` to `path` through a sibling temp file and a rename.
void write_atomically(const std::string& path, const std::string& content);

}  // namespace c2crystal::cli
