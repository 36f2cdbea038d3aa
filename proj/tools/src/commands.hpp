#pragma once

#include <iosfwd>

namespace chebsalem::cli {

// Exit codes: 0 success, 1 internal failure, 2 usage or parse error,
// 3 fixture mismatch.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFixture = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chebsalem::cli
