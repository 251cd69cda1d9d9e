#pragma once

#include <cstddef>

namespace polyeuler::cli {

/// Exit codes shared by every tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUnexpectedFailure = 1;
inline constexpr int kExitUsage = 2;

/// 10, or POLYEULER_ORDER when set to a valid natural number.
std::size_t default_order();

int polyseq_main(int argc, char** argv);
int polyverify_main(int argc, char** argv);
int polyaudit_main(int argc, char** argv);

}  // namespace polyeuler::cli
