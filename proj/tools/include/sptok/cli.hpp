#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace sptok::cli {

/// Exit statuses of run().
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // identity violated or an invariant broke
inline constexpr int kBadInput = 2;

/// Runs one command line; `args` excludes the program name. An `--input -`
/// reads from `in`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in = std::cin);

}  // namespace sptok::cli
