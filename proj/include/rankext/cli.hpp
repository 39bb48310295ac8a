#pragma once

// Command-line front end. Exit codes: 0 computation completed (the verdict
// is in the report), 1 input or validation error, 2 resource cap exceeded,
// 3 report does not match --expect.

#include <ostream>
#include <string>
#include <vector>

#include "rankext/io.hpp"

namespace rankext::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitResource = 2;
inline constexpr int kExitExpectMismatch = 3;

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Every key of `expected` is present in `report` with a matching value;
// objects match recursively, everything else by equality.
bool matches_expectation(const io::Json& report, const io::Json& expected);

}  // namespace rankext::cli
