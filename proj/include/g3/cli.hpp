#pragma once

#include <iosfwd>

namespace g3::cli {

/// Exit codes: 0 success, 1 numerical failure, 2 usage or parse error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace g3::cli
