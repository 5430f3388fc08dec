#pragma once

#include <iosfwd>

namespace hypint::cli {

// Exit codes: 0 success, 1 computation rejected (the message names the failed
// clause) or a verify row failed, 2 usage or parse error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hypint::cli
