// cli.hpp -- command line front end: analyze, decide, scan, trace, examples.

#ifndef EDEN_CLI_HPP
#define EDEN_CLI_HPP

#include <iosfwd>

namespace eden {

// Exit status: 0 success, 1 usage or parse error, 2 invalid endomorphism,
// 3 theorem-consistency violation (an implementation bug, not mathematics).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eden

#endif  // EDEN_CLI_HPP
