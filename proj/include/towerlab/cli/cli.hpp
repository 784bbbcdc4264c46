#pragma once

#include <ostream>

namespace towerlab::cli {

// Exit codes: 0 all checks pass, 1 a verification failed, 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace towerlab::cli
