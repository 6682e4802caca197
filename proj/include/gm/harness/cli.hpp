#pragma once

#include <iosfwd>

namespace gm {

/// Entry point of the `gm` tool. Exit codes: 0 verified, satisfied or found;
/// 1 refuted, violated or not found; 2 inconclusive; 3 usage or input error.
int run_cli(int argc, char const *const *argv, std::ostream &out, std::ostream &err);

} // namespace gm
