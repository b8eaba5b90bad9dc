#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "degen/rational.hpp"

namespace degen {

/// Parsed command line.
struct RunConfig {
    enum class Command { List, Identities, DerDim, Invariants, Verify, VerifyAll };
    Command command = Command::List;
    std::vector<std::string> targets;
    std::map<std::string, Rational> params;
    std::vector<std::string> checks;      // identities only; empty = all four
    std::vector<std::string> files;       // extra algebra / certificate files
    bool json = false;
};

/// Runs one command against the built-in catalog (plus any loaded files).
/// Reports go to `out`, diagnostics to `err`. Exit status: 0 when every
/// requested check passed, 1 on verification/check failures, 2 on usage or
/// input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace degen
