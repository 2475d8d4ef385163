#pragma once

// Subcommands of the stautilt tool. Each writes to `out`/`err` and returns
// the process exit status.

#include <iosfwd>
#include <string>

#include "signdec/brauer.hpp"
#include "signdec/glue.hpp"

namespace signdec::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kUnsupported = 3,
};

enum class HasseFormat { Dot, Json };
enum class BrauerKind { Line, Cycle };
enum class BrauerAction { EmitQuiver, Verify };

int cmd_finite(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_count(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_signdec(const std::string& path, bool per_epsilon, std::ostream& out, std::ostream& err);
int cmd_hasse(const std::string& path, HasseFormat format, std::ostream& out, std::ostream& err);
int cmd_brauer(BrauerKind kind, int n, BrauerAction action, std::ostream& out, std::ostream& err);
int cmd_identities(int max_n, std::ostream& out, std::ostream& err);

// cmd_identities against a caller-supplied composition table.
int run_identities(const CompositionSum& table, std::ostream& out);

std::string hasse_to_dot(const GluedHasse& h);
std::string hasse_to_json(const GluedHasse& h);

// Full command line, including argv[0].
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace signdec::cli
