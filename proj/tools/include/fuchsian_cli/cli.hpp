#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <fuchsian/schottky.hpp>

namespace fuchsian::cli {

enum ExitCode : int { ok = 0, failure = 1, usage = 2 };

/// Runs the `fuchsian` command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// JSON text of a verification report; rationals are strings.
std::string report_json(const SchottkyDescription& desc, const VerificationReport& report);

}  // namespace fuchsian::cli
