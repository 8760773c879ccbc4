#pragma once

#include "lietk/admissible.hpp"
#include "lietk/algebra_file.hpp"
#include "lietk/report.hpp"
#include "lietk/root_system.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace lietk::cli {

enum ExitCode : int { exit_ok = 0, exit_check_failure = 1, exit_input_error = 2 };

/// Anything that makes a command unable to start: unreadable file, parse
/// error, missing toral block, unknown suite or family.
class InputError : public Error {
public:
    using Error::Error;
};

struct LoadedFile {
    std::string path;
    std::string digest;
    AlgebraFile file;
};

/// Throws InputError (wrapping ParseError text with line and column).
LoadedFile load_file(const std::string& path);
LoadedFile load_text(std::string path, std::string_view contents);

Report cmd_validate(const LoadedFile& input);
Report cmd_decompose(const LoadedFile& input);
Report cmd_admissible(const LoadedFile& input, SamplingOptions sampling);

struct VerifyOptions {
    std::vector<std::string> suites;  // empty: every suite
    SamplingOptions sampling;
};

/// Suite names in report order.
const std::vector<std::string>& suite_names();

Report cmd_verify(const LoadedFile& input, const VerifyOptions& options);
Report cmd_verify_family(RootFamily family, std::size_t n, const VerifyOptions& options);

/// Human-readable rendering of a report.
std::string render_text(const Report& report);

/// Full command line: parses arguments, runs the command, writes text to
/// `out`, diagnostics to `err`, and the JSON report when --json is given.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lietk::cli
