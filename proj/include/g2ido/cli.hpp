#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2ido/fixtures.hpp"
#include "g2ido/multiplets.hpp"

namespace g2ido::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitUsage = 2,
    kExitOverflow = 3,
};

enum class Format { Table, Json, Dot };

/// Thrown for any input the command cannot accept; maps to kExitUsage.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

Format parse_format(std::string_view text);

// Renderers return the full document including the trailing newline.
// Formats a command does not support raise UsageError.
std::string render_roots(Format format, const RootSystem &rs = g2());
std::string render_weyl(Format format);
std::string render_parabolics(Format format);
std::string render_multiplet(const MultipletGraph &graph, Format format);
std::string render_classify(const Rational &m1, const Rational &m2, ParabolicName p, Format format);
std::string render_dim(const Rational &m1, const Rational &m2, Format format);
std::string render_verify(const std::vector<FixtureResult> &results, Format format);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Nothing is written outside `out`/`err` unless --out is set.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace g2ido::cli
