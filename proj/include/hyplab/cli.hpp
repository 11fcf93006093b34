#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace hyplab::cli {

// Mini expression grammar for scalar functions of t:
//   "const:V", "poly:a0,a1,...", "sin:amp,freq,phase,offset"
std::function<double(double)> parse_scalar_fn(const std::string& spec);

// Entry point behind the binary; returns the process exit code.  Subcommands:
// invariants, classify, catalog, construct (ode | pseudo-ryan), curve,
// verify.  Seed defaults to the HYPLAB_SEED environment variable when the
// --seed flag is absent.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hyplab::cli
