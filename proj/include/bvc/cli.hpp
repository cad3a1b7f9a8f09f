#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bvc/control.hpp"
#include "bvc/document.hpp"

// bvctl subcommands: winners, solve, reduce, verify.

namespace bvc::cli {

enum ExitCode : int { kYes = 0, kNo = 1, kUsage = 2, kCapacity = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "winners: a, b; level 2; score 4", "winners: a; approval; score 3" or
// "winners: none".
std::string format_report(const WinnerReport& r, const std::vector<std::string>& names);
// Registered voters are v1, v2, ... in file order, pool voters u1, u2, ...
std::string format_witness(const Witness& w, const ElectionDocument& doc, std::size_t registered);

}  // namespace bvc::cli
