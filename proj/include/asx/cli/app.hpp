#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "asx/cli/report.hpp"

namespace asx::cli {

struct Options {
  bool json = false;
  bool approx = false;
  int max_d = 8;
  unsigned jobs = 1;
};

Report check_command(const std::string& path);
Report orderings_command(const std::string& path, int max_d);
Report fuse_command(const std::string& path, const std::string& partition);
Report search_command(std::uint64_t max, unsigned jobs);
Report reject_command(std::uint64_t search_max, unsigned jobs);
Report symbolic_command();
Report fusion_command(const std::string& m);
Report consistency_command();

/// Parses argv, runs one subcommand, prints its report to out (usage errors
/// go to err) and returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace asx::cli
