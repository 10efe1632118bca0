#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spiralcover {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kOk = 0, kUsage = 1, kIoOrSchema = 2, kBudget = 3 };

/// Entry point of the `spiralcover` tool; args excludes the program name.
///
///   solve --algo {spiral|strip|kmeans|random|oracle} --input FILE [--radius KM]
///         [--seed N] [--trials N] [--deterministic-start] [--output FILE] [--svg FILE]
///   gen   --k N --side KM --radius KM --seed N --output FILE
///   bench --k N --ratios LIST --topologies N --algos LIST --seed N
///         --report {csv|json} --output DIR
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spiralcover
