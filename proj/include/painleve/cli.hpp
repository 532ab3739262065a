#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "painleve/diagnostics.hpp"

namespace painleve {

// Exit codes: 0 ok, 1 bad arguments, 2 integration failure, 3 check failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct CheckRow {
  ResidualReport report;
  double threshold;  // on report.normalized()

  bool pass() const { return report.normalized() <= threshold; }
};

// The end-to-end verification suite behind `check`. `corrupt` swaps in a
// deliberately wrong field for one chart in the pushforward audit.
std::vector<CheckRow> run_check_suite(std::uint64_t seed, std::optional<ChartId> corrupt = {});

}  // namespace painleve
