#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bfc/observer.hpp"
#include "bfc/pe.hpp"
#include "bfc/scenario.hpp"

namespace bfc {

/// Exit-status contract (scriptable): 0 clean, 2 parse error,
/// 3 assumption violation, 4 aborted run.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitAssumption = 3;
inline constexpr int kExitAborted = 4;

struct CliOverrides {
  std::optional<double> dt;
  std::optional<double> horizon;
  std::optional<double> k_p;
  std::optional<double> window;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> csv;
  std::optional<std::string> svg;
};

int cmd_simulate(const std::string& path, const CliOverrides& o, std::ostream& out,
                 std::ostream& err);
int cmd_observe(const std::string& path, const CliOverrides& o, std::ostream& out,
                std::ostream& err);
int cmd_analyze(const std::string& path, const CliOverrides& o, std::ostream& out,
                std::ostream& err);

/// Runs `command` over every .scn file in dir (sorted), fanning out across
/// threads; output is serialized in file order. Returns the worst status.
int cmd_batch(const std::string& command, const std::string& dir, const CliOverrides& o,
              std::ostream& out, std::ostream& err);

/// CSV layouts (shared with the test harness).
using Table = std::pair<std::vector<std::string>, std::vector<std::vector<double>>>;
Table simulate_table(const SimLog& log, const OrientedGraph& g);
Table observe_table(const ObserverLog& log);
Table analyze_table(const BPEReport& report);

}  // namespace bfc
