// qwalk - CLI command implementations (thin main() lives in tools/)
#ifndef QWALK_COMMANDS_HPP_
#define QWALK_COMMANDS_HPP_

#include <iosfwd>
#include <string>

#include "qwalk/config.hpp"

namespace qwalk {

// Each command writes its files under config.resolved_outdir() and logs a
// short summary. Errors propagate as the library exceptions; the CLI main
// converts them to exit codes (0 ok, 2 configuration, 3 tripped guard).
void cmd_walk(const RunConfig& config, std::ostream& log);
void cmd_figure1(char panel, RunConfig config, std::ostream& log);
void cmd_converge(const RunConfig& config, std::ostream& log);
void cmd_geodesic(const RunConfig& config, std::ostream& log);
void cmd_strobe_demo(const RunConfig& config, std::ostream& log);

// Panel defaults used by cmd_figure1 (reconstruction; the source material
// does not fix lambda per panel). Exposed for tests.
RunConfig figure1_panel_config(char panel, const RunConfig& base);

}  // namespace qwalk

#endif  // QWALK_COMMANDS_HPP_
