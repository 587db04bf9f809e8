// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "akl/connection.hpp"

namespace akl {

// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCertificate = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDomain = 3;

// Outcome of one subcommand, separated from process plumbing so the commands
// can be driven in-process by the tests.
struct CommandResult {
    int exit_code = kExitOk;
    std::string output; // stdout payload (JSON, CSV, or a table)
    std::string error;  // stderr payload, empty on success
};

// Print precision for doubles: the AKL_PRECISION environment variable
// (significant digits, 1..25), default 17. Throws ParseError on junk values.
int output_precision();
// "%.Ng" with -0 normalized to 0, so equal inputs give byte-equal output.
std::string format_double(double v, int precision);

// Reads a connection spec file: a JSON object with string fields "A".."F",
// "U", "V" in the expression grammar, and an optional "base_point" pair of
// rational strings. Throws ParseError.
Connection2D load_connection_file(const std::string& path,
                                  std::string* base_point_text = nullptr);

// classify --connection <path> --point x0,y0 [--max-order N]
// point_text may be empty when the file carries base_point.
CommandResult cmd_classify(const std::string& connection_path, const std::string& point_text,
                           int max_order = 6);

// family --params a,b,g,u[,d]
CommandResult cmd_family(const std::string& params_text);

// holonomy --params a,b,g,u[,d] --g1 s,t,u,v --g2 s,t,u,v
CommandResult cmd_holonomy(const std::string& params_text, const std::string& g1_text,
                           const std::string& g2_text);

// group --params a,b,g,u[,d] --g1 s,t,u,v --g2 s,t,u,v [--point x,y]
CommandResult cmd_group(const std::string& params_text, const std::string& g1_text,
                        const std::string& g2_text, const std::string& point_text = "");

// models verify
CommandResult cmd_models(const std::string& action);

// geodesic --connection <path> --point x,y --velocity vx,vy --time T --steps n
CommandResult cmd_geodesic(const std::string& connection_path, const std::string& point_text,
                           const std::string& velocity_text, double total_time, int steps);

// verify [filter] [--inject psi-sign-flip|case6-target]
CommandResult cmd_verify(const std::string& filter = "", const std::string& inject_text = "");

} // namespace akl
