// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fr3kit/config.hpp"

namespace fr3 {

/// Executes one subcommand end to end: parse the configuration, run the
/// module, write the output tables plus effective_config.json and
/// manifest.json under rc.out_dir. Throws ConfigError / IoError /
/// ComputeError; the CLI maps these onto exit codes.
void run(const RunConfig& rc);

}  // namespace fr3
