#pragma once

#include "gravity/json_io.hpp"

#include <cstdint>

namespace gravity {

// Exit conventions: 0 clean, 2 validation or verification failure,
// 3 results valid but truncated by the box.
struct CommandResult {
    Json output;
    std::string csv;  // dims-only export; empty when the command has none
    int exit_code = 0;
};

CommandResult run_geometry(const Json& config_json);
CommandResult run_page(const PageRequest& request, bool matrices);
CommandResult run_cotor(const Json& coalgebra_json, int max_s, int max_degree, bool matrices);
CommandResult run_verify(const PageRequest& request);

// Rejection sampling on a rational grid; same seed, same configuration.
CubeConfig gen_random_config(int n, int j, uint64_t seed);

}  // namespace gravity
