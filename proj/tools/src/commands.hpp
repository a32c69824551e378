#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "CLI11.hpp"
#include "report.hpp"

namespace shiftgeom::cli {

struct CommandState {
  Inputs inputs;
  std::uint64_t seed = 0;
  std::string command;
  std::function<Json()> action;
};

void add_dist(CLI::App& app, CommandState& state);
void add_classify(CLI::App& app, CommandState& state);
void add_complex(CLI::App& app, CommandState& state);
void add_path(CLI::App& app, CommandState& state);
void add_uap(CLI::App& app, CommandState& state);
void add_shift(CLI::App& app, CommandState& state);
void add_measure(CLI::App& app, CommandState& state);

}  // namespace shiftgeom::cli
