// cli.hpp: JSON run configuration, command dispatch, and CSV/JSON rendering
//
// Config schema (complex scalars are [re, im]; energies and times use hbar = 1):
//   {
//     "doublet": {"m", "delta", "epsilon", "theta_max"},
//     "levels": [{"energy", "g_L": [re, im], "g_R": [re, im]}, ...],
//     "h_override"?: 2x2 of [re, im],
//     "cross_couplings"?: NxN of [re, im],
//     "degeneracy_tolerance"?, "broadening"?, "coupling_scale"?,
//     "invariance": "CPT" | "T" | "General",
//     "command": "reduce" | "spectrum" | "evolve" | "oracle" | "compare" | "kaon" | "sweep",
//     "time"?: {"t_max", "steps"},
//     "kaon"?: {"m1", "m2", "gamma1", "gamma2", "envelope"?: "standard" | "full"},
//     "sweep"?: {"parameter", "values": [...], "command"},
//     "output": path ("-" for stdout)
//   }

#pragma once

#include "chiralww/dynamics.hpp"
#include "chiralww/model.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chiralww {

enum class Command { Reduce, Spectrum, Evolve, Oracle, Compare, Kaon, Sweep };

struct TimeSpec {
    double t_max = 0.0;
    std::size_t steps = 0;

    bool operator==(const TimeSpec&) const = default;
};

struct SweepSpec {
    std::string parameter;  // e.g. "doublet.epsilon", "coupling_scale", "levels.0.energy"
    std::vector<double> values;
    Command command = Command::Evolve;

    bool operator==(const SweepSpec&) const = default;
};

struct RunConfig {
    ModelSpec model;
    double coupling_scale = 1.0;
    Command command = Command::Evolve;
    std::optional<TimeSpec> time;
    std::optional<KaonParams> kaon;
    std::optional<SweepSpec> sweep;
    std::string output;

    bool operator==(const RunConfig&) const = default;
};

const char* to_string(Command command) noexcept;
const char* to_string(Invariance mode) noexcept;

// Throws Error{Parse} with line/column, Error{Schema} with the offending field
// path, Error{BadSweepPath}, or a model validation error.
RunConfig parse_config(std::string_view text);

std::string serialize_config(const RunConfig& config);

// Returns the config for one sweep point: the parameter set, sweep removed, and the
// sweep's command in place.
RunConfig sweep_point(const RunConfig& config, double value);

// Output bytes for a config (CSV or one-line JSON). Sweeps concatenate the
// standalone output of every point in input order.
std::string render(const RunConfig& config);

// Renders and writes to config.output ("-" writes to stdout).
void run(const RunConfig& config);

// Shortest decimal text that reads back to the same double.
std::string format_double(double value);

}  // namespace chiralww
