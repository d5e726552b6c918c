#include "chiralww/cli.hpp"

#include "chiralww/error.hpp"
#include "chiralww/oracle.hpp"
#include "chiralww/reduction.hpp"
#include "chiralww/spectral.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <future>
#include <iostream>
#include <set>
#include <sstream>

namespace chiralww {
namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& message) {
    throw Error(ErrorKind::Schema, path + ": " + message);
}

std::string join(const std::string& parent, const std::string& key) {
    return parent.empty() ? key : parent + "." + key;
}

std::string index_path(const std::string& parent, std::size_t i) {
    return parent + "[" + std::to_string(i) + "]";
}

void require_object(const json& j, const std::string& path, const std::set<std::string>& allowed) {
    if (!j.is_object()) schema_error(path.empty() ? "<root>" : path, "expected an object");
    for (const auto& item : j.items())
        if (!allowed.count(item.key())) schema_error(join(path, item.key()), "unknown key");
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
    const auto it = obj.find(key);
    if (it == obj.end()) schema_error(join(path, key), "missing required field");
    return *it;
}

double as_number(const json& j, const std::string& path) {
    if (!j.is_number()) schema_error(path, "expected a number");
    return j.get<double>();
}

double number_field(const json& obj, const std::string& key, const std::string& path) {
    return as_number(member(obj, key, path), join(path, key));
}

std::optional<double> optional_number(const json& obj, const std::string& key,
                                      const std::string& path) {
    const auto it = obj.find(key);
    if (it == obj.end()) return std::nullopt;
    return as_number(*it, join(path, key));
}

std::string string_field(const json& obj, const std::string& key, const std::string& path) {
    const json& j = member(obj, key, path);
    if (!j.is_string()) schema_error(join(path, key), "expected a string");
    return j.get<std::string>();
}

Complex as_complex(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2)
        schema_error(path, "expected a complex number as [re, im]");
    return {as_number(j[0], index_path(path, 0)), as_number(j[1], index_path(path, 1))};
}

MatX as_matrix(const json& j, const std::string& path) {
    if (!j.is_array()) schema_error(path, "expected a square array of [re, im]");
    const std::size_t n = j.size();
    MatX m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t r = 0; r < n; ++r) {
        const json& row = j[r];
        const std::string row_path = index_path(path, r);
        if (!row.is_array() || row.size() != n)
            schema_error(row_path, "expected a row of " + std::to_string(n) + " entries");
        for (std::size_t c = 0; c < n; ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                as_complex(row[c], index_path(row_path, c));
    }
    return m;
}

Command parse_command(const std::string& name, const std::string& path) {
    static const std::pair<const char*, Command> names[] = {
        {"reduce", Command::Reduce}, {"spectrum", Command::Spectrum}, {"evolve", Command::Evolve},
        {"oracle", Command::Oracle}, {"compare", Command::Compare},   {"kaon", Command::Kaon},
        {"sweep", Command::Sweep},
    };
    for (const auto& [text, command] : names)
        if (name == text) return command;
    schema_error(path, "unknown command '" + name + "'");
}

Invariance parse_invariance(const std::string& name, const std::string& path) {
    if (name == "CPT") return Invariance::CPT;
    if (name == "T") return Invariance::T;
    if (name == "General") return Invariance::General;
    schema_error(path, "expected \"CPT\", \"T\" or \"General\"");
}

bool needs_time(Command c) {
    return c == Command::Evolve || c == Command::Oracle || c == Command::Compare ||
           c == Command::Kaon;
}

std::string position_message(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

// Resolves a sweep path to the scalar it addresses, or throws BadSweepPath.
double* sweep_target(RunConfig& config, const std::string& path) {
    auto& d = config.model.doublet;
    if (path == "doublet.m") return &d.m;
    if (path == "doublet.delta") return &d.delta;
    if (path == "doublet.epsilon") return &d.epsilon;
    if (path == "doublet.theta_max") return &d.theta_max;
    if (path == "coupling_scale") return &config.coupling_scale;
    if (path == "degeneracy_tolerance") return &config.model.degeneracy_tolerance;
    if (path == "broadening") {
        if (!config.model.broadening) config.model.broadening = 0.0;
        return &*config.model.broadening;
    }
    if (path == "time.t_max" && config.time) return &config.time->t_max;
    if (path.starts_with("kaon.") && config.kaon) {
        auto& k = *config.kaon;
        if (path == "kaon.m1") return &k.m1;
        if (path == "kaon.m2") return &k.m2;
        if (path == "kaon.gamma1") return &k.gamma1;
        if (path == "kaon.gamma2") return &k.gamma2;
    }
    constexpr std::string_view prefix = "levels.";
    constexpr std::string_view suffix = ".energy";
    if (path.starts_with(prefix) && path.ends_with(suffix)) {
        const std::string_view digits(path.data() + prefix.size(),
                                      path.size() - prefix.size() - suffix.size());
        std::size_t index = 0;
        const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
        if (ec == std::errc() && end == digits.data() + digits.size() && !digits.empty() &&
            index < config.model.levels.size())
            return &config.model.levels[index].energy;
    }
    throw Error(ErrorKind::BadSweepPath, "sweep parameter '" + path + "' is not a numeric scalar");
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const MatX& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json vector_json(const Vec2& v) { return json::array({complex_json(v(0)), complex_json(v(1))}); }

std::string dump_line(const json& j) { return j.dump() + "\n"; }

ValidatedModel scaled_model(const RunConfig& config) {
    const ValidatedModel model = validate_model(config.model);
    if (config.coupling_scale == 1.0) return model;
    return scale_couplings(model, config.coupling_scale);
}

std::vector<double> grid_of(const RunConfig& config) {
    return time_grid(config.time->t_max, config.time->steps);
}

std::string render_reduce(const RunConfig& config) {
    const Reduction r = reduce(scaled_model(config));
    json out;
    out["M"] = matrix_json(r.mass.matrix);
    out["Gamma"] = matrix_json(r.decay.matrix);
    out["W"] = matrix_json(r.generator.matrix);
    return dump_line(out);
}

std::string render_spectrum(const RunConfig& config) {
    const Invariance mode = config.model.invariance;
    const MassMatrix mass = mass_matrix(scaled_model(config));
    const SpectralResult s = eigen(mass, mode);

    json out;
    out["lambda_plus"] = s.lambda_plus;
    out["lambda_minus"] = s.lambda_minus;
    out["psi_plus"] = vector_json(s.psi_plus);
    out["psi_minus"] = vector_json(s.psi_minus);
    out["degenerate"] = s.degenerate;
    json mixing;
    if (const auto* cpt = std::get_if<CPTMixing>(&s.mixing)) {
        mixing["type"] = "CPT";
        mixing["p"] = complex_json(cpt->p);
        mixing["alpha"] = cpt->alpha;
    } else if (const auto* t = std::get_if<TMixing>(&s.mixing)) {
        mixing["type"] = "T";
        mixing["phi"] = t->phi;
    } else {
        mixing["type"] = "General";
    }
    out["mixing"] = std::move(mixing);
    try {
        const OscillationPeriod period = oscillation_period(mass, mode);
        out["delta_split"] = period.delta_split;
        out["tau"] = period.tau;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::ZeroSplitting) throw;
        out["delta_split"] = 0.0;
        out["tau"] = nullptr;  // infinite period
    }
    return dump_line(out);
}

void append_row(std::string& out, std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
        if (!first) out += ',';
        out += format_double(v);
        first = false;
    }
    out += '\n';
}

std::string render_series(const TimeSeries& series) {
    std::string out = "t,p_l,p_r,theta_ratio\n";
    for (const auto& s : series.samples) append_row(out, {s.t, s.p_l, s.p_r, s.theta_ratio});
    return out;
}

std::string render_evolve(const RunConfig& config) {
    const Reduction r = reduce(scaled_model(config));
    return render_series(racemization_series(r, config.model.invariance, grid_of(config)));
}

std::string render_oracle(const RunConfig& config) {
    const ExactPropagator exact(full_hamiltonian(scaled_model(config)));
    const VecX psi0 = left_state(exact.dimension());
    TimeSeries series;
    for (double t : grid_of(config)) {
        const ExactState state = exact.evolve(psi0, t);
        series.samples.push_back({t, state.p_l(), state.p_r(), state.p_l() - state.p_r()});
    }
    return render_series(series);
}

std::string render_compare(const RunConfig& config) {
    const ErrorReport report = compare_ww(scaled_model(config), grid_of(config), config.coupling_scale);
    json out;
    out["lambda"] = report.coupling_scale;
    out["max_abs_error_pl"] = report.max_abs_error_pl;
    out["max_abs_error_pr"] = report.max_abs_error_pr;
    return dump_line(out);
}

std::string render_kaon(const RunConfig& config) {
    std::string out = "t,p_kbar\n";
    for (double t : grid_of(config))
        append_row(out, {t, kaon_transition_probability(*config.kaon, t)});
    return out;
}

std::string render_sweep(const RunConfig& config) {
    std::vector<std::future<std::string>> blocks;
    blocks.reserve(config.sweep->values.size());
    for (double value : config.sweep->values) {
        RunConfig point = sweep_point(config, value);
        blocks.push_back(std::async(std::launch::async,
                                    [point = std::move(point)] { return render(point); }));
    }
    std::string out;
    for (auto& block : blocks) out += block.get();
    return out;
}

}  // namespace

const char* to_string(Command command) noexcept {
    switch (command) {
        case Command::Reduce: return "reduce";
        case Command::Spectrum: return "spectrum";
        case Command::Evolve: return "evolve";
        case Command::Oracle: return "oracle";
        case Command::Compare: return "compare";
        case Command::Kaon: return "kaon";
        case Command::Sweep: return "sweep";
    }
    return "unknown";
}

const char* to_string(Invariance mode) noexcept {
    switch (mode) {
        case Invariance::CPT: return "CPT";
        case Invariance::T: return "T";
        case Invariance::General: return "General";
    }
    return "unknown";
}

std::string format_double(double value) {
    char buffer[64];
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, end);
}

RunConfig parse_config(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Parse,
                    "malformed JSON at " + position_message(text, e.byte) + ": " + e.what());
    }

    require_object(doc, "",
                   {"doublet", "levels", "h_override", "cross_couplings", "degeneracy_tolerance",
                    "broadening", "coupling_scale", "invariance", "command", "time", "kaon", "sweep",
                    "output"});

    RunConfig config;
    ModelSpec& model = config.model;

    const json& doublet = member(doc, "doublet", "");
    require_object(doublet, "doublet", {"m", "delta", "epsilon", "theta_max"});
    model.doublet.m = number_field(doublet, "m", "doublet");
    model.doublet.delta = number_field(doublet, "delta", "doublet");
    model.doublet.epsilon = number_field(doublet, "epsilon", "doublet");
    model.doublet.theta_max = number_field(doublet, "theta_max", "doublet");

    const json& levels = member(doc, "levels", "");
    if (!levels.is_array()) schema_error("levels", "expected an array");
    for (std::size_t k = 0; k < levels.size(); ++k) {
        const std::string path = index_path("levels", k);
        require_object(levels[k], path, {"energy", "g_L", "g_R"});
        LevelSpec level;
        level.energy = number_field(levels[k], "energy", path);
        level.g_L = as_complex(member(levels[k], "g_L", path), join(path, "g_L"));
        level.g_R = as_complex(member(levels[k], "g_R", path), join(path, "g_R"));
        model.levels.push_back(level);
    }

    if (const auto it = doc.find("h_override"); it != doc.end()) {
        const MatX h = as_matrix(*it, "h_override");
        if (h.rows() != 2) schema_error("h_override", "expected a 2x2 matrix");
        model.h_override = Mat2(h);
    }
    if (const auto it = doc.find("cross_couplings"); it != doc.end())
        model.cross_couplings = as_matrix(*it, "cross_couplings");
    if (const auto tol = optional_number(doc, "degeneracy_tolerance", ""))
        model.degeneracy_tolerance = *tol;
    model.broadening = optional_number(doc, "broadening", "");
    if (const auto scale = optional_number(doc, "coupling_scale", ""))
        config.coupling_scale = *scale;
    model.invariance = parse_invariance(string_field(doc, "invariance", ""), "invariance");
    config.command = parse_command(string_field(doc, "command", ""), "command");
    config.output = string_field(doc, "output", "");

    if (const auto it = doc.find("time"); it != doc.end()) {
        require_object(*it, "time", {"t_max", "steps"});
        TimeSpec time;
        time.t_max = number_field(*it, "t_max", "time");
        const json& steps = member(*it, "steps", "time");
        if (!steps.is_number_integer()) schema_error("time.steps", "expected an integer");
        if (steps.get<long long>() < 2) schema_error("time.steps", "must be >= 2");
        time.steps = steps.get<std::size_t>();
        if (!(time.t_max > 0.0) || !std::isfinite(time.t_max))
            schema_error("time.t_max", "must be a finite number > 0");
        config.time = time;
    }

    if (const auto it = doc.find("kaon"); it != doc.end()) {
        require_object(*it, "kaon", {"m1", "m2", "gamma1", "gamma2", "envelope"});
        KaonParams kaon;
        kaon.m1 = number_field(*it, "m1", "kaon");
        kaon.m2 = number_field(*it, "m2", "kaon");
        kaon.gamma1 = number_field(*it, "gamma1", "kaon");
        kaon.gamma2 = number_field(*it, "gamma2", "kaon");
        if (kaon.gamma1 < 0.0) schema_error("kaon.gamma1", "must be >= 0");
        if (kaon.gamma2 < 0.0) schema_error("kaon.gamma2", "must be >= 0");
        if (it->contains("envelope")) {
            const std::string envelope = string_field(*it, "envelope", "kaon");
            if (envelope == "standard")
                kaon.envelope = KaonEnvelope::Standard;
            else if (envelope == "full")
                kaon.envelope = KaonEnvelope::Full;
            else
                schema_error("kaon.envelope", "expected \"standard\" or \"full\"");
        }
        config.kaon = kaon;
    }

    if (const auto it = doc.find("sweep"); it != doc.end()) {
        require_object(*it, "sweep", {"parameter", "values", "command"});
        SweepSpec sweep;
        sweep.parameter = string_field(*it, "parameter", "sweep");
        const json& values = member(*it, "values", "sweep");
        if (!values.is_array()) schema_error("sweep.values", "expected an array of numbers");
        for (std::size_t i = 0; i < values.size(); ++i)
            sweep.values.push_back(as_number(values[i], index_path("sweep.values", i)));
        sweep.command = parse_command(string_field(*it, "command", "sweep"), "sweep.command");
        if (sweep.command == Command::Sweep) schema_error("sweep.command", "sweeps cannot nest");
        config.sweep = std::move(sweep);
    }

    if ((config.command == Command::Sweep) != config.sweep.has_value())
        schema_error("sweep", "must be present exactly when command is \"sweep\"");
    const Command effective = config.sweep ? config.sweep->command : config.command;
    if (needs_time(effective) && !config.time)
        schema_error("time", std::string("required by command \"") + to_string(effective) + "\"");
    if (effective == Command::Kaon && !config.kaon)
        schema_error("kaon", "required by command \"kaon\"");
    if (config.sweep) {
        RunConfig probe = config;
        sweep_target(probe, config.sweep->parameter);
    }

    if (effective != Command::Kaon) validate_model(model);
    return config;
}

std::string serialize_config(const RunConfig& config) {
    const ModelSpec& model = config.model;
    json doc;
    doc["doublet"] = {{"m", model.doublet.m},
                      {"delta", model.doublet.delta},
                      {"epsilon", model.doublet.epsilon},
                      {"theta_max", model.doublet.theta_max}};
    json levels = json::array();
    for (const auto& level : model.levels)
        levels.push_back({{"energy", level.energy},
                          {"g_L", complex_json(level.g_L)},
                          {"g_R", complex_json(level.g_R)}});
    doc["levels"] = std::move(levels);
    if (model.h_override) doc["h_override"] = matrix_json(*model.h_override);
    if (model.cross_couplings) doc["cross_couplings"] = matrix_json(*model.cross_couplings);
    doc["degeneracy_tolerance"] = model.degeneracy_tolerance;
    if (model.broadening) doc["broadening"] = *model.broadening;
    doc["coupling_scale"] = config.coupling_scale;
    doc["invariance"] = to_string(model.invariance);
    doc["command"] = to_string(config.command);
    if (config.time) doc["time"] = {{"t_max", config.time->t_max}, {"steps", config.time->steps}};
    if (config.kaon)
        doc["kaon"] = {{"m1", config.kaon->m1},
                       {"m2", config.kaon->m2},
                       {"gamma1", config.kaon->gamma1},
                       {"gamma2", config.kaon->gamma2},
                       {"envelope",
                        config.kaon->envelope == KaonEnvelope::Standard ? "standard" : "full"}};
    if (config.sweep)
        doc["sweep"] = {{"parameter", config.sweep->parameter},
                        {"values", config.sweep->values},
                        {"command", to_string(config.sweep->command)}};
    doc["output"] = config.output;
    return doc.dump(2) + "\n";
}

RunConfig sweep_point(const RunConfig& config, double value) {
    RunConfig point = config;
    *sweep_target(point, config.sweep->parameter) = value;
    point.command = config.sweep->command;
    point.sweep.reset();
    return point;
}

std::string render(const RunConfig& config) {
    switch (config.command) {
        case Command::Reduce: return render_reduce(config);
        case Command::Spectrum: return render_spectrum(config);
        case Command::Evolve: return render_evolve(config);
        case Command::Oracle: return render_oracle(config);
        case Command::Compare: return render_compare(config);
        case Command::Kaon: return render_kaon(config);
        case Command::Sweep: return render_sweep(config);
    }
    return {};
}

void run(const RunConfig& config) {
    const std::string bytes = render(config);
    if (config.output == "-") {
        std::cout << bytes << std::flush;
        return;
    }
    std::ofstream file(config.output, std::ios::binary);
    if (!file) throw Error(ErrorKind::Io, "cannot open output file '" + config.output + "'");
    file << bytes;
    if (!file) throw Error(ErrorKind::Io, "failed writing '" + config.output + "'");
}

}  // namespace chiralww
