// chiralww: run a JSON-configured reduction, spectrum, evolution, oracle, comparison,
// kaon, or sweep job and write CSV/JSON output.

#include "chiralww/cli.hpp"
#include "chiralww/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

namespace {

std::string read_all(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw chiralww::Error(chiralww::ErrorKind::Io, "cannot read config '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Effective two-level racemization dynamics for a chiral doublet coupled to "
                 "excited levels (hbar = 1; divide times by hbar to rescale)."};
    std::string config_path;
    std::string output;
    bool check_only = false;
    app.add_option("config", config_path, "JSON run configuration ('-' for stdin)")->required();
    app.add_option("-o,--output", output, "Override the configured output path ('-' for stdout)");
    app.add_flag("--check", check_only, "Validate the configuration and exit");
    CLI11_PARSE(app, argc, argv);

    try {
        chiralww::RunConfig config = chiralww::parse_config(read_all(config_path));
        if (!output.empty()) config.output = output;
        if (check_only) return 0;
        chiralww::run(config);
    } catch (const chiralww::Error& e) {
        std::cerr << "chiralww: " << chiralww::to_string(e.kind()) << ": " << e.what() << '\n';
        return chiralww::exit_code(e.kind());
    }
    return 0;
}
