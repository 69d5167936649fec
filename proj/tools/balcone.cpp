// balcone: intersection numbers and balanced cones of rank-2 complete
// intersections in products of projective spaces.

#include "balcone/cli.hpp"
#include "balcone/svg.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

namespace {

std::string read_file(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw balcone::UsageError("cannot read '" + path + "'");
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

balcone::Vec2 parse_pair(const std::string &text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw balcone::UsageError("expected C1,C2, got '" + text + "'");
    try {
        return {balcone::parse_rational(text.substr(0, comma)),
                balcone::parse_rational(text.substr(comma + 1))};
    } catch (const balcone::ValidationError &) {
        throw balcone::UsageError("expected C1,C2, got '" + text + "'");
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Intersection numbers and balanced cones of complete "
                 "intersections in products of projective spaces"};
    std::string command;
    std::vector<std::string> args;
    std::string scenario_path;
    std::string format = "text";
    std::string out_path;
    std::string ample = "3,4";
    std::string report_path;

    std::string command_help = "one of:";
    for (const auto &c : balcone::commands())
        command_help += " " + c;
    app.add_option("command", command, command_help)->required();
    app.add_option("args", args, "command arguments");
    app.add_option("--scenario", scenario_path,
                   "scenario JSON file (default: built-in quintic conifold)");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", out_path, "write output to FILE instead of stdout");
    app.add_option("--ample", ample, "ample class C1,C2 used by demo");
    app.add_option("--report", report_path,
                   "render: draw an existing gap/demo JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? balcone::kExitOk : balcone::kExitUsage;
    }

    try {
        balcone::Scenario scenario =
            scenario_path.empty()
                ? balcone::quintic_conifold_scenario()
                : balcone::parse_scenario(read_file(scenario_path));

        balcone::RunOptions options;
        options.args = args;
        options.ample = parse_pair(ample);
        options.color = out_path.empty() && format == "text" &&
                        std::getenv("NO_COLOR") == nullptr &&
                        isatty(STDOUT_FILENO);
        if (!report_path.empty()) {
            try {
                options.report =
                    balcone::ordered_json::parse(read_file(report_path));
            } catch (const nlohmann::json::parse_error &e) {
                throw balcone::ValidationError("report: " +
                                               std::string(e.what()));
            }
        }

        balcone::Report report = balcone::run(command, scenario, options);
        std::string output = report.svg      ? *report.svg
                             : format == "json" ? report.machine.dump(2) + "\n"
                                                : report.text;
        if (out_path.empty())
            std::cout << output;
        else
            balcone::write_file(out_path, output);
        return balcone::kExitOk;
    } catch (const std::exception &e) {
        std::cerr << "balcone: " << e.what() << "\n";
        return balcone::exit_code_for(e);
    }
}
