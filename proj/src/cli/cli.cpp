#include "towerlab/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "towerlab/scenario/builtin.hpp"

namespace towerlab::cli {

namespace {

using scenario::json;
using scenario::NChoice;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string scenario;
    std::string file;
    std::string n = "default";
    std::string format = "text";
    std::string output;
};

long parse_long(const std::string& s) {
    size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        throw UsageError("--n expects an integer, 'symbolic' or 'range:a..b', got '" + s + "'");
    }
    if (used != s.size()) throw UsageError("--n expects an integer, 'symbolic' or 'range:a..b', got '" + s + "'");
    return v;
}

std::vector<NChoice> parse_n(const std::string& text, scenario::NPolicy policy) {
    if (text == "default") return {policy == scenario::NPolicy::Fixed ? NChoice{3} : NChoice{}};
    if (text == "symbolic") return {NChoice{}};
    if (text.rfind("range:", 0) == 0) {
        std::string body = text.substr(6);
        auto dots = body.find("..");
        if (dots == std::string::npos) throw UsageError("range must look like range:3..6");
        long a = parse_long(body.substr(0, dots)), b = parse_long(body.substr(dots + 2));
        if (b < a) throw UsageError("empty range " + text);
        std::vector<NChoice> out;
        for (long k = a; k <= b; ++k) out.push_back(NChoice{k});
        return out;
    }
    return {NChoice{parse_long(text)}};
}

scenario::Scenario load(const Config& c) {
    if (!c.file.empty() && !c.scenario.empty()) throw UsageError("give either --scenario or --file, not both");
    if (!c.file.empty()) return scenario::load_scenario_file(c.file);
    if (c.scenario.empty()) throw UsageError("missing --scenario or --file");
    return scenario::builtin_scenario(c.scenario);
}

std::string resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative())
        if (const char* dir = std::getenv("TOWERLAB_REPORT_DIR"); dir && *dir) p = std::filesystem::path(dir) / p;
    return p.string();
}

void emit(const Config& c, const std::string& text, std::ostream& out) {
    if (c.output.empty()) {
        out << text;
        return;
    }
    std::string path = resolve_output(c.output);
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << text;
}

std::string pad(const std::string& s, size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); }

std::string render_grid(const std::vector<std::string>& rows, const std::vector<std::string>& cols, const json& cells) {
    std::vector<std::vector<std::string>> grid;
    grid.push_back({""});
    for (const auto& c : cols) grid[0].push_back(c);
    for (size_t i = 0; i < rows.size(); ++i) {
        grid.push_back({rows[i]});
        for (const auto& x : cells[i]) grid.back().push_back(scenario::render_value(x));
    }
    std::vector<size_t> width(cols.size() + 1, 0);
    for (const auto& r : grid)
        for (size_t k = 0; k < r.size(); ++k) width[k] = std::max(width[k], r[k].size());
    std::ostringstream s;
    for (const auto& r : grid) {
        std::string line;
        for (size_t k = 0; k < r.size(); ++k) line += pad(r[k], width[k] + 2);
        while (!line.empty() && line.back() == ' ') line.pop_back();
        s << line << "\n";
    }
    return s.str();
}

int cmd_verify(const Config& c, std::ostream& out) {
    scenario::Scenario s = load(c);
    std::vector<scenario::VerificationReport> reports;
    for (NChoice n : parse_n(c.n, s.policy)) reports.push_back(scenario::run(s, n));
    bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.all_pass(); });
    std::string text;
    if (c.format == "json") {
        json j = reports.size() == 1 && c.n.rfind("range:", 0) != 0 ? scenario::to_json(reports[0]) : json::array();
        if (j.is_array())
            for (const auto& r : reports) j.push_back(scenario::to_json(r));
        text = j.dump(2) + "\n";
    } else {
        for (size_t i = 0; i < reports.size(); ++i) text += (i ? "\n" : "") + scenario::render_text(reports[i]);
    }
    emit(c, text, out);
    return ok ? 0 : 1;
}

int cmd_table(const Config& c, std::ostream& out) {
    scenario::Scenario s = load(c);
    json all = json::array();
    std::string text;
    for (NChoice n : parse_n(c.n, s.policy)) {
        auto v = scenario::table_view(s, n);
        if (!v) throw UsageError("scenario '" + s.name + "' has no intersection table");
        all.push_back({{"scenario", s.name}, {"n", n.str()}, {"rows", v->row_labels}, {"columns", v->col_labels},
                       {"cells", v->cells}, {"kernel", v->kernel}});
        text += (text.empty() ? "" : "\n") + ("table " + s.name + " (n = " + n.str() + ")\n") +
                render_grid(v->row_labels, v->col_labels, v->cells);
        for (const auto& k : v->kernel) text += "kernel generator: " + k + "\n";
    }
    if (c.format == "json") text = (all.size() == 1 ? all[0] : all).dump(2) + "\n";
    emit(c, text, out);
    return 0;
}

int cmd_cone(const Config& c, std::ostream& out) {
    scenario::Scenario s = load(c);
    json all = json::array();
    std::string text;
    for (NChoice n : parse_n(c.n, s.policy)) {
        auto v = scenario::cone_view(s, n);
        if (!v) throw UsageError("scenario '" + s.name + "' has no cone");
        json j = {{"scenario", s.name}, {"n", n.str()}, {"space", v->space}, {"generators", v->generators}, {"vectors", v->vectors}};
        if (v->certificate) j["certificate"] = *v->certificate;
        all.push_back(j);
        text += (text.empty() ? "" : "\n") + ("cone on " + v->space + " (n = " + n.str() + ")\n");
        for (size_t i = 0; i < v->generators.size(); ++i)
            text += "  " + pad(v->generators[i], 12) + scenario::render_value(v->vectors[i]) + "\n";
        if (v->certificate) text += "supporting functional: " + *v->certificate + "\n";
    }
    if (c.format == "json") text = (all.size() == 1 ? all[0] : all).dump(2) + "\n";
    emit(c, text, out);
    return 0;
}

int cmd_list(const Config& c, std::ostream& out) {
    auto items = scenario::list_scenarios();
    std::string text;
    if (c.format == "json") {
        json j = json::array();
        for (const auto& i : items)
            j.push_back({{"name", i.name}, {"description", i.description}, {"n_policy", scenario::to_string(i.policy)}});
        text = j.dump(2) + "\n";
    } else {
        size_t w = 0;
        for (const auto& i : items) w = std::max(w, i.name.size());
        for (const auto& i : items)
            text += pad(i.name, w + 2) + pad("[" + scenario::to_string(i.policy) + "]", 12) + i.description + "\n";
    }
    emit(c, text, out);
    return 0;
}

int cmd_export(const Config& c, std::ostream& out) {
    if (c.scenario.empty()) throw UsageError("export needs --scenario");
    emit(c, scenario::export_scenario(c.scenario).dump(2) + "\n", out);
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of the tower, curve and local-model computations", "towerlab"};
    app.require_subcommand(1);
    Config c;
    auto add_common = [&](CLI::App* sub, bool needs_scenario) {
        if (needs_scenario) {
            sub->add_option("--scenario", c.scenario, "built-in scenario name");
            sub->add_option("--file", c.file, "scenario document (JSON)");
            sub->add_option("--n", c.n, "integer >= 3, 'symbolic', or 'range:a..b'");
        }
        sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--output", c.output, "write to this path (relative paths use TOWERLAB_REPORT_DIR)");
    };
    auto* verify = app.add_subcommand("verify", "run a scenario and print its report");
    auto* table = app.add_subcommand("table", "print the intersection table of a scenario");
    auto* cone = app.add_subcommand("cone", "print the cone generators of a scenario");
    auto* list = app.add_subcommand("list", "list the built-in scenarios");
    auto* exp = app.add_subcommand("export", "write a built-in scenario as a JSON document");
    add_common(verify, true);
    add_common(table, true);
    add_common(cone, true);
    add_common(list, false);
    exp->add_option("--scenario", c.scenario, "built-in scenario name")->required();
    exp->add_option("--output", c.output, "write to this path (relative paths use TOWERLAB_REPORT_DIR)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(c, out);
        if (table->parsed()) return cmd_table(c, out);
        if (cone->parsed()) return cmd_cone(c, out);
        if (list->parsed()) return cmd_list(c, out);
        return cmd_export(c, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const scenario::ScenarioError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace towerlab::cli
