// tamefiber: reads a configuration document (file or stdin), writes a report
// document to stdout. Exit status 0 on success, 1 on domain errors, 2 on
// parse or usage errors.

#include "tamefiber/tamefiber.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace tamefiber;
using io::Document;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    bool pretty = false;
    std::vector<Int> d_values;
    std::string jacobian;
    Int bound = 0;
    std::string interior, intersection, node;
    std::string component;
    std::string cls = "sncd";
    std::string kodaira_type;
    Int kodaira_n = 0;
    Int residue_char = 0;
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

io::ParsedInput load(const Options& opt) {
    io::ParsedInput parsed = io::parse(read_input(opt.input));
    if (auto* c = std::get_if<FiberConfiguration>(&parsed)) *c = derive_self_intersections(*c);
    return parsed;
}

FiberConfiguration load_curve(const Options& opt, const std::string& command) {
    io::ParsedInput parsed = load(opt);
    if (auto* c = std::get_if<FiberConfiguration>(&parsed)) return std::move(*c);
    throw UsageError("'" + command + "' needs a curve_dual_graph document");
}

KodairaType parse_type(const std::string& text, Int n) {
    try {
        return parse_kodaira_type(text, n);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

BlowUpSite parse_site(const Options& opt) {
    const int given = !opt.interior.empty() + !opt.intersection.empty() + !opt.node.empty();
    if (given != 1) throw UsageError("blowup needs exactly one of --interior, --intersection, --node");
    if (!opt.interior.empty()) return BlowUpSite::interior(opt.interior);
    if (!opt.node.empty()) return BlowUpSite::node(opt.node);
    const auto comma = opt.intersection.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 == opt.intersection.size())
        throw UsageError("--intersection expects ID,ID");
    return BlowUpSite::intersection(opt.intersection.substr(0, comma), opt.intersection.substr(comma + 1));
}

Document run(const std::string& command, const Options& opt, int& status) {
    if (command == "kodaira") return io::to_document(kodaira_config(parse_type(opt.kodaira_type, opt.kodaira_n), opt.residue_char));

    if (command == "validate") {
        const ValidationReport r = validate(load_curve(opt, command));
        if (!r.ok) status = 1;
        return io::to_document(r);
    }
    if (command == "zeta") {
        const io::ParsedInput in = load(opt);
        if (const auto* c = std::get_if<FiberConfiguration>(&in)) return io::to_document(zeta_report(*c));
        return io::to_document(zeta_report(std::get<StratumData>(in)));
    }
    if (command == "trace") {
        const io::ParsedInput in = load(opt);
        if (const auto* c = std::get_if<FiberConfiguration>(&in)) {
            require_valid_sncd(*c, "trace");
            return io::to_document(trace_report(as_strata(*c)));
        }
        return io::to_document(trace_report(std::get<StratumData>(in)));
    }

    const FiberConfiguration config = load_curve(opt, command);
    if (command == "charpoly") {
        Document out;
        out["char_poly_h1"] = io::to_document(char_poly_h1_factored(config));
        out["q_poly"] = io::to_document(q_poly_factored(config));
        return out;
    }
    if (command == "tame") return io::to_document(is_cohomologically_tame(config, opt.d_values));
    if (command == "saito") {
        std::optional<KodairaType> jac;
        if (!opt.jacobian.empty()) jac = parse_type(opt.jacobian, 0);
        return io::to_document(saito_criterion(config, jac));
    }
    if (command == "degree") return Document{{"degree", semistable_reduction_degree(config)}};
    if (command == "points") return io::to_document(point_degrees(config, opt.bound));
    if (command == "blowup") return io::to_document(blow_up(config, parse_site(opt)));
    if (command == "contract") return io::to_document(contract(config, opt.component));
    if (command == "resolve") return io::to_document(resolve_to_sncd(config));
    if (command == "minimal") {
        if (opt.cls != "sncd" && opt.cls != "ncd") throw UsageError("--class must be sncd or ncd");
        return io::to_document(is_relatively_minimal(config, opt.cls == "ncd" ? Mode::ncd : Mode::sncd));
    }
    throw UsageError("unknown command '" + command + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tame monodromy, tameness and model surgery for fibers of curves"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_flag("--pretty", opt.pretty, "Indented output");

    auto with_input = [&](CLI::App* sub) {
        sub->add_option("input", opt.input, "Configuration document (default: stdin)");
        return sub;
    };
    with_input(app.add_subcommand("validate", "Check the fiber identities"));
    with_input(app.add_subcommand("zeta", "Tame monodromy zeta function"));
    with_input(app.add_subcommand("charpoly", "Characteristic polynomials P_C and Q_C"));
    with_input(app.add_subcommand("tame", "Cohomological tameness"))->add_option("--d", opt.d_values, "d-tameness witnesses");
    with_input(app.add_subcommand("saito", "Saito's criterion"))->add_option("--jacobian", opt.jacobian, "Kodaira type of the Jacobian");
    with_input(app.add_subcommand("degree", "Degree of the minimal semi-stable extension"));
    with_input(app.add_subcommand("points", "Tame degrees with a point"))->add_option("--bound", opt.bound)->required();
    with_input(app.add_subcommand("trace", "Trace formula error term"));
    auto* blowup = with_input(app.add_subcommand("blowup", "Blow up a point of the fiber"));
    blowup->add_option("--interior", opt.interior, "ID");
    blowup->add_option("--intersection", opt.intersection, "ID,ID");
    blowup->add_option("--node", opt.node, "ID");
    with_input(app.add_subcommand("contract", "Contract a (-1)-curve"))->add_option("--component", opt.component)->required();
    with_input(app.add_subcommand("resolve", "Blow up all nodes"));
    with_input(app.add_subcommand("minimal", "Relative minimality"))->add_option("--class", opt.cls, "sncd or ncd");
    auto* kodaira = app.add_subcommand("kodaira", "Configuration of a Kodaira type");
    kodaira->add_option("type", opt.kodaira_type)->required();
    kodaira->add_option("--n", opt.kodaira_n, "Parameter for I_n and I_n*");
    kodaira->add_option("--residue-char,-p", opt.residue_char);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    int status = 0;
    try {
        const Document out = run(command, opt, status);
        std::cout << (opt.pretty ? out.dump(2) : out.dump()) << '\n';
        return status;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return e.is_input_error() ? 2 : 1;
    }
}
