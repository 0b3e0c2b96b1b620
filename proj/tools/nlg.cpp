// Command-line front end: bound tables, complementarity curves, closed-form
// verification, and quantum model evaluation.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "nlg/json_io.hpp"
#include "nlg/ns_lp.hpp"
#include "nlg/quantum.hpp"
#include "nlg/verify.hpp"

using namespace nlg;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Built-in names: gyni3, ip3, mi3, mii3, mf3, chsh, svetlichny:n:cbits
// (cbits = c0 c1 ... cn); anything else is a JSON game-spec path.
GameSpec resolve_game(const std::string& name) {
    if (name == "gyni3") return catalog_gyni3();
    if (name == "ip3") return catalog_ip3();
    if (name == "mi3") return catalog_mermin1();
    if (name == "mii3") return catalog_mermin2();
    if (name == "mf3") return catalog_mermin_facet();
    if (name == "chsh") return SvetlichnyGame(2);
    if (name.rfind("svetlichny:", 0) == 0) {
        std::string rest = name.substr(11);
        auto colon = rest.find(':');
        if (colon == std::string::npos) throw UsageError("expected svetlichny:n:cbits");
        int n = 0;
        try {
            n = std::stoi(rest.substr(0, colon));
        } catch (const std::exception&) {
            throw UsageError("bad party count in " + name);
        }
        std::string bits = rest.substr(colon + 1);
        if (bits.size() != static_cast<std::size_t>(n + 1))
            throw UsageError("svetlichny:" + std::to_string(n) + " needs " +
                             std::to_string(n + 1) + " coefficient bits");
        std::vector<int> c;
        for (char ch : bits) {
            if (ch != '0' && ch != '1') throw UsageError("coefficient bits must be 0/1");
            c.push_back(ch - '0');
        }
        return SvetlichnyGame(n, c);
    }
    try {
        return parse_game_spec(read_file(name));
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError("cannot parse game spec '" + name + "': " + e.what());
    }
}

std::string label_of(const GameSpec& spec) {
    if (const auto* g = std::get_if<SvetlichnyGame>(&spec)) return g->label();
    const auto& f = std::get<BellFunctional>(spec);
    return f.label.empty() ? "functional" : f.label;
}

// Bundled quantum model for a game, when one exists: GHZ with the optimal
// equatorial settings for Svetlichny games, the closed-form angles for mf3.
std::optional<QuantumModel> bundled_model(const GameSpec& spec, const std::string& name) {
    if (const auto* g = std::get_if<SvetlichnyGame>(&spec))
        return make_model(g->n, ghz(g->n), optimal_svetlichny_settings(*g));
    if (name == "mf3") {
        std::vector<std::array<MeasurementSetting, 2>> settings(
            3, {MeasurementSetting{M_PI / 2, -M_PI / 6}, MeasurementSetting{M_PI / 2, M_PI / 3}});
        return make_model(3, ghz(3), settings);
    }
    return std::nullopt;
}

std::optional<std::string> reference_value(const std::string& name) {
    // Known classical/no-signaling bounds for the built-in table, quoted for
    // the comparison column.
    if (name == "gyni3") return "lhv=1/4 ns=1/3";
    if (name == "ip3") return "lhv=0 ns=1/2";
    if (name == "mi3") return "lhv=7/8 ns=1";
    if (name == "mii3") return "lhv=3/4 ns=1";
    if (name == "mf3") return "lhv=2 ns=4";
    if (name == "chsh") return "lhv=3/4 ns=1";
    return std::nullopt;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

int cmd_bounds(const std::vector<std::string>& names, const std::string& format,
               const std::string& out_path) {
    if (names.empty()) throw UsageError("bounds: at least one game required");
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    std::ostringstream csv;
    csv << "game,lhv,lhv_decimal,ns,ns_decimal,quantum,reference\n";
    for (const std::string& name : names) {
        GameSpec spec = resolve_game(name);
        BellFunctional f = functional_of(spec);
        Rat lhv = lhv_max(f).value;
        Rat ns = feasible_range(f.n, f).second;
        std::string quantum;
        if (auto m = bundled_model(spec, name))
            quantum = fmt_double(value(f, behavior_from_model(*m)));
        std::string ref = reference_value(name).value_or("");
        csv << label_of(spec) << ',' << rat_str(lhv) << ',' << rat_decimal(lhv) << ','
            << rat_str(ns) << ',' << rat_decimal(ns) << ',' << quantum << ',' << ref << '\n';
        nlohmann::ordered_json row;
        row["game"] = label_of(spec);
        row["lhv"] = rat_str(lhv);
        row["lhv_decimal"] = rat_decimal(lhv);
        row["ns"] = rat_str(ns);
        row["ns_decimal"] = rat_decimal(ns);
        if (!quantum.empty()) row["quantum"] = quantum;
        if (!ref.empty()) row["reference"] = ref;
        rows.push_back(row);
    }
    std::string text = format == "json" ? rows.dump(2) + "\n" : csv.str();
    if (out_path.empty())
        std::cout << text;
    else {
        std::ofstream out(out_path);
        if (!out) throw UsageError("cannot write " + out_path);
        out << text;
    }
    return 0;
}

int cmd_curve(const std::string& objective, const std::string& constraint, int n, int grid,
              const std::string& format, const std::string& out_path,
              const std::optional<std::string>& xmin, const std::optional<std::string>& xmax) {
    if (grid < 2) throw UsageError("curve: --grid must be >= 2");
    GameSpec ospec = resolve_game(objective);
    GameSpec cspec = resolve_game(constraint);
    BellFunctional obj = functional_of(ospec);
    BellFunctional con = functional_of(cspec);
    if (n == 0) n = std::max(obj.n, con.n);
    if (obj.n < n) {
        std::vector<int> parties(obj.n);
        for (int i = 0; i < obj.n; ++i) parties[i] = i + 1;
        obj = lift(obj, n, parties);
    }
    if (con.n < n) {
        std::vector<int> parties(con.n);
        for (int i = 0; i < con.n; ++i) parties[i] = i + 1;
        con = lift(con, n, parties);
    }
    if (obj.n != n || con.n != n) throw UsageError("curve: party counts exceed --n");
    std::optional<std::pair<Rat, Rat>> range;
    if (xmin || xmax) {
        if (!xmin || !xmax) throw UsageError("curve: --xmin and --xmax go together");
        range = std::make_pair(parse_rational(*xmin), parse_rational(*xmax));
    }
    ComplementarityCurve curve = trace_curve(n, obj, con, grid, range);
    bool any_feasible = false;
    for (const auto& pt : curve.points) any_feasible |= pt.y.has_value();
    std::string text;
    if (format == "json") {
        nlohmann::ordered_json j;
        j["objective"] = label_of(ospec);
        j["constraint"] = label_of(cspec);
        j["n"] = n;
        j["points"] = nlohmann::ordered_json::array();
        for (const auto& pt : curve.points) {
            nlohmann::ordered_json p;
            p["x"] = rat_str(pt.x);
            p["x_decimal"] = rat_decimal(pt.x);
            if (pt.y) {
                p["y"] = rat_str(*pt.y);
                p["y_decimal"] = rat_decimal(*pt.y);
                p["status"] = "optimal";
            } else {
                p["status"] = "infeasible";
            }
            j["points"].push_back(p);
        }
        text = j.dump(2) + "\n";
    } else {
        text = curve_csv(curve);
    }
    if (out_path.empty())
        std::cout << text;
    else {
        std::ofstream out(out_path);
        if (!out) throw UsageError("cannot write " + out_path);
        out << text;
    }
    if (!any_feasible) {
        std::cerr << "curve: constraint infeasible at every grid point\n";
        return 1;
    }
    return 0;
}

int cmd_verify(const std::string& theorem, int n, int k, int grid) {
    if (grid < 2) throw UsageError("verify: --grid must be >= 2");
    VerifyReport rep;
    if (theorem == "1") {
        if (n < 2 || n > 4) throw UsageError("verify 1: --n must be in [2,4]");
        rep = verify_sn_vs_sn(n, grid);
    } else if (theorem == "2") {
        if (n < 2 || k < 1 || k >= n) throw UsageError("verify 2: need 1 <= k < n");
        rep = verify_sn_vs_sk(n, k, grid);
    } else if (theorem == "C" || theorem == "c") {
        if (n < 2) throw UsageError("verify C: --n must be >= 2");
        if (k < 1 || k >= n) throw UsageError("verify C: need 1 <= k < n");
        rep = verify_sn_vs_aux(n, k, grid);
    } else if (theorem == "D" || theorem == "d") {
        if (n < 2) throw UsageError("verify D: --n must be >= 2");
        rep = verify_sn_vs_marginal(n, grid);
    } else {
        throw UsageError("verify: --theorem must be one of 1, 2, C, D");
    }
    std::cout << "checks: " << rep.pass + rep.fail << " pass: " << rep.pass
              << " fail: " << rep.fail << '\n';
    if (!rep.ok()) {
        std::cout << "first failure: " << rep.first_failure << '\n';
        return 1;
    }
    return 0;
}

QuantumModel resolve_model(const std::string& name) {
    if (name.rfind("ghz", 0) == 0) {
        auto dash = name.find('-');
        if (dash != std::string::npos) {
            int n = 0;
            try {
                n = std::stoi(name.substr(3, dash - 3));
            } catch (const std::exception&) {
                throw UsageError("bad model name: " + name);
            }
            std::string kind = name.substr(dash + 1);
            if (kind == "svetlichny") return make_model(n, ghz(n), optimal_svetlichny_settings(n));
            if (kind == "mermin" && n == 3) {
                std::vector<std::array<MeasurementSetting, 2>> settings(
                    3, {MeasurementSetting{M_PI / 2, -M_PI / 6},
                        MeasurementSetting{M_PI / 2, M_PI / 3}});
                return make_model(3, ghz(3), settings);
            }
            throw UsageError("unknown built-in model: " + name);
        }
    }
    try {
        return parse_model(read_file(name));
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError("cannot parse model '" + name + "': " + e.what());
    }
}

int cmd_quantum(const std::string& model_name, const std::vector<std::string>& games,
                const std::string& format, const std::string& out_path) {
    QuantumModel m = resolve_model(model_name);
    FloatBehavior b = behavior_from_model(m);
    std::ostringstream csv;
    csv << "game,value\n";
    nlohmann::ordered_json j;
    j["model"] = model_name;
    j["normalization_residual"] = normalization_residual(b);
    j["ns_residual"] = ns_residual(b);
    j["values"] = nlohmann::ordered_json::array();
    for (const std::string& name : games) {
        GameSpec spec = resolve_game(name);
        BellFunctional f = functional_of(spec);
        if (f.n != m.n) throw UsageError("quantum: game arity mismatch for " + name);
        double v = value(f, b);
        csv << label_of(spec) << ',' << fmt_double(v) << '\n';
        nlohmann::ordered_json row;
        row["game"] = label_of(spec);
        row["value"] = v;
        j["values"].push_back(row);
    }
    csv << "# normalization_residual=" << fmt_double(normalization_residual(b))
        << " ns_residual=" << fmt_double(ns_residual(b)) << '\n';
    std::string text = format == "json" ? j.dump(2) + "\n" : csv.str();
    if (out_path.empty())
        std::cout << text;
    else {
        std::ofstream out(out_path);
        if (!out) throw UsageError("cannot write " + out_path);
        out << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiparty binary nonlocal game toolkit"};
    app.require_subcommand(1);

    std::string format = "csv";
    std::string out_path;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_path, "output file (default stdout)");

    auto* bounds = app.add_subcommand("bounds", "classical/no-signaling/quantum bound table");
    std::vector<std::string> bound_games;
    bounds->add_option("games", bound_games, "game names or spec paths");

    auto* curve = app.add_subcommand("curve", "constrained-maximum curve over a grid");
    std::string objective, constraint;
    int n = 0, grid = 101, k = 1;
    std::optional<std::string> xmin, xmax;
    curve->add_option("--objective", objective, "objective game")->required();
    curve->add_option("--constraint", constraint, "constraint game")->required();
    curve->add_option("--n", n, "party count (default: inferred)");
    curve->add_option("--grid", grid, "grid points");
    curve->add_option("--xmin", xmin, "grid lower end (rational)");
    curve->add_option("--xmax", xmax, "grid upper end (rational)");

    auto* verify = app.add_subcommand("verify", "closed form vs LP over a grid");
    std::string theorem;
    int verify_grid = 11;
    verify->add_option("--theorem", theorem, "one of 1, 2, C, D")->required();
    verify->add_option("--n", n, "party count")->required();
    verify->add_option("--k", k, "subgame party count (theorems 2, C)");
    verify->add_option("--grid", verify_grid, "grid points");

    auto* quantum = app.add_subcommand("quantum", "evaluate games on a quantum model");
    std::string model_name;
    std::vector<std::string> quantum_games;
    quantum->add_option("--model", model_name, "model path or built-in ghzN-svetlichny, ghz3-mermin")
        ->required();
    quantum->add_option("games", quantum_games, "game names or spec paths");

    // Let --format/--out appear after the subcommand name as well.
    for (auto* sub : {bounds, curve, verify, quantum}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (bounds->parsed()) return cmd_bounds(bound_games, format, out_path);
        if (curve->parsed())
            return cmd_curve(objective, constraint, n, grid, format, out_path, xmin, xmax);
        if (verify->parsed()) return cmd_verify(theorem, n, k, verify_grid);
        if (quantum->parsed()) return cmd_quantum(model_name, quantum_games, format, out_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
