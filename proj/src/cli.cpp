#include <matint/cli.hpp>

#include <omp.h>

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include <matint/errors.hpp>
#include <matint/kp.hpp>
#include <matint/penner.hpp>
#include <matint/ribbon.hpp>
#include <matint/stabilizer.hpp>
#include <matint/wick.hpp>

namespace matint::cli {

namespace {

using json = nlohmann::ordered_json;

std::string monomial_str(const Mono& m, const VariableSpec& vs) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += vs.names[i];
        if (m[i] > 1) s += '^' + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

std::string coeff_str(const Rational& c) { return rat_str(c); }
std::string coeff_str(const NPoly& c) { return c.str(); }

template <class C>
void emit_series(const WeightedSeries<C>& s, const RunConfig& cfg, json& report,
                 std::ostream& out) {
    if (cfg.format == "csv") {
        out << "monomial,coefficient\n";
        for (const auto& [m, c] : s.terms())
            out << monomial_str(m, s.vars()) << ",\"" << coeff_str(c) << "\"\n";
    } else {
        report["series"] = series_to_json(s);
        out << report.dump(2) << '\n';
    }
}

int cmd_scalar_expand(const RunConfig& cfg, std::ostream& out) {
    const int max_degree = cfg.max_degree > 0 ? cfg.max_degree : 4;
    json report;
    report["command"] = cfg.command;
    if (!cfg.profile.empty()) {
        const auto profile = DegreeProfile::parse(cfg.profile);
        report["profile"] = profile.str();
        report["coefficient"] = rat_str(wick::scalar_coefficient(profile));
        out << report.dump(2) << '\n';
        return 0;
    }
    report["max_degree"] = max_degree;
    report["trunc"] = cfg.trunc;
    emit_series(wick::scalar_expansion(max_degree, cfg.trunc), cfg, report, out);
    return 0;
}

int cmd_matrix_expand(const RunConfig& cfg, std::ostream& out) {
    json report;
    report["command"] = cfg.command;
    if (!cfg.profile.empty()) {
        const auto profile = DegreeProfile::parse(cfg.profile);
        if (profile.half_edges() > cfg.budget)
            throw BudgetExceeded("matrix-expand: profile needs " +
                                 std::to_string(profile.half_edges()) + " half-edges");
        report["profile"] = profile.str();
        report["coefficient"] = wick::matrix_bruteforce_sum(profile).str();
        out << report.dump(2) << '\n';
        return 0;
    }
    const int max_degree = cfg.max_degree > 0 ? cfg.max_degree : std::max(3, cfg.trunc);
    if (cfg.trunc > cfg.budget)
        throw BudgetExceeded("matrix-expand: trunc " + std::to_string(cfg.trunc) +
                             " needs profiles with up to " + std::to_string(cfg.trunc) +
                             " half-edges (budget " + std::to_string(cfg.budget) + ")");
    report["max_degree"] = max_degree;
    report["trunc"] = cfg.trunc;
    emit_series(wick::matrix_expansion(max_degree, cfg.trunc), cfg, report, out);
    return 0;
}

int cmd_ribbon_enum(const RunConfig& cfg, std::ostream& out) {
    if (cfg.profile.empty()) throw std::invalid_argument("ribbon-enum: --profile required");
    const auto profile = DegreeProfile::parse(cfg.profile);
    const auto classes = ribbon::enumerate_classes(profile, cfg.connected_only, cfg.budget);
    if (cfg.format == "csv") {
        out << "profile,v,e,b,g,s,aut,sign\n";
        for (const auto& c : classes) {
            out << '"' << profile.str() << "\"," << c.vertices << ',' << c.edges << ','
                << c.boundary << ',';
            if (c.connected)
                out << c.genus;
            out << ',' << c.boundary << ',' << c.aut << ',' << c.sign() << '\n';
        }
        return 0;
    }
    json report;
    report["command"] = cfg.command;
    report["profile"] = profile.str();
    report["connected_only"] = cfg.connected_only;
    auto arr = json::array();
    for (const auto& c : classes) {
        json jc = ribbon::to_json(c.canonical);
        jc["vertices"] = c.vertices;
        jc["edges"] = c.edges;
        jc["boundary"] = c.boundary;
        if (c.connected) jc["genus"] = c.genus;
        jc["connected"] = c.connected;
        jc["aut"] = c.aut;
        jc["sign"] = c.sign();
        arr.push_back(std::move(jc));
    }
    report["classes"] = std::move(arr);
    out << report.dump(2) << '\n';
    return 0;
}

int cmd_penner_verify(const RunConfig& cfg, std::ostream& out) {
    if (cfg.g < 0 || cfg.s < 0) throw std::invalid_argument("penner-verify: --gs required");
    const auto check = penner::verify_penner_identity(cfg.g, cfg.s, cfg.budget);
    json report;
    report["command"] = cfg.command;
    report["g"] = check.g;
    report["s"] = check.s;
    report["graph_sum"] = rat_str(check.graph_sum);
    report["closed_form"] = rat_str(check.closed_form);
    report["match"] = check.match;
    out << report.dump(2) << '\n';
    return check.match ? 0 : 1;
}

int cmd_penner_table(const RunConfig& cfg, std::ostream& out) {
    std::vector<penner::PennerCheck> rows;
    bool all_match = true;
    for (int d = 1; d <= cfg.max_euler; ++d) {
        for (int g = 0; 2 * g <= d + 1; ++g) {
            const int s = d + 2 - 2 * g;
            if (s < 1) continue;
            rows.push_back(penner::verify_penner_identity(g, s, cfg.budget));
            all_match = all_match && rows.back().match;
        }
    }
    if (cfg.format == "csv") {
        out << "g,s,graph_sum,closed_form,match\n";
        for (const auto& r : rows)
            out << r.g << ',' << r.s << ",\"" << rat_str(r.graph_sum) << "\",\""
                << rat_str(r.closed_form) << "\"," << (r.match ? "true" : "false") << '\n';
    } else {
        json report;
        report["command"] = cfg.command;
        auto arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"g", r.g},
                           {"s", r.s},
                           {"graph_sum", rat_str(r.graph_sum)},
                           {"closed_form", rat_str(r.closed_form)},
                           {"match", r.match}});
        report["rows"] = std::move(arr);
        report["all_match"] = all_match;
        out << report.dump(2) << '\n';
    }
    return all_match ? 0 : 1;
}

kp::MomentMatrix load_moments(const RunConfig& cfg, int rows, json& report) {
    const std::string& src = cfg.moments;
    report["moments"] = src;
    if (src == "gaussian") return kp::gaussian_moment_matrix(cfg.n, rows);
    const auto colon = src.find(':');
    const std::string kind = src.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : src.substr(colon + 1);
    if (kind == "random") {
        const std::uint64_t seed = arg.empty() ? cfg.seed : std::stoull(arg);
        report["seed"] = seed;
        return kp::random_moment_matrix(cfg.n, rows, seed);
    }
    if (kind == "soliton" || kind == "file") {
        std::ifstream in(arg);
        if (!in) throw std::invalid_argument("kp-verify: cannot open " + arg);
        nlohmann::json j;
        in >> j;
        if (kind == "soliton") return kp::soliton_moment_matrix(kp::soliton_from_json(j), rows);
        auto m = kp::moment_matrix_from_json(j);
        if (m.rows < rows)
            throw std::invalid_argument("kp-verify: moments file has too few rows (need " +
                                        std::to_string(rows) + ")");
        return m;
    }
    throw std::invalid_argument("kp-verify: unknown moments source '" + src + "'");
}

int cmd_kp_verify(const RunConfig& cfg, std::ostream& out) {
    if (cfg.n < 1) throw std::invalid_argument("kp-verify: need --n >= 1");
    // residual is verified to weighted degree cfg.trunc; tau needs headroom
    const int tau_trunc = cfg.trunc + 6;
    const int rows = cfg.n + tau_trunc;
    json report;
    report["command"] = cfg.command;
    report["n"] = cfg.n;
    const auto xi = load_moments(cfg, rows, report);
    const auto tau = kp::tau_det(xi, tau_trunc);
    const auto u = kp::u_from_tau(tau);
    const auto residual = kp::kp_residual(u);
    report["tau_constant_term"] = rat_str(tau.constant_term());
    report["residual_max_weight_checked"] = residual.trunc();
    report["residual_zero"] = residual.is_zero();
    if (!residual.is_zero()) report["residual"] = series_to_json(residual);
    out << report.dump(2) << '\n';
    return residual.is_zero() ? 0 : 1;
}

int cmd_sl2_verify(const RunConfig& cfg, std::ostream& out) {
    if (cfg.n < 1 || cfg.k < 1) throw std::invalid_argument("sl2-verify: need --n, --k >= 1");
    stab::MomentContext ctx = stab::MomentContext::symbolic(cfg.k);
    bool symbolic = true;
    if (!cfg.a_values.empty()) {
        std::vector<Rational> vals;
        std::istringstream is(cfg.a_values);
        std::string item;
        while (std::getline(is, item, ',')) vals.push_back(rat_parse(item));
        ctx = stab::MomentContext::numeric(cfg.k, vals);
        symbolic = false;
    }
    json report;
    report["command"] = cfg.command;
    report["n"] = cfg.n;
    report["k"] = cfg.k;
    report["trunc"] = cfg.trunc;
    report["symbolic"] = symbolic;
    bool all_ok = true;

    auto stability = json::array();
    for (int i : {-1, 0, 1}) {
        const auto rep = stab::check_stability(i, cfg.n, ctx, cfg.trunc);
        json ji;
        ji["i"] = i;
        ji["ok"] = rep.ok;
        ji["witness_matches_predicted"] = rep.witness_matches_predicted;
        auto wit = json::array();
        for (const auto& per_j : rep.witness) {
            auto row = json::array();
            for (const auto& c : per_j) row.push_back(c.str());
            wit.push_back(std::move(row));
        }
        ji["witness"] = std::move(wit);
        if (!rep.note.empty()) ji["note"] = rep.note;
        all_ok = all_ok && rep.ok && rep.witness_matches_predicted;
        stability.push_back(std::move(ji));
    }
    report["stability"] = std::move(stability);

    auto witt = json::array();
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j) {
            const bool ok = stab::check_witt(i, j, cfg.n, ctx, 2 * cfg.k + 6);
            witt.push_back({{"i", i}, {"j", j}, {"ok", ok}});
            all_ok = all_ok && ok;
        }
    report["witt"] = std::move(witt);
    report["all_ok"] = all_ok;
    out << report.dump(2) << '\n';
    return all_ok ? 0 : 1;
}

int cmd_oracle_crosscheck(const RunConfig& cfg, std::ostream& out) {
    bool all_match = true;
    struct Row {
        std::string profile;
        std::string wick_sum;
        std::string ribbon_sum;
        bool match;
    };
    std::vector<Row> rows;
    for (const auto& profile : DegreeProfile::all_up_to_weight(3, cfg.budget, cfg.budget)) {
        if (profile.counts().empty() || !profile.even()) continue;
        const NPoly lhs = wick::matrix_bruteforce_sum(profile);
        const NPoly rhs = ribbon::class_weighted_sum(profile, cfg.budget);
        const bool match = lhs == rhs;
        all_match = all_match && match;
        rows.push_back({profile.str(), lhs.str(), rhs.str(), match});
    }
    if (cfg.format == "csv") {
        out << "profile,pairing_sum,class_sum,match\n";
        for (const auto& r : rows)
            out << '"' << r.profile << "\",\"" << r.wick_sum << "\",\"" << r.ribbon_sum
                << "\"," << (r.match ? "true" : "false") << '\n';
    } else {
        json report;
        report["command"] = cfg.command;
        report["max_half_edges"] = cfg.budget;
        auto arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"profile", r.profile},
                           {"pairing_sum", r.wick_sum},
                           {"class_sum", r.ribbon_sum},
                           {"match", r.match}});
        report["profiles"] = std::move(arr);
        report["all_match"] = all_match;
        out << report.dump(2) << '\n';
    }
    return all_match ? 0 : 1;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
        if (cfg.format != "json" && cfg.format != "csv")
            throw std::invalid_argument("format must be json or csv");
        if (cfg.command == "scalar-expand") return cmd_scalar_expand(cfg, out);
        if (cfg.command == "matrix-expand") return cmd_matrix_expand(cfg, out);
        if (cfg.command == "ribbon-enum") return cmd_ribbon_enum(cfg, out);
        if (cfg.command == "penner-verify") return cmd_penner_verify(cfg, out);
        if (cfg.command == "penner-table") return cmd_penner_table(cfg, out);
        if (cfg.command == "kp-verify") return cmd_kp_verify(cfg, out);
        if (cfg.command == "sl2-verify") return cmd_sl2_verify(cfg, out);
        if (cfg.command == "oracle-crosscheck") return cmd_oracle_crosscheck(cfg, out);
        throw std::invalid_argument("unknown command '" + cfg.command + "'");
    } catch (const BudgetExceeded& e) {
        err << json{{"error", "budget_exceeded"}, {"detail", e.what()}}.dump() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << json{{"error", "invalid_config"}, {"detail", e.what()}}.dump() << '\n';
        return 2;
    }
}

}  // namespace matint::cli
