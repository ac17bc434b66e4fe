#include "suninv/cli.hpp"

#include "suninv/algebra.hpp"
#include "suninv/census.hpp"
#include "suninv/errors.hpp"
#include "suninv/mixed.hpp"
#include "suninv/rs.hpp"
#include "suninv/unitary.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace suninv {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class Format { Table, Json, Csv };

constexpr int kExitPass = 0;
constexpr int kExitFailedVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ',';
        out << csv_escape(cells[i]);
    }
    out << '\n';
}

// Space-padded columns, two spaces between, nothing after the last cell.
void write_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (row.size() > widths.size()) widths.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << "  ";
            if (i + 1 < row.size())
                out << std::left << std::setw(static_cast<int>(widths[i])) << row[i];
            else
                out << row[i];
        }
        out << '\n';
    }
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

std::string format_double(double v) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(3) << v;
    return os.str();
}

ordered_json report_json(const CensusReport& report) {
    ordered_json j;
    j["claim"] = report.claim;
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : report.params) params[key] = std::stoi(value);
    j["params"] = params;
    ordered_json values = ordered_json::object();
    for (const auto& [name, value] : report.values) values[name] = value.to_string();
    j["values"] = values;
    j["passed"] = report.passed;
    return j;
}

void render_report(const CensusReport& report, Format format, std::ostream& out) {
    switch (format) {
    case Format::Json:
        out << report_json(report).dump() << '\n';
        return;
    case Format::Csv: {
        write_csv_row(out, {"field", "value"});
        write_csv_row(out, {"claim", report.claim});
        for (const auto& [key, value] : report.params) write_csv_row(out, {key, value});
        for (const auto& [name, value] : report.values)
            write_csv_row(out, {name, value.to_string()});
        write_csv_row(out, {"passed", report.passed ? "true" : "false"});
        return;
    }
    case Format::Table: {
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"claim", report.claim});
        for (const auto& [key, value] : report.params) rows.push_back({key, value});
        for (const auto& [name, value] : report.values)
            rows.push_back({name, value.to_string()});
        rows.push_back({"passed", yes_no(report.passed)});
        write_table(out, rows);
        return;
    }
    }
}

int finish_report(const CensusReport& report, Format format, std::ostream& out) {
    render_report(report, format, out);
    return report.passed ? kExitPass : kExitFailedVerification;
}

int run_figure1(int k, int cap, Format format, std::ostream& out) {
    std::vector<FigureRow> table = figure_one_table(k, cap);
    if (format == Format::Json) {
        ordered_json j;
        j["k"] = k;
        ordered_json rows = ordered_json::array();
        for (const FigureRow& row : table) {
            ordered_json r;
            r["perm"] = format_permutation(row.perm);
            r["p"] = row.pair.p.to_string();
            r["q"] = row.pair.q.to_string();
            r["diagonal"] = row.diagonal;
            rows.push_back(r);
        }
        j["rows"] = rows;
        out << j.dump() << '\n';
        return kExitPass;
    }
    if (format == Format::Csv) {
        write_csv_row(out, {"perm", "p", "q", "diagonal"});
        for (const FigureRow& row : table)
            write_csv_row(out, {format_permutation(row.perm), row.pair.p.to_string(),
                                row.pair.q.to_string(), row.diagonal ? "true" : "false"});
        return kExitPass;
    }
    std::vector<std::vector<std::string>> rows{{"perm", "P", "Q", "diagonal"}};
    for (const FigureRow& row : table)
        rows.push_back({format_permutation(row.perm), row.pair.p.to_string(),
                        row.pair.q.to_string(), yes_no(row.diagonal)});
    write_table(out, rows);
    return kExitPass;
}

int run_rs(const std::string& perm_text, std::optional<int> degree, Format format,
           std::ostream& out) {
    Permutation rho = parse_permutation(perm_text, degree);
    TableauPair pair = rs_map(rho);
    std::string one_line = format_permutation(rho);
    std::string shape = pair.p.shape().to_string();
    bool involution = is_involution(rho);
    if (format == Format::Json) {
        ordered_json j;
        j["perm"] = one_line;
        j["p"] = pair.p.to_string();
        j["q"] = pair.q.to_string();
        j["shape"] = shape;
        j["involution"] = involution;
        out << j.dump() << '\n';
        return kExitPass;
    }
    std::vector<std::vector<std::string>> rows{
        {"perm", one_line},
        {"P", pair.p.to_string()},
        {"Q", pair.q.to_string()},
        {"shape", shape},
        {"involution", format == Format::Csv ? (involution ? "true" : "false")
                                             : yes_no(involution)},
    };
    if (format == Format::Csv) {
        write_csv_row(out, {"field", "value"});
        for (const auto& row : rows) write_csv_row(out, {row[0], row[1]});
        return kExitPass;
    }
    write_table(out, rows);
    return kExitPass;
}

int run_gram(int k, int n_dim, int cap, Format format, std::ostream& out) {
    std::vector<AlgebraElement> basis;
    for_each_permutation(
        k, [&](const Permutation& rho) { basis.push_back(AlgebraElement::basis(rho)); },
        cap);
    GramMatrix g = gram_matrix(basis, n_dim);
    const std::size_t n = g.entries.rows();

    if (format == Format::Json) {
        ordered_json j;
        j["k"] = k;
        j["n"] = n_dim;
        j["basis"] = g.basis_labels;
        ordered_json entries = ordered_json::array();
        for (std::size_t i = 0; i < n; ++i) {
            ordered_json row = ordered_json::array();
            for (std::size_t c = 0; c < n; ++c) row.push_back(g.entries(i, c).to_string());
            entries.push_back(row);
        }
        j["entries"] = entries;
        out << j.dump() << '\n';
        return kExitPass;
    }
    if (format == Format::Csv) {
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::string> cells;
            cells.reserve(n);
            for (std::size_t c = 0; c < n; ++c) cells.push_back(g.entries(i, c).to_string());
            write_csv_row(out, cells);
        }
        return kExitPass;
    }
    std::vector<std::vector<std::string>> header_rows{
        {"k", std::to_string(k)}, {"N", std::to_string(n_dim)}};
    for (std::size_t i = 0; i < n; ++i)
        header_rows.push_back({"basis[" + std::to_string(i) + "]", g.basis_labels[i]});
    write_table(out, header_rows);
    std::vector<std::vector<std::string>> entry_rows;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::string> cells;
        for (std::size_t c = 0; c < n; ++c) cells.push_back(g.entries(i, c).to_string());
        entry_rows.push_back(std::move(cells));
    }
    write_table(out, entry_rows);
    return kExitPass;
}

int run_rank(int k, int n_dim, bool involutions_only, int rank_cap, Format format,
             std::ostream& out) {
    std::vector<AlgebraElement> basis;
    for_each_permutation(
        k,
        [&](const Permutation& rho) {
            if (!involutions_only || is_involution(rho))
                basis.push_back(AlgebraElement::basis(rho));
        },
        rank_cap);

    CensusReport report;
    report.claim = involutions_only ? "gram-rank-involutions" : "gram-rank-full";
    report.params = {{"k", std::to_string(k)}, {"N", std::to_string(n_dim)}};
    BigInt expected = involutions_only ? syt_total(k, n_dim) : syt_square_total(k, n_dim);
    report.values = {
        {"rank.gram", BigInt{exact_rank(gram_matrix(basis, n_dim))}},
        {"rank.tableau_sum", expected},
    };
    report.passed = census_passed(report.values);
    return finish_report(report, format, out);
}

int run_mixed_list(int m, int n, int cap, Format format, std::ostream& out) {
    std::vector<MixedDiagram> diagrams = enumerate_mixed(MixedShape{m, n}, cap);
    if (format == Format::Json) {
        ordered_json j = ordered_json::array();
        for (const MixedDiagram& d : diagrams) {
            ordered_json row;
            row["diagram"] = d.to_string();
            row["hermitian"] = is_hermitian(d);
            j.push_back(row);
        }
        out << j.dump() << '\n';
        return kExitPass;
    }
    if (format == Format::Csv) {
        write_csv_row(out, {"diagram", "hermitian"});
        for (const MixedDiagram& d : diagrams)
            write_csv_row(out, {d.to_string(), is_hermitian(d) ? "true" : "false"});
        return kExitPass;
    }
    std::vector<std::vector<std::string>> rows{{"diagram", "hermitian"}};
    for (const MixedDiagram& d : diagrams)
        rows.push_back({d.to_string(), yes_no(is_hermitian(d))});
    write_table(out, rows);
    return kExitPass;
}

int run_mixed_compose(const std::string& a_text, const std::string& b_text, int m, int n,
                      Format format, std::ostream& out) {
    const MixedShape shape{m, n};
    MixedDiagram a = MixedDiagram::from_string(a_text, shape);
    MixedDiagram b = MixedDiagram::from_string(b_text, shape);
    MixedProduct product = compose(a, b);
    if (format == Format::Json) {
        ordered_json j;
        j["a"] = a.to_string();
        j["b"] = b.to_string();
        j["loops"] = product.loops;
        j["result"] = product.result.to_string();
        out << j.dump() << '\n';
        return kExitPass;
    }
    std::vector<std::vector<std::string>> rows{
        {"a", a.to_string()},
        {"b", b.to_string()},
        {"loops", std::to_string(product.loops)},
        {"result", product.result.to_string()},
    };
    if (format == Format::Csv) {
        write_csv_row(out, {"field", "value"});
        for (const auto& row : rows) write_csv_row(out, {row[0], row[1]});
        return kExitPass;
    }
    write_table(out, rows);
    return kExitPass;
}

int run_invariance(int k, int n_dim, std::uint64_t seed, double tol, int cap,
                   Format format, std::ostream& out) {
    TensorSpaceConfig cfg;
    cfg.n_dim = n_dim;
    cfg.k = k;
    bool all_passed = true;
    struct Row {
        std::string perm;
        double deviation;
        double control;
        bool passed;
    };
    std::vector<Row> rows;
    for_each_permutation(
        k,
        [&](const Permutation& rho) {
            double deviation = invariance_deviation(rho, cfg, seed);
            double control = invariance_deviation(rho, cfg, seed, true);
            bool passed = deviation < tol;
            all_passed = all_passed && passed;
            rows.push_back(Row{format_permutation(rho), deviation, control, passed});
        },
        cap);

    if (format == Format::Json) {
        ordered_json j;
        j["k"] = k;
        j["n"] = n_dim;
        j["seed"] = seed;
        j["tol"] = tol;
        ordered_json jrows = ordered_json::array();
        for (const Row& row : rows) {
            ordered_json r;
            r["perm"] = row.perm;
            r["deviation"] = row.deviation;
            r["control_deviation"] = row.control;
            r["passed"] = row.passed;
            jrows.push_back(r);
        }
        j["rows"] = jrows;
        j["passed"] = all_passed;
        out << j.dump() << '\n';
    } else if (format == Format::Csv) {
        write_csv_row(out, {"perm", "deviation", "control_deviation", "passed"});
        for (const Row& row : rows)
            write_csv_row(out, {row.perm, format_double(row.deviation),
                                format_double(row.control), row.passed ? "true" : "false"});
    } else {
        std::vector<std::vector<std::string>> table{
            {"perm", "deviation", "control", "passed"}};
        for (const Row& row : rows)
            table.push_back({row.perm, format_double(row.deviation),
                             format_double(row.control), yes_no(row.passed)});
        write_table(out, table);
    }
    return all_passed ? kExitPass : kExitFailedVerification;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact census of SU(N) tensor invariants: involution counts, "
                 "Robinson-Schensted tables, Gram ranks, and birdtrack diagrams"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags remain valid after the subcommand name

    std::string format_name = "table";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    int cap = kDefaultEnumerationCap;
    auto* cap_option =
        app.add_option("--cap", cap, "Enumeration cap on k (also raises the rank cap)");

    int k = 0, m = 0, n = 0, big_n = 0;
    bool involutions_only = false;
    std::string perm_text, a_text, b_text;
    int degree = -1;
    std::uint64_t seed = 1;
    double tol = 1e-10;

    auto* theorem = app.add_subcommand(
        "theorem", "Verify that four involution-count oracles agree");
    theorem->add_option("--k", k, "Tensor power")->required();

    auto* proof_counts = app.add_subcommand(
        "proof-counts", "Verify the Hermitian/anti-Hermitian basis-split identities");
    proof_counts->add_option("--k", k, "Tensor power")->required();

    auto* corollary = app.add_subcommand(
        "corollary", "Verify the mixed-space Hermitian census for shape (m,n)");
    corollary->add_option("--m", m, "Fundamental slots")->required();
    corollary->add_option("--n", n, "Antifundamental slots")->required();

    auto* rank = app.add_subcommand(
        "rank", "Exact Gram rank of S_k (or its involutions) against the tableau sum");
    rank->add_option("--k", k, "Tensor power")->required();
    rank->add_option("--big-n", big_n, "Dimension N of V")->required();
    rank->add_flag("--involutions-only", involutions_only,
                   "Restrict the basis to involutions");

    auto* figure1 = app.add_subcommand(
        "figure1", "Tableau-pair table of S_k with diagonal flags");
    figure1->add_option("--k", k, "Tensor power")->required();

    auto* rs = app.add_subcommand("rs", "Robinson-Schensted pair of one permutation");
    rs->add_option("--perm", perm_text, "One-line (\"3 1 2\") or cycles (\"(134)(25)\")")
        ->required();
    rs->add_option("--degree", degree, "Degree for cycle notation with trailing fixed points");

    auto* gram = app.add_subcommand("gram", "Exact Gram matrix of the S_k basis");
    gram->add_option("--k", k, "Tensor power")->required();
    gram->add_option("--big-n", big_n, "Dimension N of V")->required();

    auto* mixed = app.add_subcommand("mixed", "Mixed-space diagram operations");
    mixed->require_subcommand(1);
    auto* mixed_list = mixed->add_subcommand(
        "list", "Enumerate S_(m,n) with Hermitian flags");
    mixed_list->add_option("--m", m, "Fundamental slots")->required();
    mixed_list->add_option("--n", n, "Antifundamental slots")->required();
    auto* mixed_compose = mixed->add_subcommand(
        "compose", "Compose two diagrams, reporting closed loops");
    mixed_compose->add_option("--a", a_text, "Left factor, e.g. \"R1-L1,R2-R3,L2-L3\"")
        ->required();
    mixed_compose->add_option("--b", b_text, "Right factor (acts first)")->required();
    mixed_compose->add_option("--m", m, "Fundamental slots")->required();
    mixed_compose->add_option("--n", n, "Antifundamental slots")->required();

    auto* invariance = app.add_subcommand(
        "invariance", "Commutation of S_k with seeded random SU(N) product unitaries");
    invariance->add_option("--k", k, "Tensor power")->required();
    invariance->add_option("--big-n", big_n, "Dimension N of V")->required();
    invariance->add_option("--seed", seed, "Random seed")->required();
    invariance->add_option("--tol", tol, "Deviation tolerance")->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);

        Format format = Format::Table;
        if (format_name == "json") format = Format::Json;
        else if (format_name == "csv") format = Format::Csv;
        const int rank_cap = cap_option->count() ? cap : kDefaultRankCap;

        if (*theorem) return finish_report(verify_theorem(k, cap), format, out);
        if (*proof_counts) return finish_report(verify_proof_counts(k, cap), format, out);
        if (*corollary) return finish_report(verify_corollary(m, n, cap), format, out);
        if (*rank) return run_rank(k, big_n, involutions_only, rank_cap, format, out);
        if (*figure1) return run_figure1(k, cap, format, out);
        if (*rs) return run_rs(perm_text,
                               degree >= 0 ? std::optional<int>{degree} : std::nullopt,
                               format, out);
        if (*gram) return run_gram(k, big_n, cap, format, out);
        if (*mixed_list) return run_mixed_list(m, n, cap, format, out);
        if (*mixed_compose) return run_mixed_compose(a_text, b_text, m, n, format, out);
        if (*invariance) return run_invariance(k, big_n, seed, tol, cap, format, out);
        err << "error: no subcommand selected\n";
        return kExitUsage;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const capacity_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace suninv
