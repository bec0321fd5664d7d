#include "samelson/cli.hpp"

#include "samelson/applications.hpp"
#include "samelson/paper_tables.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace samelson {

namespace {

using nlohmann::ordered_json;

// Strict decimal parser so malformed numbers are usage errors (exit 2), not
// internal ones.
Integer parse_integer(const std::string& s) {
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start) {
        throw std::invalid_argument("not a decimal integer: '" + s + "'");
    }
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
            throw std::invalid_argument("not a decimal integer: '" + s + "'");
        }
    }
    return Integer(s);
}

std::string dec(const Integer& x) { return x.str(); }

std::string problem_line(const ProductProblem& pr) {
    std::ostringstream s;
    s << "problem: a=" << pr.a << ", b=" << pr.b << ", n=" << pr.n
      << " (k=" << pr.k() << ")";
    return s.str();
}

std::string certificate_line(const std::vector<Integer>& cert) {
    std::ostringstream s;
    s << "certificate: (";
    for (std::size_t i = 0; i < cert.size(); ++i) {
        if (i) {
            s << ", ";
        }
        s << cert[i];
    }
    s << ")";
    return s.str();
}

ordered_json json_factorization(const Factorization& f) {
    ordered_json o = ordered_json::object();
    for (const auto& [p, e] : f) {
        o[p.str()] = std::to_string(e);
    }
    return o;
}

ordered_json json_problem(const ProductProblem& pr) {
    ordered_json o;
    o["a"] = std::to_string(pr.a);
    o["b"] = std::to_string(pr.b);
    o["n"] = std::to_string(pr.n);
    return o;
}

ordered_json json_document(const std::string& command, ordered_json input,
                           ordered_json result) {
    ordered_json doc;
    doc["schema_version"] = "1";
    doc["command"] = command;
    doc["input"] = std::move(input);
    doc["result"] = std::move(result);
    return doc;
}

void emit(std::ostream& out, const ordered_json& doc) {
    out << doc.dump(2) << "\n";
}

int cmd_order(const ProductProblem& pr, const std::string& format,
              bool show_certificate, std::ostream& out) {
    OrderResult r = samelson_order(pr);
    if (format == "json") {
        ordered_json result;
        result["d_odd"] = dec(r.d_odd);
        result["factorization"] = json_factorization(r.factorization);
        result["d_integral"] = dec(r.d_integral);
        result["validity"] = to_string(r.validity);
        ordered_json cert = ordered_json::array();
        for (const Integer& c : r.certificate) {
            cert.push_back(dec(c));
        }
        result["certificate"] = std::move(cert);
        emit(out, json_document("order", json_problem(pr), std::move(result)));
        return 0;
    }
    out << problem_line(pr) << "\n";
    out << "odd order: " << r.d_odd << " = "
        << format_factorization(r.factorization) << "\n";
    out << "integral order: " << r.d_integral << "\n";
    out << "validity: " << to_string(r.validity) << "\n";
    if (show_certificate) {
        out << certificate_line(r.certificate) << "\n";
    }
    return 0;
}

int cmd_matrix(const ProductProblem& pr, const std::string& format,
               std::ostream& out) {
    GeneratorMatrix g = generator_matrix(pr);
    const std::size_t nrows = g.matrix.rows();
    const std::size_t ncols = g.matrix.cols();
    if (format == "json") {
        ordered_json rows = ordered_json::array();
        for (const RowIndex& r : g.row_basis) {
            ordered_json o;
            o["p"] = std::to_string(r.p);
            o["q"] = std::to_string(r.q);
            o["m"] = std::to_string(r.m());
            rows.push_back(std::move(o));
        }
        ordered_json cols = ordered_json::array();
        for (const auto& [i, j] : g.col_basis) {
            ordered_json o;
            o["i"] = std::to_string(i);
            o["j"] = std::to_string(j);
            cols.push_back(std::move(o));
        }
        ordered_json entries = ordered_json::array();
        for (std::size_t r = 0; r < nrows; ++r) {
            ordered_json row = ordered_json::array();
            for (std::size_t c = 0; c < ncols; ++c) {
                row.push_back(dec(g.matrix.at(r, c)));
            }
            entries.push_back(std::move(row));
        }
        ordered_json result;
        result["rows"] = std::move(rows);
        result["cols"] = std::move(cols);
        result["entries"] = std::move(entries);
        emit(out, json_document("matrix", json_problem(pr), std::move(result)));
        return 0;
    }
    out << problem_line(pr) << "\n";
    out << "matrix: " << nrows << " rows × " << ncols << " cols\n";
    std::vector<std::string> col_labels;
    std::vector<std::size_t> widths;
    for (const auto& [i, j] : g.col_basis) {
        std::ostringstream s;
        s << "(" << i << "," << j << ")";
        col_labels.push_back(s.str());
        widths.push_back(s.str().size());
    }
    std::vector<std::string> row_labels;
    std::size_t label_width = 0;
    for (const RowIndex& r : g.row_basis) {
        std::ostringstream s;
        s << "(" << r.p << "," << r.q << "," << r.m() << ")";
        row_labels.push_back(s.str());
        label_width = std::max(label_width, s.str().size());
    }
    std::vector<std::vector<std::string>> cells(nrows);
    for (std::size_t r = 0; r < nrows; ++r) {
        for (std::size_t c = 0; c < ncols; ++c) {
            cells[r].push_back(dec(g.matrix.at(r, c)));
            widths[c] = std::max(widths[c], cells[r][c].size());
        }
    }
    out << std::string(label_width, ' ');
    for (std::size_t c = 0; c < ncols; ++c) {
        out << "  " << std::setw(int(widths[c])) << col_labels[c];
    }
    out << "\n";
    for (std::size_t r = 0; r < nrows; ++r) {
        out << std::setw(int(label_width)) << row_labels[r];
        for (std::size_t c = 0; c < ncols; ++c) {
            out << "  " << std::setw(int(widths[c])) << cells[r][c];
        }
        out << "\n";
    }
    return 0;
}

struct TheoremRow {
    ProductProblem problem;
    Integer stated;
};

int cmd_table(int theorem, std::ostream& out, std::ostream& err) {
    std::vector<TheoremRow> rows;
    const char* id = nullptr;
    if (theorem == 1) {
        id = "Theorem 1.1";
        rows = {{{1, 2, 3}, 3}, {{1, 3, 4}, 15}, {{2, 2, 4}, 15},
                {{2, 3, 5}, 15}};
    } else if (theorem == 2) {
        id = "Theorem 1.2";
        rows = {{{2, 2, 3}, 15},   {{2, 3, 4}, 45},   {{3, 3, 5}, 315},
                {{3, 3, 4}, 315},  {{2, 4, 5}, 1575}, {{3, 4, 6}, 1575},
                {{4, 4, 7}, 70875}, {{4, 4, 5}, 70875}};
    } else {
        err << "error: unknown theorem id " << theorem << " (expected 1 or 2)"
            << "\n";
        return 2;
    }
    out << id << "\n";
    std::size_t agree = 0;
    for (const TheoremRow& row : rows) {
        OrderResult r = samelson_order(row.problem);
        bool ok = r.d_odd == row.stated;
        agree += ok ? 1 : 0;
        out << "(" << row.problem.a << "," << row.problem.b << ","
            << row.problem.n << "): stated " << row.stated << ", recomputed "
            << r.d_odd << "  " << (ok ? "AGREE" : "DISAGREE") << "\n";
    }
    out << agree << "/" << rows.size() << " rows agree\n";
    return agree == rows.size() ? 0 : 4;
}

const char* status_name(MatchStatus s) {
    switch (s) {
        case MatchStatus::MATCH_EXACT:
            return "MATCH_EXACT";
        case MatchStatus::MATCH_2LOCAL:
            return "MATCH_2LOCAL";
        default:
            return "MISMATCH";
    }
}

int cmd_verify_paper(std::ostream& out) {
    bool first = true;
    for (const PaperTable& table : fixtures()) {
        if (!first) {
            out << "\n";
        }
        first = false;
        ComparisonReport report = compare(table);
        std::size_t n_exact = 0, n_2local = 0, n_mismatch = 0;
        for (const ColumnComparison& c : report.columns) {
            switch (c.status) {
                case MatchStatus::MATCH_EXACT:
                    ++n_exact;
                    break;
                case MatchStatus::MATCH_2LOCAL:
                    ++n_2local;
                    break;
                default:
                    ++n_mismatch;
                    break;
            }
        }
        const std::size_t total = report.columns.size();
        out << report.table_id << ": ";
        if (total > 0 &&
            (n_exact == total || n_2local == total || n_mismatch == total)) {
            out << total << "/" << total << " "
                << status_name(report.columns.front().status);
        } else {
            bool sep = false;
            if (n_exact) {
                out << n_exact << " MATCH_EXACT";
                sep = true;
            }
            if (n_2local) {
                out << (sep ? ", " : "") << n_2local << " MATCH_2LOCAL";
                sep = true;
            }
            if (n_mismatch) {
                out << (sep ? ", " : "") << n_mismatch << " MISMATCH";
            }
        }
        out << "\n";
        for (const ColumnComparison& c : report.columns) {
            out << report.table_id << " " << c.label << ": "
                << format_status(c) << "\n";
        }
        if (!report.note.empty()) {
            out << "note: " << report.note << "\n";
        }
    }
    return 0;
}

int cmd_commutative(int su, const Integer& p, std::ostream& out) {
    CommutativityVerdict v = homotopy_commutative(su, p);
    out << "SU(" << su << ") localized at p=" << p << ": "
        << to_string(v.value);
    if (v.witness) {
        out << " (Samelson product (" << v.witness->problem.a << ","
            << v.witness->problem.b << "," << v.witness->problem.n << "), nu_"
            << v.witness->prime << " = " << v.witness->valuation << ")";
    }
    out << "\n";
    return 0;
}

int cmd_gauge(bool su4, const Integer& m, const Integer& p,
              std::ostream& out) {
    Integer order = m;
    Factorization order_fact;
    if (su4) {
        OrderResult r = su4_commutator_order();
        order = r.d_odd;
        order_fact = r.factorization;
    }
    unsigned bound = gauge_type_bound(order, p);
    if (su4) {
        out << "SU(4) commutator order: " << order << " = "
            << format_factorization(order_fact) << "\n";
    } else {
        out << "order: " << order << "\n";
    }
    out << "at most " << bound
        << " homotopy types of p-local gauge groups at p = " << p << "\n";
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Odd-primary orders of Samelson products <eps_a, eps_b> in "
                 "SU(n), via exact integer lattices"};
    app.require_subcommand(1);

    unsigned a = 0, b = 0, n = 0;
    std::string format = "text";
    bool show_certificate = false;
    int theorem = 0;
    int su = 0;
    std::string prime_str;
    std::string order_str;
    bool su4 = false;

    auto add_problem_flags = [&](CLI::App* cmd) {
        cmd->add_option("--a", a, "first factor: SigmaCP^a")->required();
        cmd->add_option("--b", b, "second factor: SigmaCP^b")->required();
        cmd->add_option("--n", n, "target group SU(n)")->required();
    };
    auto add_format_flag = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* order_cmd = app.add_subcommand(
        "order", "odd-primary order of the Samelson product");
    add_problem_flags(order_cmd);
    add_format_flag(order_cmd);
    order_cmd->add_flag("--certificate", show_certificate,
                        "show the lattice certificate vector");

    CLI::App* matrix_cmd =
        app.add_subcommand("matrix", "generator matrix of the image lattice");
    add_problem_flags(matrix_cmd);
    add_format_flag(matrix_cmd);

    CLI::App* table_cmd = app.add_subcommand(
        "table", "recompute a theorem table and mark AGREE/DISAGREE");
    table_cmd->add_option("--theorem", theorem, "theorem id (1 or 2)")
        ->required();

    CLI::App* verify_cmd = app.add_subcommand(
        "verify-paper", "audit all transcribed tables against recomputation");

    CLI::App* commutative_cmd = app.add_subcommand(
        "commutative", "p-local homotopy commutativity of SU(n)");
    commutative_cmd->add_option("--su", su, "n in {3,4,5}")
        ->required()
        ->check(CLI::IsMember({3, 4, 5}));
    commutative_cmd->add_option("--prime", prime_str, "odd prime")->required();

    CLI::App* gauge_cmd = app.add_subcommand(
        "gauge", "bound on p-local homotopy types of gauge groups");
    CLI::Option* order_opt = gauge_cmd->add_option(
        "--order", order_str, "commutator order m (decimal)");
    CLI::Option* su4_opt = gauge_cmd->add_flag(
        "--su4", su4, "use the SU(4) commutator order");
    order_opt->excludes(su4_opt);
    su4_opt->excludes(order_opt);
    gauge_cmd->add_option("--prime", prime_str, "odd prime")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs[0]->help());
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*order_cmd) {
            return cmd_order({a, b, n}, format, show_certificate, out);
        }
        if (*matrix_cmd) {
            return cmd_matrix({a, b, n}, format, out);
        }
        if (*table_cmd) {
            return cmd_table(theorem, out, err);
        }
        if (*verify_cmd) {
            return cmd_verify_paper(out);
        }
        if (*commutative_cmd) {
            return cmd_commutative(su, parse_integer(prime_str), out);
        }
        if (*gauge_cmd) {
            if (!su4 && order_str.empty()) {
                err << "error: gauge requires exactly one of --order, --su4\n";
                return 2;
            }
            Integer m = su4 ? Integer(0) : parse_integer(order_str);
            return cmd_gauge(su4, m, parse_integer(prime_str), out);
        }
        err << "error: no subcommand\n";
        return 2;
    } catch (const InvalidProblem& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const EvenPrime& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotPrime& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ZeroInput& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionMismatch& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InfiniteOrder& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace samelson
