#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "jetbracket/errors.hpp"
#include "jetbracket/parser.hpp"
#include "jetbracket/printer.hpp"
#include "jetbracket/runner.hpp"

namespace {

using namespace jetbracket;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> stdin_expression_lines() {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(std::cin, line)) {
        std::string trimmed = line;
        if (auto pos = trimmed.find('#'); pos != std::string::npos) trimmed.resize(pos);
        if (trimmed.find_first_not_of(" \t\r") == std::string::npos) continue;
        lines.push_back(trimmed);
    }
    return lines;
}

PointAssignment parse_point(const std::string& text, int n, int m) {
    PointAssignment rho;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw Error("--at expects coord=value pairs");
        DiffPoly coord = parse_expression(item.substr(0, eq), n, m);
        if (coord.terms().size() != 1 || coord.terms().begin()->first.factors().size() != 1 ||
            coord.terms().begin()->first.factors()[0].second != 1 ||
            coord.terms().begin()->second != 1)
            throw Error("--at expects plain coordinates on the left of '='");
        rho[coord.terms().begin()->first.factors()[0].first] =
            rational_from_string(item.substr(eq + 1));
    }
    return rho;
}

int run_check(const std::string& file, const RunOptions& options, const std::string& json_path) {
    ProblemFile problem = parse_problem(read_input(file));
    RunOptions opts = options;
    opts.input_name = file == "-" ? "-" : std::filesystem::path(file).filename().string();
    Report report = run(problem, opts);
    if (json_path == "-") {
        std::cout << render_json(report);
    } else {
        std::cout << render_text(report);
        if (!json_path.empty()) {
            std::ofstream out(json_path, std::ios::binary);
            if (!out) throw Error("cannot write '" + json_path + "'");
            out << render_json(report);
        }
    }
    return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"jetbracket: exact checks for Hamiltonian and symplectic structures on evolution equations"};
    app.require_subcommand(1);

    std::string file;
    std::string json_path;
    RunOptions options;
    int budget = 0;
    auto* check = app.add_subcommand("check", "run the checks of a problem file");
    check->add_option("file", file, "problem file ('-' for stdin)")->required();
    check->add_option("--seed", options.seed, "sampling seed echoed into the report");
    check->add_option("--json", json_path, "write the JSON report to this path ('-' for stdout)");
    check->add_option("--samples", options.samples, "independent point samples per vanishing check")
        ->check(CLI::PositiveNumber);
    check->add_option("--budget", budget, "attempts per search stage (points and covectors)")
        ->check(CLI::PositiveNumber);

    int n = 1, m = 1;
    std::string at_text;
    auto* adjoint_cmd = app.add_subcommand("adjoint", "adjoint of an operator read from stdin");
    auto* compose_cmd = app.add_subcommand("compose", "composition of two operators (one per stdin line)");
    auto* symbol_cmd = app.add_subcommand("symbol", "principal symbol of an operator read from stdin");
    for (auto* cmd : {adjoint_cmd, compose_cmd, symbol_cmd}) {
        cmd->add_option("--n", n, "number of base variables")->check(CLI::PositiveNumber);
        cmd->add_option("--m", m, "number of dependent variables")->check(CLI::PositiveNumber);
    }
    symbol_cmd->add_option("--at", at_text, "evaluation point, e.g. \"u=1,u_x=1/2\" (default: all zero)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            if (budget > 0) {
                options.budget.point_attempts = budget;
                options.budget.v_attempts = budget;
            }
            return run_check(file, options, json_path);
        }
        std::vector<std::string> lines = stdin_expression_lines();
        if (adjoint_cmd->parsed()) {
            if (lines.size() != 1) throw Error("adjoint expects exactly one operator expression");
            std::cout << to_text(adjoint(parse_operator(lines[0], n, m))) << "\n";
        } else if (compose_cmd->parsed()) {
            if (lines.size() != 2) throw Error("compose expects two operator expressions");
            std::cout << to_text(compose(parse_operator(lines[0], n, m),
                                         parse_operator(lines[1], n, m)))
                      << "\n";
        } else if (symbol_cmd->parsed()) {
            if (lines.size() != 1) throw Error("symbol expects exactly one operator expression");
            CDiffOperator op = parse_operator(lines[0], n, m);
            PointAssignment rho = parse_point(at_text, n, m);
            if (order_at(op, rho) != op.order())
                throw Error("the operator order drops at the given point; pick another --at");
            SymbolMatrix lambda = principal_symbol(op, rho);
            std::cout << "order " << lambda.degree() << ", "
                      << (is_nondegenerate(lambda) ? "nondegenerate" : "degenerate") << "\n";
            for (int i = 0; i < lambda.size(); ++i) {
                std::cout << "[";
                for (int j = 0; j < lambda.size(); ++j)
                    std::cout << (j ? ", " : "") << to_text(lambda.at(i, j));
                std::cout << "]\n";
            }
        }
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
