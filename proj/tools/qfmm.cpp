// Copyright 2026 The qfmm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qfmm/errors.hpp"
#include "qfmm/format.hpp"
#include "qfmm/matmul.hpp"
#include "qfmm/qft.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

namespace {

using json = nlohmann::json;
using namespace qfmm;

// Exit codes: 0 success, 2 usage error, 3 constraint violation,
// 4 internal invariant failure.
constexpr int kExitUsage = 2;
constexpr int kExitConstraint = 3;
constexpr int kExitInternal = 4;

enum class OutputFormat { Human, Json, Csv };

OutputFormat parse_format(const std::string& s) {
    if (s == "human") return OutputFormat::Human;
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("unknown output format '" + s + "'");
}

constexpr const char* kCsvHeader =
    "construction,n_or_dim,qubits,gates,additions,multiplications,seconds\n";

struct MatrixSource {
    std::string file;
    std::string inline_text;
};

IntMatrix load_matrix(const MatrixSource& src, int width, const char* which) {
    if (!src.inline_text.empty()) {
        return parse_matrix_text(src.inline_text, width);
    }
    if (src.file.empty()) {
        throw std::invalid_argument(std::string("matrix ") + which +
                                    " missing: pass a file or an inline definition");
    }
    std::ifstream in(src.file);
    if (!in) {
        throw std::invalid_argument("cannot open matrix file '" + src.file + "'");
    }
    return read_matrix_text(in, width);
}

IntMatrix random_matrix(int dim, int width, std::uint64_t seed, std::uint64_t stream) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * stream);
    std::uniform_int_distribution<std::int64_t> value(0, (std::int64_t{1} << width) - 1);
    IntMatrix m;
    m.element_width = width;
    m.elements.resize(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            m.elements(i, j) = value(rng);
        }
    }
    return m;
}

std::string element_label(Eigen::Index i, Eigen::Index j) {
    if (i < 9 && j < 9) {
        return "c" + std::to_string(i + 1) + std::to_string(j + 1);
    }
    return "c(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

json stats_to_json(const MatmulStats& s) {
    return json{{"multiplications", s.quantum_multiplications},
                {"additions", s.quantum_additions},
                {"counted_gates", s.total_counted_gates},
                {"qubits_peak", s.total_qubits_peak},
                {"seconds", s.wall_time_seconds}};
}

json matrix_to_json(const IntGrid& g) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < g.cols(); ++j) {
            row.push_back(g(i, j));
        }
        rows.push_back(row);
    }
    return rows;
}

void print_stats_human(std::ostream& out, const char* name, const MatmulStats& s) {
    out << name << ": multiplications=" << s.quantum_multiplications
        << " additions=" << s.quantum_additions
        << " counted_gates=" << s.total_counted_gates
        << " qubits_peak=" << s.total_qubits_peak << " seconds=" << s.wall_time_seconds
        << "\n";
}

void print_matrix_human(std::ostream& out, const IntGrid& g) {
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        out << " ";
        for (Eigen::Index j = 0; j < g.cols(); ++j) {
            out << " " << g(i, j);
        }
        out << "\n";
    }
}

std::string csv_row(const std::string& construction, std::int64_t n_or_dim,
                    const MatmulStats& s) {
    std::ostringstream out;
    out << construction << ',' << n_or_dim << ',' << s.total_qubits_peak << ','
        << s.total_counted_gates << ',' << s.quantum_additions << ','
        << s.quantum_multiplications << ',' << s.wall_time_seconds << '\n';
    return out.str();
}

struct MultiplyOptions {
    MatrixSource a, b;
    int width = 0;
    std::optional<int> acc_width;
    int threshold = 1;
    std::string format = "human";
    std::uint64_t seed = 1;
    int random_dim = 0;
};

void print_product(const char* command, const char* algorithm,
                   const MultiplyOptions& opt, const MatmulResult& r, OutputFormat format) {
    switch (format) {
    case OutputFormat::Human: {
        std::cout << "C = A x B  (" << r.c.rows() << "x" << r.c.cols() << ", n=" << opt.width
                  << ", accumulator width " << r.measured_width << ", " << algorithm << ")\n";
        print_matrix_human(std::cout, r.c.elements);
        std::cout << "measurements (hex digits are the bit-reversed register):\n";
        for (Eigen::Index i = 0; i < r.c.rows(); ++i) {
            for (Eigen::Index j = 0; j < r.c.cols(); ++j) {
                std::cout << "  " << element_label(i, j) << " = " << r.c.elements(i, j) << "  ["
                          << format_measurement(static_cast<std::uint64_t>(r.measured(i, j)),
                                                r.measured_width)
                          << "]  p=" << r.probabilities(i, j) << "\n";
            }
        }
        print_stats_human(std::cout, "stats", r.stats);
        return;
    }
    case OutputFormat::Json: {
        json measurements = json::array();
        for (Eigen::Index i = 0; i < r.c.rows(); ++i) {
            for (Eigen::Index j = 0; j < r.c.cols(); ++j) {
                measurements.push_back(
                    {{"row", i + 1},
                     {"col", j + 1},
                     {"value", r.c.elements(i, j)},
                     {"raw", r.measured(i, j)},
                     {"hex", format_measurement(static_cast<std::uint64_t>(r.measured(i, j)),
                                                r.measured_width)},
                     {"probability", r.probabilities(i, j)}});
            }
        }
        const json doc{{"command", command},
                       {"algorithm", algorithm},
                       {"n", opt.width},
                       {"accumulator_width", r.measured_width},
                       {"threshold", opt.threshold},
                       {"rows", r.c.rows()},
                       {"cols", r.c.cols()},
                       {"c", matrix_to_json(r.c.elements)},
                       {"measurements", measurements},
                       {"stats", stats_to_json(r.stats)}};
        std::cout << doc.dump(2) << "\n";
        return;
    }
    case OutputFormat::Csv:
        std::cout << kCsvHeader << csv_row(algorithm, r.c.rows(), r.stats);
        return;
    }
}

int run_multiply(const MultiplyOptions& opt, bool strassen) {
    const OutputFormat format = parse_format(opt.format);
    IntMatrix a, b;
    if (opt.random_dim > 0) {
        a = random_matrix(opt.random_dim, opt.width, opt.seed, 1);
        b = random_matrix(opt.random_dim, opt.width, opt.seed, 2);
    } else {
        a = load_matrix(opt.a, opt.width, "A");
        b = load_matrix(opt.b, opt.width, "B");
    }

    if (strassen) {
        WidthPlan plan = plan_strassen(opt.width, static_cast<int>(a.rows()), opt.threshold);
        if (opt.acc_width) {
            plan.accumulator_width = *opt.acc_width;
        }
        const MatmulResult r = qmatmul_strassen(a, b, plan, opt.threshold);
        print_product("strassen", "strassen", opt, r, format);
    } else {
        WidthPlan plan = plan_basic(opt.width, static_cast<int>(a.cols()));
        if (opt.acc_width) {
            plan.accumulator_width = *opt.acc_width;
        }
        const MatmulResult r = qmatmul_basic(a, b, plan);
        print_product("multiply", "basic", opt, r, format);
    }
    return 0;
}

int run_compare(const MultiplyOptions& opt) {
    const OutputFormat format = parse_format(opt.format);
    IntMatrix a, b;
    if (opt.random_dim > 0) {
        a = random_matrix(opt.random_dim, opt.width, opt.seed, 1);
        b = random_matrix(opt.random_dim, opt.width, opt.seed, 2);
    } else {
        a = load_matrix(opt.a, opt.width, "A");
        b = load_matrix(opt.b, opt.width, "B");
    }
    WidthPlan plan = plan_basic(opt.width, static_cast<int>(a.cols()));
    if (opt.acc_width) {
        plan.accumulator_width = *opt.acc_width;
    }
    const CompareReport r = compare_algorithms(a, b, plan, opt.threshold);

    switch (format) {
    case OutputFormat::Human:
        std::cout << "C (identical on both paths):\n";
        print_matrix_human(std::cout, r.c.elements);
        print_stats_human(std::cout, "basic   ", r.basic);
        print_stats_human(std::cout, "strassen", r.strassen);
        return 0;
    case OutputFormat::Json: {
        const json doc{{"command", "compare"},
                       {"n", opt.width},
                       {"threshold", opt.threshold},
                       {"rows", r.c.rows()},
                       {"cols", r.c.cols()},
                       {"c", matrix_to_json(r.c.elements)},
                       {"basic", stats_to_json(r.basic)},
                       {"strassen", stats_to_json(r.strassen)}};
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    case OutputFormat::Csv:
        std::cout << kCsvHeader << csv_row("basic", r.c.rows(), r.basic)
                  << csv_row("strassen", r.c.rows(), r.strassen);
        return 0;
    }
    return 0;
}

int run_resources(int n_min, int n_max, const std::string& format_name) {
    const OutputFormat format = parse_format(format_name);
    if (n_min < 1 || n_max < n_min) {
        throw std::invalid_argument("resource range must satisfy 1 <= n-min <= n-max");
    }
    const Construction order[] = {
        Construction::AdderOriginal,     Construction::AdderOptimized,
        Construction::AdderClassical,    Construction::MultiplierOriginal,
        Construction::MultiplierOptimized, Construction::MultiplierClassical,
    };

    switch (format) {
    case OutputFormat::Human: {
        std::cout << "construction           n  qubits   gates\n";
        for (const Construction c : order) {
            for (int n = n_min; n <= n_max; ++n) {
                const ResourceEstimate e = resource_estimate(c, n);
                std::cout << std::left << std::setw(21) << to_string(c) << std::right
                          << std::setw(4) << n << std::setw(8)
                          << (e.qubits ? std::to_string(*e.qubits) : std::string("-"))
                          << std::setw(8) << e.gates << "\n";
            }
        }
        return 0;
    }
    case OutputFormat::Json: {
        json rows = json::array();
        for (const Construction c : order) {
            for (int n = n_min; n <= n_max; ++n) {
                const ResourceEstimate e = resource_estimate(c, n);
                json row{{"construction", std::string(to_string(c))},
                         {"n", n},
                         {"gates", e.gates}};
                if (e.qubits) {
                    row["qubits"] = *e.qubits;
                } else {
                    row["qubits"] = nullptr;
                }
                rows.push_back(row);
            }
        }
        const json doc{{"command", "resources"}, {"n_min", n_min}, {"n_max", n_max},
                       {"rows", rows}};
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    case OutputFormat::Csv:
        std::cout << kCsvHeader;
        for (const Construction c : order) {
            for (int n = n_min; n <= n_max; ++n) {
                const ResourceEstimate e = resource_estimate(c, n);
                std::cout << to_string(c) << ',' << n << ','
                          << (e.qubits ? std::to_string(*e.qubits) : std::string()) << ','
                          << e.gates << ",,,\n";
            }
        }
        return 0;
    }
    return 0;
}

int run_export(const std::string& what, int n, std::uint64_t value, const std::string& output) {
    if (n < 1) {
        throw std::invalid_argument("--width must be >= 1");
    }
    Circuit circuit;
    if (what == "qft" || what == "iqft") {
        const Register r{"r", 0, n, BitOrder::LsbFirst, RegisterRole::Operand};
        circuit = (what == "qft") ? build_qft(r) : build_iqft(r);
    } else {
        switch (construction_from_string(what)) {
        case Construction::AdderOriginal:
            circuit = build_adder_original(
                Register{"a", 0, n, BitOrder::LsbFirst, RegisterRole::Operand},
                Register{"acc", n, n + 1, BitOrder::LsbFirst, RegisterRole::Accumulator});
            break;
        case Construction::AdderOptimized:
            circuit = build_adder_optimized(
                UIntOperand{value, n},
                Register{"acc", 0, n + 1, BitOrder::LsbFirst, RegisterRole::Accumulator});
            break;
        case Construction::MultiplierOriginal:
            circuit = build_multiplier_original(
                Register{"a", 0, n, BitOrder::LsbFirst, RegisterRole::Operand},
                Register{"b", n, n, BitOrder::LsbFirst, RegisterRole::Operand},
                Register{"out", 2 * n, 2 * n, BitOrder::LsbFirst, RegisterRole::Accumulator});
            break;
        case Construction::MultiplierOptimized:
            circuit = build_multiplier_optimized(
                UIntOperand{value, n},
                Register{"b", 0, n, BitOrder::LsbFirst, RegisterRole::Operand},
                Register{"out", n, 2 * n, BitOrder::LsbFirst, RegisterRole::Accumulator});
            break;
        default:
            throw std::invalid_argument("construction '" + what + "' has no circuit form");
        }
    }
    const std::string text = export_gatelist(circuit);
    if (output.empty() || output == "-") {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) {
            throw std::invalid_argument("cannot open output file '" + output + "'");
        }
        out << text;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"QFT-based quantum integer arithmetic and matrix multiplication"};
    app.require_subcommand(1);

    MultiplyOptions opt;
    auto add_matrix_flags = [&](CLI::App* cmd, bool with_threshold) {
        cmd->add_option("-A,--matrix-a", opt.a.file, "matrix A file (text format)");
        cmd->add_option("-B,--matrix-b", opt.b.file, "matrix B file (text format)");
        cmd->add_option("--inline-a", opt.a.inline_text, "matrix A inline: 'rows cols e...'");
        cmd->add_option("--inline-b", opt.b.inline_text, "matrix B inline: 'rows cols e...'");
        cmd->add_option("--random", opt.random_dim, "generate random square inputs of this dim");
        cmd->add_option("--seed", opt.seed, "seed for --random");
        cmd->add_option("-n,--width", opt.width, "element bit width n")->required();
        cmd->add_option("--acc-width", opt.acc_width, "accumulator width override");
        cmd->add_option("--format", opt.format, "output format: human|json|csv");
        if (with_threshold) {
            cmd->add_option("--threshold", opt.threshold, "Strassen leaf dimension");
        }
    };

    CLI::App* multiply = app.add_subcommand("multiply", "basic quantum matrix multiplication");
    add_matrix_flags(multiply, false);
    CLI::App* strassen = app.add_subcommand("strassen", "quantum Strassen multiplication");
    add_matrix_flags(strassen, true);
    CLI::App* compare = app.add_subcommand("compare", "run both paths and compare stats");
    add_matrix_flags(compare, true);

    int n_min = 1;
    int n_max = 6;
    std::string res_format = "human";
    CLI::App* resources = app.add_subcommand("resources", "closed-form resource table");
    resources->add_option("--n-min", n_min, "smallest operand width");
    resources->add_option("--n-max", n_max, "largest operand width");
    resources->add_option("--format", res_format, "output format: human|json|csv");

    std::string export_what;
    int export_n = 3;
    std::uint64_t export_value = 1;
    std::string export_output;
    CLI::App* exporter = app.add_subcommand("export", "write a construction's gate list");
    exporter
        ->add_option("--construction", export_what,
                     "qft|iqft|adder_original|adder_optimized|multiplier_original|"
                     "multiplier_optimized")
        ->required();
    exporter->add_option("-n,--width", export_n, "operand width n");
    exporter->add_option("--value", export_value, "classical operand value");
    exporter->add_option("-o,--output", export_output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (multiply->parsed()) {
            return run_multiply(opt, false);
        }
        if (strassen->parsed()) {
            return run_multiply(opt, true);
        }
        if (compare->parsed()) {
            return run_compare(opt);
        }
        if (resources->parsed()) {
            return run_resources(n_min, n_max, res_format);
        }
        if (exporter->parsed()) {
            return run_export(export_what, export_n, export_value, export_output);
        }
    } catch (const ConstraintError& e) {
        std::cerr << "constraint violation: " << e.what() << "\n";
        return kExitConstraint;
    } catch (const InternalError& e) {
        std::cerr << "internal invariant failure: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
