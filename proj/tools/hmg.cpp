#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "hmg/canonical.hpp"
#include "hmg/design_matrix.hpp"
#include "hmg/graver.hpp"
#include "hmg/model_io.hpp"
#include "hmg/unimodularity.hpp"

using namespace hmg;

namespace {

// Exit codes: 0 success/unimodular, 1 not unimodular, 2 input error,
// 3 guard violation, 4 internal assertion failure.
constexpr int kExitNotUnimodular = 1;
constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;
constexpr int kExitInternal = 4;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw model_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

HMPair load_model(const std::string& path) {
    auto parsed = parse_model(read_input(path));
    for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
    return parsed.pair;
}

std::vector<SimplicialComplex> sweep_complexes(std::size_t n) {
    std::vector<std::string> ground;
    for (std::size_t i = 1; i <= n; ++i) ground.push_back(std::to_string(i));
    const Face full = (Face(1) << n) - 1;
    std::vector<SimplicialComplex> out;
    std::vector<Face> chosen;
    std::function<void(Face)> rec = [&](Face next) {
        if (next > full) {
            out.emplace_back(ground, chosen.empty() ? std::vector<Face>{0} : chosen);
            return;
        }
        rec(next + 1);
        for (Face f : chosen)
            if (face_subset(f, next) || face_subset(next, f)) return;
        chosen.push_back(next);
        rec(next + 1);
        chosen.pop_back();
    };
    rec(1);
    return out;
}

// Classification sweep: classify() against the Graver-entry route, plus a
// certificate replay check, on every canonical pair within the bounds.
int run_verify(std::size_t max_vertices, Int max_weight, std::size_t max_cols) {
    std::size_t checked = 0, mismatches = 0, infeasible = 0;
    std::set<std::string> seen;
    for (std::size_t n = 1; n <= max_vertices; ++n) {
        for (const auto& c : sweep_complexes(n)) {
            std::vector<Int> w(n, 2);
            while (true) {
                HMPair pair(c, w);
                if (design_column_count(pair) <= static_cast<Int>(max_cols) &&
                    seen.insert(canonical_pair_key(pair)).second) {
                    Verdict verdict = classify(pair);
                    auto res = graver_entry_test(pair, max_cols, 30000);
                    ++checked;
                    if (res == GraverTestResult::Infeasible) {
                        ++infeasible;
                        std::cout << "infeasible: " << to_string(pair) << "\n";
                    } else if (verdict.unimodular != (res == GraverTestResult::Unimodular)) {
                        ++mismatches;
                        std::cout << "mismatch: " << to_string(pair) << "\n";
                    }
                    if (verdict.unimodular && !replays_to(*verdict.certificate, pair.complex())) {
                        ++mismatches;
                        std::cout << "certificate replay failed: " << to_string(pair) << "\n";
                    }
                }
                std::size_t k = n;
                bool adv = false;
                while (k-- > 0) {
                    if (w[k] < max_weight) {
                        ++w[k];
                        std::fill(w.begin() + k + 1, w.end(), 2);
                        adv = true;
                        break;
                    }
                }
                if (!adv) break;
            }
        }
    }
    std::cout << "checked " << checked << " canonical pairs: " << mismatches
              << " mismatches, " << infeasible << " infeasible\n";
    return mismatches == 0 && infeasible == 0 ? 0 : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Design matrices, unimodularity certificates and Graver bases "
                 "of hierarchical models"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format = "csv";
    std::uint64_t seed = 0;
    int budget = 200;
    std::size_t max_columns = kDefaultOracleMaxCols;
    std::string vertex;
    std::size_t sweep_vertices = 3;
    Int sweep_max_weight = 3;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("model", input, "model JSON file ('-' for stdin)");
    };

    auto* matrix = app.add_subcommand("matrix", "print the design matrix");
    add_input(matrix);
    matrix->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* classify_cmd =
        app.add_subcommand("classify", "decide unimodularity with a certificate");
    add_input(classify_cmd);

    auto* graver = app.add_subcommand("graver", "Graver basis via the combinatorial pipeline");
    add_input(graver);

    auto* oracle = app.add_subcommand("graver-oracle", "Graver basis by completion");
    add_input(oracle);
    oracle->add_option("--max-columns", max_columns, "column guard override");

    auto* sample = app.add_subcommand("sample", "sample one Graver basis element");
    add_input(sample);
    sample->add_option("--seed", seed, "random seed (default 0)");

    auto* verify = app.add_subcommand("verify", "run the classification property sweep");
    verify->add_option("--sweep-vertices", sweep_vertices, "max ground-set size (default 3)");
    verify->add_option("--sweep-max-weight", sweep_max_weight, "max vertex weight (default 3)");
    verify->add_option("--max-columns", max_columns, "design-matrix column bound");

    auto* dual = app.add_subcommand("dual", "Alexander dual of the complex");
    add_input(dual);
    auto* link = app.add_subcommand("link", "link of a vertex");
    add_input(link);
    link->add_option("--vertex", vertex, "vertex label")->required();
    auto* del = app.add_subcommand("delete", "delete a vertex");
    add_input(del);
    del->add_option("--vertex", vertex, "vertex label")->required();

    auto* certify = app.add_subcommand(
        "certify-nonuni", "search for a nonunimodularity certificate on column samples");
    add_input(certify);
    certify->add_option("--budget", budget, "number of column samples (default 200)");
    certify->add_option("--seed", seed, "random seed (default 0)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (matrix->parsed()) {
            auto dm = build_design_matrix(load_model(input));
            if (format == "csv") std::cout << to_csv(dm.matrix);
            else std::cout << matrix_to_json(dm);
            return 0;
        }
        if (classify_cmd->parsed()) {
            Verdict v = classify(load_model(input));
            std::cout << verdict_to_json(v) << "\n";
            return v.unimodular ? 0 : kExitNotUnimodular;
        }
        if (graver->parsed()) {
            HMPair pair = load_model(input);
            Verdict v = classify(pair);
            if (!v.unimodular) {
                std::cout << verdict_to_json(v) << "\n";
                return kExitNotUnimodular;
            }
            auto dm = build_design_matrix(pair);
            std::cout << basis_to_json_lines(graver_for_certificate(pair, *v.certificate),
                                             dm.col_labels);
            return 0;
        }
        if (oracle->parsed()) {
            HMPair pair = load_model(input);
            auto dm = build_design_matrix(pair);
            std::cout << basis_to_json_lines(graver_oracle(dm.matrix, max_columns),
                                             dm.col_labels);
            return 0;
        }
        if (sample->parsed()) {
            HMPair pair = load_model(input);
            auto dm = build_design_matrix(pair);
            std::cout << vector_to_json(sample_graver(pair, seed), dm.col_labels) << "\n";
            return 0;
        }
        if (dual->parsed()) {
            HMPair pair = load_model(input);
            std::cout << model_to_json(HMPair(pair.complex().alexander_dual(), pair.weights()))
                      << "\n";
            return 0;
        }
        if (link->parsed() || del->parsed()) {
            HMPair pair = load_model(input);
            std::size_t v = pair.complex().index_of(vertex);
            HMPair out = link->parsed() ? pair.link_vertex(v) : pair.delete_vertex(v);
            std::cout << model_to_json(out) << "\n";
            return 0;
        }
        if (certify->parsed()) {
            HMPair pair = load_model(input);
            SubmatrixCertifyOptions opts;
            opts.budget = budget;
            auto cert = certify_nonunimodular_by_submatrix(pair, seed, opts);
            if (!cert) {
                std::cout << "{\"certificate\": null}\n";
                return 0;
            }
            auto dm = build_design_matrix(pair);
            std::cout << "{\"certificate\": " << vector_to_json(*cert, dm.col_labels) << "}\n";
            return kExitNotUnimodular;
        }
        if (verify->parsed()) return run_verify(sweep_vertices, sweep_max_weight, max_columns);
    } catch (const model_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const guard_error& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
