// Command-line front end: formulas, exact solvers, closures, extremal
// constructions, and exhaustive verification sweeps.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "turan/closure.hpp"
#include "turan/constructions.hpp"
#include "turan/formulas.hpp"
#include "turan/graph.hpp"
#include "turan/hypergraph.hpp"
#include "turan/solver.hpp"
#include "turan/verifier.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitSizeCap = 3;

turan::Graph load_graph(const std::string& g6, const std::string& edges_path) {
    if (g6.empty() == edges_path.empty())
        throw CLI::ValidationError("exactly one of --g6 and --edges is required");
    if (!g6.empty()) return turan::parse_graph6(g6);
    std::ifstream in(edges_path);
    if (!in) throw std::invalid_argument("cannot open edge list file: " + edges_path);
    return turan::parse_edge_list(in);
}

void print_witness(const std::vector<turan::Edge>& witness) {
    for (auto [u, v] : witness) std::cout << u << ' ' << v << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Turan numbers for spanning linear forests and matchings"};
    app.require_subcommand(1);

    // --- formula ---
    auto* formula = app.add_subcommand("formula", "evaluate a closed-form Turan number");
    std::string subject;
    std::uint64_t fn = 0, fk = 0, fr = 2;
    formula->add_option("subject", subject)->required()->check(CLI::IsMember({"lnk", "matching", "hampath", "conjecture"}));
    formula->add_option("--n", fn)->required();
    formula->add_option("--k", fk);
    formula->add_option("--r", fr);

    // --- solve ---
    auto* solve = app.add_subcommand("solve", "run an exact solver on a graph");
    std::string task, g6_in, edges_in;
    solve->add_option("task", task)->required()->check(CLI::IsMember({"maxlf", "matching", "hcn", "hamiltonian"}));
    solve->add_option("--g6", g6_in);
    solve->add_option("--edges", edges_in);

    // --- closure ---
    auto* closure = app.add_subcommand("closure", "compute the k-closure of a graph");
    int ck = 0;
    closure->add_option("--k", ck)->required();
    closure->add_option("--g6", g6_in);
    closure->add_option("--edges", edges_in);

    // --- extremal ---
    auto* extremal = app.add_subcommand("extremal", "emit an extremal construction as graph6");
    std::string ex_subject, variant;
    int en = 0, ek = 0;
    extremal->add_option("subject", ex_subject)->required()->check(CLI::IsMember({"lnk", "matching"}));
    extremal->add_option("--n", en)->required();
    extremal->add_option("--k", ek)->required();
    extremal->add_option("--variant", variant)->required()->check(CLI::IsMember({"clique", "join"}));

    // --- verify ---
    auto* verify = app.add_subcommand("verify", "exhaustive verification sweep; TSV on stdout");
    std::string v_subject;
    int v_nmax = 6, v_n = 6, v_k = 4;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    verify->add_option("subject", v_subject)->required()->check(CLI::IsMember({"lnk", "matching", "conjecture"}));
    verify->add_option("--n-max", v_nmax);
    verify->add_option("--n", v_n);
    verify->add_option("--k", v_k);
    verify->add_option("--jobs", jobs);

    try {
        app.parse(argc, argv);

        if (*formula) {
            if (subject == "lnk") {
                auto t = turan::ex_linear_forest(fn, fk);
                std::cout << t.value << '\t' << turan::branch_name(t.attained_by) << '\n';
            } else if (subject == "matching") {
                auto t = turan::ex_matching(fn, fk);
                std::cout << t.value << '\t' << turan::branch_name(t.attained_by) << '\n';
            } else if (subject == "hampath") {
                std::cout << turan::ex_ham_path(fn) << '\n';
            } else {
                auto t = turan::ex_conjecture_r(fn, fk, fr);
                std::cout << t.value << '\t' << turan::branch_name(t.attained_by) << '\n';
            }
        } else if (*solve) {
            turan::Graph g = load_graph(g6_in, edges_in);
            if (task == "maxlf") {
                auto res = turan::max_linear_forest(g);
                std::cout << res.value << '\n';
                print_witness(res.witness);
            } else if (task == "matching") {
                auto res = turan::max_matching(g);
                std::cout << res.value << '\n';
                print_witness(res.witness);
            } else if (task == "hcn") {
                std::cout << turan::hamiltonian_completion(g) << '\n';
            } else {
                std::cout << (turan::is_hamiltonian(g) ? "true" : "false") << '\n';
            }
        } else if (*closure) {
            turan::Graph g = load_graph(g6_in, edges_in);
            auto trace = turan::k_closure(g, ck);
            std::cout << turan::emit_graph6(trace.final) << '\n';
            print_witness(trace.added_edges);
        } else if (*extremal) {
            turan::Variant var = (variant == "clique") ? turan::Variant::clique : turan::Variant::join;
            turan::Graph g = (ex_subject == "lnk") ? turan::extremal_lnk(en, ek, var)
                                                   : turan::extremal_matching(en, ek, var);
            std::cout << turan::emit_graph6(g) << '\n';
        } else if (*verify) {
            turan::VerifyReport report;
            if (v_subject == "lnk") {
                report = turan::verify_theorem_13(v_nmax, jobs);
            } else if (v_subject == "matching") {
                report = turan::verify_erdos_gallai(v_nmax, jobs);
            } else {
                report.rows.push_back(turan::verify_conjecture(v_n, v_k));
            }
            turan::write_tsv(std::cout, report);
            std::size_t disagreements = 0;
            for (const auto& r : report.rows)
                if (!r.agree) ++disagreements;
            std::cerr << report.rows.size() << " rows, " << disagreements << " disagreements";
            if (report.graphs_scanned > 0) std::cerr << ", " << report.graphs_scanned << " graphs scanned";
            std::cerr << '\n';
            if (disagreements > 0) return 1;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const turan::SizeCapError& e) {
        std::cerr << e.what() << '\n';
        return kExitSizeCap;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }
}
