// Command-line surface: `demo` reports every construction on a matrix read
// from a file; `fuzz` runs seeded property-test campaigns and emits a
// line-oriented key=value report on stdout (deterministic for a given flag
// set) with failure records on stderr; `fuzz --replay` re-runs recorded
// failing trials in isolation.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ringalg/ringalg.hpp"

namespace {

using namespace ringalg;

int run_demo(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    const Matrix a = parse_matrix_file(buffer.str());
    const Ring& ring = a.ring();
    const int n = a.dim();

    std::cout << "ring = " << render_ring(ring, RingStyle::Compact) << "\n";
    std::cout << "dim = " << n << "\n";
    std::cout << "a = " << render_matrix_inline(a) << "\n";

    const Value det = det_cofactor(a);
    std::cout << "det_cofactor = " << det << "\n";
    if (n <= kLeibnizDimCap)
        std::cout << "det_leibniz = " << det_leibniz(a) << "\n";
    else
        std::cout << "det_leibniz = skipped (dimension above oracle cap)\n";
    std::cout << "det_exterior = " << det_exterior(a) << "\n";

    const Matrix adj = adjugate_cofactor(a);
    std::cout << "adjugate_cofactor = " << adj << "\n";
    std::cout << "adjugate_exterior = " << adjugate_exterior(a) << "\n";
    std::cout << "adjugate_times_a = " << adj * a << "\n";
    std::cout << "a_times_adjugate = " << a * adj << "\n";

    const CHReport rep = check_cayley_hamilton(a);
    std::cout << "charpoly = " << rep.chi << "\n";
    std::cout << "monic_charpoly = " << monic_charpoly(a) << "\n";
    std::cout << "chi_of_a = " << rep.chi_at_a << "\n";
    std::cout << "trace_chi_at_a = " << rep.chi_at_a << "\n";
    std::cout << "trace_product_act = " << rep.product_act << "\n";
    std::cout << "trace_nested_act = " << rep.nested_act << "\n";
    std::cout << "trace_act_on_zero = " << rep.act_on_zero << "\n";
    std::cout << "verdict = " << (rep.verdict ? "pass" : "fail") << "\n";
    return rep.verdict ? 0 : 1;
}

std::vector<Ring> parse_ring_list(const std::string& arg) {
    std::vector<Ring> rings;
    std::stringstream in(arg);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        rings.push_back(parse_ring(item));
    }
    return rings;
}

void parse_dim_range(const std::string& arg, int& lo, int& hi) {
    const auto dots = arg.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(arg);
        } else {
            lo = std::stoi(arg.substr(0, dots));
            hi = std::stoi(arg.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw MismatchError("malformed --dims '" + arg + "', expected A..B");
    }
}

int run_fuzz_cmd(const std::string& suite, const std::string& rings_arg,
                 const std::string& dims_arg, std::uint64_t trials, std::uint64_t seed,
                 const std::string& replay_path) {
    if (!replay_path.empty()) {
        std::ifstream in(replay_path);
        if (!in) {
            std::cerr << "error: cannot open '" << replay_path << "'\n";
            return 2;
        }
        std::vector<ReplayRecord> records;
        std::string line;
        while (std::getline(in, line)) {
            if (auto rec = parse_failure_record(line)) records.push_back(std::move(*rec));
        }
        if (records.empty()) {
            std::cerr << "error: no failure records in '" << replay_path << "'\n";
            return 2;
        }
        return run_replay(records, std::cout) ? 0 : 1;
    }

    FuzzConfig cfg;
    cfg.suite = suite;
    cfg.rings = parse_ring_list(rings_arg);
    parse_dim_range(dims_arg, cfg.dim_lo, cfg.dim_hi);
    cfg.trials = trials;
    cfg.seed = seed;
    validate_config(cfg);  // rejects bad flag values before any trial runs

    const FuzzReport report = run_fuzz(cfg);
    write_report(report, std::cout);
    write_failures(report, std::cerr);
    return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact linear algebra over commutative rings"};
    app.require_subcommand(1);

    std::string demo_path;
    CLI::App* demo = app.add_subcommand("demo", "full report on a matrix read from a file");
    demo->add_option("file", demo_path, "matrix file (ring, dimension, rows)")->required();

    std::string suite = "all";
    std::string rings_arg = "Z,Q,Zmod4,Zmod6,Zmod97,Dual(Z)";
    std::string dims_arg = "1..4";
    std::uint64_t trials = 100;
    std::uint64_t seed = 1;
    std::string replay_path;
    CLI::App* fuzz = app.add_subcommand("fuzz", "seeded property-test campaign");
    fuzz->add_option("--suite", suite, "ch|general|oracles|action|transport|all");
    fuzz->add_option("--rings", rings_arg, "comma-separated ring descriptors");
    fuzz->add_option("--dims", dims_arg, "inclusive dimension range A..B within [1,6]");
    fuzz->add_option("--trials", trials, "trials per (suite, ring, dim)");
    fuzz->add_option("--seed", seed, "campaign seed");
    fuzz->add_option("--replay", replay_path, "re-run failure records from this file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (demo->parsed()) return run_demo(demo_path);
        return run_fuzz_cmd(suite, rings_arg, dims_arg, trials, seed, replay_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
