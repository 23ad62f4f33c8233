#pragma once

// Seeded property-test campaigns over the whole library, shared by the CLI
// and the acceptance suite. Every trial's generator state is derived from
// (campaign seed, suite, ring, dim, trial index), so a single failing trial
// can be re-run in isolation from its failure record, and report content is
// a pure function of the configuration. Timing is kept out of the report
// lines for that reason; it travels in the struct and on stderr only.

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ringalg/action.hpp"
#include "ringalg/exterior.hpp"
#include "ringalg/matrix.hpp"
#include "ringalg/rings.hpp"
#include "ringalg/text.hpp"
#include "ringalg/theorems.hpp"
#include "ringalg/transport.hpp"

namespace ringalg {

inline constexpr std::string_view kSuiteNames[] = {"ch", "general", "oracles", "action",
                                                   "transport"};

struct FuzzConfig {
    std::vector<Ring> rings;
    int dim_lo = 1;
    int dim_hi = 4;
    std::uint64_t trials = 100;
    std::uint64_t seed = 1;
    std::string suite = "all";
};

struct FuzzFailure {
    std::string suite;
    Ring ring;
    int dim;
    std::uint64_t seed;
    std::uint64_t trial;
    std::string input;
};

struct SuiteLine {
    std::string suite;
    Ring ring;
    int dim;
    std::uint64_t trials;
    std::uint64_t failures;
    long long millis;  // wall time; never printed on stdout
};

struct FuzzReport {
    std::vector<SuiteLine> lines;
    std::vector<FuzzFailure> failures;
    bool pass = true;
    long long total_millis = 0;
};

inline std::vector<std::string> expand_suites(const std::string& name) {
    if (name == "all") {
        std::vector<std::string> out;
        for (auto s : kSuiteNames) out.emplace_back(s);
        return out;
    }
    for (auto s : kSuiteNames)
        if (name == s) return {name};
    throw MismatchError("unknown suite '" + name + "'");
}

inline void validate_config(const FuzzConfig& cfg) {
    if (cfg.rings.empty()) throw MismatchError("no rings selected");
    if (cfg.trials < 1) throw MismatchError("trials must be at least 1");
    if (cfg.dim_lo < 1 || cfg.dim_hi > 6 || cfg.dim_lo > cfg.dim_hi)
        throw MismatchError("dims must be a sub-range of [1, 6]");
    for (const Ring& r : cfg.rings)
        if (nesting_depth(r) + 1 > kMaxNestingDepth)
            throw InvalidRingError("ring " + render_ring(r, RingStyle::Compact) +
                                   " is too deeply nested to build polynomials over it");
    expand_suites(cfg.suite);
}

inline std::uint64_t trial_seed(std::uint64_t campaign_seed, std::string_view suite,
                                const Ring& ring, int dim, std::uint64_t trial) {
    std::uint64_t s = mix_seed(campaign_seed, fnv1a(suite));
    s = mix_seed(s, fnv1a(render_ring(ring, RingStyle::Compact)));
    s = mix_seed(s, static_cast<std::uint64_t>(dim));
    return mix_seed(s, trial);
}

namespace detail {

inline std::string one_line(std::string s) {
    for (char& c : s)
        if (c == '\n') c = ';';
    if (!s.empty() && s.back() == ';') s.pop_back();
    return s;
}

inline std::string serialize_matrix(const Matrix& a) { return one_line(render_matrix_file(a)); }

inline std::optional<std::string> ch_trial(const Ring& ring, int dim, Rng& rng) {
    const Matrix a = random_matrix(ring, dim, rng);
    const CHReport rep = check_cayley_hamilton(a);
    bool ok = rep.verdict;
    // Shape facts about chi ride along: degree n, leading coefficient (-1)^n,
    // and the monic variant is the (-1)^n rescaling.
    ok = ok && poly_degree(rep.chi) == std::optional<int>(dim);
    const Value lead = poly_leading_coeff(rep.chi);
    ok = ok && lead == from_int(ring, (dim % 2 == 0) ? 1 : -1);
    const Value monic = monic_charpoly(a);
    ok = ok && monic == ((dim % 2 == 0) ? rep.chi : neg(rep.chi));
    ok = ok && poly_leading_coeff(monic) == one(ring);
    if (ok) return std::nullopt;
    return serialize_matrix(a);
}

inline std::optional<std::string> oracles_trial(const Ring& ring, int dim, Rng& rng) {
    const Matrix a = random_matrix(ring, dim, rng);
    const Matrix b = random_matrix(ring, dim, rng);
    const Value d_cof = det_cofactor(a);
    bool ok = d_cof == det_leibniz(a) && d_cof == det_exterior(a);
    const Matrix adj = adjugate_cofactor(a);
    ok = ok && adj == adjugate_exterior(a);
    const Matrix det_id = scale(d_cof, Matrix::identity(ring, dim));
    ok = ok && adj * a == det_id && a * adj == det_id;
    ok = ok && det_cofactor(a * b) == mul(d_cof, det_cofactor(b));
    ok = ok && det_cofactor(Matrix::identity(ring, dim)) == one(ring);
    if (ok) return std::nullopt;
    return serialize_matrix(a) + " | " + serialize_matrix(b);
}

inline std::optional<std::string> action_trial(const Ring& ring, int dim, Rng& rng) {
    const MatPoly p = random_matpoly(ring, dim, 3, rng);
    const MatPoly q = random_matpoly(ring, dim, 3, rng);
    const Matrix g = random_matrix(ring, dim, rng);
    const Matrix h = random_matrix(ring, dim, rng);
    const Matrix a = random_matrix(ring, dim, rng);
    const Matrix id = Matrix::identity(ring, dim);

    bool ok = act(p * q, g, a) == act(p, act(q, g, a), a);     // action law
    ok = ok && act(MatPoly::identity(ring, dim), g, a) == g;   // unitality
    ok = ok && act(p + q, g, a) == act(p, g, a) + act(q, g, a);
    ok = ok && act(p, g + h, a) == act(p, g, a) + act(p, h, a);
    ok = ok && act(p, id, a) == right_subst(p, a);
    ok = ok && act(char_matrix(a), id, a).is_zero();           // (a - X) . id = 0
    if (ok) return std::nullopt;
    return serialize_matrix(a) + " | p=" + render_matpoly(p) + " | q=" + render_matpoly(q);
}

inline std::optional<std::string> transport_trial(const Ring& ring, int dim, Rng& rng) {
    const MatPoly p = random_matpoly(ring, dim, 3, rng);
    const MatPoly q = random_matpoly(ring, dim, 3, rng);
    bool ok = to_matpoly(to_polymat(p)) == p;
    const Ring rx = poly_ring(ring, 1);
    Matrix m = Matrix::zero(rx, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m.set(i, j, random_poly(rx, 3, rng));
    ok = ok && to_polymat(to_matpoly(m)) == m;
    ok = ok && to_polymat(p + q) == to_polymat(p) + to_polymat(q);
    ok = ok && to_polymat(p * q) == to_polymat(p) * to_polymat(q);
    ok = ok && to_polymat(MatPoly::identity(ring, dim)) == Matrix::identity(rx, dim);
    const Matrix a = random_matrix(ring, dim, rng);
    ok = ok && det_cofactor(to_polymat(char_matrix(a))) == charpoly(a);
    if (ok) return std::nullopt;
    return serialize_matrix(a) + " | p=" + render_matpoly(p) + " | q=" + render_matpoly(q);
}

inline std::optional<std::string> general_trial(const Ring& ring, int dim, Rng& rng) {
    const int n = 2 + static_cast<int>(rng.uniform(0, 1));
    const GenInstance inst = generate_instance(ring, dim, n, rng);
    std::string detail;
    try {
        if (check_generalized(inst).verdict) return std::nullopt;
        detail = "nonzero evaluation";
    } catch (const std::exception& e) {
        detail = e.what();
    }
    std::string fs, as;
    for (const Matrix& m : inst.f) fs += (fs.empty() ? "" : " ") + render_matrix_inline(m);
    for (const Matrix& m : inst.a) as += (as.empty() ? "" : " ") + render_matrix_inline(m);
    return detail + " | f: " + fs + " | a: " + as;
}

}  // namespace detail

inline std::optional<std::string> run_trial(std::string_view suite, const Ring& ring, int dim,
                                            Rng& rng) {
    if (suite == "ch") return detail::ch_trial(ring, dim, rng);
    if (suite == "oracles") return detail::oracles_trial(ring, dim, rng);
    if (suite == "action") return detail::action_trial(ring, dim, rng);
    if (suite == "transport") return detail::transport_trial(ring, dim, rng);
    if (suite == "general") return detail::general_trial(ring, dim, rng);
    throw MismatchError("unknown suite '" + std::string(suite) + "'");
}

// Trials are independent with per-trial derived seeds, so they could run in
// parallel without changing any result; the desk-scale counts here do not
// need it, and serial execution keeps the harness trivial.
inline FuzzReport run_fuzz(const FuzzConfig& cfg) {
    validate_config(cfg);
    FuzzReport report;
    const auto suites = expand_suites(cfg.suite);
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& suite : suites) {
        for (const Ring& ring : cfg.rings) {
            for (int dim = cfg.dim_lo; dim <= cfg.dim_hi; ++dim) {
                const auto s0 = std::chrono::steady_clock::now();
                std::uint64_t failures = 0;
                for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
                    Rng rng(trial_seed(cfg.seed, suite, ring, dim, trial));
                    if (auto bad = run_trial(suite, ring, dim, rng)) {
                        ++failures;
                        report.failures.push_back(
                            FuzzFailure{suite, ring, dim, cfg.seed, trial, std::move(*bad)});
                    }
                }
                const auto s1 = std::chrono::steady_clock::now();
                const auto ms =
                    std::chrono::duration_cast<std::chrono::milliseconds>(s1 - s0).count();
                report.lines.push_back(SuiteLine{suite, ring, dim, cfg.trials, failures, ms});
            }
        }
    }
    const auto t1 = std::chrono::steady_clock::now();
    report.total_millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    report.pass = report.failures.empty();
    return report;
}

// Deterministic stdout report: one key=value line per (suite, ring, dim)
// plus the final verdict.
inline void write_report(const FuzzReport& report, std::ostream& out) {
    for (const SuiteLine& line : report.lines)
        out << "suite=" << line.suite << " ring=" << render_ring(line.ring, RingStyle::Compact)
            << " dim=" << line.dim << " trials=" << line.trials << " failures=" << line.failures
            << "\n";
    out << "verdict=" << (report.pass ? "pass" : "fail") << "\n";
}

// Failure records and timing diagnostics; each record carries everything
// needed to re-run that single trial.
inline void write_failures(const FuzzReport& report, std::ostream& err) {
    for (const FuzzFailure& f : report.failures)
        err << "FAIL suite=" << f.suite << " ring=" << render_ring(f.ring, RingStyle::Compact)
            << " dim=" << f.dim << " seed=" << f.seed << " trial=" << f.trial << " input=\""
            << f.input << "\"\n";
    err << "# total_millis=" << report.total_millis << "\n";
}

struct ReplayRecord {
    std::string suite;
    Ring ring;
    int dim = 0;
    std::uint64_t seed = 0;
    std::uint64_t trial = 0;
};

// Accepts the FAIL lines produced by write_failures; other lines are skipped.
inline std::optional<ReplayRecord> parse_failure_record(const std::string& line) {
    std::istringstream in(line);
    std::string token;
    if (!(in >> token) || token != "FAIL") return std::nullopt;
    ReplayRecord rec;
    bool have_suite = false, have_ring = false, have_dim = false, have_seed = false,
         have_trial = false;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        if (key == "suite") {
            rec.suite = value;
            have_suite = true;
        } else if (key == "ring") {
            rec.ring = parse_ring(value);
            have_ring = true;
        } else if (key == "dim") {
            rec.dim = std::stoi(value);
            have_dim = true;
        } else if (key == "seed") {
            rec.seed = std::stoull(value);
            have_seed = true;
        } else if (key == "trial") {
            rec.trial = std::stoull(value);
            have_trial = true;
        }
    }
    if (!(have_suite && have_ring && have_dim && have_seed && have_trial))
        throw MismatchError("incomplete failure record: " + line);
    return rec;
}

// Re-runs the recorded trials; returns true when all of them pass now.
inline bool run_replay(const std::vector<ReplayRecord>& records, std::ostream& out) {
    bool all_pass = true;
    for (const ReplayRecord& rec : records) {
        Rng rng(trial_seed(rec.seed, rec.suite, rec.ring, rec.dim, rec.trial));
        const auto bad = run_trial(rec.suite, rec.ring, rec.dim, rng);
        all_pass = all_pass && !bad;
        out << "replay suite=" << rec.suite << " ring=" << render_ring(rec.ring, RingStyle::Compact)
            << " dim=" << rec.dim << " seed=" << rec.seed << " trial=" << rec.trial
            << " verdict=" << (bad ? "fail" : "pass") << "\n";
    }
    out << "verdict=" << (all_pass ? "pass" : "fail") << "\n";
    return all_pass;
}

}  // namespace ringalg
