// Batch front end for the wavelet-Galerkin bound-state solver.
//
// Exit status: 0 success, 2 validation/usage error, 3 numerical failure,
// 4 tolerance breach in `compare`.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ipsf/assembly.hpp"
#include "ipsf/connection.hpp"
#include "ipsf/eigensolve.hpp"
#include "ipsf/errors.hpp"
#include "ipsf/moments.hpp"
#include "ipsf/oracle.hpp"
#include "ipsf/scaling.hpp"
#include "ipsf/table_io.hpp"
#include "ipsf/wavefunction.hpp"

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct PotentialArgs {
    std::vector<double> sextic;
    std::vector<double> decatic;
    std::string coeffs;

    void attach(CLI::App* cmd) {
        auto* s = cmd->add_option("--sextic", sextic,
                                  "sextic potential a x^2 + b x^4 + c x^6 (three values)")
                      ->expected(3);
        auto* d = cmd->add_option("--decatic", decatic,
                                  "decatic potential a x^2 + ... + e x^10 (five values)")
                      ->expected(5);
        auto* g = cmd->add_option("--coeffs", coeffs,
                                  "general polynomial as degree:coefficient pairs, "
                                  "e.g. \"2:1,4:-4,6:1\"");
        s->excludes(d)->excludes(g);
        d->excludes(g);
    }

    ipsf::PolynomialPotential build() const {
        using ipsf::PolynomialPotential;
        if (!sextic.empty()) return PolynomialPotential::sextic(sextic[0], sextic[1], sextic[2]);
        if (!decatic.empty()) {
            return PolynomialPotential::decatic(decatic[0], decatic[1], decatic[2], decatic[3],
                                                decatic[4]);
        }
        if (!coeffs.empty()) {
            std::vector<double> c;
            std::istringstream in(coeffs);
            std::string term;
            while (std::getline(in, term, ',')) {
                const auto colon = term.find(':');
                if (colon == std::string::npos) {
                    throw ipsf::ValidationError("bad coefficient term '" + term +
                                                "', expected degree:value");
                }
                const int m = std::stoi(term.substr(0, colon));
                if (m < 0) throw ipsf::ValidationError("negative degree in --coeffs");
                const double v = std::stod(term.substr(colon + 1));
                if (c.size() <= static_cast<std::size_t>(m)) c.resize(m + 1, 0.0);
                c[static_cast<std::size_t>(m)] = v;
            }
            return PolynomialPotential(c);
        }
        throw ipsf::ValidationError("no potential given: use --sextic, --decatic or --coeffs");
    }

    std::string describe() const {
        const auto pot = build();
        std::string s;
        for (int m = 0; m <= pot.degree(); ++m) {
            if (pot.coeff(m) == 0.0) continue;
            char buf[48];
            std::snprintf(buf, sizeof buf, "%s%d:%.17g", s.empty() ? "" : ",", m, pot.coeff(m));
            s += buf;
        }
        return s.empty() ? "0" : s;
    }
};

struct CommonArgs {
    int order = 4;
    int level = 7;
    int half_width = 6;
    int states = 1;
    int depth = 10;
    std::string out_dir;
    std::string cache_dir;
    bool no_cache = false;

    void attach(CLI::App* cmd, bool with_solver_knobs = true) {
        cmd->add_option("-N,--order", order, "scaling-function order (even)")
            ->capture_default_str();
        if (with_solver_knobs) {
            cmd->add_option("-j,--level", level, "resolution level")->capture_default_str();
            cmd->add_option("-R,--half-width", half_width, "domain half-width")
                ->capture_default_str();
            cmd->add_option("-n,--states", states, "number of bound states")
                ->capture_default_str();
            cmd->add_option("-d,--depth", depth, "dyadic sampling depth for wavefunctions")
                ->capture_default_str();
        }
        cmd->add_option("-o,--out", out_dir, "directory for output files");
        cmd->add_option("--cache-dir", cache_dir,
                        "coefficient-table cache directory (env IPSF_CACHE_DIR)")
            ->envname("IPSF_CACHE_DIR");
        cmd->add_flag("--no-cache", no_cache, "recompute tables, do not touch the cache");
    }
};

struct TableSet {
    ipsf::RefinementMask mask;
    ipsf::ConnectionTable connection;
    ipsf::MomentTable moments;
};

// Fetch tables from the cache when possible, computing and refreshing the
// cache otherwise.
TableSet get_tables(const CommonArgs& args, int m_max) {
    using namespace ipsf;
    const ScaleOrder order(args.order);

    fs::path cache_file;
    if (!args.no_cache) {
        const fs::path dir = args.cache_dir.empty() ? fs::path(".ipsf-cache")
                                                    : fs::path(args.cache_dir);
        cache_file = dir / ("tables-N" + std::to_string(args.order) + "-m" +
                            std::to_string(m_max) + ".txt");
        if (fs::exists(cache_file)) {
            try {
                const auto bundle = load(cache_file.string());
                if (bundle.order == args.order && bundle.m_max >= m_max) {
                    return TableSet{mask_from_bundle(bundle), connection_from_bundle(bundle),
                                    moments_from_bundle(bundle)};
                }
            } catch (const Error& e) {
                std::fprintf(stderr, "warning: ignoring unusable cache %s (%s)\n",
                             cache_file.string().c_str(), e.what());
            }
        }
    }

    auto mask = build_mask(order);
    auto connection = compute_connection(mask);
    auto moments = compute_moments(mask, m_max);

    if (!args.no_cache) {
        try {
            fs::create_directories(cache_file.parent_path());
            store(bundle_tables(mask, connection, moments), cache_file.string());
        } catch (const std::exception& e) {
            std::fprintf(stderr, "warning: could not write table cache: %s\n", e.what());
        }
    }
    return TableSet{std::move(mask), std::move(connection), std::move(moments)};
}

int table_m_max(const ipsf::PolynomialPotential& pot) {
    return std::max(10, pot.degree());
}

void warn_if_not_confining(const ipsf::PolynomialPotential& pot) {
    if (!pot.is_confining()) {
        std::fprintf(stderr,
                     "warning: potential is not confining (leading term), bound states may "
                     "not exist\n");
    }
}

void ensure_out_dir(const std::string& dir) {
    if (dir.empty()) return;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw ipsf::IoError("cannot create output directory '" + dir + "'");
}

std::string csv_metadata(const PotentialArgs& pot, const CommonArgs& args, int state,
                         double energy) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "potential=%s order=%d level=%d half_width=%d state=%d energy=%.17g depth=%d",
                  pot.describe().c_str(), args.order, args.level, args.half_width, state, energy,
                  args.depth);
    return buf;
}

// ----------------------------------------------------------------- solve

int cmd_solve(const PotentialArgs& pot_args, const CommonArgs& args, bool wavefunctions,
              bool oracle, int oracle_points) {
    using namespace ipsf;
    const auto pot = pot_args.build();
    warn_if_not_confining(pot);

    const auto t_tables0 = Clock::now();
    const auto tables = get_tables(args, table_m_max(pot));
    const double t_tables = seconds_since(t_tables0);

    const auto disc = make_discretization(args.level, args.half_width, ScaleOrder(args.order));
    const auto t_asm0 = Clock::now();
    const auto problem = assemble(pot, disc, tables.connection, tables.moments);
    const double t_assemble = seconds_since(t_asm0);

    const auto t_solve0 = Clock::now();
    const auto spectrum = solve_generalized(problem, args.states);
    const double t_solve = seconds_since(t_solve0);

    std::optional<NumerovResult> reference;
    if (oracle) reference = numerov_solve(pot, args.half_width, oracle_points, args.states);

    std::printf("V(x) = %s   N=%d  j=%d  domain [-%d,%d]  dimension %lld\n",
                pot_args.describe().c_str(), args.order, args.level, args.half_width,
                args.half_width, disc.dimension());
    std::printf("%-6s %-24s %-12s %-12s", "state", "energy", "residual", "|cBc-1|");
    if (reference) std::printf(" %-24s %-10s", "oracle", "|diff|");
    std::printf("\n");
    for (int i = 0; i < spectrum.states(); ++i) {
        std::printf("%-6d %-24.16g %-12.2e %-12.2e", i, spectrum.eigenvalues[i],
                    spectrum.residuals[i], spectrum.norm_certificates[i]);
        if (reference) {
            std::printf(" %-24.16g %-10.2e", reference->eigenvalues[i],
                        std::abs(reference->eigenvalues[i] - spectrum.eigenvalues[i]));
        }
        std::printf("\n");
    }

    if (wavefunctions) {
        if (args.out_dir.empty()) {
            throw ValidationError("--wavefunctions needs --out to name the CSV directory");
        }
        ensure_out_dir(args.out_dir);
        const auto samples = eval_phi_dyadic(tables.mask, args.depth - args.level);
        for (int i = 0; i < spectrum.states(); ++i) {
            const auto psi = reconstruct(spectrum, i, disc, samples, args.depth);
            const auto path = fs::path(args.out_dir) / ("state" + std::to_string(i) + ".csv");
            write_wavefunction_csv(path.string(), psi,
                                   csv_metadata(pot_args, args, i, spectrum.eigenvalues[i]));
            std::printf("wrote %s\n", path.string().c_str());
        }
    }

    std::printf("--- summary ---\n");
    std::printf("command=solve\n");
    std::printf("potential=%s\n", pot_args.describe().c_str());
    std::printf("order=%d\nlevel=%d\nhalf_width=%d\nstates=%d\ndimension=%lld\n", args.order,
                args.level, args.half_width, args.states, disc.dimension());
    for (int i = 0; i < spectrum.states(); ++i) {
        std::printf("E[%d]=%.17g\n", i, spectrum.eigenvalues[i]);
        std::printf("residual[%d]=%.17g\n", i, spectrum.residuals[i]);
        std::printf("bnorm_error[%d]=%.17g\n", i, spectrum.norm_certificates[i]);
        if (reference) {
            std::printf("oracle_E[%d]=%.17g\n", i, reference->eigenvalues[i]);
            std::printf("oracle_estimate[%d]=%.17g\n", i, reference->error_estimates[i]);
        }
    }
    std::printf("t_tables=%.3f\nt_assemble=%.3f\nt_solve=%.3f\n", t_tables, t_assemble, t_solve);

    if (!args.out_dir.empty()) {
        ensure_out_dir(args.out_dir);
        const auto path = fs::path(args.out_dir) / "summary.txt";
        std::ofstream out(path);
        out << "command=solve\npotential=" << pot_args.describe() << "\n";
        char buf[96];
        for (int i = 0; i < spectrum.states(); ++i) {
            std::snprintf(buf, sizeof buf, "E[%d]=%.17g\n", i, spectrum.eigenvalues[i]);
            out << buf;
        }
        if (!out.good()) throw IoError("write failure on '" + path.string() + "'");
    }
    return 0;
}

// ----------------------------------------------------------- convergence

int cmd_convergence(const PotentialArgs& pot_args, const CommonArgs& args, int j_from, int j_to,
                    int workers) {
    using namespace ipsf;
    if (j_to <= j_from) {
        throw ValidationError("convergence study needs an ascending level range of length >= 2");
    }
    const auto pot = pot_args.build();
    warn_if_not_confining(pot);
    const auto tables = get_tables(args, table_m_max(pot));

    const int count = j_to - j_from + 1;
    std::vector<double> energy(static_cast<std::size_t>(count));
    const auto solve_level = [&](int idx) {
        const int level = j_from + idx;
        const auto disc = make_discretization(level, args.half_width, ScaleOrder(args.order));
        const auto problem = assemble(pot, disc, tables.connection, tables.moments);
        energy[static_cast<std::size_t>(idx)] =
            solve_generalized(problem, args.states).eigenvalues[args.states - 1];
    };
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) solve_level(i);
    } else {
        std::vector<std::future<void>> pending;
        for (int i = 0; i < count; ++i) {
            pending.push_back(std::async(std::launch::async, solve_level, i));
            if (static_cast<int>(pending.size()) == workers) {
                for (auto& f : pending) f.get();
                pending.clear();
            }
        }
        for (auto& f : pending) f.get();
    }

    std::printf("V(x) = %s   state %d\n", pot_args.describe().c_str(), args.states - 1);
    std::printf("%-4s %-24s %-14s\n", "j", "energy", "dE");
    bool monotone = true;
    double prev_diff = 0.0;
    for (int i = 0; i < count; ++i) {
        if (i == 0) {
            std::printf("%-4d %-24.16g %-14s\n", j_from + i, energy[i], "-");
        } else {
            const double diff = energy[i - 1] - energy[i];
            if (i >= 2 && std::abs(diff) > std::abs(prev_diff)) monotone = false;
            std::printf("%-4d %-24.16g %-14.3e\n", j_from + i, energy[i], diff);
            prev_diff = diff;
        }
    }
    if (!monotone) std::printf("note: |dE| sequence is not monotonically decreasing\n");

    std::printf("--- summary ---\ncommand=convergence\npotential=%s\n",
                pot_args.describe().c_str());
    std::printf("state=%d\nj_from=%d\nj_to=%d\nmonotone=%s\n", args.states - 1, j_from, j_to,
                monotone ? "yes" : "no");
    for (int i = 0; i < count; ++i) {
        std::printf("E[j=%d]=%.17g\n", j_from + i, energy[i]);
        if (i > 0) std::printf("dE[j=%d]=%.17g\n", j_from + i, energy[i - 1] - energy[i]);
    }

    if (!args.out_dir.empty()) {
        ensure_out_dir(args.out_dir);
        const auto path = fs::path(args.out_dir) / "convergence.csv";
        std::ofstream out(path);
        out << "# potential=" << pot_args.describe() << " state=" << args.states - 1 << "\n";
        out << "j,energy,delta\n";
        char buf[96];
        for (int i = 0; i < count; ++i) {
            std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", j_from + i, energy[i],
                          i > 0 ? energy[i - 1] - energy[i] : 0.0);
            out << buf;
        }
        std::printf("wrote %s\n", path.string().c_str());
    }
    return 0;
}

// ---------------------------------------------------------------- tables

int cmd_tables(const CommonArgs& args, int m_max) {
    using namespace ipsf;
    const auto tables = get_tables(args, m_max);
    const int n = args.order;

    std::printf("refinement mask a_k, order N=%d (a_k = a_{-k})\n", n);
    std::printf("%-6s", "k");
    for (int k = -n + 1; k <= 0; ++k) std::printf(" %12d", k);
    std::printf("\n%-6s", "a_k");
    for (int k = -n + 1; k <= 0; ++k) {
        std::printf(" %12s", format_rational(tables.mask.at(k)).c_str());
    }
    std::printf("\n\n");

    const int band = tables.connection.band();
    std::printf("second-derivative coefficients L_k (L_k = L_{-k}, zero for |k| >= %d)\n",
                2 * n - 2);
    std::printf("%-6s", "k");
    for (int k = -band; k <= 0; ++k) std::printf(" %12d", k);
    std::printf("\n%-6s", "L_k");
    for (int k = -band; k <= 0; ++k) {
        std::printf(" %12s", format_rational(tables.connection.at(k)).c_str());
    }
    std::printf("\n\n");

    std::printf("moment coefficients H_{m,k} (H_{m,-k} = (-1)^m H_{m,k})\n");
    std::printf("%-8s", "m\\k");
    for (int k = -band; k <= 0; ++k) std::printf(" %13d", k);
    std::printf("\n");
    for (int m = 0; m <= tables.moments.m_max(); ++m) {
        std::printf("%-8d", m);
        for (int k = -band; k <= 0; ++k) std::printf(" %13.6g", tables.moments.at(m, k));
        std::printf("\n");
    }
    return 0;
}

// --------------------------------------------------------------- compare

struct CompareRow {
    std::string label;
    double computed = 0.0;
    double reference = 0.0;
    double tolerance = 0.0;
    bool within = false;
};

double group_tolerance(const std::string& group, double reference) {
    if (group == "sextic-qes") return 1e-11;
    if (group == "sextic-exact") return 3e-11;
    if (group == "sextic-scm") return 2e-11;
    if (group == "decatic-scm") return 2e-9;
    if (group == "sextic-pinned" || group == "decatic-pinned") {
        return 1e-12 * std::abs(reference);
    }
    return 1e-9;
}

int cmd_compare(const CommonArgs& args, const std::string& group_filter,
                const std::string& data_file, int workers) {
    using namespace ipsf;
    const auto all = data_file.empty() ? reference_suite() : reference_suite(data_file);
    std::vector<ReferenceCase> cases;
    for (const auto& c : all) {
        if (group_filter == "all" || c.group == group_filter) cases.push_back(c);
    }
    if (cases.empty()) {
        throw ValidationError("no reference cases match group '" + group_filter + "'");
    }

    int m_max = 10;
    for (const auto& c : cases) m_max = std::max(m_max, c.potential.degree());
    const auto tables = get_tables(args, m_max);

    std::vector<CompareRow> rows(cases.size());
    const auto run_case = [&](std::size_t i) {
        const auto& c = cases[i];
        const auto disc = make_discretization(args.level, args.half_width, ScaleOrder(args.order));
        const auto problem = assemble(c.potential, disc, tables.connection, tables.moments);
        const auto spectrum = solve_generalized(problem, c.state + 1);
        CompareRow r;
        r.label = c.label;
        r.computed = spectrum.eigenvalues[c.state];
        r.reference = c.reference_energy;
        r.tolerance = group_tolerance(c.group, c.reference_energy);
        r.within = std::abs(r.computed - r.reference) <= r.tolerance;
        rows[i] = std::move(r);
    };

    if (workers <= 1) {
        for (std::size_t i = 0; i < cases.size(); ++i) run_case(i);
    } else {
        std::vector<std::future<void>> pending;
        for (std::size_t i = 0; i < cases.size(); ++i) {
            pending.push_back(std::async(std::launch::async, run_case, i));
            if (static_cast<int>(pending.size()) == workers) {
                for (auto& f : pending) f.get();
                pending.clear();
            }
        }
        for (auto& f : pending) f.get();
    }

    int breaches = 0;
    std::printf("%-58s %-22s %-22s %-10s %-4s\n", "case", "computed", "reference", "|diff|",
                "ok");
    for (const auto& r : rows) {
        if (!r.within) ++breaches;
        std::printf("%-58s %-22.16g %-22.16g %-10.2e %-4s\n", r.label.c_str(), r.computed,
                    r.reference, std::abs(r.computed - r.reference), r.within ? "yes" : "NO");
    }
    std::printf("--- summary ---\ncommand=compare\nlevel=%d\ncases=%zu\nbreaches=%d\n",
                args.level, rows.size(), breaches);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::printf("case[%zu].computed=%.17g\ncase[%zu].reference=%.17g\ncase[%zu].ok=%s\n", i,
                    rows[i].computed, i, rows[i].reference, i, rows[i].within ? "yes" : "no");
    }
    return breaches == 0 ? 0 : 4;
}

// ---------------------------------------------------------- wavefunction

int cmd_wavefunction(const PotentialArgs& pot_args, const CommonArgs& args, int state,
                     const std::string& oracle_kind) {
    using namespace ipsf;
    if (args.out_dir.empty()) {
        throw ValidationError("wavefunction export needs --out");
    }
    const auto pot = pot_args.build();
    warn_if_not_confining(pot);
    const auto tables = get_tables(args, table_m_max(pot));
    const auto disc = make_discretization(args.level, args.half_width, ScaleOrder(args.order));
    const auto problem = assemble(pot, disc, tables.connection, tables.moments);
    const auto spectrum = solve_generalized(problem, state + 1);
    const auto samples = eval_phi_dyadic(tables.mask, args.depth - args.level);
    const auto psi = reconstruct(spectrum, state, disc, samples, args.depth);

    std::optional<SampledWavefunction> reference;
    if (oracle_kind == "numerov") {
        reference = numerov_wavefunction(pot, args.half_width, args.depth, state);
    } else if (oracle_kind == "qes") {
        // Ground-state closed form of the constrained sextic family.
        if (state != 0 || pot.degree() != 6) {
            throw ValidationError("--oracle qes applies to the sextic ground state only");
        }
        std::vector<double> grid(static_cast<std::size_t>(psi.points()));
        for (long long i = 0; i < psi.points(); ++i) {
            grid[static_cast<std::size_t>(i)] = psi.x_at(i);
        }
        auto values = qes_ground_profile(pot.coeff(4), pot.coeff(6), grid);
        double norm = 0.0;
        for (std::size_t i = 0; i + 2 < values.size(); i += 2) {
            norm += values[i] * values[i] + 4.0 * values[i + 1] * values[i + 1] +
                    values[i + 2] * values[i + 2];
        }
        norm *= std::ldexp(1.0, -args.depth) / 3.0;
        SampledWavefunction ref;
        ref.depth = psi.depth;
        ref.half_width = psi.half_width;
        ref.values = std::move(values);
        for (double& v : ref.values) v /= std::sqrt(norm);
        reference = std::move(ref);
    } else if (!oracle_kind.empty()) {
        throw ValidationError("unknown oracle '" + oracle_kind + "' (use qes or numerov)");
    }

    ensure_out_dir(args.out_dir);
    const auto path = fs::path(args.out_dir) / ("state" + std::to_string(state) + ".csv");
    write_wavefunction_csv(path.string(), psi,
                           csv_metadata(pot_args, args, state, spectrum.eigenvalues[state]),
                           reference ? &*reference : nullptr);
    std::printf("wrote %s\n", path.string().c_str());

    std::printf("--- summary ---\ncommand=wavefunction\npotential=%s\nstate=%d\n",
                pot_args.describe().c_str(), state);
    std::printf("E=%.17g\nnorm_error=%.17g\n", spectrum.eigenvalues[state],
                psi.norm_certificate);
    if (reference) {
        const auto dev = deviation(psi, *reference);
        std::printf("oracle=%s\nmax_abs_deviation=%.17g\n", oracle_kind.c_str(), dev.max_abs);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"wavelet-Galerkin bound states of 1-D polynomial potentials"};
    app.set_config("--config", "", "read options from a config file; subcommand options live "
                                    "in a [subcommand] section or use dotted keys");
    app.require_subcommand(1);
    app.fallthrough();

    PotentialArgs pot_solve, pot_conv, pot_wf;
    CommonArgs solve_args, conv_args, tables_args, compare_args, wf_args;

    auto* solve = app.add_subcommand("solve", "solve the spectrum of one potential");
    pot_solve.attach(solve);
    solve_args.attach(solve);
    bool wavefunctions = false, oracle = false;
    int oracle_points = 8000;
    solve->add_flag("--wavefunctions", wavefunctions, "export one CSV per state (needs --out)");
    solve->add_flag("--oracle", oracle, "cross-check against the finite-difference oracle");
    solve->add_option("--oracle-points", oracle_points, "oracle grid points")
        ->capture_default_str();

    auto* conv = app.add_subcommand("convergence", "energy differences across levels");
    pot_conv.attach(conv);
    conv_args.attach(conv);
    int j_from = 3, j_to = 7, conv_workers = 1;
    conv->add_option("--j-from", j_from, "first level")->capture_default_str();
    conv->add_option("--j-to", j_to, "last level")->capture_default_str();
    conv->add_option("-w,--workers", conv_workers, "concurrent solves")->capture_default_str();

    auto* tab = app.add_subcommand("tables", "print and cache the coefficient tables");
    tables_args.attach(tab, /*with_solver_knobs=*/false);
    int m_max = 10;
    tab->add_option("--m-max", m_max, "highest moment order")->capture_default_str();

    auto* cmp = app.add_subcommand("compare", "compare against the reference energy suite");
    compare_args.attach(cmp);
    std::string group = "all", data_file;
    int cmp_workers = 1;
    cmp->add_option("--group", group,
                    "case group: all, sextic-qes, sextic-exact, sextic-scm, decatic-scm, "
                    "sextic-pinned, decatic-pinned")
        ->capture_default_str();
    cmp->add_option("--data-file", data_file, "reference data file (env IPSF_DATA_FILE)");
    cmp->add_option("-w,--workers", cmp_workers, "concurrent solves")->capture_default_str();

    auto* wf = app.add_subcommand("wavefunction", "export a sampled eigenfunction as CSV");
    pot_wf.attach(wf);
    wf_args.attach(wf);
    int wf_state = 0;
    std::string wf_oracle;
    wf->add_option("--state", wf_state, "state index")->capture_default_str();
    wf->add_option("--oracle", wf_oracle, "deviation column: qes or numerov");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help path
        app.exit(e);
        return 2;
    }

    try {
        if (solve->parsed()) {
            return cmd_solve(pot_solve, solve_args, wavefunctions, oracle, oracle_points);
        }
        if (conv->parsed()) {
            return cmd_convergence(pot_conv, conv_args, j_from, j_to, conv_workers);
        }
        if (tab->parsed()) return cmd_tables(tables_args, m_max);
        if (cmp->parsed()) return cmd_compare(compare_args, group, data_file, cmp_workers);
        if (wf->parsed()) return cmd_wavefunction(pot_wf, wf_args, wf_state, wf_oracle);
    } catch (const ipsf::NumericalError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    } catch (const ipsf::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
