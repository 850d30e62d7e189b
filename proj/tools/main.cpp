#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qkgr/errors.hpp"
#include "qkgr/invariants.hpp"
#include "qkgr/io.hpp"
#include "qkgr/parallel.hpp"
#include "qkgr/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadArgs = 2;
constexpr int kExitViolations = 3;
constexpr int kExitInternal = 4;

struct CtxArgs {
    int m = 0;
    int n = 0;
    qkgr::GrassCtx ctx() const { return qkgr::GrassCtx(m, n); }
};

void add_ctx(CLI::App* cmd, CtxArgs& args) {
    cmd->add_option("--m", args.m, "number of rows of the rectangle")
        ->required();
    cmd->add_option("--n", args.n, "ambient dimension (columns = n - m)")
        ->required();
}

int run_multiply(const CtxArgs& ctxArgs, const std::string& lhs,
                 const std::string& rhs, bool json) {
    qkgr::QKRing& ring = qkgr::ring_for(ctxArgs.ctx());
    const qkgr::QKElement& product = ring.star(qkgr::Partition::parse(lhs),
                                               qkgr::Partition::parse(rhs));
    if (json)
        std::cout << qkgr::element_to_json(product).dump() << '\n';
    else
        std::cout << qkgr::render_text(product) << '\n';
    return kExitOk;
}

int run_gw(const CtxArgs& ctxArgs, const std::string& lambda,
           const std::string& mu, const std::string& nu, int d,
           const std::string& basis, bool json) {
    qkgr::QKRing& ring = qkgr::ring_for(ctxArgs.ctx());
    qkgr::Partition l = qkgr::Partition::parse(lambda);
    qkgr::Partition m = qkgr::Partition::parse(mu);
    qkgr::Partition v = qkgr::Partition::parse(nu);
    qkgr::Int value = basis == "dual" ? qkgr::gw_dual(ring, l, m, v, d)
                                      : qkgr::gw_sheaf(ring, l, m, v, d);
    if (json)
        std::cout << qkgr::Json{{"value", value.str()}}.dump() << '\n';
    else
        std::cout << value.str() << '\n';
    return kExitOk;
}

int run_giambelli(const CtxArgs& ctxArgs, const std::string& lambda) {
    qkgr::QKRing& ring = qkgr::ring_for(ctxArgs.ctx());
    std::cout << qkgr::render_giambelli(ring.giambelli(),
                                        qkgr::Partition::parse(lambda))
              << '\n';
    return kExitOk;
}

int run_dualbasis(const CtxArgs& ctxArgs, const std::string& lambda) {
    qkgr::QKRing& ring = qkgr::ring_for(ctxArgs.ctx());
    // t_q * O_{lambda^dual} has power-series coordinates; print it exactly as
    // numerator over the (1-q) denominator
    qkgr::QKElement numerator =
        qkgr::dual_basis_numerator(ring, qkgr::Partition::parse(lambda));
    std::cout << "(" << qkgr::render_text(numerator) << ") / (1-q)" << '\n';
    return kExitOk;
}

int run_table(const CtxArgs& ctxArgs, const std::string& outPath,
              const std::string& cachePath, int threads) {
    qkgr::GrassCtx ctx = ctxArgs.ctx();
    qkgr::Table table;
    bool loaded = false;
    if (!cachePath.empty()) {
        std::ifstream in(cachePath);
        if (in.good()) {
            table = qkgr::read_cache(in, ctx);
            loaded = true;
        }
    }
    if (!loaded) {
        qkgr::QKRing& ring = qkgr::ring_for(ctx);
        table = ring.full_table(threads);
        ring.release_columns();
        if (!cachePath.empty()) {
            std::ofstream out(cachePath);
            if (!out.good())
                throw qkgr::invalid_argument("cannot write cache file: " +
                                             cachePath);
            qkgr::write_cache(out, ctx, table);
        }
    }
    if (outPath.empty()) {
        qkgr::write_table_text(std::cout, table);
    } else {
        std::ofstream out(outPath);
        if (!out.good())
            throw qkgr::invalid_argument("cannot write output file: " + outPath);
        qkgr::write_table_text(out, table);
    }
    return kExitOk;
}

int run_verify(const CtxArgs& ctxArgs, const std::string& suites,
               std::optional<int> samples, std::optional<std::uint64_t> seed,
               int threads, bool json) {
    qkgr::QKRing& ring = qkgr::ring_for(ctxArgs.ctx());
    std::vector<std::string> names;
    if (suites == "all") {
        names = {"s3", "duality", "signs", "pieri", "leading", "deg0", "assoc"};
    } else {
        std::stringstream ss(suites);
        std::string name;
        while (std::getline(ss, name, ',')) names.push_back(name);
    }
    bool anyViolation = false;
    for (const std::string& suite : names) {
        qkgr::Report report;
        if (suite == "s3") report = qkgr::check_s3(ring, threads);
        else if (suite == "duality") report = qkgr::check_duality(ring, threads);
        else if (suite == "signs") report = qkgr::check_signs(ring, threads);
        else if (suite == "pieri")
            report = qkgr::check_pieri_consistency(ring, threads);
        else if (suite == "leading") report = qkgr::check_leading(ring, threads);
        else if (suite == "deg0")
            report = qkgr::check_deg0(ring, samples.value_or(100),
                                      seed.value_or(7));
        else if (suite == "assoc")
            report = qkgr::check_assoc(ring, samples.value_or(200),
                                       seed.value_or(11));
        else
            throw qkgr::invalid_argument("unknown suite: " + suite);
        anyViolation = anyViolation || !report.pass;
        if (json) {
            std::cout << qkgr::report_to_json(report).dump() << '\n';
        } else {
            std::cout << "suite " << report.suite << " ctx Gr(" << report.m
                      << "," << report.n << "): checked=" << report.checked
                      << " violations=" << report.violations.size() << " "
                      << (report.pass ? "PASS" : "FAIL") << '\n';
            std::size_t shown = 0;
            for (const qkgr::Violation& v : report.violations) {
                if (++shown > 10) {
                    std::cerr << "  ... " << (report.violations.size() - 10)
                              << " more" << '\n';
                    break;
                }
                std::cerr << "  violation: " << v.inputs << " expected "
                          << v.expected << " got " << v.actual << '\n';
            }
        }
    }
    return anyViolation ? kExitViolations : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact quantum K-theory products, Gromov-Witten invariants, "
                 "and verification suites for Grassmannians"};
    app.require_subcommand(1);

    CtxArgs ctxArgs;
    std::string lhs, rhs, lambda, mu, nu, basis = "dual";
    std::string suites, outPath, cachePath;
    int d = 0, threads = 0;
    std::optional<int> samples;
    std::optional<std::uint64_t> seed;
    bool json = false;

    CLI::App* multiply =
        app.add_subcommand("multiply", "Schubert class product O_lhs * O_rhs");
    add_ctx(multiply, ctxArgs);
    multiply->add_option("--lhs", lhs)->required();
    multiply->add_option("--rhs", rhs)->required();
    multiply->add_flag("--json", json);

    CLI::App* gw = app.add_subcommand(
        "gw", "three-point K-theoretic Gromov-Witten invariant");
    add_ctx(gw, ctxArgs);
    gw->add_option("--d", d)->required();
    gw->add_option("--lambda", lambda)->required();
    gw->add_option("--mu", mu)->required();
    gw->add_option("--nu", nu)->required();
    gw->add_option("--basis", basis)
        ->check(CLI::IsMember({"dual", "sheaf"}));
    gw->add_flag("--json", json);

    CLI::App* giambelli = app.add_subcommand(
        "giambelli", "polynomial in special classes representing O_lambda");
    add_ctx(giambelli, ctxArgs);
    giambelli->add_option("--lambda", lambda)->required();

    CLI::App* dualbasis = app.add_subcommand(
        "dualbasis", "dual basis element t_q * O_{lambda^dual}");
    add_ctx(dualbasis, ctxArgs);
    dualbasis->add_option("--lambda", lambda)->required();

    CLI::App* table =
        app.add_subcommand("table", "full multiplication table");
    add_ctx(table, ctxArgs);
    table->add_option("--out", outPath);
    table->add_option("--cache", cachePath);
    table->add_option("--threads", threads);

    CLI::App* verify =
        app.add_subcommand("verify", "run verification suites");
    add_ctx(verify, ctxArgs);
    verify->add_option("--suite", suites,
                       "comma-separated list, or \"all\"")
        ->required();
    verify->add_option("--samples", samples, "0 means exhaustive");
    verify->add_option("--seed", seed);
    verify->add_option("--threads", threads);
    verify->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadArgs;
    }

    try {
        if (multiply->parsed()) return run_multiply(ctxArgs, lhs, rhs, json);
        if (gw->parsed()) return run_gw(ctxArgs, lambda, mu, nu, d, basis, json);
        if (giambelli->parsed()) return run_giambelli(ctxArgs, lambda);
        if (dualbasis->parsed()) return run_dualbasis(ctxArgs, lambda);
        if (table->parsed())
            return run_table(ctxArgs, outPath, cachePath, threads);
        if (verify->parsed())
            return run_verify(ctxArgs, suites, samples, seed, threads, json);
    } catch (const qkgr::internal_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << '\n';
        return kExitInternal;
    } catch (const qkgr::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitBadArgs;
}
