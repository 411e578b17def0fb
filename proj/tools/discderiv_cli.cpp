// Command-line surface over the derivation toolkit: evaluate bilinear
// forms, extract symbols, emit Gram spectra, build and verify Pietsch
// control measures, and dump report series for plotting.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "discderiv/bmoa.hpp"
#include "discderiv/derivation.hpp"
#include "discderiv/json_io.hpp"
#include "discderiv/pietsch.hpp"
#include "discderiv/sampling.hpp"

namespace {

using namespace discderiv;

constexpr int kExitRefuted = 1;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;

/// Anything wrong with files or their JSON payload, as opposed to an
/// operation refusing its arguments.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string fmt(cxd z) { return "(" + fmt(z.real()) + ", " + fmt(z.imag()) + ")"; }

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const std::exception& e) {
        throw InputError(std::string("cannot parse ") + path + ": " + e.what());
    }
}

SymbolH1 load_symbol(const std::string& path) {
    const json j = load_json(path);
    try {
        return symbol_from_spec(j);
    } catch (const std::exception& e) {
        throw InputError(std::string("bad symbol spec in ") + path + ": " + e.what());
    }
}

AnalyticPoly load_poly(const std::string& path) {
    const json j = load_json(path);
    try {
        return poly_from_spec(j);
    } catch (const std::exception& e) {
        throw InputError(std::string("bad polynomial spec in ") + path + ": " + e.what());
    }
}

struct Options {
    std::string symbol_file, f_file, g_file, out;
    int grid = 0;
    double tol = 1e-10;
    std::uint64_t seed = 1;
    int n = 12;
    int samples = 500;
    int deg = 12;
    int depth = 6;
    int pairs = 100;
    int fejer_max = -1;
    double rel_tol = 1e-8;
};

int cmd_eval(const Options& opt) {
    const SymbolH1 h = load_symbol(opt.symbol_file);
    const AnalyticPoly f = load_poly(opt.f_file);
    const AnalyticPoly g = load_poly(opt.g_file);
    const DerivationForm d(h);
    const cxd value = bilinear_eval(d, f, g);
    std::cout << "D_h(f)(g) = " << fmt(value) << "\n";
    std::cout << "u = " << poly_to_json(u_of(f, g)).dump() << "\n";
    return 0;
}

int cmd_extract(const Options& opt) {
    const SymbolH1 h = load_symbol(opt.symbol_file);
    const DerivationForm d(h);
    const SymbolH1 back = extract_symbol(
        [&](const AnalyticPoly& f, const AnalyticPoly& g) { return bilinear_eval(d, f, g); },
        opt.n);
    json out;
    out["coeffs"] = symbol_to_json(back);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_gram(const Options& opt) {
    const SymbolH1 h = load_symbol(opt.symbol_file);
    const GramMatrix m = gram_matrix(DerivationForm(h), opt.n);
    const SvdResult svd = rank_and_singular_values(m, opt.tol > 0 ? opt.tol : 1e-10);
    json out;
    out["n"] = m.n;
    json rows = json::array();
    for (int j = 0; j <= m.n; ++j) {
        json row = json::array();
        for (int k = 0; k <= m.n; ++k) row.push_back({m.at(j, k).real(), m.at(j, k).imag()});
        rows.push_back(std::move(row));
    }
    out["entries"] = std::move(rows);
    out["singular_values"] = svd.singular_values;
    out["rank"] = svd.rank;
    if (!opt.out.empty()) {
        std::ofstream file(opt.out);
        if (!file) throw InputError("cannot write " + opt.out);
        file << out.dump(2) << "\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int cmd_pietsch(const Options& opt) {
    const SymbolH1 h = load_symbol(opt.symbol_file);
    PietschCertificate cert = build_certificate(h);
    cert.verification = verify_certificate(cert, opt.samples, opt.deg, opt.seed);
    const VerifyReport& r = *cert.verification;
    if (!opt.out.empty()) {
        std::ofstream file(opt.out);
        if (!file) throw InputError("cannot write " + opt.out);
        file << certificate_to_json(cert).dump(2) << "\n";
    }
    std::cout << "total_mass = " << fmt(cert.total_mass) << "\n";
    std::cout << "max_ratio = " << fmt(r.max_ratio) << "\n";
    std::cout << "violations = " << r.violations << "\n";
    if (r.violations > 0) {
        std::cout << "REFUTED: pair index " << r.worst_index << " (seed " << r.seed
                  << "), |D(f)(g)| = " << fmt(r.worst_lhs)
                  << " > ||f||_L2(mu) = " << fmt(r.worst_rhs) << "\n";
        return kExitRefuted;
    }
    return 0;
}

int cmd_report(const Options& opt) {
    const SymbolH1 h = load_symbol(opt.symbol_file);
    const DerivationForm d(h);
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(opt.out, ec);
    if (!fs::is_directory(opt.out))
        throw InputError("cannot create output directory " + opt.out);

    auto open = [&](const std::string& name) {
        std::ofstream file(fs::path(opt.out) / name);
        if (!file) throw InputError("cannot write " + name + " in " + opt.out);
        return file;
    };

    {
        auto file = open("fejer.csv");
        file << "N,tail_bound\n";
        const int last = opt.fejer_max >= 0 ? opt.fejer_max : h.degree();
        for (int n = 0; n <= last; ++n)
            file << n << "," << fmt(fejer_tail_bound(d, n)) << "\n";
    }
    {
        auto file = open("svd.csv");
        file << "index,singular_value\n";
        const SvdResult svd =
            rank_and_singular_values(gram_matrix(d, opt.n), opt.tol > 0 ? opt.tol : 1e-10);
        for (std::size_t i = 0; i < svd.singular_values.size(); ++i)
            file << i << "," << fmt(svd.singular_values[i]) << "\n";
    }
    {
        auto file = open("bmoa.csv");
        file << "kind,estimate\n";
        file << "osc," << fmt(osc_seminorm(h.poly(), opt.depth).value) << "\n";
        file << "dual," << fmt(dual_seminorm(h.poly(), default_dual_family(opt.seed)).value)
             << "\n";
        file << "carleson,"
             << fmt(carleson_seminorm(h.poly(), default_carleson_family(opt.seed), 0,
                                      opt.grid)
                        .value)
             << "\n";
    }
    return 0;
}

int cmd_bmoa(const Options& opt) {
    const AnalyticPoly f = load_poly(opt.f_file);
    const SeminormEstimate osc = osc_seminorm(f, opt.depth);
    const SeminormEstimate dual = dual_seminorm(f, default_dual_family(opt.seed));
    const SeminormEstimate carl =
        carleson_seminorm(f, default_carleson_family(opt.seed), 0, opt.grid);
    std::cout << "osc = " << fmt(osc.value) << "  [" << osc.witness << ", family "
              << osc.test_family_size << "]\n";
    std::cout << "dual = " << fmt(dual.value) << "  [" << dual.witness << ", family "
              << dual.test_family_size << "]\n";
    std::cout << "carleson = " << fmt(carl.value) << "  [" << carl.witness << ", family "
              << carl.test_family_size << "]\n";
    return 0;
}

int cmd_lp_check(const Options& opt) {
    double worst = 0.0;
    for (int i = 0; i < opt.pairs; ++i) {
        const AnalyticPoly u = random_poly(opt.deg, derive_seed(opt.seed, 2 * i));
        const AnalyticPoly v = random_poly(opt.deg, derive_seed(opt.seed, 2 * i + 1));
        const int size = opt.grid > 0 ? opt.grid : 4 * (u.degree() + v.degree() + 1);
        const cxd closed = lambda_inner_closed(u, v);
        const cxd quad = lambda_inner_quad(u, v, size, size);
        const double rel = std::abs(closed - quad) / std::max(1.0, std::abs(closed));
        worst = std::max(worst, rel);
    }
    std::cout << "pairs = " << opt.pairs << "\n";
    std::cout << "max_rel_error = " << fmt(worst) << "\n";
    if (worst > opt.rel_tol) {
        std::cout << "REFUTED: exceeds tolerance " << fmt(opt.rel_tol) << "\n";
        return kExitRefuted;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"derivations from the disc algebra into its dual: evaluation, "
                 "symbol extraction, compactness diagnostics, Pietsch control measures"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--grid", opt.grid, "boundary grid size override");
    app.add_option("--tol", opt.tol, "SVD rank cut tolerance");
    app.add_option("--seed", opt.seed, "base random seed");

    auto* eval = app.add_subcommand("eval", "evaluate D_h(f)(g)");
    eval->add_option("--symbol", opt.symbol_file, "symbol JSON file")->required();
    eval->add_option("--f", opt.f_file, "f spec JSON file")->required();
    eval->add_option("--g", opt.g_file, "g spec JSON file")->required();

    auto* extract = app.add_subcommand("extract", "recover the symbol from D_h");
    extract->add_option("--symbol", opt.symbol_file)->required();
    extract->add_option("-N,--degree", opt.n, "extraction degree");

    auto* gram = app.add_subcommand("gram", "Gram matrix and singular values");
    gram->add_option("--symbol", opt.symbol_file)->required();
    gram->add_option("-N,--degree", opt.n, "matrix size parameter");
    gram->add_option("--out", opt.out, "output JSON file");

    auto* pietsch = app.add_subcommand("pietsch", "build and verify the control measure");
    pietsch->add_option("--symbol", opt.symbol_file)->required();
    pietsch->add_option("--samples", opt.samples, "verification sample count");
    pietsch->add_option("--deg", opt.deg, "sampled polynomial degree");
    pietsch->add_option("--out", opt.out, "certificate JSON file");

    auto* report = app.add_subcommand("report", "write fejer/svd/bmoa CSV series");
    report->add_option("--symbol", opt.symbol_file)->required();
    report->add_option("--fejer-max", opt.fejer_max, "last N in fejer.csv");
    report->add_option("--gram", opt.n, "Gram size for svd.csv");
    report->add_option("--depth", opt.depth, "dyadic depth for the osc estimator");
    report->add_option("--out", opt.out, "output directory")->required();

    auto* bmoa = app.add_subcommand("bmoa", "BMOA seminorm estimates for a polynomial");
    bmoa->add_option("--f", opt.f_file, "polynomial spec JSON file")->required();
    bmoa->add_option("--depth", opt.depth, "dyadic depth for the osc estimator");

    auto* lp = app.add_subcommand("lp-check", "Littlewood-Paley identity spot check");
    lp->add_option("--pairs", opt.pairs, "number of random pairs");
    lp->add_option("--deg", opt.deg, "polynomial degree");
    lp->add_option("--rel-tol", opt.rel_tol, "acceptance threshold");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed()) return cmd_eval(opt);
        if (extract->parsed()) return cmd_extract(opt);
        if (gram->parsed()) return cmd_gram(opt);
        if (pietsch->parsed()) return cmd_pietsch(opt);
        if (report->parsed()) return cmd_report(opt);
        if (bmoa->parsed()) return cmd_bmoa(opt);
        if (lp->parsed()) return cmd_lp_check(opt);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::domain_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
