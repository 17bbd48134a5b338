// Command-line front end: build/export the triangular matrix families and run
// identity verifications, single-shot or as seeded random sweeps.
//
// Exit codes: 0 success, 1 usage error, 2 parameter/domain error
// (the offending factor is named on stderr as JSON), 3 verification failure.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qtri/identities.hpp"
#include "qtri/matrices.hpp"
#include "qtri/polyfamilies.hpp"
#include "qtri/randomq.hpp"

using nlohmann::json;
using namespace qtri;

namespace {

Mode resolve_mode(const std::string& flag_value) {
    std::string v = flag_value;
    if (v.empty()) {
        if (const char* env = std::getenv("QTRI_MODE")) v = env;
    }
    if (v.empty() || v == "exact") return Mode::Exact;
    if (v == "float") return Mode::Float;
    throw CLI::ValidationError("--mode", "expected 'exact' or 'float', got '" + v + "'");
}

void emit_error(const Error& e) {
    std::cerr << json{{"error", error_kind_name(e.kind())}, {"message", e.what()}}.dump()
              << "\n";
}

struct MatrixOptions {
    std::string family;
    std::string q_text = "1/2";
    std::string beta_text = "2/5";
    long lo = 0, hi = 3;
    std::string mode_text;
    std::string format = "json";
};

int run_matrix(const MatrixOptions& opt) {
    Mode mode = resolve_mode(opt.mode_text);
    Scalar q = Scalar::parse(opt.q_text, mode);
    WarningSink warnings;

    auto emit_one = [&](const TriMatrix& A, const std::string& label) {
        if (opt.format == "json") {
            std::cout << matrix_to_json(A).dump() << "\n";
        } else {
            matrix_to_csv(A, std::cout, label);
        }
    };

    if (opt.family == "ex42") {
        auto [L, Linv] = build_example42(q, opt.hi);
        if (opt.format == "json") {
            std::cout << json{{"L", matrix_to_json(L)}, {"L_inverse", matrix_to_json(Linv)}}.dump()
                      << "\n";
        } else {
            matrix_to_csv(L, std::cout, "L");
            matrix_to_csv(Linv, std::cout, "L_inverse");
        }
        return 0;
    }

    TriMatrix A = [&]() -> TriMatrix {
        Scalar beta = Scalar::parse(opt.beta_text, mode);
        if (opt.family == "L") return build_L(beta, q, opt.lo, opt.hi, &warnings);
        if (opt.family == "M") return build_M(beta, q, opt.lo, opt.hi, &warnings);
        if (opt.family == "L0") return build_L0(q, opt.lo, opt.hi);
        if (opt.family == "M0") return build_M0(q, opt.lo, opt.hi);
        if (opt.family == "inverse-oracle")
            return invert_unitriangular(build_L(beta, q, opt.lo, opt.hi, &warnings));
        throw Error(ErrorKind::InvalidParameter, "unknown family '" + opt.family + "'");
    }();

    for (const std::string& w : warnings)
        std::cerr << json{{"warning", w}}.dump() << "\n";
    emit_one(A, opt.family);
    return 0;
}

struct VerifyOptions {
    std::string identity;
    std::string q_text = "1/3";
    std::string beta_text = "2/5";
    std::string alpha_text = "2/5";
    std::string gamma_text = "2/7";
    std::string delta_text = "2/7";
    std::string a_text = "2/5", b_text = "3/7", c_text = "1/2", d_text = "4/9", e_text = "5/8";
    long N = 3, m = 3, n = 0;
    long lo = 0, hi = 4;
    long order = 8;   // t-order for generating functions
    long n_max = 8;
    long sears_n = 3;
    long trials = 0;
    std::uint64_t seed = 1;
    double tol = 1e-10;
    std::string mode_text;
    bool timings = false;
};

using CheckFn = std::function<VerificationReport(RationalSampler&, bool random_draw)>;

// One named identity expands to one or more checks per run.
std::vector<CheckFn> checks_for(const std::string& id, const VerifyOptions& o, Mode mode) {
    auto S = [mode](const std::string& t) { return Scalar::parse(t, mode); };
    std::vector<CheckFn> fns;

    if (id == "inverse") {
        fns.push_back([=](RationalSampler& r, bool rnd) {
            Scalar q = rnd ? r.unit_fraction(mode) : S(o.q_text);
            Scalar beta = rnd ? r.unit_fraction(mode) : S(o.beta_text);
            return verify_inverse(beta, q, o.lo, o.hi, o.tol);
        });
    } else if (id == "lemma32") {
        fns.push_back([=](RationalSampler& r, bool rnd) {
            Scalar q = rnd ? r.unit_fraction(mode) : S(o.q_text);
            Scalar beta = rnd ? r.unit_fraction(mode) : S(o.beta_text);
            long n = rnd ? r.integer(0, 3) : o.n;
            long m = rnd ? n + r.integer(0, 6) : o.m;
            return verify_lemma32(m, n, beta, q, o.tol);
        });
    } else if (id == "dp") {
        fns.push_back([=](RationalSampler& r, bool) {
            // Inherently a random-draw check: the lists are drawn from the seed.
            Scalar q = r.unit_fraction(mode);
            std::vector<Scalar> alphas, betas, cs;
            for (long k = 0; k <= o.n_max; ++k) {
                alphas.push_back(r.unit_fraction(mode));
                betas.push_back(r.unit_fraction(mode));
                cs.push_back(r.unit_fraction(mode));
            }
            return verify_dp(o.n_max, alphas, betas, cs, q, o.tol);
        });
    } else if (id == "sears") {
        fns.push_back([=](RationalSampler& r, bool rnd) {
            Scalar q = rnd ? r.unit_fraction(mode) : S(o.q_text);
            Scalar a = rnd ? r.unit_fraction(mode) : S(o.a_text);
            Scalar b = rnd ? r.unit_fraction(mode) : S(o.b_text);
            Scalar c = rnd ? r.unit_fraction(mode) : S(o.c_text);
            Scalar d = rnd ? r.unit_fraction(mode) : S(o.d_text);
            Scalar e = rnd ? r.unit_fraction(mode) : S(o.e_text);
            return verify_sears(o.sears_n, a, b, c, d, e, q, o.tol);
        });
        fns.push_back([=](RationalSampler& r, bool rnd) {
            Scalar q = rnd ? r.unit_fraction(mode) : S(o.q_text);
            Scalar beta = rnd ? r.unit_fraction(mode) : S(o.beta_text);
            long n = rnd ? r.integer(0, 2) : o.n;
            long m = rnd ? n + r.integer(0, 4) : o.m;
            return verify_sears_racah_rewrite(m, n, beta, q, o.tol);
        });
    } else if (id == "genfunc") {
        fns.push_back([=](RationalSampler& r, bool rnd) {
            Scalar q = rnd ? r.unit_fraction(mode) : S(o.q_text);
            Scalar beta = rnd ? r.unit_fraction(mode) : S(o.beta_text);
            return verify_genfunc_ultra(beta, q, o.order, o.tol);
        });
    } else if (id == "product-rule") {
        fns.push_back([=](RationalSampler& r, bool rnd) {
            Scalar q = rnd ? r.unit_fraction(mode) : S(o.q_text);
            Scalar alpha = rnd ? r.unit_fraction(mode) : S(o.alpha_text);
            Scalar beta = rnd ? r.unit_fraction(mode) : S(o.beta_text);
            return verify_genfunc_product_rule(alpha, beta, q, std::min(o.n_max, 6L), o.tol);
        });
    } else if (id == "ex43") {
        fns.push_back([=](RationalSampler& r, bool rnd) {
            Scalar q = rnd ? r.unit_fraction(mode) : S(o.q_text);
            Scalar alpha = rnd ? r.unit_fraction(mode) : S(o.alpha_text);
            return verify_ex43_sums(alpha, q, o.n_max, o.tol);
        });
    } else if (id == "gegenbauer") {
        fns.push_back([=](RationalSampler& r, bool rnd) {
            Scalar alpha = rnd ? r.unit_fraction(mode) : S(o.alpha_text);
            long n = rnd ? r.integer(0, 3) : o.n;
            long m = rnd ? n + r.integer(0, 5) : o.m;
            return verify_gegenbauer_key(m, n, alpha, o.tol);
        });
    } else if (id == "hermite") {
        fns.push_back([=](RationalSampler& r, bool rnd) {
            Scalar q = rnd ? r.unit_fraction(mode) : S(o.q_text);
            return verify_hermite_convolution(q, o.n_max, o.tol);
        });
        fns.push_back([=](RationalSampler& r, bool rnd) {
            Scalar q = rnd ? r.unit_fraction(mode) : S(o.q_text);
            return verify_inverse0(q, o.lo, o.hi, o.tol);
        });
    } else if (id == "racah-ortho") {
        fns.push_back([=](RationalSampler& r, bool rnd) {
            Scalar q = rnd ? r.unit_fraction(mode) : S(o.q_text);
            Scalar gamma = rnd ? r.unit_fraction(mode) : S(o.gamma_text);
            Scalar delta = rnd ? r.unit_fraction(mode) : S(o.delta_text);
            return verify_racah_ortho(gamma, delta, o.N, q, o.tol);
        });
    } else {
        throw Error(ErrorKind::InvalidParameter, "unknown identity '" + id + "'");
    }
    return fns;
}

int run_verify(const VerifyOptions& opt) {
    Mode mode = resolve_mode(opt.mode_text);
    static const std::vector<std::string> all_ids = {
        "inverse", "lemma32", "dp", "sears", "genfunc", "product-rule",
        "ex43", "gegenbauer", "hermite", "racah-ortho"};
    std::vector<std::string> ids =
        opt.identity == "all" ? all_ids : std::vector<std::string>{opt.identity};

    RationalSampler sampler(opt.seed);
    bool all_pass = true;
    std::optional<json> first_fail;

    for (const std::string& id : ids) {
        for (const CheckFn& fn : checks_for(id, opt, mode)) {
            long runs = opt.trials > 0 ? opt.trials : 1;
            bool random_draw = opt.trials > 0;
            for (long t = 0; t < runs; ++t) {
                // Bounded rejection sampling: a draw that lands on an excluded
                // parameter set is discarded and redrawn.
                VerificationReport rep = [&]() {
                    for (int attempt = 0; attempt < 200; ++attempt) {
                        try {
                            return fn(sampler, random_draw);
                        } catch (const Error& e) {
                            if (!random_draw ||
                                (e.kind() != ErrorKind::ExcludedParameter &&
                                 e.kind() != ErrorKind::VanishingDenominatorFactor))
                                throw;
                        }
                    }
                    throw Error(ErrorKind::InvalidParameter,
                                "rejection sampling exhausted for " + id);
                }();
                std::cout << report_to_json(rep, opt.timings).dump() << "\n";
                if (!rep.pass) {
                    all_pass = false;
                    if (!first_fail) first_fail = report_to_json(rep, opt.timings);
                }
            }
        }
    }

    if (!all_pass) {
        std::cerr << json{{"error", "VerificationFailed"},
                          {"first_counterexample", *first_fail}}.dump()
                  << "\n";
        return 3;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact builders and verifiers for triangular matrices of "
                 "continuous q-ultraspherical polynomials"};
    app.require_subcommand(1);

    MatrixOptions mo;
    CLI::App* matrix = app.add_subcommand(
        "matrix", "Build and print one matrix family (JSON, or CSV rows m,n,k,coeff)");
    matrix->add_option("--family", mo.family, "L, M, L0, M0, ex42, inverse-oracle")
        ->required();
    matrix->add_option("--q", mo.q_text, "base q (rational p/q)");
    matrix->add_option("--beta", mo.beta_text, "parameter beta (families L, M, inverse-oracle)");
    matrix->add_option("--lo", mo.lo, "window start (may be negative)");
    matrix->add_option("--hi", mo.hi, "window end; for ex42 this is N");
    matrix->add_option("--mode", mo.mode_text, "exact or float (default: QTRI_MODE or exact)");
    matrix->add_option("--format", mo.format, "json or csv (csv columns: [matrix,]m,n,k,coeff)")
        ->check(CLI::IsMember({"json", "csv"}));

    VerifyOptions vo;
    CLI::App* verify = app.add_subcommand(
        "verify", "Run identity checks; one JSON report per line, exit 3 on any failure");
    verify->add_option("--identity", vo.identity,
                       "inverse, lemma32, dp, sears, genfunc, product-rule, ex43, "
                       "gegenbauer, hermite, racah-ortho, all")
        ->required();
    verify->add_option("--q", vo.q_text, "base q");
    verify->add_option("--beta", vo.beta_text, "beta");
    verify->add_option("--alpha", vo.alpha_text, "alpha");
    verify->add_option("--gamma", vo.gamma_text, "gamma (racah-ortho)");
    verify->add_option("--delta", vo.delta_text, "delta (racah-ortho)");
    verify->add_option("--a", vo.a_text, "Sears a");
    verify->add_option("--b", vo.b_text, "Sears b");
    verify->add_option("--c", vo.c_text, "Sears c");
    verify->add_option("--d", vo.d_text, "Sears d");
    verify->add_option("--e", vo.e_text, "Sears e");
    verify->add_option("--sears-n", vo.sears_n, "Sears termination index");
    verify->add_option("--N", vo.N, "grid size (racah-ortho)");
    verify->add_option("--m", vo.m, "row index (lemma32, gegenbauer)");
    verify->add_option("--n", vo.n, "column index (lemma32, gegenbauer)");
    verify->add_option("--lo", vo.lo, "window start (inverse, hermite)");
    verify->add_option("--hi", vo.hi, "window end (inverse, hermite)");
    verify->add_option("--T", vo.order, "t-order for generating functions");
    verify->add_option("--nmax", vo.n_max, "degree bound for sum identities");
    verify->add_option("--trials", vo.trials, "number of seeded random draws (0 = single run)");
    verify->add_option("--seed", vo.seed, "RNG seed for sweeps");
    verify->add_option("--tol", vo.tol, "float-mode tolerance");
    verify->add_option("--mode", vo.mode_text, "exact or float (default: QTRI_MODE or exact)");
    verify->add_flag("--timings", vo.timings, "report real elapsed_ms (off: 0, byte-stable output)");

    try {
        app.parse(argc, argv);
        if (matrix->parsed()) return run_matrix(mo);
        return run_verify(vo);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const Error& e) {
        emit_error(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "InternalError"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    }
}
