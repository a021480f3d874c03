// Command-line front end: run the root iterations, emit convergence tables
// (text, CSV or JSON), run the verification suites, and benchmark fitted
// rates against predicted ones. All output is assembled from exact integer
// arithmetic, so a fixed invocation produces byte-identical bytes.
//
// Exit codes: 0 success, 1 domain error, 2 verification failure,
// 3 unconverged/inconclusive, 64 usage.

#include "khovanskii/cuberoot.hpp"
#include "khovanskii/cubic.hpp"
#include "khovanskii/exact.hpp"
#include "khovanskii/mthroot.hpp"
#include "khovanskii/oracle.hpp"
#include "khovanskii/polyroot.hpp"
#include "khovanskii/report.hpp"
#include "khovanskii/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace khovanskii;
using ordered_json = nlohmann::ordered_json;

constexpr int kDecimalDigits = 12;  // fixed-point digits in decimal columns
constexpr int kErrorDigits = 6;     // significant digits for error columns

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    throw CLI::ValidationError("--format", "expected one of: json, csv, text");
}

ordered_json json_bits(const std::string& value, int bits) {
    ordered_json j;
    j["value"] = value;
    j["bits"] = bits;
    return j;
}

ordered_json json_fixed(const FixedReal& f, int digits = kDecimalDigits) {
    return json_bits(decimal_string(f.value(), digits), f.precision_bits);
}

std::string rat_string(const ExactRational& r) {
    std::string s = numerator(r).convert_to<std::string>();
    if (denominator(r) != 1) s += "/" + denominator(r).convert_to<std::string>();
    return s;
}

struct RowOut {
    long long n;
    std::string num, den, decimal, abs_error, extra;
};

// rate_window column: rate fitted over the trailing third of rows seen so far.
std::vector<std::string> rate_window_column(const std::vector<ReportRow>& rows) {
    std::vector<std::string> out(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        std::vector<ReportRow> prefix(rows.begin(), rows.begin() + static_cast<long>(i) + 1);
        auto est = estimate_report_rate(prefix);
        out[i] = est ? decimal_string(est->value(), 6) : std::string();
    }
    return out;
}

void emit_rows_csv(std::ostream& os, const std::vector<ReportRow>& rows) {
    os << "n,num,den,decimal,abs_error,rate_window\n";
    std::vector<std::string> rate_col = rate_window_column(rows);
    for (size_t i = 0; i < rows.size(); ++i) {
        const ReportRow& r = rows[i];
        os << r.n << "," << numerator(r.approximant) << "," << denominator(r.approximant) << ","
           << decimal_string(r.approximant, kDecimalDigits) << ","
           << sci_string(r.abs_error.value(), kErrorDigits) << "," << rate_col[i] << "\n";
    }
}

void emit_rows_text(std::ostream& os, const std::vector<ReportRow>& rows) {
    os << "  n  approximant (decimal)      abs_error\n";
    for (const ReportRow& r : rows) {
        std::string dec = decimal_string(r.approximant, kDecimalDigits);
        os << "  " << r.n << "  " << dec << "  " << sci_string(r.abs_error.value(), kErrorDigits)
           << "  [" << rat_string(r.approximant) << "]\n";
    }
}

ordered_json rows_json(const std::vector<ReportRow>& rows, int bits) {
    ordered_json arr = ordered_json::array();
    for (const ReportRow& r : rows) {
        ordered_json jr;
        jr["n"] = r.n;
        jr["num"] = numerator(r.approximant).convert_to<std::string>();
        jr["den"] = denominator(r.approximant).convert_to<std::string>();
        jr["decimal"] = json_bits(decimal_string(r.approximant, kDecimalDigits), bits);
        jr["abs_error"] = json_bits(sci_string(r.abs_error.value(), kErrorDigits),
                                    r.abs_error.precision_bits);
        arr.push_back(jr);
    }
    return arr;
}

void emit_convergence(std::ostream& os, Format fmt, const ordered_json& problem,
                      const std::string& method, const std::vector<ReportRow>& rows,
                      const ConvergenceReport& rep) {
    if (fmt == Format::Csv) {
        emit_rows_csv(os, rows);
        return;
    }
    if (fmt == Format::Json) {
        ordered_json j;
        j["problem"] = problem;
        j["method"] = method;
        j["rows"] = rows_json(rows, rep.precision_bits);
        j["rate_estimate"] =
            rep.rate_estimate ? json_fixed(*rep.rate_estimate, 6) : ordered_json(nullptr);
        if (rep.predicted_rate) j["predicted_rate"] = json_fixed(*rep.predicted_rate, 6);
        j["status"] = rep.status;
        os << j.dump(2) << "\n";
        return;
    }
    os << "method: " << method << "\n";
    os << "problem: " << problem.dump() << "\n";
    emit_rows_text(os, rows);
    if (rep.rate_estimate)
        os << "rate_estimate: " << decimal_string(rep.rate_estimate->value(), 6) << "\n";
    if (rep.predicted_rate)
        os << "predicted_rate: " << decimal_string(rep.predicted_rate->value(), 6) << "\n";
    os << "status: " << rep.status << "\n";
}

ExactInteger parse_bigint(const std::string& s, const std::string& flag) {
    try {
        return ExactInteger(s);
    } catch (const std::exception&) {
        throw CLI::ValidationError(flag, "not an integer: " + s);
    }
}

std::vector<ExactInteger> parse_int_list(const std::string& s, const std::string& flag) {
    std::vector<ExactInteger> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_bigint(item, flag));
    return out;
}

// --- cbrt --------------------------------------------------------------------

int run_cbrt(const std::string& alpha_s, const std::string& a_s, long iters, int bits,
             Format fmt) {
    ExactInteger alpha = parse_bigint(alpha_s, "--alpha");
    std::optional<OptimalParamReport> opt;
    ExactInteger a;
    if (a_s == "auto") {
        opt = optimal_a(alpha);
        a = opt->chosen;
    } else {
        a = parse_bigint(a_s, "--a");
    }
    CubeRootProblem prob = make_cuberoot_problem(alpha, a);
    FixedReal oracle = fixed_nth_root(alpha, 3, bits);
    ExactRational oracle_v = oracle.value();
    auto exact = prob.perfect_root();

    ConvergenceReport rep;
    rep.precision_bits = bits;
    std::vector<ReportRow> rows;
    bool exact_hit = false;
    CubeRootIterState st = make_cuberoot_iter(alpha, a);
    for (long i = 0; i < iters; ++i) {
        CubeRootStep stp = step(st);
        if (stp.approximant) {
            ReportRow row;
            row.n = st.n;
            row.approximant = *stp.approximant;
            row.abs_error = FixedReal::from_rational(abs(*stp.approximant - oracle_v), bits);
            if (exact && *stp.approximant == ExactRational(*exact)) exact_hit = true;
            rows.push_back(std::move(row));
        }
        st = stp.next;
    }
    rep.rate_estimate = estimate_report_rate(rows);
    if (opt) rep.predicted_rate = opt->predicted_rate;
    FixedReal margin = dominance_margin(prob);
    rep.status = margin.value() > 0 ? (exact_hit ? "exact" : "ok") : "dominance-warning";

    ordered_json problem;
    problem["alpha"] = alpha.convert_to<std::string>();
    problem["a"] = a.convert_to<std::string>();
    problem["a_mode"] = a_s == "auto" ? "auto" : "given";
    if (opt) {
        problem["candidates"] = {opt->candidates.first.convert_to<std::string>(),
                                 opt->candidates.second.convert_to<std::string>()};
        problem["a_bar"] = json_fixed(opt->a_bar);
        problem["h_at_chosen"] = json_fixed(opt->h_at_chosen);
    }
    if (exact) problem["exact_root"] = exact->convert_to<std::string>();
    problem["dominance_margin"] = json_fixed(margin);
    emit_convergence(std::cout, fmt, problem, "cuberoot-entry-ratio", rows, rep);
    return 0;
}

// --- cubic -------------------------------------------------------------------

int run_cubic(const std::string& p_s, const std::string& q_s, const std::string& general_s,
              long iters, int bits, Format fmt) {
    std::optional<DepressedForm> dep;
    CubicProblem prob{1, 1};
    std::vector<ExactInteger> residual_poly;
    if (!general_s.empty()) {
        std::vector<ExactInteger> c = parse_int_list(general_s, "--general");
        if (c.size() != 4) throw CLI::ValidationError("--general", "expected a,b,c,d");
        dep = depress(GeneralCubic{c[0], c[1], c[2], c[3]});
        prob = dep->problem;
        residual_poly = {c[3], c[2], c[1], c[0]};  // ascending for eval_poly
    } else {
        prob = make_cubic_problem(parse_bigint(p_s, "--p"), parse_bigint(q_s, "--q"));
        residual_poly = {ExactInteger(-prob.q), ExactInteger(-prob.p), 0, 1};
    }

    auto bracket = bracket_real_root(residual_poly);
    if (!bracket) throw domain_error("cubic: oracle could not bracket a real root");
    FixedReal oracle = bisect_root({residual_poly, bracket->first, bracket->second, bits});
    ExactRational oracle_v = oracle.value();

    ConvergenceReport rep;
    rep.precision_bits = bits;
    std::vector<ReportRow> rows;
    CubicIterState st = make_cubic_iter(prob);
    for (long i = 0; i < iters; ++i) {
        CubicStep stp = step(st);
        if (stp.approximant) {
            ExactRational value = dep ? dep->back_map(*stp.approximant) : *stp.approximant;
            ReportRow row;
            row.n = st.n;
            row.approximant = value;
            row.abs_error = FixedReal::from_rational(abs(value - oracle_v), bits);
            rows.push_back(std::move(row));
        }
        st = stp.next;
    }
    rep.rate_estimate = estimate_report_rate(rows);
    rep.predicted_rate = cubic_subdominant_ratio(prob);
    rep.status = "ok";

    ordered_json problem;
    problem["p"] = prob.p.convert_to<std::string>();
    problem["q"] = prob.q.convert_to<std::string>();
    if (dep) {
        problem["depressed_P"] = dep->big_p.convert_to<std::string>();
        problem["depressed_Q"] = dep->big_q.convert_to<std::string>();
        problem["negated"] = dep->negated;
    }
    emit_convergence(std::cout, fmt, problem, "cubic-sequence-ratio", rows, rep);
    return 0;
}

// --- mthroot -----------------------------------------------------------------

int run_mthroot(const std::string& alpha_s, int m, const std::string& a_s, int bits,
                long long max_n, Format fmt) {
    ExactInteger alpha = parse_bigint(alpha_s, "--alpha");
    ExactInteger a;
    bool heuristic = false;
    if (a_s == "auto") {
        // No optimality theory is available here; ceil(alpha^{1/m}) is a
        // labeled heuristic, not an optimum.
        a = integer_root_floor(alpha, m);
        if (pow_int(a, m) != alpha) ++a;
        if (a < 1) a = 1;
        heuristic = true;
    } else {
        a = parse_bigint(a_s, "--a");
    }
    MthRootProblem prob = make_mthroot_problem(alpha, m, a);
    ApproximateRootResult res = approximate_root(prob, bits, max_n);
    FixedReal oracle = fixed_nth_root(alpha, m, bits + 16);
    ExactRational oracle_v = oracle.value();

    ConvergenceReport rep;
    rep.precision_bits = bits;
    std::vector<ReportRow> rows;
    for (const auto& [n, value] : res.samples) {
        ReportRow row;
        row.n = n;
        row.approximant = value;
        row.abs_error = FixedReal::from_rational(abs(value - oracle_v), bits);
        rows.push_back(std::move(row));
    }
    if (res.exact) {
        ReportRow row;
        row.n = 0;
        row.approximant = res.value;
        row.abs_error = FixedReal(0, bits);
        rows.push_back(std::move(row));
    }
    rep.rate_estimate = estimate_report_rate(rows);
    rep.status = res.exact ? "exact" : (res.converged ? "ok" : "unconverged");

    MthRootDiag diag = diagnose(prob);
    ordered_json problem;
    problem["alpha"] = alpha.convert_to<std::string>();
    problem["m"] = m;
    problem["a"] = a.convert_to<std::string>();
    problem["a_mode"] = heuristic ? "heuristic-ceil-root" : "given";
    problem["dominance_margin"] = json_fixed(diag.dominance_margin);
    problem["achieved_bits"] = res.achieved_bits;
    emit_convergence(std::cout, fmt, problem, "mthroot-entry-ratio", rows, rep);
    return rep.status == "unconverged" ? 3 : 0;
}

// --- polyroot ----------------------------------------------------------------

int run_polyroot(const std::string& coeffs_s, const std::string& k_s, const std::string& l_s,
                 bool scan, long kmin, long kmax, long lmin, long lmax, long long max_n,
                 int agree_bits, Format fmt) {
    std::vector<ExactInteger> coeffs = parse_int_list(coeffs_s, "--coeffs");
    if (scan) {
        auto table = parameter_scan(coeffs, kmin, kmax, lmin, lmax, max_n, agree_bits);
        if (fmt == Format::Json) {
            ordered_json j;
            ordered_json problem;
            problem["coeffs"] = coeffs_s;
            problem["k_range"] = {kmin, kmax};
            problem["l_range"] = {lmin, lmax};
            j["problem"] = problem;
            j["method"] = "parameter-scan";
            ordered_json cells = ordered_json::array();
            for (const auto& cell : table) {
                ordered_json c;
                c["k"] = cell.k.convert_to<std::string>();
                c["l"] = cell.l.convert_to<std::string>();
                c["outcome"] = to_string(cell.outcome);
                if (cell.root)
                    c["root"] = json_bits(decimal_string(*cell.root, kDecimalDigits), agree_bits);
                cells.push_back(c);
            }
            j["rows"] = cells;
            j["status"] = "ok";
            std::cout << j.dump(2) << "\n";
        } else if (fmt == Format::Csv) {
            std::cout << "k,l,outcome,root\n";
            for (const auto& cell : table)
                std::cout << cell.k << "," << cell.l << "," << to_string(cell.outcome) << ","
                          << (cell.root ? decimal_string(*cell.root, kDecimalDigits)
                                        : std::string())
                          << "\n";
        } else {
            std::cout << "parameter scan over k in [" << kmin << "," << kmax << "], l in ["
                      << lmin << "," << lmax << "]\n";
            for (const auto& cell : table)
                std::cout << "  k=" << cell.k << " l=" << cell.l << "  "
                          << to_string(cell.outcome)
                          << (cell.root
                                  ? "  root=" + decimal_string(*cell.root, kDecimalDigits)
                                  : std::string())
                          << "\n";
        }
        return 0;
    }

    GeneralPolyProblem prob = make_general_poly_problem(coeffs, parse_bigint(k_s, "--k"),
                                                        parse_bigint(l_s, "--l"));
    LimitVector lv = iterate_general(prob, max_n, agree_bits);
    if (fmt == Format::Json) {
        ordered_json j;
        ordered_json problem;
        problem["coeffs"] = coeffs_s;
        problem["k"] = prob.k.convert_to<std::string>();
        problem["l"] = prob.l.convert_to<std::string>();
        j["problem"] = problem;
        j["method"] = "entry-ratio-general";
        ordered_json betas = ordered_json::array();
        for (size_t i = 0; i < lv.betas.size(); ++i) {
            ordered_json b;
            b["i"] = i + 1;
            b["num"] = numerator(lv.betas[i]).convert_to<std::string>();
            b["den"] = denominator(lv.betas[i]).convert_to<std::string>();
            b["decimal"] = json_bits(decimal_string(lv.betas[i], kDecimalDigits), agree_bits);
            betas.push_back(b);
        }
        j["rows"] = betas;
        j["residual"] = json_fixed(lv.residual, 2 * kDecimalDigits);
        j["n_reached"] = lv.n_reached;
        j["status"] = to_string(lv.outcome);
        std::cout << j.dump(2) << "\n";
    } else if (fmt == Format::Csv) {
        std::cout << "i,num,den,decimal\n";
        for (size_t i = 0; i < lv.betas.size(); ++i)
            std::cout << i + 1 << "," << numerator(lv.betas[i]) << ","
                      << denominator(lv.betas[i]) << ","
                      << decimal_string(lv.betas[i], kDecimalDigits) << "\n";
    } else {
        std::cout << "outcome: " << to_string(lv.outcome) << " (n_reached=" << lv.n_reached
                  << ")\n";
        for (size_t i = 0; i < lv.betas.size(); ++i)
            std::cout << "  beta_" << i + 1 << " = "
                      << decimal_string(lv.betas[i], kDecimalDigits) << "\n";
        if (!lv.betas.empty())
            std::cout << "  residual |f(beta_{m-1})| = "
                      << sci_string(lv.residual.value(), kErrorDigits) << "\n";
    }
    return lv.converged ? 0 : 3;
}

// --- verify ------------------------------------------------------------------

int run_verify(const std::string& suite, std::uint64_t seed, bool full, Format fmt) {
    verify::SuiteOptions opt;
    opt.seed = seed;
    opt.full = full;
    std::vector<verify::Result> results = verify::run_suite(suite, opt);
    long failures = 0;
    if (fmt == Format::Json) {
        ordered_json j;
        j["suite"] = suite;
        j["seed"] = seed;
        ordered_json arr = ordered_json::array();
        for (const auto& r : results) {
            failures += r.failures;
            ordered_json jr;
            jr["name"] = r.name;
            jr["checks"] = r.checks;
            jr["failures"] = r.failures;
            jr["notes"] = r.notes;
            arr.push_back(jr);
        }
        j["results"] = arr;
        j["status"] = failures == 0 ? "pass" : "fail";
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            failures += r.failures;
            std::cout << "suite=" << r.name << " checks=" << r.checks
                      << " failures=" << r.failures << "\n";
            for (const auto& note : r.notes) std::cout << "  note: " << note << "\n";
        }
        std::cout << "result=" << (failures == 0 ? "PASS" : "FAIL") << " seed=" << seed << "\n";
    }
    return failures == 0 ? 0 : 2;
}

// --- bench -------------------------------------------------------------------

int run_bench(Format fmt) {
    struct Line {
        std::string label;
        std::string predicted, fitted;
    };
    std::vector<Line> lines;
    for (long alpha : verify::cuberoot_alpha_grid()) {
        OptimalParamReport opt = optimal_a(alpha);
        ExactRational oracle = fixed_nth_root(alpha, 3, 256).value();
        CubeRootIterState st = make_cuberoot_iter(alpha, opt.chosen);
        std::vector<RatePoint> pts;
        for (long n = 2; n <= 60; ++n) {
            CubeRootStep stp = step(st);
            if (stp.approximant && n >= 24) {
                ExactRational e = abs(*stp.approximant - oracle);
                if (e != 0) pts.push_back({n, log2_abs(e)});
            }
            st = stp.next;
        }
        auto rate = fit_geometric_rate(pts);
        Line line;
        line.label = "cbrt alpha=" + std::to_string(alpha) +
                     " a=" + opt.chosen.convert_to<std::string>();
        line.predicted = decimal_string(opt.predicted_rate.value(), 6);
        line.fitted = rate ? decimal_string(ExactRational(*rate), 6) : "n/a";
        lines.push_back(std::move(line));
    }
    for (auto [p, q] : verify::cubic_pq_grid()) {
        CubicProblem prob = make_cubic_problem(p, q);
        auto bracket = bracket_real_root({ExactInteger(-q), ExactInteger(-p), 0, 1});
        ExactRational oracle =
            bisect_root({{ExactInteger(-q), ExactInteger(-p), 0, 1}, bracket->first,
                         bracket->second, 256})
                .value();
        CubicIterState st = make_cubic_iter(prob);
        std::vector<RatePoint> pts;
        for (long n = 2; n <= 80; ++n) {
            CubicStep stp = step(st);
            if (stp.approximant && n >= 30) {
                ExactRational e = abs(*stp.approximant - oracle);
                if (e != 0) pts.push_back({n, log2_abs(e)});
            }
            st = stp.next;
        }
        auto rate = fit_geometric_rate(pts);
        Line line;
        line.label = "cubic p=" + std::to_string(p) + " q=" + std::to_string(q);
        line.predicted = decimal_string(cubic_subdominant_ratio(prob).value(), 6);
        line.fitted = rate ? decimal_string(ExactRational(*rate), 6) : "n/a";
        lines.push_back(std::move(line));
    }

    if (fmt == Format::Json) {
        ordered_json j;
        j["method"] = "rate-benchmark";
        ordered_json arr = ordered_json::array();
        for (const auto& l : lines) {
            ordered_json jl;
            jl["problem"] = l.label;
            jl["predicted_rate"] = json_bits(l.predicted, 48);
            jl["fitted_rate"] = json_bits(l.fitted, 48);
            arr.push_back(jl);
        }
        j["rows"] = arr;
        j["status"] = "ok";
        std::cout << j.dump(2) << "\n";
    } else if (fmt == Format::Csv) {
        std::cout << "problem,predicted_rate,fitted_rate\n";
        for (const auto& l : lines)
            std::cout << l.label << "," << l.predicted << "," << l.fitted << "\n";
    } else {
        for (const auto& l : lines)
            std::cout << l.label << "  predicted=" << l.predicted << "  fitted=" << l.fitted
                      << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact matrix-power root approximation toolkit"};
    app.require_subcommand(1);

    std::string format = "text";
    long iters = 40;
    int precision_bits = 256;
    std::uint64_t seed = 7;

    auto* cbrt = app.add_subcommand("cbrt", "cube root of a positive integer");
    std::string cbrt_alpha, cbrt_a = "auto";
    cbrt->add_option("--alpha", cbrt_alpha, "target integer (> 1)")->required();
    cbrt->add_option("--a", cbrt_a, "free parameter (integer or 'auto')");
    cbrt->add_option("--iters", iters, "number of iterations");
    cbrt->add_option("--precision-bits", precision_bits, "error measurement precision");
    cbrt->add_option("--format", format, "json|csv|text");

    auto* cubic = app.add_subcommand("cubic", "real root of x^3 - p x - q");
    std::string cubic_p, cubic_q, cubic_general;
    cubic->add_option("--p", cubic_p, "p > 0");
    cubic->add_option("--q", cubic_q, "q > 0");
    cubic->add_option("--general", cubic_general, "a,b,c,d for a x^3 + b x^2 + c x + d");
    cubic->add_option("--iters", iters, "number of iterations");
    cubic->add_option("--precision-bits", precision_bits, "error measurement precision");
    cubic->add_option("--format", format, "json|csv|text");

    auto* mthroot = app.add_subcommand("mthroot", "m-th root of a positive integer");
    std::string mth_alpha, mth_a = "auto";
    int mth_m = 2;
    long long mth_max_n = 4096;
    mthroot->add_option("--alpha", mth_alpha, "target integer (>= 1)")->required();
    mthroot->add_option("--m", mth_m, "root order (>= 2)")->required();
    mthroot->add_option("--a", mth_a, "free parameter (> 0) or 'auto' (heuristic)");
    mthroot->add_option("--precision-bits", precision_bits, "agreement target in bits");
    mthroot->add_option("--max-n", mth_max_n, "iteration cap");
    mthroot->add_option("--format", format, "json|csv|text");

    auto* polyroot = app.add_subcommand("polyroot", "root of a general polynomial");
    std::string pr_coeffs, pr_k = "1", pr_l = "1";
    bool pr_scan = false;
    long pr_kmin = 1, pr_kmax = 8, pr_lmin = 1, pr_lmax = 2;
    long long pr_max_n = 512;
    int pr_agree = 48;
    polyroot->add_option("--coeffs", pr_coeffs, "a0,...,am (ascending)")->required();
    polyroot->add_option("--k", pr_k, "matrix parameter k (nonzero)");
    polyroot->add_option("--l", pr_l, "matrix parameter l (nonzero)");
    polyroot->add_flag("--scan", pr_scan, "scan a (k,l) grid instead of one run");
    polyroot->add_option("--kmin", pr_kmin, "scan: low k");
    polyroot->add_option("--kmax", pr_kmax, "scan: high k");
    polyroot->add_option("--lmin", pr_lmin, "scan: low l");
    polyroot->add_option("--lmax", pr_lmax, "scan: high l");
    polyroot->add_option("--max-n", pr_max_n, "index budget per run");
    polyroot->add_option("--agree-bits", pr_agree, "agreement tolerance in bits");
    polyroot->add_option("--format", format, "json|csv|text");

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    bool full = false;
    verify_cmd->add_option("--suite", suite, "cayley|cuberoot|cubic|mthroot|polyroot|all");
    verify_cmd->add_option("--seed", seed, "seed for randomized grids");
    verify_cmd->add_flag("--full", full, "acceptance-scale grids");
    verify_cmd->add_option("--format", format, "json|csv|text");

    auto* bench = app.add_subcommand("bench", "fitted vs predicted convergence rates");
    bench->add_option("--format", format, "json|csv|text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 64;
    }

    try {
        Format fmt = parse_format(format);
        if (app.got_subcommand(cbrt))
            return run_cbrt(cbrt_alpha, cbrt_a, iters, precision_bits, fmt);
        if (app.got_subcommand(cubic)) {
            if (cubic_general.empty() && (cubic_p.empty() || cubic_q.empty()))
                throw CLI::ValidationError("cubic", "need --p/--q or --general");
            return run_cubic(cubic_p, cubic_q, cubic_general, iters, precision_bits, fmt);
        }
        if (app.got_subcommand(mthroot))
            return run_mthroot(mth_alpha, mth_m, mth_a, precision_bits, mth_max_n, fmt);
        if (app.got_subcommand(polyroot))
            return run_polyroot(pr_coeffs, pr_k, pr_l, pr_scan, pr_kmin, pr_kmax, pr_lmin,
                                pr_lmax, pr_max_n, pr_agree, fmt);
        if (app.got_subcommand(verify_cmd)) return run_verify(suite, seed, full, fmt);
        if (app.got_subcommand(bench)) return run_bench(fmt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 64;
    } catch (const unresolved_comparison& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const unsupported_regime& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
