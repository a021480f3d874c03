// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. The CLI binary path is taken
// from argv[1] for the end-to-end determinism criterion.
//
// Exit status: 0 when all criteria pass, 1 otherwise.

#include "khovanskii/verify.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

namespace {

using namespace khovanskii;

int g_failures = 0;

void report(int criterion, const std::string& label, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << label;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

void report_result(int criterion, const std::string& label, const verify::Result& r) {
    std::string detail = std::to_string(r.checks) + " checks, " + std::to_string(r.failures) +
                         " failures";
    if (!r.notes.empty()) detail += "; first: " + r.notes.front();
    report(criterion, label, r.passed(), detail);
}

std::string run_command(const std::string& cmd, int* exit_code) {
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        *exit_code = -1;
        return out;
    }
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    *exit_code = pclose(pipe);
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "./khovanskii";

    {
        auto t0 = std::chrono::steady_clock::now();
        verify::Result r = verify::cayley_identities(7, 200);
        double secs = seconds_since(t0);
        report_result(1, "3x3 closed-form powers equal repeated squaring (n in [3,12])", r);
        if (r.passed() && secs >= 10.0)
            report(1, "runtime budget (< 10 s)", false, std::to_string(secs) + " s");
    }
    {
        auto t0 = std::chrono::steady_clock::now();
        verify::Result r = verify::closed_form_grid(5, 40);
        double secs = seconds_since(t0);
        report_result(2, "closed form vs recurrence on [-5,5]^3, n <= 40", r);
        if (r.passed() && secs >= 60.0)
            report(2, "runtime budget (< 60 s)", false, std::to_string(secs) + " s");
    }
    report_result(3, "order-k coefficient formula matches the recurrence (k in {2,3,4})",
                  verify::general_order_recurrence(7, 25));
    {
        auto t0 = std::chrono::steady_clock::now();
        verify::Result r = verify::cuberoot_convergence();
        double secs = seconds_since(t0);
        report_result(4, "cube-root convergence by n = 80 and fitted rate within 10%", r);
        if (r.passed() && secs >= 120.0)
            report(4, "runtime budget (< 2 min)", false, std::to_string(secs) + " s");
    }
    report_result(5, "error-model residual bound over the alpha grid, n in [3,40]",
                  verify::cuberoot_error_model());
    report_result(6, "mod-6 signature within 61/2^n for alpha = 2^{4n}+1",
                  verify::cuberoot_mod6_signature());
    report_result(7, "cubic iteration, closed-form reference and power matrix",
                  verify::cubic_suite());
    report_result(8, "m-th roots: dominance, ratios, eigen-sum entries",
                  verify::mthroot_suite(/*full=*/true));
    report_result(9, "general construction: scan convergence and degenerate inputs",
                  verify::polyroot_suite());

    {
        const std::string cmd = cli + " verify --suite all --seed 7 2>&1";
        int code1 = 0, code2 = 0;
        std::string out1 = run_command(cmd, &code1);
        std::string out2 = run_command(cmd, &code2);
        bool ok = !out1.empty() && out1 == out2 && code1 == 0 && code2 == 0;
        std::string detail = "two runs, " + std::to_string(out1.size()) + " bytes each";
        if (out1.empty()) detail = "no output from " + cmd;
        else if (out1 != out2) detail = "outputs differ";
        else if (code1 != 0 || code2 != 0) detail = "nonzero exit status";
        report(10, "verify --suite all --seed 7 is byte-identical across runs", ok, detail);
    }

    // CLI surface spot checks (documented examples).
    {
        int code = 0;
        std::string out = run_command(cli + " cbrt --alpha 2 --a 1 --iters 10 --format csv", &code);
        bool ok = code == 0 && out.find("\n3,29,23,1.26086956") != std::string::npos &&
                  out.rfind("n,num,den,decimal,abs_error,rate_window", 0) == 0;
        report(10, "cbrt CSV row (3, 29, 23, 1.26087...)", ok);

        out = run_command(cli + " cbrt --alpha 8 --a auto --iters 6 --format json", &code);
        ok = code == 0 && out.find("\"a\": \"3\"") != std::string::npos &&
             out.find("\"predicted_rate\"") != std::string::npos &&
             out.find("0.192450") != std::string::npos;
        report(10, "cbrt --a auto reports chosen a = 3 and rate 1/sqrt(27)", ok);

        out = run_command(cli + " verify --suite cayley --seed 7", &code);
        ok = code == 0 && out.find("result=PASS") != std::string::npos;
        report(10, "verify --suite cayley --seed 7 exits 0", ok);
    }

    std::cout << (g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " ("
              << g_failures << " failing)" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
