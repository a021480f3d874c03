#include "khovanskii/report.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace khovanskii;

TEST_CASE("decimal_string") {
    CHECK(decimal_string(ExactRational(29, 23), 5) == "1.26087");
    CHECK(decimal_string(ExactRational(29, 23), 0) == "1");
    CHECK(decimal_string(ExactRational(5, 4), 3) == "1.250");
    CHECK(decimal_string(ExactRational(-7, 2), 2) == "-3.50");
    CHECK(decimal_string(ExactRational(0), 4) == "0.0000");
    CHECK(decimal_string(ExactRational(1, 1000), 2) == "0.00");
    CHECK(decimal_string(ExactRational(999, 1000), 2) == "1.00");  // carries
}

TEST_CASE("sci_string") {
    CHECK(sci_string(ExactRational(0), 6) == "0");
    CHECK(sci_string(ExactRational(1, 1024), 6) == "9.76563e-04");
    CHECK(sci_string(ExactRational(12345), 4) == "1.235e+04");
    CHECK(sci_string(ExactRational(-1, 3), 3) == "-3.33e-01");
    CHECK(sci_string(ExactRational(1), 3) == "1.00e+00");
    CHECK(sci_string(ExactRational(999999, 1000), 3) == "1.00e+03");  // rounding carry
    ExactRational tiny(1, pow_int(ExactInteger(10), 50));
    CHECK(sci_string(tiny, 2) == "1.0e-50");
}

TEST_CASE("fit_geometric_rate recovers an exact geometric sequence") {
    std::vector<RatePoint> pts;
    for (long n = 10; n <= 40; ++n) pts.push_back({n, -static_cast<double>(n)});  // rate 1/2
    auto rate = fit_geometric_rate(pts);
    REQUIRE(rate);
    CHECK(*rate == Catch::Approx(0.5).epsilon(1e-12));

    std::vector<RatePoint> pts3;
    for (long n = 5; n <= 25; ++n) pts3.push_back({n, n * std::log2(0.3)});
    auto rate3 = fit_geometric_rate(pts3);
    REQUIRE(rate3);
    CHECK(*rate3 == Catch::Approx(0.3).epsilon(1e-9));

    CHECK_FALSE(fit_geometric_rate({{1, -1.0}, {2, -2.0}}));  // too few points
}

TEST_CASE("estimate_report_rate uses the trailing third") {
    std::vector<ReportRow> rows;
    for (long n = 2; n <= 31; ++n) {
        ReportRow r;
        r.n = n;
        r.approximant = ExactRational(1);
        r.abs_error = FixedReal(ExactInteger(1) << (200 - 3 * n), 200);  // error = 2^{-3n}
        rows.push_back(r);
    }
    auto rate = estimate_report_rate(rows);
    REQUIRE(rate);
    CHECK(rate->value().convert_to<double>() == Catch::Approx(0.125).epsilon(1e-6));
}
