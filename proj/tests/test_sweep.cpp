#include <doctest.h>

#include <sstream>

#include "ctc/sweep.hpp"

using namespace ctc;

TEST_CASE("5p family sweep: every row verifies with 5 colors") {
    sweep_options opts;
    opts.family = "5p";
    opts.pmax = 3;
    auto rows = run_sweep(opts);
    CHECK(rows.size() == 22); // 1 pair at n=5, 6 at n=10, 15 at n=15
    for (const sweep_row& r : rows) {
        CHECK(r.outcome == sweep_outcome::verified_5);
        CHECK(r.colors == 5);
    }
}

TEST_CASE("family filters mirror the hypotheses") {
    sweep_options opts;
    opts.family = "9p";
    opts.pmax = 1;
    auto inst = sweep_instances(opts);
    // n = 9: k in 2..4 with 3 | 9/gcd(9,k)
    CHECK(inst == std::vector<std::tuple<int, int, int>>{{9, 1, 2}, {9, 1, 3}, {9, 1, 4}});

    opts.family = "3p";
    opts.pmax = 3;
    auto inst3 = sweep_instances(opts);
    for (auto [n, a, b] : inst3) CHECK(n == 9);
    CHECK(inst3.size() == 5); // (1,2),(1,3),(1,4),(2,3),(3,4)

    opts.family = "bogus";
    CHECK_THROWS_AS(sweep_instances(opts), parameter_error);
}

TEST_CASE("all-family sweep over n = 5..10: frozen outcome mix") {
    sweep_options opts;
    opts.family = "all";
    opts.nmax = 10;
    auto rows = run_sweep(opts);
    CHECK(rows.size() == 20);
    int counts[4] = {0, 0, 0, 0};
    for (const sweep_row& r : rows) ++counts[static_cast<int>(r.outcome)];
    CHECK(counts[0] == 10); // verified-5
    CHECK(counts[1] == 3);  // scheme-invalid: C_9(1,2), C_9(1,3), C_9(3,4)
    CHECK(counts[2] == 0);  // delegated (unreachable: the 6p case wins first)
    CHECK(counts[3] == 7);  // not-covered, including C_7(1,2)
}

TEST_CASE("rows are lexicographic and the CSV is reproducible") {
    sweep_options opts;
    opts.family = "all";
    opts.nmax = 12;
    auto rows = run_sweep(opts);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        auto key = [](const sweep_row& r) { return std::tuple{r.n, r.a, r.b}; };
        CHECK(key(rows[i - 1]) < key(rows[i]));
    }
    std::string csv1 = sweep_to_csv(run_sweep(opts));
    std::string csv2 = sweep_to_csv(run_sweep(opts));
    CHECK(csv1 == csv2);
}

TEST_CASE("CSV format: fixed header and a summary line") {
    sweep_options opts;
    opts.family = "5p";
    opts.pmax = 1;
    std::string csv = sweep_to_csv(run_sweep(opts));
    std::istringstream lines(csv);
    std::string header, row, summary;
    std::getline(lines, header);
    std::getline(lines, row);
    std::getline(lines, summary);
    CHECK(header == "n,a,b,scheme,outcome,colors,chi_exact,nodes,elapsed_ms");
    CHECK(row == "5,1,2,5p-case3,verified-5,5,,,0");
    CHECK(summary ==
          "# summary verified-5=1 scheme-invalid=0 delegated=0 not-covered=0");
}

TEST_CASE("exact cross-check fills chi for small rows and respects the guardrail") {
    sweep_options opts;
    opts.family = "all";
    opts.nmax = 7;
    opts.check_exact = true;
    auto rows = run_sweep(opts);
    for (const sweep_row& r : rows) {
        REQUIRE(r.chi_exact.has_value());
        if (r.outcome == sweep_outcome::verified_5) CHECK(*r.chi_exact == 5);
        if (r.n == 7 && r.a == 1 && r.b == 2) CHECK(*r.chi_exact == 6);
        CHECK(*r.chi_exact >= 5);
        CHECK(r.nodes > 0);
    }

    // past the guardrail the cross-check is skipped unless forced
    opts.nmax = 16;
    for (const sweep_row& r : run_sweep(opts))
        if (r.n > 14) CHECK(!r.chi_exact.has_value());
}
