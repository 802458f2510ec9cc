#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symqt/suites.hpp"

using namespace symqt;

TEST_CASE("cauchy suite small") {
    SuiteReport r = verify_cauchy_qt(1, 1, 0, 0);
    CHECK(r.pass);  // both sides are 1
    CHECK(verify_cauchy_qt(1, 1, 3, 3).pass);
    CHECK(verify_cauchy_qt(2, 1, 3, 3).pass);
}

TEST_CASE("cauchy suite detects a broken kernel") {
    // RHS missing the t^N correction factor must be caught
    SeriesQT lhs(1, 1, 2, 2);
    for (const Partition& mu : partitions_up_to(2, 1)) {
        lhs += SeriesQT::from_poly_x(interp_I(mu, 1), 1, 2, 2) *
               dual_H(mu, 1, DualFamily::QT).expand_u_series(1, 2, 2);
    }
    std::vector<PochFactor> fs{{qt_t(), 0, 0, +1}, {ScalarQT::one(), 0, 0, -1}};
    SeriesQT wrong = series_from_product(1, 1, 2, 2, fs);
    CHECK(lhs.first_difference(wrong).has_value());
}

TEST_CASE("one-row suite") {
    CHECK(verify_one_row_gf(1, 0).pass);
    CHECK(verify_one_row_gf(1, 3).pass);
    CHECK(verify_one_row_gf(2, 3).pass);
}

TEST_CASE("skew pieri small") {
    CHECK(verify_skew_pieri(1, Partition::empty(), 3).pass);
    CHECK(verify_skew_pieri(2, Partition({1}), 3).pass);
}

TEST_CASE("finite pieri small") {
    CHECK(verify_finite_pieri(1, 1, Partition::empty()).pass);
    CHECK(verify_finite_pieri(2, 2, Partition({1})).pass);
}

TEST_CASE("interp basis expansion round trip") {
    // expand a product of interpolation polynomials and reassemble
    const int N = 2;
    PolyQT f = interp_I(Partition({2}), N).scaled(qt_q(-1)) + interp_I(Partition({1, 1}), N) +
               interp_I(Partition::empty(), N).scaled(qt_t(2));
    auto exp = expand_in_interp_basis(f, N);
    CHECK(exp.at(Partition({2})).coeff(std::vector<int>{}) == qt_q(-1));
    CHECK(exp.at(Partition({1, 1})).coeff(std::vector<int>{}) == ScalarQT::one());
    CHECK(exp.at(Partition::empty()).coeff(std::vector<int>{}) == qt_t(2));
}

TEST_CASE("degenerate cauchy suites small") {
    CHECK(verify_whittaker(1, 1, 3).pass);
    CHECK(verify_hl(1, 1, 3).pass);
    CHECK(verify_jack_suite(1, 3).pass);
}

TEST_CASE("kernel intertwining at N=1") { CHECK(verify_kernel_intertwining(1, 3).pass); }

TEST_CASE("biorthogonality small") { CHECK(verify_biorthogonality(2).pass); }

TEST_CASE("dual oracle small") { CHECK(verify_dual_oracle(2, 2, 2).pass); }

TEST_CASE("report json shape") {
    SuiteReport r = verify_cauchy_qt(1, 1, 1, 1);
    json j = r.to_json();
    CHECK(j["suite"] == "cauchy");
    CHECK(j["status"] == "pass");
    CHECK(j.contains("millis"));
    CHECK(j.contains("params"));
    CHECK_FALSE(j.contains("counterexample"));

    SuiteReport f("demo");
    f.fail(json{{"exp", {1, 0}}});
    json jf = f.to_json();
    CHECK(jf["status"] == "fail");
    CHECK(jf.contains("counterexample"));
}

TEST_CASE("suites are deterministic") {
    SuiteReport a = verify_hl(1, 1, 3, kDefaultSeed);
    SuiteReport b = verify_hl(1, 1, 3, kDefaultSeed);
    json ja = a.to_json(), jb = b.to_json();
    ja.erase("millis");
    jb.erase("millis");
    CHECK(ja == jb);
}
