#include "minlen/errors.hpp"
#include "minlen/minlength.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

using namespace minlen;
using namespace minlen::minlength;
using oracle::rel_err;

namespace {

const PhysicalConstants kDefaults{};

// 40-digit recomputation of sqrt(2 B / (1 - (3 eta - 1)(3 - 2 ln 4))) a at B = 9.5 kHz.
constexpr double kBoundThird = 8.992395877621733e-17;
constexpr double kBoundTwoThirds = 1.0230603084046204e-16;
constexpr double kBoundPointSix = 9.942141159103809e-17;
constexpr double kBoundOne = 1.2178855511250387e-16;

std::filesystem::path data_dir() { return MINLEN_DATA_DIR; }

}  // namespace

TEST_CASE("experimental difference and its uncertainty") {
    const auto d = delta2_exprt(LambShiftDataset::bundled());
    CHECK(d.value == doctest::Approx(187235.2).epsilon(1e-12));
    CHECK(d.uncertainty == doctest::Approx(56.46237685397242).epsilon(1e-12));
}

TEST_CASE("discrepancy budget") {
    const auto b = discrepancy(LambShiftDataset::bundled());
    CHECK(b.khz.value == doctest::Approx(9.5).epsilon(1e-9));
    CHECK_FALSE(b.vacuous);

    auto equal = LambShiftDataset::bundled();
    equal.delta2_theor_khz.value = delta2_exprt(equal).value;
    CHECK(discrepancy(equal).khz.value == 0.0);
    CHECK_FALSE(discrepancy(equal).vacuous);

    auto above = LambShiftDataset::bundled();
    above.delta2_theor_khz.value = 187300.0;
    const auto v = discrepancy(above);
    CHECK(v.khz.value < 0.0);
    CHECK(v.vacuous);
}

TEST_CASE("dataset validation") {
    auto bad = LambShiftDataset::bundled();
    bad.l1s_khz.value = -1.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = LambShiftDataset::bundled();
    bad.l2s_khz.uncertainty = -0.1;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    PhysicalConstants c;
    c.coulomb_unit_hz = 0.0;
    CHECK_THROWS_AS(c.validate(), DomainError);
}

TEST_CASE("eta denominator") {
    CHECK(eta_denominator(1.0 / 3.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(eta_denominator(1.0) == doctest::Approx(0.5451774444795625).epsilon(1e-14));
    CHECK_NOTHROW(check_eta_domain());
}

TEST_CASE("minimal length bound values") {
    const double budget = discrepancy(LambShiftDataset::bundled()).khz.value;
    CHECK(rel_err(min_length(1.0 / 3.0, budget, kDefaults), kBoundThird) < 1e-9);
    CHECK(rel_err(min_length(2.0 / 3.0, budget, kDefaults), kBoundTwoThirds) < 1e-9);
    CHECK(rel_err(min_length(0.6, budget, kDefaults), kBoundPointSix) < 1e-9);
    CHECK(rel_err(min_length(1.0, budget, kDefaults), kBoundOne) < 1e-9);
    CHECK(min_length(0.5, 0.0, kDefaults) == 0.0);
}

TEST_CASE("minimal length domain") {
    CHECK_THROWS_AS(min_length(0.3, 9.5, kDefaults), DomainError);
    CHECK_THROWS_AS(min_length(1.01, 9.5, kDefaults), DomainError);
    CHECK_THROWS_AS(min_length(0.5, -1.0, kDefaults), DomainError);
    CHECK_THROWS_AS(EtaXi(0.2, 1e-6), DomainError);
    CHECK_THROWS_AS(EtaXi(0.5, -1e-6), DomainError);
}

TEST_CASE("scaling laws") {
    for (double eta : {1.0 / 3.0, 0.5, 0.8, 1.0}) {
        const double base = min_length(eta, 9.5, kDefaults);
        CHECK(min_length(eta, 4.0 * 9.5, kDefaults) == doctest::Approx(2.0 * base).epsilon(1e-15));
        PhysicalConstants scaled = kDefaults;
        scaled.coulomb_unit_hz *= 9.0;
        CHECK(min_length(eta, 9.5, scaled) == doctest::Approx(base / 3.0).epsilon(1e-15));
        CHECK(min_length(eta, 9.5, kDefaults) ==
              doctest::Approx(min_length_xi(eta, 9.5, kDefaults) * kDefaults.bohr_radius_m).epsilon(1e-15));
    }
}

TEST_CASE("bound grows with eta") {
    double prev = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double eta = 1.0 / 3.0 + (2.0 / 3.0) * i / 200.0;
        const double v = min_length(std::min(eta, 1.0), 9.5, kDefaults);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("sweep grid") {
    const auto rows = sweep(LambShiftDataset::bundled(), kDefaults, 3);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].eta == 1.0 / 3.0);
    CHECK(rows[1].eta == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(rows[2].eta == 1.0);
    CHECK(rel_err(rows[0].delta_x_min_m, kBoundThird) < 1e-9);
    CHECK(rel_err(rows[1].delta_x_min_m, kBoundTwoThirds) < 1e-9);
    CHECK(rel_err(rows[2].delta_x_min_m, kBoundOne) < 1e-9);

    const auto fine = sweep(LambShiftDataset::bundled(), kDefaults, 1000);
    REQUIRE(fine.size() == 1000);
    CHECK(fine.front().eta == 1.0 / 3.0);
    CHECK(fine.back().eta == 1.0);
    for (std::size_t i = 1; i < fine.size(); ++i) {
        CHECK(fine[i].delta_x_min_m > fine[i - 1].delta_x_min_m);
    }
    CHECK_THROWS_AS(sweep(LambShiftDataset::bundled(), kDefaults, 1), DomainError);
}

TEST_CASE("sweep with a vacuous budget") {
    auto above = LambShiftDataset::bundled();
    above.delta2_theor_khz.value = 187300.0;
    const auto rows = sweep(above, kDefaults, 5);
    REQUIRE(rows.size() == 5);
    for (const auto& r : rows) {
        CHECK(r.vacuous);
        CHECK(r.xi == 0.0);
        CHECK(r.delta_x_min_m == 0.0);
    }
}

TEST_CASE("round trip through the energy corrections") {
    const auto data = LambShiftDataset::bundled();
    const double budget = discrepancy(data).khz.value;
    for (double eta : {1.0 / 3.0, 0.6, 1.0}) {
        const EtaXi point(eta, min_length_xi(eta, budget, kDefaults));
        const auto report = consistency_check(point.to_params(), data, kDefaults);
        CAPTURE(eta);
        CHECK(report.rel_dev_budget < 1e-6);
        CHECK(report.rel_dev_closed < 1e-10);
        CHECK(report.budget_khz == doctest::Approx(9.5).epsilon(1e-9));
    }
    const auto zero = consistency_check(perturbation::DeformationParams::zero(), data, kDefaults);
    CHECK(zero.from_corrections_khz == 0.0);
    CHECK(zero.closed_form_khz == 0.0);
}

TEST_CASE("unit conversion") {
    CHECK(ceu_to_khz(1.0, kDefaults) == doctest::Approx(6.579683920502e12).epsilon(1e-15));
    CHECK(khz_to_ceu(ceu_to_khz(0.125, kDefaults), kDefaults) == doctest::Approx(0.125).epsilon(1e-15));
}

TEST_CASE("eta-xi mapping") {
    const auto p = EtaXi(0.6, 2e-3).to_params();
    CHECK(p.beta_t() == doctest::Approx(0.6 * 4e-6).epsilon(1e-15));
    CHECK(p.beta_prime_t() == doctest::Approx(0.4 * 4e-6).epsilon(1e-15));
    CHECK(EtaXi(1.0 / 3.0, 1e-3).to_params().alpha_t() == 0.0);
}

TEST_CASE("key-value parsing") {
    const auto kv = parse_key_values("# header\n a = 1.5 \n\nb=2e3 # trailing\n", "inline");
    CHECK(kv.at("a") == 1.5);
    CHECK(kv.at("b") == 2000.0);
    CHECK_THROWS_AS(parse_key_values("a 1\n", "inline"), IoError);
    CHECK_THROWS_AS(parse_key_values("a = x\n", "inline"), IoError);
    CHECK_THROWS_AS(parse_key_values("a = 1\na = 2\n", "inline"), IoError);
    CHECK_THROWS_AS(parse_key_values(" = 2\n", "inline"), IoError);
    CHECK_THROWS_AS(read_key_values("/nonexistent/lamb.txt"), IoError);
    CHECK_THROWS_AS(load_dataset("/nonexistent/lamb.txt"), IoError);
}

TEST_CASE("dataset documents") {
    auto kv = parse_key_values(
        "l1s_khz = 1\nl1s_unc_khz = 0\nl2s_khz = 1\nl2s_unc_khz = 0\ndelta2_theor_khz = 1\n", "inline");
    CHECK_THROWS_AS(dataset_from_key_values(kv), IoError);
    kv["delta2_theor_unc_khz"] = 0.0;
    CHECK_NOTHROW(dataset_from_key_values(kv));
    kv["extra"] = 1.0;
    CHECK_THROWS_AS(dataset_from_key_values(kv), IoError);
    kv.erase("extra");
    kv["l1s_khz"] = -5.0;
    CHECK_THROWS_AS(dataset_from_key_values(kv), IoError);

    const auto bundled = LambShiftDataset::bundled();
    const auto file = load_dataset(data_dir() / "lamb_shift_2s.txt");
    CHECK(file.l1s_khz.value == bundled.l1s_khz.value);
    CHECK(file.l1s_khz.uncertainty == bundled.l1s_khz.uncertainty);
    CHECK(file.l2s_khz.value == bundled.l2s_khz.value);
    CHECK(file.l2s_khz.uncertainty == bundled.l2s_khz.uncertainty);
    CHECK(file.delta2_theor_khz.value == bundled.delta2_theor_khz.value);
    CHECK(file.delta2_theor_khz.uncertainty == bundled.delta2_theor_khz.uncertainty);
}

TEST_CASE("constants documents") {
    const auto c = load_constants(data_dir() / "constants.txt");
    CHECK(c.bohr_radius_m == kDefaults.bohr_radius_m);
    CHECK(c.coulomb_unit_hz == kDefaults.coulomb_unit_hz);
    const auto partial = constants_from_key_values(parse_key_values("bohr_radius_m = 1e-10\n", "inline"));
    CHECK(partial.bohr_radius_m == 1e-10);
    CHECK(partial.coulomb_unit_hz == kDefaults.coulomb_unit_hz);
    CHECK_THROWS_AS(constants_from_key_values(parse_key_values("rydberg = 1\n", "inline")), IoError);
    CHECK_THROWS_AS(constants_from_key_values(parse_key_values("bohr_radius_m = 0\n", "inline")), IoError);
}
