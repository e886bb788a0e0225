#include "latdet/potentials.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "latdet/spectral.hpp"
#include "latdet/specfun.hpp"
#include "oracles.hpp"

using namespace latdet;

TEST_CASE("linear lattice potential") {
    const LinearPotentialParams params{1.0, 3};
    CHECK(params.strength() == 1.0 / 64);
    const auto v = linear_lattice_potential(params);
    REQUIRE(v.size() == 3);
    CHECK(v.at(1) == 1.0 / 64);
    CHECK(v.at(3) == 3.0 / 64);
    CHECK_THROWS_AS(linear_lattice_potential({1.0, 0}), std::invalid_argument);
}

TEST_CASE("linear potential has zero second difference and cubic strength scaling") {
    for (double b : {0.37, 1.0, -2.5, 11.0}) {
        const auto v = linear_lattice_potential({b, 3});
        CHECK(v.at(1) - 2 * v.at(2) + v.at(3) == 0.0);

        const auto w = linear_lattice_potential({b, 40});
        for (std::size_t j = 2; j < 40; ++j) {
            CHECK(std::abs(w.at(j - 1) - 2 * w.at(j) + w.at(j + 1)) <= 4e-16 * std::abs(w.at(j + 1)));
        }
        // doubling p + 1 divides the strength by exactly eight
        for (std::size_t p : {1u, 3u, 7u, 15u, 63u}) {
            CHECK(LinearPotentialParams{b, 2 * p + 1}.strength() == LinearPotentialParams{b, p}.strength() / 8);
        }
    }
}

TEST_CASE("Rosen-Morse lattice potential is symmetric about the midpoint") {
    const RosenMorseParams params{1.3, 9};
    CHECK(params.step() == 0.1);
    CHECK(params.l_bar() == doctest::Approx(1.8));
    const auto v = rosen_morse_lattice_potential(params);
    for (std::size_t j = 1; j <= 9; ++j) {
        CHECK(v.at(j) == doctest::Approx(v.at(10 - j)).epsilon(1e-14));
        CHECK(v.at(j) < 0.0);
    }
    CHECK(v.at(5) == doctest::Approx(-0.01 * 1.3 * 2.3).epsilon(1e-15));
    // l and -1-l give the same potential
    const auto w = rosen_morse_lattice_potential({-2.3, 9});
    for (std::size_t j = 1; j <= 9; ++j) CHECK(w.at(j) == doctest::Approx(v.at(j)).epsilon(1e-14));
}

TEST_CASE("p = 3 closed form equals the lattice determinant ratio") {
    for (int trial = 0; trial < 100; ++trial) {
        const PotentialTable v(oracle::random_table(3, -2.0, 2.0));
        CHECK(discdet_p3_closed_form(v) ==
              doctest::Approx(det_ratio(v, BoundaryCondition::dirichlet())).epsilon(1e-12));
    }
    const auto lin = linear_lattice_potential({1.0, 3});
    CHECK(discdet_p3_closed_form(lin) == doctest::Approx(1.0794734954833984).epsilon(1e-15));
    CHECK_THROWS_AS(discdet_p3_closed_form(PotentialTable::zeros(4)), std::invalid_argument);
}

TEST_CASE("p = 3 closed form on the Rosen-Morse potential") {
    for (double l : {-3.0, -0.5, 0.0, 0.7, 2.0, 4.5}) {
        const auto v = rosen_morse_lattice_potential({l, 3});
        CHECK(discdet_p3_closed_form(v) ==
              doctest::Approx(det_ratio(v, BoundaryCondition::dirichlet())).epsilon(1e-13));
    }
    CHECK(discdet_p3_closed_form(rosen_morse_lattice_potential({0.0, 3})) == 1.0);
}

TEST_CASE("lattice determinants converge to the continuum ratio") {
    // linear: the error falls like h^2
    const double cont = specfun::continuum_linear_det_ratio(1.0);
    double prev_err = 0.0, prev_n = 0.0;
    for (std::size_t p : {10u, 30u, 100u, 300u}) {
        const double r = det_ratio(linear_lattice_potential({1.0, p}), BoundaryCondition::dirichlet());
        const double err = std::abs(r - cont);
        if (prev_err > 0.0) {
            const double order = std::log(prev_err / err) / std::log((p + 1.0) / prev_n);
            CHECK(order == doctest::Approx(2.0).epsilon(0.05));
        }
        prev_err = err;
        prev_n = p + 1.0;
    }
    for (double l : {0.7, 1.0, -0.5, 3.0}) {
        CAPTURE(l);
        const double r = det_ratio(rosen_morse_lattice_potential({l, 400}), BoundaryCondition::dirichlet());
        CHECK(std::abs(r - specfun::continuum_rosen_morse_det_ratio(l)) < 1e-4);
    }
}

TEST_CASE("parse_potential_csv") {
    std::istringstream ok("v\n0.5\n\n  -1.25 \n+3e-2\n");
    const auto v = parse_potential_csv(ok, "mem");
    REQUIRE(v.size() == 3);
    CHECK(v.at(1) == 0.5);
    CHECK(v.at(2) == -1.25);
    CHECK(v.at(3) == 0.03);

    std::istringstream headerless("1\n2\n");
    CHECK(parse_potential_csv(headerless).size() == 2);

    std::istringstream bad("1\nx2\n3\n");
    try {
        parse_potential_csv(bad, "pot.csv");
        FAIL("expected an error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()) == "pot.csv:2: not a number: 'x2'");
    }

    std::istringstream empty("header\n\n");
    CHECK_THROWS_AS(parse_potential_csv(empty), std::runtime_error);
    std::istringstream inf("1\ninf\n");
    CHECK_THROWS_AS(parse_potential_csv(inf), std::runtime_error);
}

TEST_CASE("load_potential_csv") {
    const auto path = std::filesystem::temp_directory_path() / "latdet_test_potential.csv";
    {
        std::ofstream out(path);
        out << "0.1\n0.2\n0.3\n";
    }
    const auto v = load_potential_csv(path);
    CHECK(v.size() == 3);
    CHECK(v.at(2) == 0.2);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_potential_csv(path), std::runtime_error);
}

TEST_CASE("l = -1/2 turns the Rosen-Morse well into a barrier") {
    for (std::size_t p : {3u, 10u, 100u}) {
        const auto v = rosen_morse_lattice_potential({-0.5, p});
        for (double x : v.values()) CHECK(x > 0.0);
        CHECK(det_ratio(v, BoundaryCondition::dirichlet()) > 1.0);
    }
    CHECK(specfun::continuum_rosen_morse_det_ratio(-0.5) > 1.0);
}
