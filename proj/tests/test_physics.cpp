#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "gravbound/physics.hpp"

using namespace gravbound;
using Catch::Approx;

TEST_CASE("pinned constants satisfy the Planck-unit identities") {
    const auto k = PhysConstants::codata2018();
    CHECK(k.t_p == Approx(std::sqrt(k.hbar * k.G / std::pow(k.c, 5))).epsilon(1e-4));
    CHECK(k.m_p == Approx(std::sqrt(k.hbar * k.c / k.G)).epsilon(1e-4));
    CHECK(k.l_p == Approx(k.c * k.t_p).epsilon(1e-4));
}

TEST_CASE("from_base rederives the Planck quantities") {
    const auto k = PhysConstants::codata2018();
    const auto d = PhysConstants::from_base(k.c, k.hbar, k.G);
    CHECK(d.t_p == Approx(k.t_p).epsilon(1e-6));
    CHECK(d.m_p == Approx(k.m_p).epsilon(1e-6));
    CHECK(d.l_p == Approx(k.l_p).epsilon(1e-6));
    CHECK_THROWS_AS(PhysConstants::from_base(-1.0, k.hbar, k.G), DomainError);
}

TEST_CASE("energy_to_angular_frequency") {
    const auto k = PhysConstants::codata2018();
    CHECK(to_real(energy_to_angular_frequency(1.054571817e-34, k)).value == Approx(1.0));
    // oracle: direct division with pinned hbar
    CHECK(energy_to_angular_frequency(1e16, k).log10_mag ==
          Approx(std::log10(1e16 / 1.054571817e-34)).epsilon(1e-12));
    CHECK(to_real(energy_to_angular_frequency(1e16, k)).value == Approx(9.482521568277412e49));
    CHECK(energy_to_angular_frequency(0.0, k).is_zero());
    CHECK_THROWS_AS(energy_to_angular_frequency(-1.0, k), DomainError);

    // linearity in log space: f(2E) = 2 f(E)
    const auto f1 = energy_to_angular_frequency(3.7e5, k);
    const auto f2 = energy_to_angular_frequency(7.4e5, k);
    CHECK(f2.log10_mag - f1.log10_mag == Approx(std::log10(2.0)).epsilon(1e-12));
}

TEST_CASE("presets") {
    const auto k = PhysConstants::codata2018();

    const auto laptop = preset("ultimate-laptop", k);
    CHECK(laptop.spec.mass_kg == 1.0);
    CHECK(laptop.spec.radius_m == 0.1);
    CHECK(laptop.spec.bits == 1e31);
    CHECK(laptop.spec.parallelism == 1e10);
    CHECK_NOTHROW(laptop.spec.validate());

    const auto avo = preset("avogadro", k);
    CHECK(avo.spec.bits == 1e25);
    CHECK(avo.spec.parallelism == 1.0);
    CHECK_FALSE(avo.notes.empty()); // the radius assumption must be surfaced
    CHECK_NOTHROW(avo.spec.validate());

    // oracle: Schwarzschild radius and Bekenstein bit count with pinned constants
    const auto bh = preset("black-hole-1kg", k);
    CHECK(bh.spec.radius_m == Approx(1.4852320538237331e-27).epsilon(1e-10));
    CHECK(bh.spec.bits == Approx(2111100926907752.0).epsilon(1e-10));
    CHECK_NOTHROW(bh.spec.validate());

    CHECK_THROWS_AS(preset("bogus", k), LookupError);
}

TEST_CASE("default energy budget is the full mass-energy") {
    const auto k = PhysConstants::codata2018();
    const auto laptop = preset("ultimate-laptop", k);
    CHECK(laptop.spec.energy(k) == Approx(8.98755e16).epsilon(1e-6));
    ComputerSpec with_budget = laptop.spec;
    with_budget.energy_j = 1e16;
    CHECK(with_budget.energy(k) == 1e16);
}

TEST_CASE("ComputerSpec validation") {
    ComputerSpec s{1.0, 0.1, 1e31, 1e10, std::nullopt};
    CHECK_NOTHROW(s.validate());

    ComputerSpec zero_mass = s;
    zero_mass.mass_kg = 0.0;
    CHECK_THROWS_AS(zero_mass.validate(), ValidationError);

    ComputerSpec overparallel = s;
    overparallel.parallelism = 1e32; // a gate cannot use fewer than one bit
    CHECK_THROWS_AS(overparallel.validate(), ValidationError);

    ComputerSpec subunit = s;
    subunit.parallelism = 0.5;
    CHECK_THROWS_AS(subunit.validate(), ValidationError);

    ComputerSpec bad_energy = s;
    bad_energy.energy_j = -1.0;
    CHECK_THROWS_AS(bad_energy.validate(), ValidationError);
}
