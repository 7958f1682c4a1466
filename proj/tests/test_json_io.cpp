#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>

#include "gravbound/json_io.hpp"

using namespace gravbound;
using Catch::Approx;

TEST_CASE("LogScalar JSON form") {
    const auto j = to_json(LogScalar::from_log10(+1, 47.79));
    CHECK(j["sign"] == 1);
    CHECK(j["log10"].get<double>() == Approx(47.79));

    const auto z = to_json(LogScalar::zero());
    CHECK(z["sign"] == 0);
    CHECK(z["log10"] == 0.0);

    const auto back = log_scalar_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back.sign == +1);
    CHECK(back.log10_mag == Approx(47.79));
    CHECK(log_scalar_from_json(nlohmann::json::parse(z.dump())).is_zero());
}

TEST_CASE("ComputerSpec JSON round trip") {
    ComputerSpec s{1.0, 0.1, 1e31, 1e10, std::nullopt};
    const auto j = to_json(s);
    CHECK(j["energy_j"].is_null());
    const auto back = spec_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back.mass_kg == 1.0);
    CHECK(back.bits == 1e31);
    CHECK_FALSE(back.energy_j.has_value());

    s.energy_j = 1e16;
    const auto back2 = spec_from_json(nlohmann::json::parse(to_json(s).dump()));
    REQUIRE(back2.energy_j.has_value());
    CHECK(*back2.energy_j == 1e16);

    // invalid specs are rejected at parse time
    CHECK_THROWS_AS(spec_from_json(nlohmann::json::parse(
                        R"({"mass_kg":-1,"radius_m":0.1,"bits":1e31,"parallelism":1})")),
                    ValidationError);
}

TEST_CASE("BoundReport JSON keeps the schema key order") {
    const auto k = PhysConstants::codata2018();
    const auto p = preset("ultimate-laptop", k);
    const auto j = to_json(bound_report(p.spec, k, p.notes));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"spec", "ml_ops_per_s", "grav_ops_per_s",
                                           "serial_error", "eps_max", "implied_dp",
                                           "binding_bound", "notes"});
    CHECK(j["grav_ops_per_s"]["log10"].get<double>() == Approx(47.7862435986905).margin(1e-9));
}

TEST_CASE("system_from_json") {
    const auto good = nlohmann::json::parse(
        R"({"omegas": [0.0, 2.0], "amplitudes": [[0.7071067811865476, 0], [0.7071067811865476, 0]]})");
    const auto [spectrum, state] = system_from_json(good);
    CHECK(spectrum.dim() == 2);
    CHECK(state.amplitudes(0).real() == Approx(1.0 / std::sqrt(2.0)));

    CHECK_THROWS_AS(system_from_json(nlohmann::json::parse(R"({"omegas": [0, 1]})")),
                    ValidationError);
    CHECK_THROWS_AS(system_from_json(nlohmann::json::parse(
                        R"({"omegas": [0, 1], "amplitudes": [[1, 0, 0], [0, 0]]})")),
                    ValidationError);
    CHECK_THROWS_AS(system_from_json(nlohmann::json::parse(
                        R"({"omegas": [0], "amplitudes": [[1, 0], [0, 0]]})")),
                    ValidationError);
}

TEST_CASE("constants override") {
    const auto k = constants_from_json(nlohmann::json::parse(
        R"({"c": 2.99792458e8, "hbar": 1.054571817e-34, "G": 6.6743e-11})"));
    CHECK(k.t_p == Approx(5.391247e-44).epsilon(1e-5));
    CHECK(k.m_p == Approx(2.176434e-8).epsilon(1e-5));

    SECTION("from the environment") {
        const std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                                 "/gravbound_constants_test.json";
        {
            std::ofstream out(path);
            out << R"({"c": 2.99792458e8, "hbar": 1.054571817e-34, "G": 6.6743e-11})";
        }
        setenv("GRAVBOUND_CONSTANTS", path.c_str(), 1);
        const auto env_k = constants_from_env();
        CHECK(env_k.t_p == Approx(5.391247e-44).epsilon(1e-5));
        unsetenv("GRAVBOUND_CONSTANTS");
        CHECK(constants_from_env().t_p == 5.391247e-44);
        std::remove(path.c_str());
    }
}
