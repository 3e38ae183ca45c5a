#include "grasscalc/json_io.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace grasscalc;

TEST_CASE("partition json round trip") {
    CHECK(partition_to_json(Partition({3, 1})) == nlohmann::json({3, 1}));
    CHECK(partition_to_json(Partition()) == nlohmann::json::array());
    CHECK(partition_from_json(nlohmann::json({3, 1})) == Partition({3, 1}));
    CHECK(partition_from_json(nlohmann::json::array()) == Partition());
    CHECK_THROWS_AS(partition_from_json(nlohmann::json{{"x", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(partition_from_json(nlohmann::json({1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(partition_from_json(nlohmann::json({2, -1})), std::invalid_argument);
}

TEST_CASE("ring json round trip") {
    const RingPtr ring = GradedRing::create({{"b0", 0}, {"c1", 1}, {"c2", 2}}, 2);
    const nlohmann::json j = ring_to_json(ring);
    const RingPtr back = ring_from_json(j);
    CHECK(back->truncation() == 2);
    CHECK(back->generator_count() == 3);
    CHECK(back->generator(0).name == "b0");
    CHECK(back->generator(2).degree == 2);
    CHECK_THROWS_AS(ring_from_json(nlohmann::json::array()), std::invalid_argument);
    CHECK_THROWS_AS(ring_from_json(nlohmann::json{{"truncation", 2}}),
                    std::invalid_argument);
}

TEST_CASE("element json round trip") {
    const RingPtr ring = GradedRing::create({{"c1", 1}, {"c2", 2}}, 2);
    const GradedElement c1 = GradedElement::generator(ring, "c1");
    const GradedElement c2 = GradedElement::generator(ring, "c2");
    const GradedElement e = c2 - c1 * c1 * Rational(1, 4);

    const nlohmann::json j = element_to_json(e);
    CHECK(j.is_array());
    CHECK(j.size() == 2);
    CHECK(element_from_json(ring, j) == e);

    CHECK(element_to_json(GradedElement(ring)) == nlohmann::json::array());
    CHECK(element_from_json(ring, nlohmann::json::array()).is_zero());

    SUBCASE("rejects unknown generators and garbage") {
        CHECK_THROWS_AS(element_from_json(
                            ring, nlohmann::json::parse(
                                      R"([{"monomial": {"zz": 1}, "coeff": "1"}])")),
                        std::invalid_argument);
        CHECK_THROWS_AS(element_from_json(ring, nlohmann::json{{"not", "a list"}}),
                        std::invalid_argument);
        CHECK_THROWS_AS(element_from_json(
                            ring, nlohmann::json::parse(
                                      R"([{"monomial": {"c2": 3}, "coeff": "1"}])")),
                        std::invalid_argument);  // degree above the truncation
    }
    SUBCASE("accepts integer coefficients") {
        const GradedElement got = element_from_json(
            ring, nlohmann::json::parse(R"([{"monomial": {"c1": 1}, "coeff": 3}])"));
        CHECK(got == c1 * Rational(3));
    }
}

TEST_CASE("fibered class json round trip") {
    const RingPtr ring = GradedRing::create({{"b0", 0}, {"c1", 1}, {"c2", 2}}, 2);
    const GradedElement b0 = GradedElement::generator(ring, "b0");
    FiberedClass f(ring, 2);
    f.add_term(Partition({1}), b0);
    f.add_term(Partition(), GradedElement::generator(ring, "c1"));

    const nlohmann::json j = fibered_to_json(f);
    CHECK(j.is_array());
    CHECK(fibered_from_json(ring, 2, j) == f);

    SUBCASE("partitions wider than the quotient rank are rejected") {
        const nlohmann::json bad = nlohmann::json::parse(
            R"([{"mu": [1,1,1], "coeff": [{"monomial": {}, "coeff": "1"}]}])");
        CHECK_THROWS_AS(fibered_from_json(ring, 2, bad), std::invalid_argument);
    }
}

TEST_CASE("setup json") {
    const GrassSetup setup = setup_from_json(nlohmann::json{{"n", 2}, {"r", 5}, {"d", 2}});
    CHECK(setup.rank == 5);
    CHECK(setup_to_json(setup) == nlohmann::json({{"n", 2}, {"r", 5}, {"d", 2}}));
    CHECK_THROWS_AS(setup_from_json(nlohmann::json{{"n", 2}, {"r", 5}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(setup_from_json(nlohmann::json{{"n", 2}, {"r", 5}, {"d", 5}}),
                    std::invalid_argument);
}

TEST_CASE("rational json forms") {
    CHECK(rational_from_json(nlohmann::json("3/4")) == Rational(3, 4));
    CHECK(rational_from_json(nlohmann::json(-2)) == Rational(-2));
    CHECK_THROWS_AS(rational_from_json(nlohmann::json("x")), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_json(nlohmann::json("1/0")), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_json(nlohmann::json(1.5)), std::invalid_argument);
    CHECK(rational_to_string(Rational(-8, 6)) == "-4/3");
    CHECK(rational_to_string(Rational(4)) == "4");
}

TEST_CASE("stable dump is byte-identical across calls") {
    const nlohmann::json j = {{"b", 1}, {"a", {1, 2, 3}}};
    CHECK(dump_stable(j) == dump_stable(j));
    CHECK(dump_stable(j).back() == '\n');
}
