#include "doctest.h"
#include "ncwitt/error.hpp"
#include "ncwitt/json_io.hpp"
#include "ncwitt/parse.hpp"

using namespace ncwitt;

namespace {

const GeneratorSetPtr kXY = make_generators({"X", "Y"});
const CoefficientRing kZ = CoefficientRing::integers();

} // namespace

TEST_CASE("terms_to_json emits decimal strings in degree-then-lex order") {
    const FreePoly f = parse("Y + 2*X*Y - 123456789012345678901234567890", kXY, kZ);
    const json doc = terms_to_json(f);
    REQUIRE(doc.size() == 3);
    CHECK(doc[0].at("word") == "1");
    CHECK(doc[0].at("coeff") == "-123456789012345678901234567890");
    CHECK(doc[1].at("word") == "Y");
    CHECK(doc[1].at("coeff") == "1");
    CHECK(doc[2].at("word") == "X*Y");
    CHECK(doc[2].at("coeff") == "2");

    CHECK(terms_to_json(FreePoly::zero(kXY, kZ)).empty());
}

TEST_CASE("ghost_to_json pairs text with terms") {
    const GhostVector g = ghost_map({parse("X*Y", kXY, kZ)}, 2);
    const json doc = ghost_to_json(g);
    REQUIRE(doc.size() == 1);
    CHECK(doc[0].at("text") == "X*Y");
    CHECK(doc[0].at("terms")[0].at("word") == "X*Y");
}

TEST_CASE("modulus serialization") {
    CHECK(modulus_to_json(CoefficientRing::integers()) == "int");
    CHECK(modulus_to_json(CoefficientRing::modular(7)) == "7");
}

TEST_CASE("matrix round trip through assignment_from_json") {
    const auto doc = nlohmann::json::parse(R"({
        "dimension": 2,
        "modulus": 5,
        "assign": {
            "Y": [[0, "1"], [0, 0]],
            "X": [[0, 0], [1, 0]]
        }
    })");
    const MatrixAssignment assignment = assignment_from_json(doc);
    CHECK(assignment.dim() == 2);
    CHECK(assignment.ring() == CoefficientRing::modular(5));
    REQUIRE(assignment.generators()->names() == std::vector<std::string>{"X", "Y"});
    CHECK(assignment.matrix_for(0).at(1, 0) == 1);
    CHECK(assignment.matrix_for(1).at(0, 1) == 1);

    const json out = matrix_to_json(assignment.matrix_for(0));
    CHECK(out.at("dimension") == 2);
    CHECK(out.at("modulus") == "5");
    CHECK(out.at("entries")[1][0] == "1");
}

TEST_CASE("integer modulus spelled as the string \"int\"") {
    const auto doc = nlohmann::json::parse(R"({
        "dimension": 1,
        "modulus": "int",
        "assign": {"X": [[-7]]}
    })");
    const MatrixAssignment assignment = assignment_from_json(doc);
    CHECK(assignment.ring().is_integers());
    CHECK(assignment.matrix_for(0).at(0, 0) == -7);
}

TEST_CASE("malformed assignments are rejected") {
    CHECK_THROWS_AS(assignment_from_json(nlohmann::json::parse("[]")), DomainError);
    CHECK_THROWS_AS(assignment_from_json(nlohmann::json::parse(R"({"dimension": 2})")),
                    DomainError);
    CHECK_THROWS_AS(assignment_from_json(nlohmann::json::parse(
                        R"({"dimension": 2, "modulus": 5, "assign": {"X": [[1, 0]]}})")),
                    DomainError);
    CHECK_THROWS_AS(assignment_from_json(nlohmann::json::parse(
                        R"({"dimension": 0, "modulus": 5, "assign": {"X": []}})")),
                    DomainError);
    CHECK_THROWS_AS(assignment_from_json(nlohmann::json::parse(
                        R"({"dimension": 1, "modulus": 5, "assign": {}})")),
                    DomainError);
    CHECK_THROWS_AS(assignment_from_json(nlohmann::json::parse(
                        R"({"dimension": 1, "modulus": 5, "assign": {"X": [["ten"]]}})")),
                    DomainError);
}

TEST_CASE("mpz_from_json accepts integers and decimal strings") {
    CHECK(mpz_from_json(nlohmann::json(42)) == 42);
    CHECK(mpz_from_json(nlohmann::json(-3)) == -3);
    CHECK(mpz_from_json(nlohmann::json("123456789012345678901234567890")) ==
          mpz_class("123456789012345678901234567890"));
    CHECK_THROWS_AS(mpz_from_json(nlohmann::json(1.5)), DomainError);
    CHECK_THROWS_AS(mpz_from_json(nlohmann::json("1.5")), DomainError);
    CHECK_THROWS_AS(mpz_from_json(nlohmann::json(nullptr)), DomainError);
}
