#include <cmath>

#include "doctest.h"
#include "ttp/errors.hpp"
#include "ttp/instances.hpp"

using namespace ttp;

TEST_CASE("zero matrix is a valid degenerate metric")
{
    auto d = load_instance("4\n0 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n", MatrixFormat::Headered);
    CHECK(d.n() == 4);
    CHECK(validate_metric(d).empty());
}

TEST_CASE("asymmetric cell is reported with its indices")
{
    const char* text =
        "0 1 1 1\n"
        "2 0 1 1\n"
        "1 1 0 1\n"
        "1 1 1 0\n";
    try {
        load_instance(text, MatrixFormat::Bare);
        FAIL("expected MetricError");
    } catch (const MetricError& e) {
        CHECK(e.i == 0);
        CHECK(e.j == 1);
        CHECK(std::string(e.what()).find("(1,2)") != std::string::npos);
    }
}

TEST_CASE("odd team count is a shape error")
{
    std::string text = "5\n";
    for (int i = 0; i < 5; ++i)
        text += "0 0 0 0 0\n";
    CHECK_THROWS_AS(load_instance(text, MatrixFormat::Headered), ShapeError);
    CHECK_THROWS_AS(load_instance("0 1 1\n1 0 1\n1 1 0\n", MatrixFormat::Bare), ShapeError);
}

TEST_CASE("malformed input")
{
    CHECK_THROWS_AS(load_instance("4\n0 x 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n", MatrixFormat::Headered), ParseError);
    CHECK_THROWS_AS(load_instance("", MatrixFormat::Bare), ParseError);
    CHECK_THROWS_AS(load_instance("4\n0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n", MatrixFormat::Headered), ShapeError);
    CHECK_THROWS_AS(load_instance("4\n0 0 0 0\n0 0 0 0\n", MatrixFormat::Headered), ShapeError);
    CHECK_THROWS_AS(load_instance("4.5\n", MatrixFormat::Headered), ParseError);
}

TEST_CASE("triangle violation witness")
{
    DistanceMatrix d(4);
    auto set = [&](int i, int j, double v) { d.at(i, j) = d.at(j, i) = v; };
    set(0, 1, 1);
    set(1, 2, 1);
    set(0, 2, 10);
    set(0, 3, 5);
    set(1, 3, 5);
    set(2, 3, 5);
    auto v = validate_metric(d);
    REQUIRE(!v.empty());
    bool found = false;
    for (const auto& x : v)
        if (x.kind == MetricViolation::Triangle && x.i == 0 && x.k == 1 && x.j == 2) {
            found = true;
            CHECK(x.excess == doctest::Approx(8.0));
            CHECK(x.describe().find("(1,2,3)") != std::string::npos);
        }
    CHECK(found);
}

TEST_CASE("negative, non-finite and diagonal entries")
{
    DistanceMatrix d(4);
    d.at(0, 0) = 1;
    d.at(1, 2) = d.at(2, 1) = -1;
    d.at(3, 2) = d.at(2, 3) = NAN;
    auto v = validate_metric(d);
    int neg = 0, nf = 0, diag = 0;
    for (const auto& x : v) {
        neg += x.kind == MetricViolation::Negative;
        nf += x.kind == MetricViolation::NonFinite;
        diag += x.kind == MetricViolation::Diagonal;
    }
    CHECK(neg == 2);
    CHECK(nf == 2);
    CHECK(diag == 1);
}

TEST_CASE("circle geometry for n = 4")
{
    for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
        auto d = generate_instance(InstanceKind::Circle, 4, seed);
        int adjacent = 0, opposite = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                if (std::fabs(d(i, j) - std::sqrt(2.0)) < 1e-12)
                    ++adjacent;
                else if (std::fabs(d(i, j) - 2.0) < 1e-12)
                    ++opposite;
            }
        CHECK(adjacent == 4);
        CHECK(opposite == 2);
    }
}

TEST_CASE("generators produce metrics for every kind and many seeds")
{
    for (auto kind : {InstanceKind::Euclidean, InstanceKind::Circle, InstanceKind::RandomMetric})
        for (int n : {4, 6, 10, 20, 34})
            for (std::uint64_t seed = 0; seed < 15; ++seed) {
                auto d = generate_instance(kind, n, seed);
                CHECK(validate_metric(d, 1e-9).empty());
            }
}

TEST_CASE("generators are deterministic and seed-sensitive")
{
    for (auto kind : {InstanceKind::Euclidean, InstanceKind::Circle, InstanceKind::RandomMetric}) {
        auto a = generate_instance(kind, 10, 7);
        auto b = generate_instance(kind, 10, 7);
        auto c = generate_instance(kind, 10, 8);
        CHECK(a == b);
        CHECK_FALSE(a == c);
    }
}

TEST_CASE("generator domain")
{
    CHECK_THROWS_AS(generate_instance(InstanceKind::Euclidean, 7, 1), DomainError);
    CHECK_THROWS_AS(generate_instance(InstanceKind::Circle, 2, 1), DomainError);
}

TEST_CASE("headered serialization round-trips bit-exactly")
{
    for (auto kind : {InstanceKind::Euclidean, InstanceKind::Circle, InstanceKind::RandomMetric})
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            auto d = generate_instance(kind, 14, seed);
            auto back = load_instance(serialize_instance(d, MatrixFormat::Headered), MatrixFormat::Headered);
            CHECK(back == d);
            auto bare = load_instance(serialize_instance(d, MatrixFormat::Bare), MatrixFormat::Bare);
            CHECK(bare == d);
        }
}

TEST_CASE("integer matrices keep their textual form")
{
    const char* text = "4\n0 3 4 5\n3 0 5 4\n4 5 0 3\n5 4 3 0\n";
    auto d = load_instance(text, MatrixFormat::Headered);
    CHECK(serialize_instance(d) == text);
}

TEST_CASE("format and kind names")
{
    CHECK(parse_format("bare") == MatrixFormat::Bare);
    CHECK(parse_format("headered-matrix") == MatrixFormat::Headered);
    CHECK_THROWS_AS(parse_format("xml"), ParseError);
    for (auto k : {InstanceKind::Euclidean, InstanceKind::Circle, InstanceKind::RandomMetric})
        CHECK(parse_kind(kind_name(k)) == k);
}
