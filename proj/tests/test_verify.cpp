#include <doctest.h>

#include <string>

#include "heine/types.hpp"
#include "heine/verify.hpp"

TEST_CASE("every suite passes with the default seed") {
    for (std::string_view s : heine::verify_suites()) {
        const auto r = heine::run_verify(s, 42);
        CHECK_MESSAGE(r.passed(), s);
        CHECK_FALSE(r.properties.empty());
        for (const auto& p : r.properties) {
            INFO(p.suite, ": ", p.name, " worst=", p.worst, " note=", p.note);
            CHECK(p.passed);
            CHECK(p.samples > 0);
            CHECK(p.suite == s);
        }
    }
}

TEST_CASE("other seeds pass too") {
    for (std::uint64_t seed : {1ULL, 7ULL, 123456789ULL})
        CHECK(heine::run_verify("all", seed).passed());
}

TEST_CASE("deterministic for a seed") {
    const auto a = heine::run_verify("all", 9);
    const auto b = heine::run_verify("all", 9);
    REQUIRE(a.properties.size() == b.properties.size());
    for (std::size_t i = 0; i < a.properties.size(); ++i) {
        CHECK(a.properties[i].worst == b.properties[i].worst);
        CHECK(a.properties[i].samples == b.properties[i].samples);
    }
}

TEST_CASE("a suite does not depend on which others ran") {
    const auto all = heine::run_verify("all", 5);
    const auto one = heine::run_verify("legendre", 5);
    std::size_t matched = 0;
    for (const auto& p : all.properties)
        for (const auto& q : one.properties)
            if (p.suite == q.suite && p.name == q.name) {
                CHECK(p.worst == q.worst);
                ++matched;
            }
    CHECK(matched == one.properties.size());
}

TEST_CASE("legendre suite includes the negativity property") {
    bool found = false;
    for (const auto& p : heine::run_verify("legendre", 42).properties)
        found = found || p.name.find("negativity") != std::string::npos;
    CHECK(found);
}

TEST_CASE("unknown suite") {
    CHECK_THROWS_AS(heine::run_verify("nope", 1), heine::DomainError);
}
