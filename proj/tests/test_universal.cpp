#include "doctest.h"

#include "contraction/common.hpp"
#include "contraction/universal.hpp"

using namespace contraction;

TEST_CASE("degenerate families") {
    auto f0 = build_universal(6, 0);
    CHECK(f0.members.size() == 1);
    CHECK(verify_universal(f0));

    auto fn = build_universal(4, 4);
    CHECK(fn.members.size() == 16);
    CHECK(verify_universal(fn));
}

TEST_CASE("hand-built families verify or fail as expected") {
    UniversalFamily two;
    two.n = 2;
    two.t = 1;
    two.members = {TwoColoring::constant(2, 1), TwoColoring::constant(2, 2)};
    CHECK(verify_universal(two));

    UniversalFamily one;
    one.n = 2;
    one.t = 1;
    one.members = {TwoColoring::constant(2, 1)};
    CHECK(!verify_universal(one)); // the all-2 pattern is missing
}

TEST_CASE("built families are universal") {
    CHECK(verify_universal(build_universal(2, 1)));
    CHECK(verify_universal(build_universal(10, 3)));
    for (int n = 1; n <= 8; ++n)
        for (int t = 0; t <= std::min(n, 4); ++t) CHECK(verify_universal(build_universal(n, t)));
}

TEST_CASE("hash-family composition covers larger n") {
    auto f = build_universal(20, 3);
    CHECK(f.hash_family_size > 0);
    CHECK(f.members.size() <= (std::size_t{1} << f.t) * f.hash_family_size);
    CHECK(verify_universal(f));

    auto f2 = build_universal(18, 4);
    CHECK(verify_universal(f2));
}

TEST_CASE("size accounting") {
    for (int n : {4, 9, 14})
        for (int t : {0, 1, 3}) {
            auto f = build_universal(n, t);
            CHECK(f.members.size() <= (std::size_t{1} << n));
            if (f.hash_family_size > 0)
                CHECK(f.members.size() <= (std::size_t{1} << f.t) * f.hash_family_size);
        }
}

TEST_CASE("verifier is guarded") {
    UniversalFamily fake;
    fake.n = 40;
    fake.t = 12;
    CHECK_THROWS_AS(verify_universal(fake), input_too_large);
    CHECK_THROWS_AS(build_universal(3, 4), std::invalid_argument);
}
