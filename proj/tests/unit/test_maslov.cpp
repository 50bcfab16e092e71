#include <doctest.h>

#include "maslov_props.hpp"

using namespace testsupport;

TEST_CASE("Maslov axioms over F_p") {
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 101ULL}) {
        Tally t;
        maslov_suite_fp(p, 15, 1000 + p, t);
        for (const auto& [name, c] : t.counts) {
            INFO(name << " over F_" << p);
            CHECK(c.second == 0);
        }
    }
}

TEST_CASE("Maslov axioms over Q(t)") {
    Tally t;
    maslov_suite_qt(3, 77, t);
    for (const auto& [name, c] : t.counts) {
        INFO(name);
        CHECK(c.second == 0);
    }
}
