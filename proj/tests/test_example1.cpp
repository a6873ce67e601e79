#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dlsc/example1.hpp"

TEST_CASE("golden replay passes at q = 101 and q = 2^31 - 1") {
    for (std::uint64_t q : {101ULL, 2147483647ULL}) {
        CAPTURE(q);
        auto checks = dlsc::run_example1_checks(q);
        CHECK(checks.size() >= 10);
        for (const dlsc::GoldenCheck& c : checks) {
            CAPTURE(c.name);
            CAPTURE(c.detail);
            CHECK(c.pass);
        }
        CHECK(dlsc::all_pass(checks));
    }
}
