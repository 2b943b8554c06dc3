#include <doctest.h>

#include "properties.hpp"

using namespace innc::testing;

TEST_CASE("randomised properties") {
    for (const auto &p : all_properties()) {
        SUBCASE((p.module + "/" + p.name).c_str()) {
            const auto res = run_property(p.name, default_cases);
            INFO(p.module << "/" << p.name << ": " << res.failures << " of " << res.cases
                          << " cases failed; first: " << res.first_failure);
            CHECK(res.cases >= default_cases);
            CHECK(res.ok());
        }
    }
}
