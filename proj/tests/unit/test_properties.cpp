#include "../common/properties.hpp"

#include <doctest.h>

TEST_CASE("kernel identities over random inputs") {
    for (auto& r : eds::props::run_property_suite(20261016, 1000)) {
        CAPTURE(r.name);
        CAPTURE(r.first_failure);
        CHECK(r.cases == 1000);
        CHECK(r.failures == 0);
    }
}
