#include "doctest.h"
TEST_CASE("placeholder dgla") { CHECK(true); }
