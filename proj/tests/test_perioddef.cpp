#include "doctest.h"
TEST_CASE("placeholder perioddef") { CHECK(true); }
