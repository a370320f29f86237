#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twc/suites.hpp"

using namespace twc;

TEST_CASE("placeholder") { CHECK(true); }
