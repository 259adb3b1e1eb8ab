// Cross-checks every catalog group against an independent structural model:
// the realized multiplication table must be carried to the model's table by
// normal-form evaluation.

#include <doctest.h>

#include "oracle_models.hpp"
#include "test_util.hpp"

using namespace pgl;

TEST_CASE("heis27 matches the Heisenberg model") {
  check_against_model(*testutil::realize_catalog("heis27.pcp"), models::heisenberg(3));
}

TEST_CASE("heis125 matches the Heisenberg model") {
  check_against_model(*testutil::realize_catalog("heis125.pcp"), models::heisenberg(5));
}

TEST_CASE("m27 matches its metacyclic model") {
  check_against_model(*testutil::realize_catalog("m27.pcp"), models::m27());
}

TEST_CASE("c9byc9_81 matches its metacyclic model") {
  check_against_model(*testutil::realize_catalog("c9byc9_81.pcp"), models::c9byc9());
}

TEST_CASE("maxclass81 matches the wreath product model") {
  check_against_model(*testutil::realize_catalog("maxclass81.pcp"), models::wreath81());
}

TEST_CASE("phi8_243 matches the C27 x| C9 model") {
  check_against_model(*testutil::realize_catalog("phi8_243.pcp"), models::phi8(3));
}

TEST_CASE("phi8_3125 matches the C125 x| C25 model") {
  check_against_model(*testutil::realize_catalog("phi8_3125.pcp"), models::phi8(5));
}

TEST_CASE("phi7_243 matches its split extension model") {
  check_against_model(*testutil::realize_catalog("phi7_243.pcp"), models::phi7());
}

TEST_CASE("ut4f3_729 matches the unitriangular matrix model") {
  check_against_model(*testutil::realize_catalog("ut4f3_729.pcp"), models::ut4f3());
}

TEST_CASE("c27byc27_729 matches its metacyclic model") {
  check_against_model(*testutil::realize_catalog("c27byc27_729.pcp"), models::c27byc27());
}

TEST_CASE("c9c9byc9_729 matches its affine model") {
  check_against_model(*testutil::realize_catalog("c9c9byc9_729.pcp"), models::v729());
}
