#include "doctest.h"
#include "tartool/numbers.hpp"

using namespace tar;

TEST_CASE("rational parsing and formatting") {
  CHECK(to_string(*parse_rat("3/6")) == "1/2");
  CHECK(to_string(*parse_rat("-4/2")) == "-2");
  CHECK(to_string(*parse_rat("10")) == "10");
  CHECK(*parse_rat("0.1") == Rat(1, 10));
  CHECK(*parse_rat("-2.5") == Rat(-5, 2));
  CHECK(*parse_rat("1.25e2") == Rat(125));
  CHECK(*parse_rat("25e-1") == Rat(5, 2));
  CHECK(!parse_rat(""));
  CHECK(!parse_rat("1/0"));
  CHECK(!parse_rat("abc"));
  CHECK(!parse_rat("1.2.3"));
}

TEST_CASE("quad arithmetic and sign") {
  Quad s3{Rat(0), Rat(1)};  // sqrt(3)
  CHECK(sign(s3) == 1);
  CHECK(s3 * s3 == Quad(3));
  Quad x{Rat(-2), Rat(1)};  // sqrt(3) - 2 < 0
  CHECK(sign(x) == -1);
  Quad y{Rat(-1), Rat(1)};  // sqrt(3) - 1 > 0
  CHECK(sign(y) == 1);
  CHECK(sign(x * y) == -1);
  Quad q = Quad(1) / s3;  // 1/sqrt(3) = (1/3) sqrt(3)
  CHECK(q == Quad(Rat(0), Rat(1, 3)));
  CHECK(abs(x) == -x);
  CHECK(to_double(s3) == doctest::Approx(1.7320508075688772));
}

TEST_CASE("quad parse/print round trip") {
  for (const char* t : {"5", "-7/3", "2r3", "-1/2r3", "1/2+3/4r3", "-1-2r3", "0"}) {
    auto q = parse_quad(t);
    REQUIRE(q);
    auto again = parse_quad(to_string(*q));
    REQUIRE(again);
    CHECK(*again == *q);
  }
  CHECK(*parse_quad("1/2+3/4r3") == Quad(Rat(1, 2), Rat(3, 4)));
  CHECK(*parse_quad("0.5r3") == Quad(Rat(0), Rat(1, 2)));
  CHECK(!parse_quad("r3r3"));
  CHECK(!parse_quad(""));
}
