#include <doctest.h>

#include <sstream>

#include "fairdiv/errors.hpp"
#include "fairdiv/value.hpp"

using fairdiv::InputError;
using fairdiv::Value;

TEST_CASE("value parsing accepts integers, decimals and fractions") {
  CHECK(Value::parse("42") == Value(42));
  CHECK(Value::parse("+7") == Value(7));
  CHECK(Value::parse("-3") == Value(-3));
  CHECK(Value::parse("12.75") == Value(51, 4));
  CHECK(Value::parse("0.5") == Value(1, 2));
  CHECK(Value::parse("-0.25") == Value(-1, 4));
  CHECK(Value::parse("51/4") == Value(51, 4));
  CHECK(Value::parse("6/4") == Value(3, 2));
  CHECK(Value::parse("-6/4") == Value(-3, 2));
  CHECK(Value::parse("123456789012345678901234567890") ==
        Value::parse("123456789012345678901234567890.0"));
}

TEST_CASE("value parsing rejects garbage") {
  CHECK_THROWS_AS(Value::parse(""), InputError);
  CHECK_THROWS_AS(Value::parse("abc"), InputError);
  CHECK_THROWS_AS(Value::parse("1.2.3"), InputError);
  CHECK_THROWS_AS(Value::parse("1/0"), InputError);
  CHECK_THROWS_AS(Value::parse("1e5"), InputError);
  CHECK_THROWS_AS(Value::parse("1.5/2"), InputError);
}

TEST_CASE("arithmetic is exact") {
  Value third(1, 3);
  CHECK(third + third + third == Value(1));
  CHECK(Value(1, 10) + Value(2, 10) == Value(3, 10));
  CHECK(Value(7, 2) * Value(2, 7) == Value(1));
  CHECK(Value(5) - Value(9, 2) == Value(1, 2));
  CHECK(Value(1) / Value(3) == third);
  CHECK_THROWS(Value(1) / Value(0));
}

TEST_CASE("comparisons are exact and total") {
  CHECK(Value(1, 3) < Value(34, 100));
  CHECK(Value(2, 6) == Value(1, 3));
  CHECK(Value(10, 3) > Value(3));
  CHECK(Value(0) <= Value(0));
  CHECK(Value(-1, 2).is_negative());
  CHECK(Value(0).is_zero());
  CHECK(Value(3, 2).is_positive());
}

TEST_CASE("canonical string form") {
  CHECK(Value(6, 4).str() == "3/2");
  CHECK(Value(8, 4).str() == "2");
  CHECK(Value(-6, 4).str() == "-3/2");
  CHECK(Value(0).str() == "0");
  std::ostringstream os;
  os << Value(5, 3);
  CHECK(os.str() == "5/3");
  CHECK(Value::parse(Value(22, 7).str()) == Value(22, 7));
}

TEST_CASE("int64 bridging") {
  CHECK(Value(41).fits_int64());
  CHECK(Value(41).as_int64() == 41);
  CHECK_FALSE(Value(1, 2).fits_int64());
  CHECK_FALSE(Value::parse("123456789012345678901234567890").fits_int64());
}
