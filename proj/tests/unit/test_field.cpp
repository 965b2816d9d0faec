#include "doctest.h"
#include "quivalg/errors.hpp"
#include "quivalg/field.hpp"

using namespace quivalg;

TEST_CASE("rational arithmetic stays exact") {
  Field q = Field::rationals();
  Scalar a = q.parse_scalar("1/3");
  Scalar b = q.parse_scalar("-2/6");
  CHECK((a + b).is_zero());
  CHECK((a * q.from_int(3)).is_one());
  CHECK((a / a).is_one());
  CHECK(q.parse_scalar("4/6").report_str() == "2/3");
  CHECK(q.from_int(5).report_str() == "5/1");
  CHECK(q.from_int(5).str() == "5");
  CHECK_THROWS_AS(q.zero().inverse(), std::domain_error);
}

TEST_CASE("prime field residues") {
  Field f5 = Field::prime(5);
  CHECK(f5.characteristic() == 5);
  CHECK(f5.name() == "fp:5");
  CHECK(f5.from_int(-1).report_str() == "4");
  CHECK((f5.from_int(2) * f5.from_int(3)).is_one());
  CHECK(f5.parse_scalar("1/2") == f5.from_int(3));
  CHECK(f5.from_int(7) == f5.from_int(2));
  for (int v = 1; v < 5; ++v) CHECK((f5.from_int(v) * f5.from_int(v).inverse()).is_one());
  CHECK_THROWS_AS(f5.from_rational(mpq_class(1, 5)), InvalidField);
}

TEST_CASE("field descriptors parse and validate") {
  CHECK(Field::parse("rat") == Field::rationals());
  CHECK(Field::parse("fp:7") == Field::prime(7));
  CHECK(Field::parse(Field::prime(2).name()) == Field::prime(2));
  CHECK_THROWS_AS(Field::prime(4), InvalidField);
  CHECK_THROWS_AS(Field::prime(1), InvalidField);
  CHECK_THROWS_AS(Field::parse("real"), InvalidField);
  CHECK_THROWS_AS(Field::rationals().parse_scalar("1/0"), InputError);
  CHECK_THROWS_AS(Field::rationals().parse_scalar("x"), InputError);
}

TEST_CASE("scalars from different fields do not mix") {
  Scalar a = Field::rationals().one();
  Scalar b = Field::prime(3).one();
  CHECK_THROWS_AS(a + b, FieldMismatch);
}

TEST_CASE("field axioms on a grid of small values") {
  for (Field f : {Field::rationals(), Field::prime(5), Field::prime(7)}) {
    for (int x = -3; x <= 3; ++x) {
      for (int y = -3; y <= 3; ++y) {
        for (int z = -2; z <= 2; ++z) {
          Scalar a = f.from_int(x), b = f.from_int(y), c = f.from_int(z);
          CHECK(a * (b + c) == a * b + a * c);
          CHECK((a * b) * c == a * (b * c));
          CHECK(a + b == b + a);
          CHECK(a - a == f.zero());
        }
      }
    }
  }
}
