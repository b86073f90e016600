#include <cmath>
#include <limits>

#include "doctest.h"
#include "oracle.hpp"
#include "softdm/error.hpp"
#include "softdm/grey_number.hpp"

using softdm::GreyNumber;
using oracle::dec;

TEST_CASE("construction enforces lower <= upper") {
  CHECK_NOTHROW(GreyNumber(0.3, 0.8));
  CHECK_NOTHROW(GreyNumber(0.5, 0.5));
  CHECK_THROWS_AS(GreyNumber(0.8, 0.3), softdm::DomainError);
  CHECK_THROWS_AS(GreyNumber(0.0, std::numeric_limits<double>::infinity()),
                  softdm::DomainError);
  CHECK_THROWS_AS(GreyNumber(std::nan(""), 1.0), softdm::DomainError);
  CHECK(GreyNumber::crisp(2.5).width() == 0.0);
}

TEST_CASE("addition") {
  SUBCASE("grades D + C give the interval behind P5's score") {
    auto sum = GreyNumber(0.6, 0.74) + GreyNumber(0.5, 0.59);
    CHECK(sum.lower() == doctest::Approx(1.1).epsilon(1e-12));
    CHECK(sum.upper() == doctest::Approx(1.33).epsilon(1e-12));
    CHECK(softdm::representative_value(sum) == doctest::Approx(1.215).epsilon(1e-12));
  }
  SUBCASE("zero is the identity") {
    CHECK(GreyNumber(0.3, 0.8) + GreyNumber(0.0, 0.0) == GreyNumber(0.3, 0.8));
  }
  SUBCASE("matches exact rational endpoints") {
    auto sum = GreyNumber(0.1, 0.2) + GreyNumber(0.25, 0.5);
    CHECK(std::abs(sum.lower() - (dec("0.1") + dec("0.25")).to_double()) <= 1e-12);
    CHECK(std::abs(sum.upper() - (dec("0.2") + dec("0.5")).to_double()) <= 1e-12);
  }
  SUBCASE("overflow to infinity is rejected") {
    const double big = std::numeric_limits<double>::max();
    CHECK_THROWS_AS(GreyNumber(big, big) + GreyNumber(big, big), softdm::DomainError);
  }
}

TEST_CASE("positive scalar product") {
  auto doubled = softdm::scale(2.0, GreyNumber(0.6, 0.74));
  CHECK(doubled.lower() == doctest::Approx(1.2).epsilon(1e-12));
  CHECK(doubled.upper() == doctest::Approx(1.48).epsilon(1e-12));
  CHECK(softdm::representative_value(doubled) == doctest::Approx(1.34).epsilon(1e-12));

  CHECK(softdm::scale(1.0, GreyNumber(0.4, 0.9)) == GreyNumber(0.4, 0.9));

  auto half = softdm::scale(0.5, GreyNumber(0.2, 0.6));
  CHECK(std::abs(half.lower() - (dec("0.5") * dec("0.2")).to_double()) <= 1e-12);
  CHECK(std::abs(half.upper() - (dec("0.5") * dec("0.6")).to_double()) <= 1e-12);

  CHECK_THROWS_AS(softdm::scale(0.0, GreyNumber(0.2, 0.6)), softdm::DomainError);
  CHECK_THROWS_AS(softdm::scale(-1.0, GreyNumber(0.2, 0.6)), softdm::DomainError);
}

TEST_CASE("representative value is the midpoint") {
  CHECK(softdm::representative_value(GreyNumber(0.6, 0.74)) ==
        doctest::Approx(0.67).epsilon(1e-12));
  CHECK(softdm::representative_value(GreyNumber(0.0, 0.0)) == 0.0);
  CHECK(softdm::representative_value(GreyNumber(0.0, 0.49)) ==
        doctest::Approx(0.245).epsilon(1e-12));
}

TEST_CASE("textual form") {
  CHECK(softdm::to_string(GreyNumber(0.6, 0.74)) == "[0.6;0.74]");
  CHECK(softdm::to_string(GreyNumber(0.0, 1.0)) == "[0;1]");
}

TEST_CASE("algebraic laws hold on random intervals") {
  oracle::Gen gen(20240611);
  for (int n = 0; n < 1000; ++n) {
    auto a = gen.grey();
    auto b = gen.grey();
    auto c = gen.grey();
    double k = gen.real(1e-3, 50.0);

    auto ab = a + b;
    auto ba = b + a;
    CHECK(ab == ba);

    auto left = (a + b) + c;
    auto right = a + (b + c);
    CHECK(std::abs(left.lower() - right.lower()) <= 1e-12 * (1 + std::abs(left.lower())));
    CHECK(std::abs(left.upper() - right.upper()) <= 1e-12 * (1 + std::abs(left.upper())));

    double va = softdm::representative_value(a);
    double vb = softdm::representative_value(b);
    CHECK(std::abs(softdm::representative_value(ab) - (va + vb)) <=
          1e-12 * (1 + std::abs(va) + std::abs(vb)));

    auto ka = softdm::scale(k, a);
    CHECK(std::abs(softdm::representative_value(ka) - k * va) <= 1e-12 * (1 + std::abs(k * va)));
    CHECK(std::abs(ka.width() - k * a.width()) <= 1e-12 * (1 + k * a.width()));
    CHECK(ka.lower() <= ka.upper());
  }
}
