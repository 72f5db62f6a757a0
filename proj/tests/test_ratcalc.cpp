#include <doctest.h>

#include <stdexcept>

#include "hilb/poly.hpp"
#include "hilb/rat.hpp"
#include "hilb/ratcalc.hpp"

using namespace hilb;

TEST_CASE("Rat canonical form and parsing") {
  CHECK(Rat(2, 4).str() == "1/2");
  CHECK(Rat(-2, 4).str() == "-1/2");
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(0, 7).str() == "0");
  CHECK(Rat(6, 3).str() == "2");
  CHECK(Rat::parse("3/6") == Rat(1, 2));
  CHECK(Rat::parse("-7") == Rat(-7));
  CHECK(Rat::parse("+2/3") == Rat(2, 3));
  CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
}

TEST_CASE("Rat arithmetic is exact") {
  Rat a(1, 3), b(1, 6);
  CHECK(a + b == Rat(1, 2));
  CHECK(a - b == Rat(1, 6));
  CHECK(a * b == Rat(1, 18));
  CHECK(a / b == Rat(2));
  CHECK(-a == Rat(-1, 3));
  CHECK_THROWS_AS(a / Rat(0), std::invalid_argument);
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-5).sign() == -1);
  CHECK(Rat(0).sign() == 0);
  CHECK(Rat(1, 2).is_integer() == false);
  CHECK(Rat(4, 2).is_integer() == true);
  // round-trip through the string form
  for (long n = -5; n <= 5; ++n)
    for (long d = 1; d <= 4; ++d) CHECK(Rat::parse(Rat(n, d).str()) == Rat(n, d));
}

TEST_CASE("binomial coefficients with arbitrary integer top") {
  CHECK(binom(5, 2) == Rat(10));
  CHECK(binom(5, 0) == Rat(1));
  CHECK(binom(5, 7) == Rat(0));
  CHECK(binom(0, 0) == Rat(1));
  CHECK(binom(5, -1) == Rat(0));
  // falling-factorial convention for negative tops
  CHECK(binom(-1, 3) == Rat(-1));
  CHECK(binom(-3, 2) == Rat(6));
  CHECK(binom(-2, 3) == Rat(-4));
  // Pascal recurrence across the sign boundary
  for (long top = -6; top <= 6; ++top)
    for (long k = 1; k <= 6; ++k)
      CHECK(binom(top, k) == binom(top - 1, k) + binom(top - 1, k - 1));
}

TEST_CASE("lcm_z") {
  CHECK(lcm_z(4, 6) == 12);
  CHECK(lcm_z(1, 7) == 7);
  CHECK(lcm_z(3, 3) == 3);
}

TEST_CASE("Poly canonical form, degree, evaluation") {
  Poly z;
  CHECK(z.is_zero());
  CHECK(!z.degree().has_value());
  CHECK(Poly({Rat(1), Rat(0), Rat(0)}).degree() == 0);
  Poly p{Rat(2), Rat(-3), Rat(1)};  // s^2 - 3s + 2
  CHECK(p.degree() == 2);
  CHECK(p.eval_int(0) == Rat(2));
  CHECK(p.eval_int(1) == Rat(0));
  CHECK(p.eval_int(2) == Rat(0));
  CHECK(p.eval(Rat(1, 2)) == Rat(3, 4));
  CHECK(p.leading() == Rat(1));
  CHECK(p.coeff(5) == Rat(0));
  CHECK(p.str() == "s^2 - 3*s + 2");
  CHECK(Poly({Rat(-1, 2), Rat(1)}).str("u") == "u - 1/2");
}

TEST_CASE("Poly arithmetic") {
  Poly p{Rat(1), Rat(1)};  // s + 1
  Poly q{Rat(-1), Rat(1)};  // s - 1
  CHECK(p * q == Poly{Rat(-1), Rat(0), Rat(1)});
  CHECK(p + q == Poly{Rat(0), Rat(2)});
  CHECK(p - p == Poly());
  CHECK((p * Rat(0)).is_zero());
  CHECK(p.derivative() == Poly::constant(Rat(1)));
  Poly cube = p * p * p;
  CHECK(cube.derivative() == p * p * Rat(3));
}

TEST_CASE("shifted_arg composes correctly") {
  Poly p{Rat(0), Rat(0), Rat(1)};  // s^2
  CHECK(p.shifted_arg(Rat(1)) == Poly{Rat(1), Rat(2), Rat(1)});
  Poly q{Rat(5), Rat(-2), Rat(3), Rat(1)};
  Poly shifted = q.shifted_arg(Rat(-3, 2));
  for (long x = -4; x <= 4; ++x)
    CHECK(shifted.eval_int(x) == q.eval(Rat(x) + Rat(-3, 2)));
  CHECK(q.shifted_arg(Rat(2)).shifted_arg(Rat(-2)) == q);
}

TEST_CASE("divide_linear is synthetic division") {
  Poly p{Rat(-1), Rat(0), Rat(1)};  // s^2 - 1
  auto [quot, rem] = p.divide_linear(Rat(1));
  CHECK(quot == Poly{Rat(1), Rat(1)});
  CHECK(rem == Rat(0));
  auto [q2, r2] = p.divide_linear(Rat(2));
  CHECK(r2 == Rat(3));
  CHECK(q2 * Poly{Rat(-2), Rat(1)} + Poly::constant(r2) == p);
  auto [qz, rz] = Poly().divide_linear(Rat(5));
  CHECK(qz.is_zero());
  CHECK(rz == Rat(0));
}

TEST_CASE("integer root scan") {
  Poly p = Poly{Rat(1), Rat(1)} * Poly{Rat(2), Rat(1)} * Poly{Rat(-3), Rat(1)};
  CHECK(p.integer_roots() == std::vector<long>{-2, -1, 3});
  CHECK(Poly{Rat(1), Rat(0), Rat(1)}.integer_roots().empty());
  // roots at the edge of the Cauchy bound are still found
  Poly big = Poly{Rat(100), Rat(1)} * Poly{Rat(-100), Rat(1)};
  CHECK(big.integer_roots() == std::vector<long>{-100, 100});
  // non-integer rational roots are not reported
  CHECK((Poly{Rat(-1), Rat(2)}).integer_roots().empty());
}

TEST_CASE("Partition validation and identity") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  CHECK(Partition({2, 0}).count() == 2);
  CHECK_FALSE(Partition({2, 0}) == Partition({2}));
  CHECK(Partition({3, 1}).largest() == 3);
  CHECK(Partition().str() == "()");
  CHECK(Partition({2, 1}).str() == "(2,1)");
}

TEST_CASE("partitions_bounded order and content") {
  auto ps = partitions_bounded(2, 2);
  REQUIRE(ps.size() == 10);
  CHECK(ps[0] == Partition());
  CHECK(ps[1] == Partition({0}));
  CHECK(ps[2] == Partition({1}));
  CHECK(ps[3] == Partition({2}));
  CHECK(ps[4] == Partition({0, 0}));
  CHECK(ps[5] == Partition({1, 0}));
  CHECK(ps[6] == Partition({1, 1}));
  CHECK(ps[7] == Partition({2, 0}));
  CHECK(ps[8] == Partition({2, 1}));
  CHECK(ps[9] == Partition({2, 2}));
  CHECK(partitions_bounded(0, 5).size() == 1);
  CHECK(partitions_bounded(-1, 5).empty());
  // max_part < 0 leaves only the empty partition
  CHECK(partitions_bounded(3, -1).size() == 1);
  // count check: (max_part+1) multichoose r summed over r <= max_count
  CHECK(partitions_bounded(3, 1).size() == 1 + 2 + 3 + 4);
}

TEST_CASE("binom_poly matches binomial values") {
  Poly b = binom_poly(2, 2);  // binom(s+2, 2)
  CHECK(b == Poly{Rat(1), Rat(3, 2), Rat(1, 2)});
  for (int k = 0; k <= 5; ++k)
    for (long shift = -2; shift <= 3; ++shift)
      for (long s = -4; s <= 4; ++s)
        CHECK(binom_poly(k, shift).eval_int(s) == binom(s + shift, k));
  CHECK(binom_poly(0, 7) == Poly::constant(Rat(1)));
}

TEST_CASE("backward_difference") {
  Poly sq{Rat(0), Rat(0), Rat(1)};  // s^2
  CHECK(backward_difference(sq, 1) == Poly{Rat(-1), Rat(2)});
  CHECK(backward_difference(sq, 2) == Poly::constant(Rat(2)));
  CHECK(backward_difference(sq, 3).is_zero());
  CHECK(backward_difference(sq, 0) == sq);
  // binom(s, k) - binom(s-1, k) = binom(s-1, k-1)
  for (int k = 1; k <= 4; ++k)
    CHECK(backward_difference(binom_poly(k, 0), 1) == binom_poly(k - 1, -1));
}

TEST_CASE("paired_root_poly roots come in consecutive pairs") {
  CHECK(paired_root_poly(Partition()) == Poly::constant(Rat(1)));
  // single part 0: roots 0, 1
  CHECK(paired_root_poly(Partition({0})) == Poly{Rat(0), Rat(-1), Rat(1)});
  // parts (2, 1): roots 1, 2 and 4, 5
  Poly p = paired_root_poly(Partition({2, 1}));
  CHECK(p == Poly{Rat(40), Rat(-78), Rat(49), Rat(-12), Rat(1)});
  CHECK(p.integer_roots() == std::vector<long>{1, 2, 4, 5});
  // monic of degree 2r, and every integer value is >= 0
  for (const auto& lam : partitions_bounded(3, 3)) {
    Poly q = paired_root_poly(lam);
    CHECK(q.degree() == 2 * lam.count());
    CHECK(q.leading() == Rat(1));
    for (long s = -10; s <= 20; ++s) CHECK(q.eval_int(s) >= Rat(0));
    auto roots = q.integer_roots();
    REQUIRE(static_cast<int>(roots.size()) == 2 * lam.count());
    for (size_t i = 0; i + 1 < roots.size(); i += 2) {
      CHECK(roots[i] >= 0);
      CHECK(roots[i + 1] == roots[i] + 1);
    }
  }
}

TEST_CASE("nonneg_binomial_decomposition frozen cases") {
  // s + 1 = binom(s+1, 1)
  CHECK(nonneg_binomial_decomposition(Poly{Rat(1), Rat(1)}) ==
        std::vector<Rat>{Rat(0), Rat(1)});
  // (s+1)(s+2) = 2 binom(s+2, 2)
  CHECK(nonneg_binomial_decomposition(Poly{Rat(2), Rat(3), Rat(1)}) ==
        std::vector<Rat>{Rat(0), Rat(0), Rat(2)});
  // (s+2)(s+3) = 2 + 2 binom(s+1, 1) + 2 binom(s+2, 2)
  CHECK(nonneg_binomial_decomposition(Poly{Rat(6), Rat(5), Rat(1)}) ==
        std::vector<Rat>{Rat(2), Rat(2), Rat(2)});
  // constants decompose as themselves
  CHECK(nonneg_binomial_decomposition(Poly::constant(Rat(5))) == std::vector<Rat>{Rat(5)});
}

TEST_CASE("nonneg_binomial_decomposition rejects inadmissible polynomials") {
  // root at 0 is not strictly negative
  CHECK_THROWS_AS(nonneg_binomial_decomposition(Poly{Rat(0), Rat(1)}), std::invalid_argument);
  // positive root
  CHECK_THROWS_AS(nonneg_binomial_decomposition(Poly{Rat(-1), Rat(1)}), std::invalid_argument);
  // repeated root
  CHECK_THROWS_AS(nonneg_binomial_decomposition(Poly{Rat(1), Rat(2), Rat(1)}),
                  std::invalid_argument);
  // negative leading coefficient
  CHECK_THROWS_AS(nonneg_binomial_decomposition(Poly{Rat(-1), Rat(-1)}), std::invalid_argument);
  // non-integer roots
  CHECK_THROWS_AS(nonneg_binomial_decomposition(Poly{Rat(1), Rat(0), Rat(1)}),
                  std::invalid_argument);
  // zero polynomial has no positive leading coefficient
  CHECK_THROWS_AS(nonneg_binomial_decomposition(Poly()), std::invalid_argument);
}

TEST_CASE("nonneg_binomial_decomposition recombines exactly") {
  auto recombine = [](const std::vector<Rat>& c) {
    Poly acc;
    for (size_t k = 0; k < c.size(); ++k)
      acc = acc + binom_poly(static_cast<int>(k), static_cast<long>(k)) * c[k];
    return acc;
  };
  // every product of distinct negative linear factors round-trips
  std::vector<std::vector<long>> root_sets = {
      {-1}, {-3}, {-1, -2}, {-2, -5}, {-1, -2, -3}, {-1, -3, -7}, {-2, -4, -6, -8}};
  for (const auto& roots : root_sets) {
    Poly f = Poly::constant(Rat(3, 2));
    for (long r : roots) f = f * Poly{Rat(-r), Rat(1)};
    auto c = recombine(nonneg_binomial_decomposition(f));
    CHECK(c == f);
    for (const auto& v : nonneg_binomial_decomposition(f)) CHECK(v >= Rat(0));
  }
}

TEST_CASE("first_negative_value") {
  // 4 - s turns negative at 5
  Poly p{Rat(4), Rat(-1)};
  CHECK(first_negative_value(p, 0) == 5);
  CHECK(first_negative_value(p, 6) == 6);
  CHECK(first_negative_value(Poly{Rat(1), Rat(1)}, 0) == std::nullopt);
  CHECK(first_negative_value(Poly(), 3) == std::nullopt);
  CHECK(first_negative_value(Poly::constant(Rat(-1)), 10) == 10);
  // negative leading coefficient is always caught eventually
  Poly q{Rat(1000), Rat(0), Rat(-1)};  // 1000 - s^2
  CHECK(first_negative_value(q, 0) == 32);
  // positive on the scanned ray but dips below between integers: stays empty
  Poly r = Poly{Rat(-1, 2), Rat(1)} * Poly{Rat(-1, 3), Rat(1)} * Rat(12);
  CHECK(first_negative_value(r, 0) == std::nullopt);
}
