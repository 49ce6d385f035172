#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "hyperorder/errors.hpp"
#include "hyperorder/hypergeom.hpp"
#include "support.hpp"

using namespace hyperorder;
using testsupport::q;

namespace {

const Discriminant kD71(Rational(-71));
const QuadExt kDplus(q(5, 6), q(1, 6), kD71);
const QuadExt kDminus(q(5, 6), q(-1, 6), kD71);

QuadExt f32(const QuadExt& a1, const QuadExt& a2, const QuadExt& a3, const QuadExt& b1, const QuadExt& b2) {
  return eval_3f2(HTerm({a1, a2, a3}, {b1, b2}));
}

// Conjugate pair over a random non-square D, or two unrelated fractions.
std::pair<QuadExt, QuadExt> random_lower(std::mt19937_64& gen, bool conjugate) {
  if (conjugate) {
    const QuadExt d(testsupport::random_fraction(gen, 11), testsupport::random_fraction(gen, 3, 10),
                    testsupport::random_disc(gen));
    return {d, d.conj()};
  }
  return {QuadExt(testsupport::random_fraction(gen, 11)), QuadExt(testsupport::random_fraction(gen, 13))};
}

}  // namespace

TEST_CASE("rising factorial") {
  CHECK(rising_factorial(QuadExt(q(7, 3)), 0) == QuadExt(1));
  CHECK(rising_factorial(QuadExt(2), 3) == QuadExt(24));
  CHECK(rising_factorial(QuadExt(-2), 5) == QuadExt(0));
  CHECK(rising_factorial(kDplus, 1) * rising_factorial(kDminus, 1) == QuadExt(q(8, 3)));
}

TEST_CASE("termination order is the smallest nonpositive integer") {
  CHECK(HTerm({QuadExt(-1), QuadExt(2), QuadExt(3)}, {QuadExt(4), QuadExt(5)}).order() == 1);
  CHECK(HTerm({QuadExt(-4), QuadExt(-2), QuadExt(3)}, {QuadExt(4), QuadExt(5)}).order() == 2);
  CHECK(HTerm({QuadExt(0), QuadExt(2), QuadExt(3)}, {QuadExt(4), QuadExt(5)}).order() == 0);
  CHECK_THROWS_AS(HTerm({QuadExt(1), QuadExt(2), QuadExt(q(1, 2))}, {QuadExt(4), QuadExt(5)}), DomainError);
}

TEST_CASE("lower parameter collisions are rejected") {
  CHECK_THROWS_AS(HTerm({QuadExt(-3), QuadExt(2), QuadExt(3)}, {QuadExt(-1), QuadExt(5)}), ArithmeticError);
  CHECK_THROWS_AS(HTerm({QuadExt(-3), QuadExt(2), QuadExt(3)}, {QuadExt(0), QuadExt(5)}), ArithmeticError);
  // -(N-1) = -2 is still reachable; -3 is not.
  CHECK_THROWS_AS(HTerm({QuadExt(-3), QuadExt(2), QuadExt(3)}, {QuadExt(-2), QuadExt(5)}), ArithmeticError);
  CHECK_NOTHROW(HTerm({QuadExt(-3), QuadExt(2), QuadExt(3)}, {QuadExt(-3), QuadExt(5)}));
}

TEST_CASE("eval_3f2 examples") {
  CHECK(f32(QuadExt(0), QuadExt(q(1, 3)), QuadExt(9), QuadExt(2), QuadExt(7)) == QuadExt(1));
  CHECK(f32(QuadExt(-1), QuadExt(2), QuadExt(3), QuadExt(4), QuadExt(5)) == QuadExt(q(7, 10)));
  const QuadExt v = f32(QuadExt(-1), QuadExt(q(-2, 3)), QuadExt(2), kDplus, kDminus);
  CHECK(v == QuadExt(q(3, 2)));
  CHECK(as_rational(v) == q(3, 2));
}

TEST_CASE("sheppard examples") {
  const auto s = sheppard_transform(1, QuadExt(2), QuadExt(3), QuadExt(4), QuadExt(5));
  CHECK(s.prefactor == QuadExt(q(3, 10)));
  CHECK(eval_3f2(s.transformed) == QuadExt(q(7, 3)));
  CHECK(s.prefactor * eval_3f2(s.transformed) == QuadExt(q(7, 10)));

  const auto zero = sheppard_transform(0, QuadExt(2), QuadExt(3), QuadExt(4), QuadExt(5));
  CHECK(zero.prefactor == QuadExt(1));
  CHECK(eval_3f2(zero.transformed) == QuadExt(1));

  // The K_n^(3) assignment at n = 6.
  const Discriminant x6(Rational(-71));
  const QuadExt d(q(-9, 6), q(1, 6), x6);
  const QuadExt e = d.conj();
  const auto t = sheppard_transform(1, QuadExt(q(-2, 3)), QuadExt(q(-1, 3)), d, e);
  const QuadExt original = f32(QuadExt(-1), QuadExt(q(-2, 3)), QuadExt(q(-1, 3)), d, e);
  CHECK(original == QuadExt(q(18, 19)));
  CHECK(t.prefactor * eval_3f2(t.transformed) == original);

  CHECK_THROWS_AS(sheppard_transform(2, QuadExt(2), QuadExt(3), QuadExt(-1), QuadExt(5)), ArithmeticError);
}

TEST_CASE("phi psi examples") {
  const auto zero = phi_psi(0, QuadExt(2), QuadExt(3), QuadExt(4), QuadExt(5));
  CHECK(zero.phi == QuadExt(1));
  CHECK(zero.psi == QuadExt(1));
  const auto one = phi_psi(1, QuadExt(2), QuadExt(3), QuadExt(4), QuadExt(5));
  CHECK(one.phi == QuadExt(14));
  CHECK(one.psi == QuadExt(14));

  // b = -a+N+d+e-1 leaves only the k = 0 term of Psi.
  const std::size_t n = 3;
  const QuadExt a(q(1, 2));
  const QuadExt d(q(2, 7));
  const QuadExt e(q(3, 5));
  const auto reduced = phi_psi(n, a, -a + QuadExt(2) + d + e, d, e);
  CHECK(reduced.psi == rising_factorial(d - a, n) * rising_factorial(e - a, n));
  CHECK(reduced.phi == reduced.psi);
}

TEST_CASE("phi equals psi on 500 random parameter sets") {
  auto gen = testsupport::rng(10);
  std::uniform_int_distribution<std::size_t> order(0, 8);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = order(gen);
    const QuadExt a(testsupport::random_rational(gen));
    const QuadExt b(testsupport::random_rational(gen));
    const auto [d, e] = i % 2 ? random_lower(gen, true)
                              : std::pair{QuadExt(testsupport::random_rational(gen)),
                                          QuadExt(testsupport::random_rational(gen))};
    const auto pp = phi_psi(n, a, b, d, e);
    CHECK(pp.phi == pp.psi);
  }
}

TEST_CASE("one-step and closed-form summation identities on 200 random sets") {
  auto gen = testsupport::rng(11);
  std::uniform_int_distribution<long> order(1, 8);
  for (int i = 0; i < 200; ++i) {
    const long n = order(gen);
    const QuadExt big_n(n);
    const QuadExt a(testsupport::random_fraction(gen, 7));
    const auto [d, e] = random_lower(gen, i % 2 == 0);
    const QuadExt c = -a + big_n + d + e - QuadExt(1);
    const QuadExt lhs = f32(QuadExt(-n), a, c, d, e);

    const QuadExt step_factor = (-a + big_n + d - QuadExt(1)) * (-a + big_n + e - QuadExt(1)) / (d * e);
    const QuadExt rest = f32(QuadExt(1 - n), a + QuadExt(1), c, d + QuadExt(1), e + QuadExt(1));
    CHECK(lhs == step_factor * rest);

    const auto un = static_cast<std::size_t>(n);
    CHECK(lhs == rising_factorial(d - a, un) * rising_factorial(e - a, un) /
                     (rising_factorial(d, un) * rising_factorial(e, un)));
  }
}

TEST_CASE("sheppard contract on random admissible sets") {
  auto gen = testsupport::rng(12);
  std::uniform_int_distribution<long> order(0, 8);
  for (int i = 0; i < 200; ++i) {
    const long n = order(gen);
    const QuadExt a(testsupport::random_fraction(gen, 7));
    const QuadExt b(testsupport::random_fraction(gen, 5));
    const auto [d, e] = random_lower(gen, i % 2 == 0);
    const auto s = sheppard_transform(static_cast<std::size_t>(n), a, b, d, e);
    CHECK(f32(QuadExt(-n), a, b, d, e) == s.prefactor * eval_3f2(s.transformed));
  }
}

TEST_CASE("parameter order does not matter") {
  auto gen = testsupport::rng(13);
  for (int i = 0; i < 50; ++i) {
    std::array<QuadExt, 3> up{QuadExt(-static_cast<long>(i % 6)), QuadExt(testsupport::random_fraction(gen, 7)),
                              QuadExt(testsupport::random_fraction(gen, 5))};
    const auto [d, e] = random_lower(gen, i % 2 == 0);
    const QuadExt base = eval_3f2(HTerm(up, {d, e}));
    std::array<int, 3> idx{0, 1, 2};
    do {
      const HTerm permuted({up[idx[0]], up[idx[1]], up[idx[2]]}, {e, d});
      CHECK(eval_3f2(permuted) == base);
      CHECK(same_parameters(permuted, HTerm(up, {d, e})));
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
}
