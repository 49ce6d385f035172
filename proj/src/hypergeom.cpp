#include "hyperorder/hypergeom.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "hyperorder/errors.hpp"

namespace hyperorder {

QuadExt rising_factorial(const QuadExt& a, std::size_t k) {
  QuadExt result(1);
  QuadExt factor = a;
  for (std::size_t i = 0; i < k; ++i) {
    result *= factor;
    factor += QuadExt(1);
  }
  return result;
}

HTerm::HTerm(Upper upper, Lower lower) : upper_(std::move(upper)), lower_(std::move(lower)) {
  std::optional<BigInt> order;
  for (const auto& a : upper_) {
    if (!a.is_nonpositive_integer()) continue;
    const BigInt magnitude = -a.rational_part().numerator();
    if (!order || magnitude < *order) order = magnitude;
  }
  if (!order) throw DomainError("3F2 term does not terminate: no nonpositive-integer upper parameter");
  if (!order->fits_ulong_p()) throw CapacityError("termination order too large");
  order_ = order->get_ui();

  for (const auto& b : lower_) {
    if (!b.is_nonpositive_integer()) continue;
    const BigInt magnitude = -b.rational_part().numerator();
    if (magnitude < order_) {
      throw ArithmeticError("lower parameter collision: " + b.to_string() + " vanishes within " +
                            std::to_string(order_) + " terms");
    }
  }
}

QuadExt HTerm::term(std::size_t k) const {
  QuadExt num = rising_factorial(upper_[0], k) * rising_factorial(upper_[1], k) * rising_factorial(upper_[2], k);
  QuadExt den = rising_factorial(lower_[0], k) * rising_factorial(lower_[1], k) * QuadExt(Rational(factorial(k)));
  if (den.is_zero()) {
    throw ArithmeticError(num.is_zero() ? "summand " + std::to_string(k) + " is 0/0"
                                        : "lower parameter collision at summand " + std::to_string(k));
  }
  if (num.is_zero()) return QuadExt(0);
  return num / den;
}

namespace {

template <std::size_t Size>
bool same_multiset(const std::array<QuadExt, Size>& lhs, const std::array<QuadExt, Size>& rhs) {
  std::array<bool, Size> used{};
  for (const auto& x : lhs) {
    bool matched = false;
    for (std::size_t i = 0; i < Size; ++i) {
      if (!used[i] && rhs[i] == x) {
        used[i] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace

bool same_parameters(const HTerm& lhs, const HTerm& rhs) {
  return same_multiset(lhs.upper(), rhs.upper()) && same_multiset(lhs.lower(), rhs.lower());
}

QuadExt eval_3f2(const HTerm& term) {
  const auto& up = term.upper();
  const auto& lo = term.lower();
  QuadExt sum(0);
  QuadExt t(1);
  for (std::size_t k = 0;; ++k) {
    sum += t;
    if (k == term.order()) break;
    const QuadExt shift(static_cast<long>(k));
    QuadExt den = (lo[0] + shift) * (lo[1] + shift) * QuadExt(static_cast<long>(k + 1));
    if (den.is_zero()) throw ArithmeticError("lower parameter collision at summand " + std::to_string(k + 1));
    t *= (up[0] + shift) * (up[1] + shift) * (up[2] + shift) / den;
  }
  return sum;
}

SheppardResult sheppard_transform(std::size_t n, const QuadExt& a, const QuadExt& b, const QuadExt& d,
                                  const QuadExt& e) {
  const QuadExt dn = rising_factorial(d, n);
  const QuadExt en = rising_factorial(e, n);
  if (dn.is_zero() || en.is_zero()) throw ArithmeticError("prefactor undefined: (d)_N or (e)_N vanishes");
  const QuadExt big_n(static_cast<long>(n));
  QuadExt prefactor = rising_factorial(d - a, n) * rising_factorial(e - a, n) / (dn * en);
  HTerm transformed({-big_n, a, a + b - big_n - d - e + QuadExt(1)},
                    {a - big_n - d + QuadExt(1), a - big_n - e + QuadExt(1)});
  return {std::move(prefactor), std::move(transformed)};
}

PhiPsi phi_psi(std::size_t n, const QuadExt& a, const QuadExt& b, const QuadExt& d, const QuadExt& e) {
  const QuadExt big_n(static_cast<long>(n));
  const QuadExt c = a + b - big_n - d - e + QuadExt(1);
  QuadExt phi(0);
  QuadExt psi(0);
  for (std::size_t k = 0; k <= n; ++k) {
    const QuadExt shift(static_cast<long>(k));
    const QuadExt common = rising_factorial(-big_n, k) * rising_factorial(a, k) /
                           QuadExt(Rational(factorial(k)));
    phi += common * rising_factorial(b, k) * rising_factorial(d + shift, n - k) *
           rising_factorial(e + shift, n - k);
    psi += common * rising_factorial(c, k) * rising_factorial(d - a, n - k) * rising_factorial(e - a, n - k);
  }
  return {std::move(phi), std::move(psi)};
}

}  // namespace hyperorder
