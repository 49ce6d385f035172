#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "hyperorder/quadext.hpp"

namespace hyperorder {

/// (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.
QuadExt rising_factorial(const QuadExt& a, std::size_t k);

/// Summand family of a terminating 3F2(1) series.
///
/// The termination order N is read off the upper parameters: the smallest
/// |a_i| over upper parameters that are nonpositive integers, i.e. the last
/// index before every summand vanishes. Construction rejects non-terminating
/// parameter lists and lower parameters in {0, -1, ..., -(N-1)}.
class HTerm {
 public:
  using Upper = std::array<QuadExt, 3>;
  using Lower = std::array<QuadExt, 2>;

  HTerm(Upper upper, Lower lower);

  const Upper& upper() const { return upper_; }
  const Lower& lower() const { return lower_; }
  std::size_t order() const { return order_; }

  /// t_k = prod (a_i)_k / (prod (b_j)_k k!). Zero for k > N; throws if a lower
  /// rising factorial vanishes while the numerator does not.
  QuadExt term(std::size_t k) const;

 private:
  Upper upper_;
  Lower lower_;
  std::size_t order_ = 0;
};

/// Parameter lists agree as multisets (series value is order-independent).
bool same_parameters(const HTerm& lhs, const HTerm& rhs);

/// Sum of t_0 .. t_N, exact.
QuadExt eval_3f2(const HTerm& term);

struct SheppardResult {
  QuadExt prefactor;
  HTerm transformed;
};

/// 3F2(-N, a, b; d, e; 1) = prefactor * 3F2(-N, a, a+b-N-d-e+1; a-N-d+1, a-N-e+1; 1)
/// with prefactor = (d-a)_N (e-a)_N / ((d)_N (e)_N).
SheppardResult sheppard_transform(std::size_t n, const QuadExt& a, const QuadExt& b, const QuadExt& d,
                                  const QuadExt& e);

struct PhiPsi {
  QuadExt phi;
  QuadExt psi;
};

/// Both sides of the Sheppard transformation with denominators cleared:
///   Phi = sum_k (-N)_k (a)_k (b)_k (d+k)_{N-k} (e+k)_{N-k} / k!
///   Psi = sum_k (-N)_k (a)_k (a+b-N-d-e+1)_k (d-a)_{N-k} (e-a)_{N-k} / k!
/// Polynomial in every parameter, so defined even where lower parameters collide.
PhiPsi phi_psi(std::size_t n, const QuadExt& a, const QuadExt& b, const QuadExt& d, const QuadExt& e);

}  // namespace hyperorder
