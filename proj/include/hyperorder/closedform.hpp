#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "hyperorder/rational.hpp"

namespace hyperorder {

/// C(x, r) = x (x-1) ... (x-r+1) / r!, for any integer x including negatives.
Rational poly_binomial(std::int64_t x, unsigned r);

/// Coefficient sequences of the two product formulas:
///   c_j = j^2 + (3-3n) j + 3n^2 - 6n + 2
///   b_j = 9j^2 - 3(n-1) j + n^2 - 2n
///   d_j = (m C(n,2) - (m-j) C(n-2j,2)) / j        (closed polynomial form)
///   p_j = 2j^2 - (2m+1) j + mn
///   q_j = mn - C(m+1,2) + C(j,2)
enum class CoeffKind { c, b, d, p, q };

/// Closed-form value; m is ignored for c and b.
Rational coeff(CoeffKind kind, std::int64_t m, std::int64_t n, std::int64_t j);

/// The quotient definitions (6/j)(C(n,3) - C(n-j,3)) and
/// (m C(n,2) - (m-j) C(n-2j,2)) / j; j must be nonzero.
Rational coeff_c_quotient(std::int64_t n, std::int64_t j);
Rational coeff_d_quotient(std::int64_t m, std::int64_t n, std::int64_t j);

/// Product of the nonzero entries; 1 for an empty or all-zero input.
Rational prod_skip_zeros(std::span<const Rational> values);

/// Probability that a uniform vertex ordering of L(K_n^(3)) is successive, as
/// the alternating-product sum. Throws DomainError for n < 3.
Rational lhs_theorem1(std::int64_t n);
/// floor(n/3) prod_{n<j<=floor(3n/2)-2, 3∤j} c_j / prod_{3<=j<=n-3, 3|j} c_j.
Rational rhs_theorem1(std::int64_t n);
/// Same probability for L(K_{m,n}^(1,2)). Throws DomainError unless m >= 1, n >= 2.
Rational lhs_theorem2(std::int64_t m, std::int64_t n);
/// m prod_{j<m} q_j / prod_{j<m} d_j, ignoring zero factors.
Rational rhs_theorem2(std::int64_t m, std::int64_t n);

/// One named exact check inside a proof step.
struct IdentityCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Coefficient relations behind the first formula: c_k = c_{3n-3-k},
/// b_j = c_{n-1+3j} = c_{2n-2-3j}, the c_{3j+3} quadratic, and the
/// quotient/polynomial forms of c.
std::vector<IdentityCheck> theorem1_coefficient_checks(std::int64_t n);

/// Product-splitting step for every residue of n mod 3: the numerator factors
/// of the transformed prefactor are c-values whose indices (after the
/// reflection k -> 3n-3-k) tile the non-multiples of 3 in the right-hand range.
std::vector<IdentityCheck> theorem1_product_checks(std::int64_t n);

/// Relations behind the second formula for even n: q_j = q_{1-j},
/// p_j = q_{m-2j+1} = q_{2j-m}, d_j = p_{m+n/2-j} = q_{m+n-2j}, the
/// cross-multiplied ratio identity, the master product identity, and the
/// case-by-case re-indexings it is proved with. Products skip zero factors;
/// index lists are also compared as multisets modulo j ~ 1-j.
std::vector<IdentityCheck> theorem2_identity_checks(std::int64_t m, std::int64_t n);

/// Whether the parameters (9+2m-2n±Y)/4 avoid the nonpositive integers and
/// (5-2m-2n±Y)/4, (-1-2m±Y)/4 avoid the integers in [2-n/2, 0], with
/// Y = sqrt((2m+1)^2-8mn); decided exactly.
bool lemma_checks(std::int64_t m, std::int64_t n);

struct Stage {
  std::string name;
  bool ok = false;
  std::string value;
  std::string detail;
};

struct VerifyReport {
  int theorem = 1;
  std::int64_t m = 0;
  std::int64_t n = 0;
  Rational lhs;
  Rational rhs;
  std::vector<Stage> stages;

  bool passed() const;
  /// "n=6" or "m=3,n=4".
  std::string instance() const;
  const Stage* first_failure() const;
};

/// Replays the whole proof chain for L(K_n^(3)): factorization, 3F2 form,
/// Sheppard step, Gosper evaluation, product splitting, final equality.
/// Never throws; failures are recorded per stage.
VerifyReport pipeline_theorem1(std::int64_t n);
/// Same for L(K_{m,n}^(1,2)); the case-level product identity is checked for even n.
VerifyReport pipeline_theorem2(std::int64_t m, std::int64_t n);

nlohmann::json to_json(const VerifyReport& report);
/// "instance,lhs,rhs,pass"
std::string csv_header();
std::string to_csv_row(const VerifyReport& report);

}  // namespace hyperorder
