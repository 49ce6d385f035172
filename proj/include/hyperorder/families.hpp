#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"

#include "hyperorder/gosper.hpp"
#include "hyperorder/hypergeom.hpp"
#include "hyperorder/quadext.hpp"

namespace hyperorder {

/// The three summand families whose sums close in product form:
///   t1      3F2(1-n/3, 4/3-n/3, 2; (11-n±X_n)/6; 1),  n mod 3 in {0, 1}
///   t1mod2  3F2(5/3-n/3, 1-n/3, 2; (13-n±X_n)/6; 1),  n mod 3 = 2
///   t2      3F2(1-n/2, 3/2-n/2, 2; (9+2m-2n±Y)/4; 1)
/// with X_n = sqrt(1+6n-3n^2) and Y = sqrt((2m+1)^2-8mn).
enum class Family { t1, t1mod2, t2 };

std::string_view family_name(Family f);
/// Throws UsageError for unknown names.
Family parse_family(std::string_view name);

struct FamilyInstance {
  Family family;
  std::int64_t m = 0;  // only used by t2
  std::int64_t n = 0;
};

/// The family matching n's residue for the complete 3-uniform case.
FamilyInstance theorem1_family(std::int64_t n);

/// 1 + 6n - 3n^2 (never zero for integer n).
Discriminant x_discriminant(std::int64_t n);
/// (2m+1)^2 - 8mn (odd, hence never zero).
Discriminant y_discriminant(std::int64_t m, std::int64_t n);

HTerm family_term(const FamilyInstance& inst);
/// Last summation index: the termination order for t1/t1mod2, floor(n/2) for t2.
std::size_t family_last_index(const FamilyInstance& inst);
/// Closed-form value of the full sum.
Rational family_closed_form(const FamilyInstance& inst);

/// Printed certificates, kept verbatim with n and m as placeholders.
inline constexpr std::string_view kPrintedR1 = "-(6+9k^2-3k(n-5)+n(n-4))/(3(k+1)(n-2))";
inline constexpr std::string_view kPrintedR1Mod2 = "-(12+9k^2-3k(n-7)+n(n-5))/(3(1+k)(n-1))";
inline constexpr std::string_view kPrintedR2 = "-(2(1+k)(3+2k+2m)-(5+4k)n+n^2)/(4(1+k)m)";

/// The printed certificate for the family, specialized to the instance.
RatFunc printed_certificate(const FamilyInstance& inst);
Certificate family_certificate(const FamilyInstance& inst, RatFunc r);

/// {"num": [...], "den": [...], "family": "t1", "params": {"n": 6}} with
/// coefficients as exact rational strings in ascending degree.
nlohmann::json certificate_to_json(const RatFunc& r, const FamilyInstance& inst);
/// Inverse of certificate_to_json; rebuilds the summand from family and params.
std::pair<Certificate, FamilyInstance> certificate_from_json(const nlohmann::json& j);

}  // namespace hyperorder
