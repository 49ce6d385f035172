#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "hyperorder/hypergeom.hpp"
#include "hyperorder/poly.hpp"

namespace hyperorder {

/// t_{k+1}/t_k = prod(a_i + k) / (prod(b_j + k) (k + 1)) as an element of Q(k).
/// Throws ArithmeticError("ratio not rational") when the expanded products
/// keep a sqrt(D) component.
RatFunc term_ratio(std::span<const QuadExt> upper, std::span<const QuadExt> lower);
RatFunc term_ratio(const HTerm& term);

/// Gosper's algorithm. Given the ratio t_{k+1}/t_k, returns R with
/// t_k = R(k+1) t_{k+1} - R(k) t_k, or nullopt if t_k has no hypergeometric
/// antidifference.
std::optional<RatFunc> gosper_find(const RatFunc& ratio);

/// Telescoping certificate R for summands t_0 .. t_last.
struct Certificate {
  RatFunc r;
  HTerm term;
  std::size_t last = 0;
};

struct CertificateCheck {
  bool ok = false;
  std::string detail;
  std::optional<std::int64_t> pole;

  explicit operator bool() const { return ok; }
};

/// Checks R(k+1) ratio(k) - R(k) = 1 in Q(k) and that R is finite at
/// k = 0 .. last+1.
CertificateCheck verify_certificate(const Certificate& cert);

/// R(k1+1) t_{k1+1} - R(k0) t_{k0}, which equals t_{k0} + ... + t_{k1}.
/// Empty ranges give 0; throws on an invalid certificate or out-of-range bounds.
QuadExt telescoped_sum(const Certificate& cert, std::int64_t k0, std::int64_t k1);

}  // namespace hyperorder
