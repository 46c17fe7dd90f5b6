#pragma once

// Expansion records and the certified expansion entry points.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "cfevt/cf/gaussian.hpp"
#include "cfevt/numerics/source.hpp"

namespace cfevt {

enum class Family { rcf, nicf, hccf };
enum class Status { ongoing, terminated };

std::string_view to_string(Family f);
std::string_view to_string(Status s);
Family parse_family(std::string_view text);

/// Regular continued fraction x = a0 + 1/(a1 + 1/(a2 + ...)).
struct RcfExpansion {
  std::int64_t a0 = 0;
  std::vector<std::int64_t> digits;  // every digit >= 1
  Status status = Status::ongoing;

  friend bool operator==(const RcfExpansion&, const RcfExpansion&) = default;
};

/// Nearest-integer continued fraction x = a0 + eps1/(b1 + eps2/(b2 + ...)).
struct NicfExpansion {
  std::int64_t a0 = 0;
  std::vector<std::int64_t> b;  // every b >= 2
  std::vector<int> eps;         // +1 or -1, same length as b
  Status status = Status::ongoing;

  /// eps1 b1, (eps1 eps2) b2, ...: the digits of the nearest-integer
  /// expansion written with plain numerators.
  std::vector<std::int64_t> signed_digits() const;

  friend bool operator==(const NicfExpansion&, const NicfExpansion&) = default;
};

/// Hurwitz complex continued fraction z = a0 + 1/(a1 + 1/(a2 + ...)).
struct HccfExpansion {
  GaussianInt a0;
  std::vector<GaussianInt> digits;  // every digit has norm >= 2
  Status status = Status::ongoing;

  friend bool operator==(const HccfExpansion&, const HccfExpansion&) = default;
};

using Expansion = std::variant<RcfExpansion, NicfExpansion, HccfExpansion>;

Family family_of(const Expansion& e);
Status status_of(const Expansion& e);
std::size_t digit_count(const Expansion& e);
/// Digit moduli: a_i for RCF, b_i for NICF, |a_i| for HCCF.
std::vector<double> digit_moduli(const Expansion& e);

// Per-record helpers used by refine_and_agree.
std::size_t digit_count(const RcfExpansion& e);
std::size_t digit_count(const NicfExpansion& e);
std::size_t digit_count(const HccfExpansion& e);
/// Length of the shared digit prefix; 0 when the a0 differ.
std::size_t common_prefix(const RcfExpansion& a, const RcfExpansion& b);
std::size_t common_prefix(const NicfExpansion& a, const NicfExpansion& b);
std::size_t common_prefix(const HccfExpansion& a, const HccfExpansion& b);
RcfExpansion truncated(const RcfExpansion& e, std::size_t k);
NicfExpansion truncated(const NicfExpansion& e, std::size_t k);
HccfExpansion truncated(const HccfExpansion& e, std::size_t k);
inline bool is_terminated(const RcfExpansion& e) { return e.status == Status::terminated; }
inline bool is_terminated(const NicfExpansion& e) { return e.status == Status::terminated; }
inline bool is_terminated(const HccfExpansion& e) { return e.status == Status::terminated; }

// Exact expansions of a rational point: up to `max_digits` digits of exactly
// the given value, Terminated when its orbit reaches 0.
RcfExpansion expand_rcf_exact(const mpq_class& x, std::size_t max_digits);
NicfExpansion expand_nicf_exact(const mpq_class& x, std::size_t max_digits);
/// Inputs in B are expanded with a0 = 0; others are first reduced by [z]_i.
HccfExpansion expand_hccf_exact(const ComplexRational& z, std::size_t max_digits);

/// Default starting precision for n certified digits.
std::size_t default_initial_bits(std::size_t n);

/// Largest precision refine_and_agree will use.
inline constexpr std::size_t kMaxRefineBits = std::size_t{1} << 20;

/// Certified expansion: expands the source at precision p and 2p, keeps the
/// longest common digit prefix, and doubles p until n digits agree. Returns
/// exactly n digits, or fewer with status Terminated when both precisions
/// agree on a terminating expansion. Throws PrecisionExhausted once 2p would
/// exceed kMaxRefineBits.
RcfExpansion refine_and_agree_rcf(const RealSource& x, std::size_t n,
                                  std::optional<std::size_t> p0 = std::nullopt);
NicfExpansion refine_and_agree_nicf(const RealSource& x, std::size_t n,
                                    std::optional<std::size_t> p0 = std::nullopt);
HccfExpansion refine_and_agree_hccf(const ComplexSource& z, std::size_t n,
                                    std::optional<std::size_t> p0 = std::nullopt);

using AnySource = std::variant<RealSource, ComplexSource>;

/// Family dispatch over the three refine_and_agree variants. Real families
/// need a RealSource and HCCF a ComplexSource (InvalidArgument otherwise).
Expansion expand(Family family, const AnySource& input, std::size_t n,
                 std::optional<std::size_t> p0 = std::nullopt);

}  // namespace cfevt
