#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schubert/cohomology.hpp"

namespace schubert {

/// Witness for an isomorphism verdict: a support bijection (by display name)
/// together with a reduced word of w whose image is a reduced word of w'.
struct TauCertificate {
  std::vector<std::pair<std::string, std::string>> mapping;
  std::vector<std::string> witness_word;

  friend bool operator==(const TauCertificate&, const TauCertificate&) = default;
};

/// Inverse certificate: inverted mapping, witness mapped through tau.
TauCertificate invert(const TauCertificate& cert);
/// Certificate for the composed isomorphism; witness stays the first one.
TauCertificate compose(const TauCertificate& ab, const TauCertificate& bc);

enum class VerdictKind { isomorphic, not_isomorphic, unknown };

const char* verdict_kind_name(VerdictKind kind) noexcept;

struct IsoVerdict {
  VerdictKind kind = VerdictKind::unknown;
  std::optional<TauCertificate> certificate;  // set when isomorphic
  std::string witness;                        // set when not isomorphic
  std::string reason;                         // set when unknown
};

/// Replace A by its principal submatrix on S(w) and I by S(w) ∩ I; the
/// variety is unchanged. Idempotent; display names survive.
SchubertDatum restrict_to_support(const SchubertDatum& d);

struct FilterOutcome {
  bool pass = true;
  std::string witness;
};

/// Cohomological necessity filters on two already-restricted data: dimension,
/// empty-vs-nonempty parabolic, degree-2 class count, graded basis counts.
FilterOutcome necessary_filters(const SchubertDatum& d, const SchubertDatum& dp);

/// A bijection S(w) -> S(w') as (id in d, id in d') pairs.
using SupportBijection = std::vector<std::pair<int, int>>;

/// Condition (b): Cartan entries agree on every ordered pair (t1,t2), t1 != t2,
/// whose product t1·t2 lies below w.
bool cartan_condition(const SupportBijection& tau, const SchubertDatum& d,
                      const SchubertDatum& dp);

/// Condition (a): some reduced word of w whose image under tau is a reduced
/// word of w'. Returns the first such word in lexicographic order.
std::optional<Word> word_condition(const SupportBijection& tau, const SchubertDatum& d,
                                   const SchubertDatum& dp, std::size_t cap = 10000);

/// The three-valued checker: restrict, filter, then search support bijections
/// for one passing both conditions. An exhausted search is conclusive only
/// when both parabolic intersections have at most one element; otherwise the
/// verdict is unknown.
IsoVerdict check_iso(const SchubertDatum& d, const SchubertDatum& dp, std::size_t cap = 10000);

/// Re-verify every invariant of a certificate against the two data.
bool verify_certificate(const TauCertificate& cert, const SchubertDatum& d,
                        const SchubertDatum& dp);

}  // namespace schubert
