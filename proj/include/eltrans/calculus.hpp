// Numerical calculus of elementary transformations on a fibred surface
// Y -> B with a negative section S, where K_Y == -2S + lambda F.
#pragma once

#include "eltrans/arith.hpp"
#include "eltrans/monoid.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace eltrans {

/// Parameters of one elementary transformation: base point b with
/// [k(b):k] = d, centre y over b with [k(y):k(b)] = l, and word w.
struct TransformSite {
    std::string b;
    std::int64_t d = 1;
    std::int64_t l = 1;
    Word w;

    /// Throws DomainError on d < 1, l < 1, an empty base point id, or a
    /// word starting with R.
    void validate() const;

    /// Parses "b,d,l,word"; the word may be "" or "-".
    static TransformSite parse(std::string_view spec);
    /// "b,d,l,word" (empty word written as "").
    std::string str() const;

    friend bool operator==(const TransformSite&, const TransformSite&) = default;
};

class SurfaceState {
public:
    std::int64_t g() const { return g_; }
    const Rational& lambda() const { return lambda_; }
    const Rational& s2() const { return s2_; }
    /// Base points that have been transformed at; absent points have mu = 1.
    const std::map<std::string, Integer>& mu_table() const { return mu_table_; }
    const std::vector<TransformSite>& history() const { return history_; }

    Integer mu(const std::string& b) const;

    /// Degree d recorded for b by the first site using it, or 0 if unused.
    std::int64_t degree_of(const std::string& b) const;

    nlohmann::ordered_json to_json() const;
    /// Throws DomainError on missing fields or values that break the
    /// state invariants.
    static SurfaceState from_json(const nlohmann::json& doc);

    friend SurfaceState init_from_p1_bundle(std::int64_t g, std::int64_t e);
    friend SurfaceState apply_elementary_transformation(const SurfaceState& state,
                                                        const TransformSite& site);

private:
    std::int64_t g_ = 1;
    Rational lambda_;
    Rational s2_;
    std::map<std::string, Integer> mu_table_;
    std::vector<TransformSite> history_;
};

struct DelPezzoData {
    Rational canonical_coefficient;  // K_Z = lambda * g_*(F)
    Rational k_squared;              // (-K_Z)^2
};

/// P^1-bundle over a genus-g curve with a section of self-intersection -e:
/// lambda = 2g - 2 - e, S^2 = -e. Throws DomainError unless g >= 1 and e >= 1.
SurfaceState init_from_p1_bundle(std::int64_t g, std::int64_t e);

/// With mu = mu(b) and r/s the fraction of the word:
///   mu(b)  <- r mu
///   lambda <- lambda + d (r + s - 1) / (mu r)
///   S^2    <- S^2 + d s / (r l mu^2)
/// The centre is assumed regular and disjoint from the section.
SurfaceState apply_elementary_transformation(const SurfaceState& state, const TransformSite& site);

/// The contracted surface is del Pezzo iff lambda < 0.
bool del_pezzo_test(const SurfaceState& state);

/// Contracts the section. K_Z^2 is computed twice: from the Mumford
/// pullback g^*K_Z = K_Y + aS with (K_Y + aS).S = 0, which expands to
/// 4S^2 - 4 lambda - (lambda - 2S^2)^2 / S^2, and as lambda^2 / (-S^2).
/// A mismatch is an internal error. Throws DomainError unless lambda < 0
/// and S^2 < 0.
DelPezzoData contract(const SurfaceState& state);

/// Fibre coefficient R^2/n of n K_{Y/B} == -2R + (R^2/n) F.
/// Throws DomainError if n < 1 or n does not divide R^2.
Integer relative_canonical_coefficient(const Integer& n, const Integer& r_squared);

/// A P^1-bundle with a section of self-intersection -e contracts to a del
/// Pezzo surface iff e > 0 and 2g - 2 - e < 0.
bool p1_bundle_contraction_test(std::int64_t g, std::int64_t e);

nlohmann::ordered_json to_json(const TransformSite& site);
TransformSite site_from_json(const nlohmann::json& doc);

}  // namespace eltrans
