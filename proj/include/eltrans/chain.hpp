// Brute-force simulation of the blow-up schedule behind an elementary
// transformation, and the exact Mumford pullback on the resulting chain.
//
// The simulator is the independent oracle for the closed forms in the
// calculus: it only knows the local blow-up rule, never fractions or
// continued fractions.
#pragma once

#include "eltrans/arith.hpp"
#include "eltrans/monoid.hpp"

#include <functional>
#include <string>
#include <vector>

namespace eltrans {

enum class ChainRole { StrictTransform, Exceptional, LastExceptional };

struct ChainComponent {
    ChainRole role = ChainRole::Exceptional;
    /// Creation order of an exceptional curve (1 for the first blow-up);
    /// 0 for the strict transform of the original fibre.
    std::size_t index = 0;
    Integer fiber_mult;      // multiplicity in the fibre cycle
    Integer canonical_mult;  // multiplicity in the relative canonical divisor
    Integer self_int;        // degree over the residue field of the centre

    /// "T", "E3", ...
    std::string label() const;
};

/// Components in chain order; neighbours meet with intersection number 1.
class ChainFiber {
public:
    explicit ChainFiber(std::vector<ChainComponent> components);

    const std::vector<ChainComponent>& components() const { return components_; }
    std::size_t size() const { return components_.size(); }

    /// Position of the LastExceptional component.
    std::size_t last_position() const;
    const ChainComponent& last_exceptional() const { return components_[last_position()]; }

    /// sum_i m_i (C_i . C_j) for every component j.
    std::vector<Integer> kernel_defects() const;
    bool satisfies_fiber_kernel() const;

    /// One record per line: "role=T index=0 fiber_mult=1 canonical_mult=0 self_int=-2".
    std::string records() const;
    /// Aligned table with a header row.
    std::string table() const;

private:
    std::vector<ChainComponent> components_;
};

/// Called after the initial blow-up and after every subsequent one.
using BlowupObserver = std::function<void(const ChainFiber&)>;

/// Blows up a point on a fibre of multiplicity mu, then one point per
/// letter of w: L blows up the left neighbour of the newest exceptional
/// curve against it, R the newest curve against its right neighbour.
/// Throws DomainError if w starts with R or mu < 1.
ChainFiber simulate_blowups(const Word& w, const Integer& mu, const BlowupObserver& observer = {});

struct OracleReport {
    Word word;
    Integer mu;
    PositiveFraction fraction;
    ContinuedFraction cf;

    Integer fiber_mult;  // simulated multiplicity of the last exceptional curve
    Integer expected_fiber_mult;  // r * mu
    Integer canonical_mult;
    Integer expected_canonical_mult;  // r + s - 1
    std::vector<Integer> self_ints;  // chain from T up to, excluding, the last curve
    std::vector<Integer> expected_self_ints;  // -s_1, ..., -s_m

    bool fiber_ok() const { return fiber_mult == expected_fiber_mult; }
    bool canonical_ok() const { return canonical_mult == expected_canonical_mult; }
    bool self_int_ok() const { return self_ints == expected_self_ints; }
    bool passed() const { return fiber_ok() && canonical_ok() && self_int_ok(); }

    std::string str() const;
};

OracleReport oracle_check(const Word& w, const Integer& mu);

struct PullbackCoefficients {
    std::vector<Rational> gamma;  // gamma_1 .. gamma_m
};

/// Solves gamma_{i-1} - s_i gamma_i + gamma_{i+1} = 0 for i = 1..m with
/// gamma_0 = 1/(l mu) and gamma_{m+1} = 0, by exact forward elimination.
/// Throws DomainError if l < 1 or mu < 1.
PullbackCoefficients mumford_pullback_chain(const ContinuedFraction& cf, const Integer& l,
                                            const Integer& mu);

}  // namespace eltrans
