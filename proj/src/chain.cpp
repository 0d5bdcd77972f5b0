#include "eltrans/chain.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace eltrans {

std::string ChainComponent::label() const {
    switch (role) {
        case ChainRole::StrictTransform: return "T";
        case ChainRole::Exceptional: return "E" + std::to_string(index);
        case ChainRole::LastExceptional: return "E" + std::to_string(index) + "*";
    }
    return "?";
}

ChainFiber::ChainFiber(std::vector<ChainComponent> components) : components_(std::move(components)) {
    if (components_.empty() || components_.front().role != ChainRole::StrictTransform) {
        throw std::logic_error("chain must start with the strict transform");
    }
    auto count = [&](ChainRole role) {
        return std::count_if(components_.begin(), components_.end(),
                             [role](const ChainComponent& c) { return c.role == role; });
    };
    if (count(ChainRole::StrictTransform) != 1 || count(ChainRole::LastExceptional) != 1) {
        throw std::logic_error("chain needs exactly one strict transform and one last exceptional curve");
    }
    for (const auto& c : components_) {
        if (c.self_int > -1) throw std::logic_error("chain component " + c.label() + " has self_int >= 0");
    }
    if (last_exceptional().self_int != -1) {
        throw std::logic_error("last exceptional curve must have self-intersection -1");
    }
}

std::size_t ChainFiber::last_position() const {
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (components_[i].role == ChainRole::LastExceptional) return i;
    }
    throw std::logic_error("chain has no last exceptional curve");
}

std::vector<Integer> ChainFiber::kernel_defects() const {
    const std::size_t n = components_.size();
    std::vector<Integer> defects(n);
    for (std::size_t j = 0; j < n; ++j) {
        Integer sum = components_[j].fiber_mult * components_[j].self_int;
        if (j > 0) sum += components_[j - 1].fiber_mult;
        if (j + 1 < n) sum += components_[j + 1].fiber_mult;
        defects[j] = sum;
    }
    return defects;
}

bool ChainFiber::satisfies_fiber_kernel() const {
    auto defects = kernel_defects();
    return std::all_of(defects.begin(), defects.end(), [](const Integer& x) { return x == 0; });
}

namespace {

const char* role_name(ChainRole role) {
    switch (role) {
        case ChainRole::StrictTransform: return "T";
        case ChainRole::Exceptional: return "E";
        case ChainRole::LastExceptional: return "E_last";
    }
    return "?";
}

}  // namespace

std::string ChainFiber::records() const {
    std::ostringstream out;
    for (const auto& c : components_) {
        out << "role=" << role_name(c.role) << " index=" << c.index << " fiber_mult=" << c.fiber_mult
            << " canonical_mult=" << c.canonical_mult << " self_int=" << c.self_int << "\n";
    }
    return out.str();
}

std::string ChainFiber::table() const {
    std::vector<std::array<std::string, 4>> rows;
    rows.push_back({"curve", "fiber_mult", "K_mult", "self_int"});
    for (const auto& c : components_) {
        rows.push_back({c.label(), c.fiber_mult.str(), c.canonical_mult.str(), c.self_int.str()});
    }
    std::array<std::size_t, 4> width{};
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < 4; ++k) width[k] = std::max(width[k], row[k].size());
    }
    std::ostringstream out;
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < 4; ++k) {
            if (k) out << "  ";
            if (k == 0) {
                out << std::left << std::setw(static_cast<int>(width[k])) << row[k];
            } else {
                out << std::right << std::setw(static_cast<int>(width[k])) << row[k];
            }
        }
        out << "\n";
    }
    return out.str();
}

ChainFiber simulate_blowups(const Word& w, const Integer& mu, const BlowupObserver& observer) {
    if (mu < 1) throw DomainError("fibre multiplicity mu must be >= 1, got " + mu.str());
    if (w.starts_with_r()) {
        throw DomainError("word '" + w.str() + "' starts with R: the first exceptional curve has no right neighbour");
    }

    // Blowing up a point on the reduced fibre (self-intersection 0) gives
    // T - E1, both (-1)-curves of multiplicity mu.
    std::vector<ChainComponent> chain{
        {ChainRole::StrictTransform, 0, mu, Integer(0), Integer(-1)},
        {ChainRole::LastExceptional, 1, mu, Integer(1), Integer(-1)},
    };
    std::size_t newest = 1;
    if (observer) observer(ChainFiber(chain));

    std::size_t created = 1;
    for (Letter x : w.letters()) {
        // Blow up the intersection of chain[left] and chain[left + 1].
        const std::size_t left = (x == Letter::L) ? newest - 1 : newest;
        if (left + 1 >= chain.size()) {
            throw std::logic_error("simulate_blowups: newest curve has no right neighbour");
        }
        ChainComponent& a = chain[left];
        ChainComponent& b = chain[left + 1];
        ChainComponent fresh{ChainRole::LastExceptional, ++created,
                             a.fiber_mult + b.fiber_mult,
                             a.canonical_mult + b.canonical_mult + 1, Integer(-1)};
        a.self_int -= 1;
        b.self_int -= 1;
        chain[newest].role = ChainRole::Exceptional;
        chain.insert(chain.begin() + static_cast<std::ptrdiff_t>(left + 1), std::move(fresh));
        newest = left + 1;
        if (observer) observer(ChainFiber(chain));
    }
    return ChainFiber(std::move(chain));
}

std::string OracleReport::str() const {
    auto join = [](const std::vector<Integer>& xs) {
        std::string out = "(";
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) out += ",";
            out += xs[i].str();
        }
        return out + ")";
    };
    auto mark = [](bool ok) { return ok ? "ok  " : "FAIL"; };
    std::ostringstream out;
    out << (passed() ? "PASS" : "FAIL") << " word=" << word.str() << " mu=" << mu
        << " fraction=" << fraction.str() << " cf=" << cf.str() << "\n";
    out << "  " << mark(fiber_ok()) << " fiber multiplicity of E: simulated " << fiber_mult
        << ", r*mu = " << expected_fiber_mult << "\n";
    out << "  " << mark(canonical_ok()) << " canonical multiplicity of E: simulated " << canonical_mult
        << ", r+s-1 = " << expected_canonical_mult << "\n";
    out << "  " << mark(self_int_ok()) << " self-intersections before E: simulated " << join(self_ints)
        << ", -cf = " << join(expected_self_ints) << "\n";
    return out.str();
}

OracleReport oracle_check(const Word& w, const Integer& mu) {
    ChainFiber fiber = simulate_blowups(w, mu);
    OracleReport rep{w, mu, word_to_fraction(w), word_to_cf(w), {}, {}, {}, {}, {}, {}};

    const auto& e = fiber.last_exceptional();
    rep.fiber_mult = e.fiber_mult;
    rep.expected_fiber_mult = rep.fraction.r() * mu;
    rep.canonical_mult = e.canonical_mult;
    rep.expected_canonical_mult = rep.fraction.r() + rep.fraction.s() - 1;
    const std::size_t last = fiber.last_position();
    for (std::size_t i = 0; i < last; ++i) rep.self_ints.push_back(fiber.components()[i].self_int);
    for (const auto& s : rep.cf.entries()) rep.expected_self_ints.push_back(-s);
    return rep;
}

PullbackCoefficients mumford_pullback_chain(const ContinuedFraction& cf, const Integer& l,
                                            const Integer& mu) {
    if (l < 1) throw DomainError("residue degree l must be >= 1, got " + l.str());
    if (mu < 1) throw DomainError("fibre multiplicity mu must be >= 1, got " + mu.str());

    const auto& s = cf.entries();
    const std::size_t m = s.size();
    const Rational gamma0(Integer(1), l * mu);

    // Tridiagonal system: diagonal -s_i, off-diagonals 1, right-hand side
    // -gamma0 in the first row only. Thomas algorithm over the rationals.
    std::vector<Rational> upper(m), rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
        Rational pivot = Rational(-s[i]) - (i ? upper[i - 1] : Rational(0));
        if (pivot == 0) {
            throw std::logic_error("mumford_pullback_chain: zero pivot for cf " + cf.str());
        }
        Rational b = (i == 0) ? Rational(-gamma0) : Rational(0);
        upper[i] = Rational(1) / pivot;
        rhs[i] = (b - (i ? rhs[i - 1] : Rational(0))) / pivot;
    }
    PullbackCoefficients out;
    out.gamma.resize(m);
    out.gamma[m - 1] = rhs[m - 1];
    for (std::size_t i = m - 1; i-- > 0;) out.gamma[i] = rhs[i] - upper[i] * out.gamma[i + 1];
    return out;
}

}  // namespace eltrans
