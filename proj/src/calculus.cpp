#include "eltrans/calculus.hpp"

#include <limits>
#include <stdexcept>

namespace eltrans {

namespace {

nlohmann::ordered_json integer_to_json(const Integer& n) {
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
        return n.convert_to<std::int64_t>();
    }
    return n.str();
}

Integer integer_from_json(const nlohmann::json& v, const std::string& what) {
    if (v.is_number_integer()) return Integer(v.get<std::int64_t>());
    if (v.is_string()) return parse_integer(v.get<std::string>());
    throw DomainError(what + " must be an integer");
}

std::int64_t small_int_from_json(const nlohmann::json& v, const std::string& what) {
    if (!v.is_number_integer()) throw DomainError(what + " must be an integer");
    return v.get<std::int64_t>();
}

const nlohmann::json& field(const nlohmann::json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) {
        throw DomainError(std::string("state document is missing field '") + key + "'");
    }
    return doc.at(key);
}

}  // namespace

// ---------------------------------------------------------------- sites

void TransformSite::validate() const {
    if (b.empty()) throw DomainError("site base point id must be non-empty");
    if (d < 1) throw DomainError("site degree d must be >= 1, got " + std::to_string(d));
    if (l < 1) throw DomainError("site residue degree l must be >= 1, got " + std::to_string(l));
    if (w.starts_with_r()) {
        throw DomainError("site word '" + w.str() + "' starts with R");
    }
}

TransformSite TransformSite::parse(std::string_view spec) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        auto comma = spec.find(',', start);
        parts.emplace_back(spec.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (parts.size() != 4) {
        throw DomainError("site '" + std::string(spec) + "' must have the form 'b,d,l,word'");
    }
    auto small = [&](const std::string& text, const char* name) {
        Integer n = parse_integer(text);
        if (n < 1 || n > std::numeric_limits<std::int64_t>::max()) {
            throw DomainError(std::string("site ") + name + " must be a positive integer, got '" + text + "'");
        }
        return n.convert_to<std::int64_t>();
    };
    TransformSite site{parts[0], small(parts[1], "d"), small(parts[2], "l"), Word::parse(parts[3])};
    site.validate();
    return site;
}

std::string TransformSite::str() const {
    return b + "," + std::to_string(d) + "," + std::to_string(l) + "," + w.str();
}

nlohmann::ordered_json to_json(const TransformSite& site) {
    nlohmann::ordered_json j;
    j["b"] = site.b;
    j["d"] = site.d;
    j["l"] = site.l;
    j["w"] = site.w.str();
    return j;
}

TransformSite site_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw DomainError("site must be an object {b, d, l, w}");
    for (const char* key : {"b", "d", "l", "w"}) {
        if (!doc.contains(key)) throw DomainError(std::string("site is missing field '") + key + "'");
    }
    if (!doc.at("b").is_string() || !doc.at("w").is_string()) {
        throw DomainError("site fields b and w must be strings");
    }
    TransformSite site{doc.at("b").get<std::string>(), small_int_from_json(doc.at("d"), "site d"),
                       small_int_from_json(doc.at("l"), "site l"),
                       Word::parse(doc.at("w").get<std::string>())};
    site.validate();
    return site;
}

// ---------------------------------------------------------------- states

Integer SurfaceState::mu(const std::string& b) const {
    auto it = mu_table_.find(b);
    return it == mu_table_.end() ? Integer(1) : it->second;
}

std::int64_t SurfaceState::degree_of(const std::string& b) const {
    for (const auto& site : history_) {
        if (site.b == b) return site.d;
    }
    return 0;
}

nlohmann::ordered_json SurfaceState::to_json() const {
    nlohmann::ordered_json j;
    j["g"] = g_;
    j["lambda"] = to_string(lambda_);
    j["s2"] = to_string(s2_);
    j["mu_table"] = nlohmann::ordered_json::object();
    for (const auto& [b, m] : mu_table_) j["mu_table"][b] = integer_to_json(m);
    j["history"] = nlohmann::ordered_json::array();
    for (const auto& site : history_) j["history"].push_back(eltrans::to_json(site));
    return j;
}

SurfaceState SurfaceState::from_json(const nlohmann::json& doc) {
    SurfaceState st;
    st.g_ = small_int_from_json(field(doc, "g"), "g");
    if (st.g_ < 1) throw DomainError("g must be >= 1");
    const auto& lam = field(doc, "lambda");
    const auto& s2 = field(doc, "s2");
    if (!lam.is_string() || !s2.is_string()) throw DomainError("lambda and s2 must be \"p/q\" strings");
    st.lambda_ = parse_rational(lam.get<std::string>());
    st.s2_ = parse_rational(s2.get<std::string>());
    if (st.s2_ > st.lambda_) throw DomainError("state violates S^2 <= lambda");

    const auto& table = field(doc, "mu_table");
    if (!table.is_object()) throw DomainError("mu_table must be an object");
    for (const auto& [b, m] : table.items()) {
        Integer mu = integer_from_json(m, "mu_table entry '" + b + "'");
        if (mu < 1) throw DomainError("mu_table entry '" + b + "' must be >= 1");
        st.mu_table_[b] = mu;
    }
    const auto& history = field(doc, "history");
    if (!history.is_array()) throw DomainError("history must be an array");
    for (const auto& site : history) st.history_.push_back(site_from_json(site));
    return st;
}

// ---------------------------------------------------------------- operations

SurfaceState init_from_p1_bundle(std::int64_t g, std::int64_t e) {
    if (g < 1) throw DomainError("base curve genus g must be >= 1, got " + std::to_string(g));
    if (e < 1) throw DomainError("section must be negative: e must be >= 1, got " + std::to_string(e));
    SurfaceState st;
    st.g_ = g;
    st.s2_ = Rational(-e);
    // Adjunction on the P^1-bundle: K == -2S + (S^2 + 2g - 2) F.
    st.lambda_ = st.s2_ + Rational(2 * g - 2);
    return st;
}

SurfaceState apply_elementary_transformation(const SurfaceState& state, const TransformSite& site) {
    site.validate();
    const PositiveFraction q = word_to_fraction(site.w);
    const Integer& r = q.r();
    const Integer& s = q.s();
    const Integer mu = state.mu(site.b);
    const Integer d(site.d), l(site.l);

    SurfaceState next = state;
    next.mu_table_[site.b] = r * mu;
    next.lambda_ += Rational(d * (r + s - 1), mu * r);
    next.s2_ += Rational(d * s, r * l * mu * mu);
    next.history_.push_back(site);
    if (next.s2_ > next.lambda_) {
        throw std::logic_error("apply_elementary_transformation broke S^2 <= lambda");
    }
    return next;
}

bool del_pezzo_test(const SurfaceState& state) { return state.lambda() < 0; }

DelPezzoData contract(const SurfaceState& state) {
    if (!del_pezzo_test(state)) {
        throw DomainError("contract requires lambda < 0, got lambda = " + to_string(state.lambda()));
    }
    if (state.s2() >= 0) {
        throw DomainError("contract requires S^2 < 0, got S^2 = " + to_string(state.s2()));
    }
    const Rational& lam = state.lambda();
    const Rational& s2 = state.s2();
    const Rational via_pullback = 4 * s2 - 4 * lam - (lam - 2 * s2) * (lam - 2 * s2) / s2;
    const Rational closed_form = lam * lam / -s2;
    if (via_pullback != closed_form) {
        throw std::logic_error("contract: K^2 routes disagree (" + to_string(via_pullback) + " vs " +
                               to_string(closed_form) + ")");
    }
    return {lam, closed_form};
}

Integer relative_canonical_coefficient(const Integer& n, const Integer& r_squared) {
    if (n < 1) throw DomainError("n must be >= 1, got " + n.str());
    if (r_squared % n != 0) {
        throw DomainError("divisibility violated: n = " + n.str() + " does not divide R^2 = " +
                          r_squared.str());
    }
    return r_squared / n;
}

bool p1_bundle_contraction_test(std::int64_t g, std::int64_t e) {
    if (g < 1) throw DomainError("base curve genus g must be >= 1, got " + std::to_string(g));
    return e > 0 && 2 * g - 2 - e < 0;
}

}  // namespace eltrans
