#include "eltrans/explorer.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace eltrans {

namespace {

const char* policy_name(SitePolicy p) { return p == SitePolicy::FreshOnly ? "fresh-only" : "reuse-allowed"; }

std::string fresh_point(const SurfaceState& state) {
    std::size_t k = state.mu_table().size() + 1;
    while (state.mu_table().count("b" + std::to_string(k))) ++k;
    return "b" + std::to_string(k);
}

std::vector<std::string> points_in_first_use_order(const SurfaceState& state) {
    std::vector<std::string> out;
    for (const auto& site : state.history()) {
        if (std::find(out.begin(), out.end(), site.b) == out.end()) out.push_back(site.b);
    }
    return out;
}

std::string numerical_key(const SurfaceState& state) {
    std::vector<Integer> mus;
    for (const auto& [b, m] : state.mu_table()) {
        if (m > 1) mus.push_back(m);
    }
    std::sort(mus.begin(), mus.end());
    std::string key = to_string(state.lambda()) + "|" + to_string(state.s2()) + "|";
    for (const auto& m : mus) key += m.str() + ",";
    return key;
}

HierarchyNode make_node(std::size_t id, std::optional<std::size_t> parent, std::optional<TransformSite> edge,
                        std::size_t depth, SurfaceState state) {
    DelPezzoData data = contract(state);
    return HierarchyNode{id, parent, std::move(edge), depth, std::move(state), std::move(data), std::nullopt};
}

bool extend(const SurfaceState& state, const ExplorationConfig& config, std::size_t remaining,
            std::vector<TransformSite>& path) {
    if (remaining == 0) return true;
    for (const auto& site : candidate_sites(state, config)) {
        SurfaceState next = apply_elementary_transformation(state, site);
        if (!del_pezzo_test(next)) continue;
        path.push_back(site);
        if (extend(next, config, remaining - 1, path)) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

void ExplorationConfig::validate() const {
    if (max_d < 1) throw DomainError("max_d must be >= 1");
    if (max_l < 1) throw DomainError("max_l must be >= 1");
    if (!p1_bundle_contraction_test(g, e)) {
        throw DomainError("P^1-bundle (g=" + std::to_string(g) + ", e=" + std::to_string(e) +
                          ") does not contract to a del Pezzo surface: need e > 0 and 2g - 2 - e < 0");
    }
}

std::vector<TransformSite> candidate_sites(const SurfaceState& state, const ExplorationConfig& config) {
    const std::string fresh = fresh_point(state);
    std::vector<std::string> reused;
    if (config.site_policy == SitePolicy::ReuseAllowed) reused = points_in_first_use_order(state);

    std::vector<TransformSite> out;
    for (const Word& w : words_not_starting_with_r(config.max_word_length)) {
        for (std::int64_t d = 1; d <= config.max_d; ++d) {
            for (std::int64_t l = 1; l <= config.max_l; ++l) {
                out.push_back({fresh, d, l, w});
                for (const auto& b : reused) {
                    if (state.degree_of(b) == d) out.push_back({b, d, l, w});
                }
            }
        }
    }
    return out;
}

Hierarchy enumerate(const ExplorationConfig& config) {
    config.validate();
    Hierarchy h{config, {}};
    std::map<std::string, std::size_t> seen;

    auto record = [&](HierarchyNode node) {
        if (h.nodes.size() >= config.max_nodes) {
            throw DomainError("exploration exceeded max_nodes = " + std::to_string(config.max_nodes));
        }
        auto [it, inserted] = seen.emplace(numerical_key(node.state), node.id);
        if (!inserted) node.duplicate_of = it->second;
        h.nodes.push_back(std::move(node));
    };

    record(make_node(0, std::nullopt, std::nullopt, 0, init_from_p1_bundle(config.g, config.e)));
    // BFS: nodes are appended in level order, so a cursor walks the queue.
    for (std::size_t cursor = 0; cursor < h.nodes.size(); ++cursor) {
        if (h.nodes[cursor].depth >= config.max_steps) continue;
        const SurfaceState parent_state = h.nodes[cursor].state;
        const std::size_t depth = h.nodes[cursor].depth + 1;
        for (const auto& site : candidate_sites(parent_state, config)) {
            SurfaceState next = apply_elementary_transformation(parent_state, site);
            // lambda only grows along a path, so a failed branch stays failed.
            if (!del_pezzo_test(next)) continue;
            record(make_node(h.nodes.size(), cursor, site, depth, std::move(next)));
        }
    }
    return h;
}

std::optional<std::vector<TransformSite>> witness_path(const ExplorationConfig& config,
                                                       std::size_t target_depth) {
    config.validate();
    std::vector<TransformSite> path;
    if (extend(init_from_p1_bundle(config.g, config.e), config, target_depth, path)) return path;
    return std::nullopt;
}

std::vector<TransformSite> Hierarchy::path_to(std::size_t id) const {
    std::vector<TransformSite> path;
    for (std::optional<std::size_t> cur = id; cur && nodes.at(*cur).edge; cur = nodes.at(*cur).parent) {
        path.push_back(*nodes.at(*cur).edge);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::string Hierarchy::to_dot() const {
    std::ostringstream out;
    out << "digraph hierarchy {\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    for (const auto& n : nodes) {
        out << "  n" << n.id << " [label=\"lambda = " << to_string(n.state.lambda())
            << "\\nS^2 = " << to_string(n.state.s2()) << "\\nK^2 = " << to_string(n.del_pezzo.k_squared)
            << "\"";
        if (n.duplicate_of) out << ", style=dashed";
        out << "];\n";
    }
    for (const auto& n : nodes) {
        if (!n.parent) continue;
        const auto& site = *n.edge;
        out << "  n" << *n.parent << " -> n" << n.id << " [label=\"" << site.b << " d=" << site.d
            << " l=" << site.l << " w=" << (site.w.empty() ? "-" : site.w.str()) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

nlohmann::ordered_json Hierarchy::to_json() const {
    nlohmann::ordered_json cfg;
    cfg["g"] = config.g;
    cfg["e"] = config.e;
    cfg["max_steps"] = config.max_steps;
    cfg["max_d"] = config.max_d;
    cfg["max_l"] = config.max_l;
    cfg["max_word_length"] = config.max_word_length;
    cfg["site_policy"] = policy_name(config.site_policy);

    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& n : nodes) {
        nlohmann::ordered_json j;
        j["id"] = n.id;
        j["parent"] = n.parent ? nlohmann::ordered_json(*n.parent) : nlohmann::ordered_json(nullptr);
        j["edge"] = n.edge ? eltrans::to_json(*n.edge) : nlohmann::ordered_json(nullptr);
        j["depth"] = n.depth;
        j["state"] = n.state.to_json();
        j["del_pezzo"] = {{"canonical_coefficient", to_string(n.del_pezzo.canonical_coefficient)},
                          {"k_squared", to_string(n.del_pezzo.k_squared)}};
        j["duplicate_of"] = n.duplicate_of ? nlohmann::ordered_json(*n.duplicate_of) : nlohmann::ordered_json(nullptr);
        arr.push_back(std::move(j));
    }
    nlohmann::ordered_json doc;
    doc["config"] = cfg;
    doc["nodes"] = arr;
    return doc;
}

}  // namespace eltrans
