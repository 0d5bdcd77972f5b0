// Bounded enumeration of the del Pezzo hierarchy reachable from a
// contracted P^1-bundle by elementary transformations.
#pragma once

#include "eltrans/calculus.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eltrans {

enum class SitePolicy { FreshOnly, ReuseAllowed };

struct ExplorationConfig {
    std::int64_t g = 1;
    std::int64_t e = 1;
    std::size_t max_steps = 1;
    std::int64_t max_d = 1;
    std::int64_t max_l = 1;
    std::size_t max_word_length = 0;
    SitePolicy site_policy = SitePolicy::ReuseAllowed;
    /// Hard cap on emitted nodes; exceeding it is a DomainError.
    std::size_t max_nodes = 1'000'000;

    void validate() const;
};

struct HierarchyNode {
    std::size_t id = 0;
    std::optional<std::size_t> parent;
    std::optional<TransformSite> edge;
    std::size_t depth = 0;
    SurfaceState state;
    DelPezzoData del_pezzo;
    /// Earlier node with the same (lambda, S^2, multiset of mu > 1).
    std::optional<std::size_t> duplicate_of;
};

/// Rooted tree in breadth-first order; nodes[0] is the contracted bundle.
struct Hierarchy {
    ExplorationConfig config;
    std::vector<HierarchyNode> nodes;

    /// Site sequence from the root to node id.
    std::vector<TransformSite> path_to(std::size_t id) const;

    std::string to_dot() const;
    nlohmann::ordered_json to_json() const;
};

/// Candidate sites from a state, in the deterministic order: word length,
/// word (L < R), d, l, then fresh base point before reused ones (reused in
/// order of first use). A reused point keeps the degree d it was first
/// used with. Fresh ids are "b<k>" with k one past the points used so far.
std::vector<TransformSite> candidate_sites(const SurfaceState& state, const ExplorationConfig& config);

/// Breadth-first enumeration keeping lambda < 0 at every node. Throws
/// DomainError if the bundle (g, e) does not contract to a del Pezzo
/// surface or the config is invalid.
Hierarchy enumerate(const ExplorationConfig& config);

/// First admissible site sequence of the requested depth in candidate
/// order (depth-first), or nullopt if none exists within the bounds.
/// config.max_steps is ignored.
std::optional<std::vector<TransformSite>> witness_path(const ExplorationConfig& config,
                                                       std::size_t target_depth);

}  // namespace eltrans
