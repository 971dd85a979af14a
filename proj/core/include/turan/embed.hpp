#pragma once

#include <optional>
#include <vector>

#include "turan/hypergraph.hpp"

namespace turan {

// Injective vertex map phi with phi(e) an edge of the host for every edge e
// of the pattern, or nullopt. Ties broken by ascending host vertex, so the
// returned map is deterministic.
std::optional<std::vector<int>> embeds(const Hypergraph3& pattern,
                                       const Hypergraph3& host);

// As above, but some pattern edge must map onto the given host edge.
std::optional<std::vector<int>> embeds_using_edge(const Hypergraph3& pattern,
                                                  const Hypergraph3& host,
                                                  const Triple& host_edge);

}  // namespace turan
