#pragma once

#include "mpp/polytope.hpp"
#include "mpp/poset.hpp"

#include <optional>
#include <vector>

namespace mpp {

struct TwoLevelReport {
    bool two_level = true;
    /// Lexicographically first facet taking three or more values on the vertices.
    std::optional<LinearInequality> witness;
    /// Distinct values of the witness facet, ascending.
    std::vector<Rational> witness_values;
};

/// Ground truth: every irredundant facet takes at most two values on the
/// vertex set. Polytopes of dimension ≤ 1 are 2-level.
TwoLevelReport is_two_level_direct(const HRepresentation& h);

/// Unmarked elements grouped by the cover relations that can be tight
/// simultaneously with both mark bounds free. `lower` and `upper` hold the
/// largest mark below and the smallest mark above each member.
struct EffectiveComponent {
    std::vector<Element> elements;
    std::vector<Rational> lower;
    std::vector<Rational> upper;

    bool uniform() const;
};

/// Edges join unmarked covers p ≺ q with L(q) < U(p).
std::vector<EffectiveComponent> effective_components(const MarkedPoset& mp);

/// Order criterion without the hypothesis check: every effective component
/// has a single lower and a single upper mark bound.
bool order_two_level_unchecked(const MarkedPoset& mp);

/// Throws PreconditionViolated unless mp is strict and regular.
bool order_two_level_criterion(const MarkedPoset& mp);

struct ChainCriterionReport {
    bool two_level = false;
    /// Per-coordinate factors 1/c_p that map the polytope onto a 0/1 polytope.
    std::optional<std::vector<Rational>> scaling;
};

/// Throws PreconditionViolated unless mp is strict.
ChainCriterionReport chain_two_level_criterion(const MarkedPoset& mp);

/// Throws PreconditionViolated unless mp is strict and regular, and
/// InvalidArgument for an invalid partition.
bool chain_order_two_level_criterion(const MarkedPoset& mp, const ChainOrderPartition& part);

}  // namespace mpp
