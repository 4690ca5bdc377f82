#pragma once

#include "mpp/polytope.hpp"
#include "mpp/poset.hpp"

#include <cstddef>
#include <vector>

namespace mpp {

/// Polytopes live in the unmarked coordinates, ordered as MarkedPoset::coordinate_ids().
HRepresentation build_order_hrep(const MarkedPoset& mp);
HRepresentation build_chain_hrep(const MarkedPoset& mp);
HRepresentation build_chain_order_hrep(const MarkedPoset& mp, const ChainOrderPartition& part);

/// A partition of all poset elements. Blocks are sorted and ordered by least
/// element; free_blocks indexes the blocks without a marked element.
struct FacePartition {
    std::vector<std::vector<Element>> blocks;
    std::vector<std::size_t> free_blocks;

    friend bool operator==(const FacePartition&, const FacePartition&) = default;
};

/// Canonicalizes `blocks`; throws InvalidArgument unless they partition P.
FacePartition make_face_partition(const MarkedPoset& mp, std::vector<std::vector<Element>> blocks);

/// Full value vector indexed by element: marks on P*, coordinates elsewhere.
std::vector<Rational> element_values(const MarkedPoset& mp, const Point& x);

/// Blocks generated by comparable pairs with equal value. Throws
/// PointOutsidePolytope unless x lies in the marked order polytope.
FacePartition face_partition_of_point(const MarkedPoset& mp, const Point& x);

/// Connected, P-compatible, (P, λ)-compatible and with strict quotient marking.
bool is_face_partition(const MarkedPoset& mp, const FacePartition& fp);

/// Vertices as the order-preserving mark-valued assignments without free
/// blocks. Throws WorkCapExceeded past the node cap (default 10^7).
VRepresentation order_vertices_combinatorial(const MarkedPoset& mp);

/// One normalized inequality per cover touching an unmarked element, sorted.
std::vector<LinearInequality> order_facets_combinatorial(const MarkedPoset& mp);

/// True when every cover touching an unmarked element defines a facet of the
/// marked order polytope, decided through its face partition. Regularity alone
/// does not imply this.
bool covers_define_facets(const MarkedPoset& mp);

/// Marked subposet induced on `keep`, which must retain every marked element.
MarkedPoset restrict_marked_poset(const MarkedPoset& mp, const std::vector<Element>& keep);

/// Disjoint union with ids prefixed "0:" and "1:", so the coordinates of `a`
/// precede those of `b`.
MarkedPoset disjoint_union(const MarkedPoset& a, const MarkedPoset& b);

}  // namespace mpp
