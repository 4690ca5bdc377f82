#pragma once

#include "mpp/polynomial.hpp"
#include "mpp/polytope.hpp"
#include "mpp/poset.hpp"

#include <cstddef>
#include <vector>

namespace mpp {

/// Counts |nQ ∩ Z^d| for n = 0..dim, interpolates and re-checks at n = dim+1.
/// Throws NonIntegralVertices for a non-lattice polytope and
/// VerificationFailed when the extra point disagrees.
UnivariatePolynomial ehrhart_by_counting(const HRepresentation& h);
UnivariatePolynomial ehrhart_by_counting_serial(const HRepresentation& h);

/// P with a ≺ b added for marked λ(a) < λ(b), and equal-λ marked elements
/// chained by id so that marked elements appear in one fixed order.
Poset ehrhart_extension_poset(const MarkedPoset& mp);

/// Greedy smallest-id linear extension of ehrhart_extension_poset(mp).
Labeling canonical_labeling(const MarkedPoset& mp);

/// Segment between consecutive marked elements of an extension word.
struct SegmentTerm {
    Element bottom;
    Element top;
    std::size_t unmarked;  // k
    int descents;          // d
};

struct ExtensionTerm {
    ExtensionWord word;
    std::vector<SegmentTerm> segments;
    UnivariatePolynomial product;
};

/// Σ over extensions of Π over segments of C(n(λ(b) − λ(a)) − d + k, k).
/// `labeling` must be a natural labeling of ehrhart_extension_poset(mp).
/// Throws PreconditionViolated unless mp is strict, regular and integral, and
/// ExtensionExplosion past the extension cap (default 10^6).
UnivariatePolynomial ehrhart_formula_marked_order(const MarkedPoset& mp);
UnivariatePolynomial ehrhart_formula_marked_order(const MarkedPoset& mp, const Labeling& labeling);
UnivariatePolynomial ehrhart_formula_marked_order_serial(const MarkedPoset& mp, const Labeling& labeling);

/// Per-extension breakdown of the formula, for auditing.
std::vector<ExtensionTerm> ehrhart_formula_terms(const MarkedPoset& mp, const Labeling& labeling);

/// The equidistant family with marks λ(a_i) = (i − 1)c on a_1 … a_m.
MarkedPoset pm_family(int m, int c);
/// (m − 2)nc(nc + 1)^{m−1} + (nc + 1)^{m−1}
UnivariatePolynomial pm_closed_form(int m, int c);

}  // namespace mpp
