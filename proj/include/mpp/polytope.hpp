#pragma once

#include "mpp/rational.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace mpp {

/// coeffs · x ≤ rhs (or = rhs when used as an equality), with coefficients
/// indexed by the owning HRepresentation's coordinate list.
///
/// Normal form: integer coefficients with gcd 1. Equalities additionally get a
/// positive leading coefficient; inequalities cannot be sign-normalized.
struct LinearInequality {
    std::vector<Rational> coeffs;
    Rational rhs;

    Rational evaluate(const Point& x) const;
    bool satisfied_by(const Point& x) const { return evaluate(x) <= rhs; }
    bool tight_at(const Point& x) const { return evaluate(x) == rhs; }
    bool is_zero() const;

    /// Scales to the normal form; throws InvalidArgument for a zero row.
    void normalize(bool as_equality = false);

    friend bool operator==(const LinearInequality&, const LinearInequality&) = default;
    friend std::strong_ordering operator<=>(const LinearInequality& a, const LinearInequality& b);
};

LinearInequality make_inequality(std::vector<Rational> coeffs, Rational rhs);

class HRepresentation {
public:
    HRepresentation() = default;
    explicit HRepresentation(std::vector<std::string> coordinates);

    const std::vector<std::string>& coordinates() const { return coordinates_; }
    std::size_t ambient_dimension() const { return coordinates_.size(); }
    const std::vector<LinearInequality>& inequalities() const { return inequalities_; }
    const std::vector<LinearInequality>& equalities() const { return equalities_; }

    /// Normalizes and appends; returns false when the normalized row is already present.
    bool add_inequality(std::vector<Rational> coeffs, Rational rhs);
    bool add_inequality(LinearInequality row);
    bool add_equality(std::vector<Rational> coeffs, Rational rhs);

    /// Sorts rows lexicographically (coefficients, then right side).
    void sort();
    bool contains(const Point& x) const;

    friend bool operator==(const HRepresentation&, const HRepresentation&) = default;

private:
    std::vector<std::string> coordinates_;
    std::vector<LinearInequality> inequalities_;
    std::vector<LinearInequality> equalities_;
};

/// Deduplicated vertices, sorted lexicographically.
struct VRepresentation {
    std::vector<Point> vertices;

    std::size_t size() const { return vertices.size(); }
    friend bool operator==(const VRepresentation&, const VRepresentation&) = default;
};

struct EnumerationOptions {
    /// Largest admissible number of candidate constraint subsets.
    std::size_t candidate_cap = 10'000'000;
};

EnumerationOptions default_enumeration_options();

/// Exact vertex enumeration over linearly independent constraint subsets. The
/// default entry point splits the subset search across OpenMP threads.
VRepresentation enumerate_vertices(const HRepresentation& h);
VRepresentation enumerate_vertices(const HRepresentation& h, const EnumerationOptions& options);
/// Single-threaded reference implementation kept for testing.
VRepresentation enumerate_vertices_serial(const HRepresentation& h);
VRepresentation enumerate_vertices_serial(const HRepresentation& h, const EnumerationOptions& options);

/// Throws UnboundedPolytope unless the recession cone of h is {0}.
void require_bounded(const HRepresentation& h, const EnumerationOptions& options);

/// Affine dimension of the points' hull: −1 for none, 0 for a single point.
int affine_dimension(const std::vector<Point>& points);
int affine_dimension(const VRepresentation& v);

/// Keeps the inequalities whose tight vertex set has affine dimension dim − 1.
HRepresentation irredundant(const HRepresentation& h);
HRepresentation irredundant(const HRepresentation& h, const VRepresentation& vertices);

/// {coeffs · v : v vertex}, sorted ascending (a multiset).
std::vector<Rational> evaluate_affine_values(const VRepresentation& v, const LinearInequality& ineq);

/// |dilation·Q ∩ Z^d| by per-coordinate interval propagation inside the
/// vertex bounding box. The default entry point splits the outermost
/// coordinate across OpenMP threads.
Integer count_lattice_points(const HRepresentation& h, long dilation);
Integer count_lattice_points(const HRepresentation& h, const VRepresentation& vertices, long dilation);
Integer count_lattice_points_serial(const HRepresentation& h, long dilation);
Integer count_lattice_points_serial(const HRepresentation& h, const VRepresentation& vertices, long dilation);

std::string format_inequality(const LinearInequality& row, const std::vector<std::string>& coordinates);

}  // namespace mpp
