#include "mpp/polytope.hpp"

#include "mpp/error.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <set>

#include <omp.h>

namespace mpp {

namespace {

std::strong_ordering compare(const Rational& a, const Rational& b)
{
    int c = cmp(a, b);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::strong_ordering compare(const Point& a, const Point& b)
{
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (auto c = compare(a[i], b[i]); c != 0)
            return c;
    return a.size() <=> b.size();
}

bool point_less(const Point& a, const Point& b)
{
    return compare(a, b) < 0;
}

}  // namespace

Rational LinearInequality::evaluate(const Point& x) const
{
    Rational sum = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (sgn(coeffs[i]) != 0)
            sum += coeffs[i] * x.at(i);
    return sum;
}

bool LinearInequality::is_zero() const
{
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return sgn(c) == 0; });
}

void LinearInequality::normalize(bool as_equality)
{
    if (is_zero())
        throw Error(ErrorKind::InvalidArgument, "linear constraint has no nonzero coefficient");
    Integer lcm_den = 1;
    for (const auto& c : coeffs)
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    Integer gcd_num = 0;
    for (const auto& c : coeffs) {
        Integer scaled = c.get_num() * (lcm_den / c.get_den());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
    }
    Rational factor(lcm_den, gcd_num);
    factor.canonicalize();
    if (as_equality) {
        auto lead = std::find_if(coeffs.begin(), coeffs.end(), [](const Rational& c) { return sgn(c) != 0; });
        if (sgn(*lead) < 0)
            factor = -factor;
    }
    for (auto& c : coeffs)
        c *= factor;
    rhs *= factor;
}

std::strong_ordering operator<=>(const LinearInequality& a, const LinearInequality& b)
{
    if (auto c = compare(a.coeffs, b.coeffs); c != 0)
        return c;
    return compare(a.rhs, b.rhs);
}

LinearInequality make_inequality(std::vector<Rational> coeffs, Rational rhs)
{
    LinearInequality row{std::move(coeffs), std::move(rhs)};
    row.normalize();
    return row;
}

HRepresentation::HRepresentation(std::vector<std::string> coordinates) : coordinates_(std::move(coordinates)) {}

bool HRepresentation::add_inequality(std::vector<Rational> coeffs, Rational rhs)
{
    return add_inequality(LinearInequality{std::move(coeffs), std::move(rhs)});
}

bool HRepresentation::add_inequality(LinearInequality row)
{
    if (row.coeffs.size() != coordinates_.size())
        throw Error(ErrorKind::InvalidArgument, "inequality has the wrong number of coefficients");
    row.normalize();
    if (std::find(inequalities_.begin(), inequalities_.end(), row) != inequalities_.end())
        return false;
    inequalities_.push_back(std::move(row));
    return true;
}

bool HRepresentation::add_equality(std::vector<Rational> coeffs, Rational rhs)
{
    if (coeffs.size() != coordinates_.size())
        throw Error(ErrorKind::InvalidArgument, "equality has the wrong number of coefficients");
    LinearInequality row{std::move(coeffs), std::move(rhs)};
    row.normalize(true);
    if (std::find(equalities_.begin(), equalities_.end(), row) != equalities_.end())
        return false;
    equalities_.push_back(std::move(row));
    return true;
}

void HRepresentation::sort()
{
    std::sort(inequalities_.begin(), inequalities_.end());
    std::sort(equalities_.begin(), equalities_.end());
}

bool HRepresentation::contains(const Point& x) const
{
    return std::all_of(inequalities_.begin(), inequalities_.end(), [&](const auto& r) { return r.satisfied_by(x); }) &&
           std::all_of(equalities_.begin(), equalities_.end(), [&](const auto& r) { return r.tight_at(x); });
}

EnumerationOptions default_enumeration_options()
{
    EnumerationOptions options;
    options.candidate_cap = work_cap(options.candidate_cap);
    return options;
}

namespace {

struct Row {
    std::vector<Rational> a;
    Rational b;
};

/// Reduced row echelon basis of a growing set of constraint rows.
class Echelon {
public:
    explicit Echelon(std::size_t d) : d_(d) {}

    std::size_t rank() const { return rows_.size(); }

    enum class Added { Yes, Dependent, Inconsistent };

    Added add(const Row& row)
    {
        Row r = row;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (sgn(r.a[pivots_[i]]) == 0)
                continue;
            Rational factor = r.a[pivots_[i]];
            const Row& base = rows_[i];
            for (std::size_t j = 0; j < d_; ++j)
                if (sgn(base.a[j]) != 0)
                    r.a[j] -= factor * base.a[j];
            r.b -= factor * base.b;
        }
        std::size_t c = 0;
        while (c < d_ && sgn(r.a[c]) == 0)
            ++c;
        if (c == d_)
            return sgn(r.b) == 0 ? Added::Dependent : Added::Inconsistent;
        Rational inv = 1 / r.a[c];
        for (std::size_t j = 0; j < d_; ++j)
            if (sgn(r.a[j]) != 0)
                r.a[j] *= inv;
        r.b *= inv;
        for (auto& other : rows_) {
            if (sgn(other.a[c]) == 0)
                continue;
            Rational factor = other.a[c];
            for (std::size_t j = 0; j < d_; ++j)
                if (sgn(r.a[j]) != 0)
                    other.a[j] -= factor * r.a[j];
            other.b -= factor * r.b;
        }
        rows_.push_back(std::move(r));
        pivots_.push_back(c);
        return Added::Yes;
    }

    /// Unique solution of the basis rows; requires rank() == d.
    Point solution() const
    {
        Point x(d_, Rational(0));
        for (std::size_t i = 0; i < rows_.size(); ++i)
            x[pivots_[i]] = rows_[i].b;
        return x;
    }

    /// Spanning vector of the homogeneous kernel; requires rank() == d − 1.
    Point kernel_direction() const
    {
        std::vector<unsigned char> is_pivot(d_, 0);
        for (std::size_t p : pivots_)
            is_pivot[p] = 1;
        std::size_t free = 0;
        while (is_pivot[free])
            ++free;
        Point r(d_, Rational(0));
        r[free] = 1;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            r[pivots_[i]] = -rows_[i].a[free];
        return r;
    }

private:
    std::size_t d_;
    std::vector<Row> rows_;
    std::vector<std::size_t> pivots_;
};

/// Depth-first search over increasing index subsets of `rows` that extend
/// `basis` to rank `target` while staying linearly independent. Dependent
/// prefixes are pruned, since every superset is dependent too.
template <class Visit>
void search_bases(const std::vector<Row>& rows, std::size_t start, const Echelon& basis, std::size_t target,
                  Visit& visit)
{
    if (basis.rank() == target) {
        visit(basis);
        return;
    }
    const std::size_t need = target - basis.rank();
    for (std::size_t i = start; i + need <= rows.size(); ++i) {
        Echelon next = basis;
        if (next.add(rows[i]) == Echelon::Added::Yes)
            search_bases(rows, i + 1, next, target, visit);
    }
}

template <class Visit, class MakeVisit, class Merge>
void search_bases_parallel(const std::vector<Row>& rows, const Echelon& basis, std::size_t target,
                           MakeVisit make_visit, Merge merge)
{
    if (basis.rank() == target) {
        auto visit = make_visit();
        visit(basis);
        merge(visit);
        return;
    }
    const std::size_t need = target - basis.rank();
    const long m = static_cast<long>(rows.size());
#pragma omp parallel
    {
        Visit visit = make_visit();
#pragma omp for schedule(dynamic, 1)
        for (long i = 0; i < m; ++i) {
            if (static_cast<std::size_t>(i) + need > rows.size())
                continue;
            Echelon next = basis;
            if (next.add(rows[static_cast<std::size_t>(i)]) == Echelon::Added::Yes)
                search_bases(rows, static_cast<std::size_t>(i) + 1, next, target, visit);
        }
#pragma omp critical(mpp_search_merge)
        merge(visit);
    }
}

/// C(n, k) saturating at SIZE_MAX.
std::size_t binomial_capped(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::size_t>::max())
            return std::numeric_limits<std::size_t>::max();
    }
    return static_cast<std::size_t>(acc);
}

std::vector<Row> rows_of(const std::vector<LinearInequality>& constraints)
{
    std::vector<Row> rows;
    rows.reserve(constraints.size());
    for (const auto& c : constraints)
        rows.push_back({c.coeffs, c.rhs});
    return rows;
}

Echelon equality_basis(const HRepresentation& h)
{
    Echelon basis(h.ambient_dimension());
    for (const auto& eq : h.equalities())
        if (basis.add({eq.coeffs, eq.rhs}) == Echelon::Added::Inconsistent)
            throw Error(ErrorKind::EmptyPolytope, "equalities are inconsistent");
    return basis;
}

bool all_nonpositive(const std::vector<Row>& rows, const Point& r, int sign)
{
    for (const auto& row : rows) {
        Rational v = 0;
        for (std::size_t j = 0; j < r.size(); ++j)
            if (sgn(row.a[j]) != 0 && sgn(r[j]) != 0)
                v += row.a[j] * r[j];
        if (sgn(v) * sign > 0)
            return false;
    }
    return true;
}

void check_candidate_cap(std::size_t m, std::size_t need, const EnumerationOptions& options)
{
    std::size_t candidates = binomial_capped(m, need);
    if (candidates > options.candidate_cap)
        throw Error(ErrorKind::DimensionTooLarge, "C(" + std::to_string(m) + ", " + std::to_string(need) +
                                                      ") candidate subsets exceed the cap of " +
                                                      std::to_string(options.candidate_cap));
}

struct RayVisit {
    const std::vector<Row>* rows;
    bool found = false;
    void operator()(const Echelon& basis)
    {
        if (found)
            return;
        Point r = basis.kernel_direction();
        if (all_nonpositive(*rows, r, 1) || all_nonpositive(*rows, r, -1))
            found = true;
    }
};

struct VertexVisit {
    const std::vector<Row>* rows;
    std::vector<Point> found;
    void operator()(const Echelon& basis)
    {
        Point x = basis.solution();
        for (const auto& row : *rows) {
            Rational v = 0;
            for (std::size_t j = 0; j < x.size(); ++j)
                if (sgn(row.a[j]) != 0 && sgn(x[j]) != 0)
                    v += row.a[j] * x[j];
            if (v > row.b)
                return;
        }
        found.push_back(std::move(x));
    }
};

bool has_recession_ray(const HRepresentation& h, const EnumerationOptions& options, bool parallel)
{
    const std::size_t d = h.ambient_dimension();
    Echelon base = equality_basis(h);
    std::vector<Row> rows = rows_of(h.inequalities());

    Echelon full = base;
    for (const auto& row : rows)
        full.add({row.a, Rational(0)});
    if (full.rank() < d)
        return true;
    if (base.rank() == d)
        return false;

    check_candidate_cap(rows.size(), d - 1 - base.rank(), options);
    if (!parallel) {
        RayVisit visit{&rows};
        search_bases(rows, 0, base, d - 1, visit);
        return visit.found;
    }
    bool found = false;
    search_bases_parallel<RayVisit>(
        rows, base, d - 1, [&] { return RayVisit{&rows}; }, [&](const RayVisit& v) { found = found || v.found; });
    return found;
}

VRepresentation enumerate_impl(const HRepresentation& h, const EnumerationOptions& options, bool parallel)
{
    const std::size_t d = h.ambient_dimension();
    if (has_recession_ray(h, options, parallel))
        throw Error(ErrorKind::UnboundedPolytope, "the constraint system has a nonzero recession direction");

    Echelon base = equality_basis(h);
    std::vector<Row> rows = rows_of(h.inequalities());
    check_candidate_cap(rows.size(), d - base.rank(), options);

    std::vector<Point> vertices;
    if (!parallel) {
        VertexVisit visit{&rows, {}};
        search_bases(rows, 0, base, d, visit);
        vertices = std::move(visit.found);
    } else {
        search_bases_parallel<VertexVisit>(
            rows, base, d, [&] { return VertexVisit{&rows, {}}; },
            [&](VertexVisit& v) {
                for (auto& x : v.found)
                    vertices.push_back(std::move(x));
            });
    }
    std::sort(vertices.begin(), vertices.end(), point_less);
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    if (vertices.empty())
        throw Error(ErrorKind::EmptyPolytope, "no feasible vertex");
    return {std::move(vertices)};
}

}  // namespace

void require_bounded(const HRepresentation& h, const EnumerationOptions& options)
{
    if (has_recession_ray(h, options, false))
        throw Error(ErrorKind::UnboundedPolytope, "the constraint system has a nonzero recession direction");
}

VRepresentation enumerate_vertices(const HRepresentation& h)
{
    return enumerate_impl(h, default_enumeration_options(), true);
}

VRepresentation enumerate_vertices(const HRepresentation& h, const EnumerationOptions& options)
{
    return enumerate_impl(h, options, true);
}

VRepresentation enumerate_vertices_serial(const HRepresentation& h)
{
    return enumerate_impl(h, default_enumeration_options(), false);
}

VRepresentation enumerate_vertices_serial(const HRepresentation& h, const EnumerationOptions& options)
{
    return enumerate_impl(h, options, false);
}

int affine_dimension(const std::vector<Point>& points)
{
    if (points.empty())
        return -1;
    const std::size_t d = points.front().size();
    Echelon basis(d);
    for (std::size_t i = 1; i < points.size(); ++i) {
        Row diff{Point(d), Rational(0)};
        for (std::size_t j = 0; j < d; ++j)
            diff.a[j] = points[i][j] - points[0][j];
        basis.add(diff);
        if (basis.rank() == d)
            break;
    }
    return static_cast<int>(basis.rank());
}

int affine_dimension(const VRepresentation& v)
{
    return affine_dimension(v.vertices);
}

HRepresentation irredundant(const HRepresentation& h)
{
    return irredundant(h, enumerate_vertices(h));
}

HRepresentation irredundant(const HRepresentation& h, const VRepresentation& vertices)
{
    const int dim = affine_dimension(vertices);
    HRepresentation out(h.coordinates());
    for (const auto& eq : h.equalities())
        out.add_equality(eq.coeffs, eq.rhs);
    std::set<std::vector<std::size_t>> seen_faces;
    for (const auto& row : h.inequalities()) {
        std::vector<std::size_t> tight_ids;
        std::vector<Point> tight;
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (row.tight_at(vertices.vertices[i])) {
                tight_ids.push_back(i);
                tight.push_back(vertices.vertices[i]);
            }
        if (affine_dimension(tight) != dim - 1)
            continue;
        if (!seen_faces.insert(tight_ids).second)
            continue;
        out.add_inequality(row);
    }
    return out;
}

std::vector<Rational> evaluate_affine_values(const VRepresentation& v, const LinearInequality& ineq)
{
    std::vector<Rational> values;
    values.reserve(v.size());
    for (const auto& x : v.vertices)
        values.push_back(ineq.evaluate(x));
    std::sort(values.begin(), values.end());
    return values;
}

namespace {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0)))
        ++q;
    return q;
}

inline Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline std::int64_t to_int(const Integer& z, std::int64_t*)
{
    return z.get_si();
}

inline Integer to_int(const Integer& z, Integer*)
{
    return z;
}

/// Integer-coefficient rows of the dilated system, bucketed by the last
/// coordinate they involve, so each row is applied exactly when its support
/// becomes fully resolved.
template <class Int>
struct LatticeProblem {
    std::size_t d = 0;
    bool empty = false;
    std::vector<std::vector<Int>> a;
    std::vector<Int> b;
    std::vector<std::vector<std::size_t>> rows_at;
    std::vector<Int> lo;
    std::vector<Int> hi;

    Int count_level(std::size_t k, std::vector<Int>& x) const
    {
        Int low = lo[k];
        Int high = hi[k];
        for (std::size_t r : rows_at[k]) {
            Int residual = b[r];
            for (std::size_t j = 0; j < k; ++j)
                if (a[r][j] != 0)
                    residual -= a[r][j] * x[j];
            const Int& coef = a[r][k];
            if (coef > 0) {
                Int bound = floor_div(residual, coef);
                if (bound < high)
                    high = bound;
            } else {
                Int bound = ceil_div(residual, coef);
                if (bound > low)
                    low = bound;
            }
        }
        if (low > high)
            return Int(0);
        if (k + 1 == d)
            return Int(high - low + 1);
        Int total = 0;
        for (Int v = low; v <= high; ++v) {
            x[k] = v;
            total += count_level(k + 1, x);
        }
        return total;
    }
};

struct IntegerRows {
    std::vector<std::vector<Integer>> a;
    std::vector<Integer> b;
    std::vector<Integer> lo;
    std::vector<Integer> hi;
    bool empty = false;
};

IntegerRows integer_rows(const HRepresentation& h, const VRepresentation& vertices, long dilation)
{
    const std::size_t d = h.ambient_dimension();
    IntegerRows out;
    const Rational n(dilation);
    auto push = [&](const LinearInequality& row, int sign) {
        std::vector<Integer> coeffs(d);
        for (std::size_t j = 0; j < d; ++j) {
            // Normalized rows have integer coefficients.
            coeffs[j] = row.coeffs[j].get_num() * sign;
        }
        out.a.push_back(std::move(coeffs));
        out.b.push_back(floor(Rational(row.rhs * n * sign)));
    };
    for (const auto& row : h.inequalities()) {
        LinearInequality copy = row;
        copy.normalize();
        push(copy, 1);
    }
    for (const auto& row : h.equalities()) {
        LinearInequality copy = row;
        copy.normalize(true);
        if (!is_integer(Rational(copy.rhs * n)))
            out.empty = true;
        push(copy, 1);
        push(copy, -1);
    }
    out.lo.resize(d);
    out.hi.resize(d);
    for (std::size_t j = 0; j < d; ++j) {
        Rational mn = vertices.vertices.front()[j];
        Rational mx = mn;
        for (const auto& v : vertices.vertices) {
            if (v[j] < mn)
                mn = v[j];
            if (v[j] > mx)
                mx = v[j];
        }
        out.lo[j] = ceil(Rational(mn * n));
        out.hi[j] = floor(Rational(mx * n));
        if (out.lo[j] > out.hi[j])
            out.empty = true;
    }
    return out;
}

template <class Int>
LatticeProblem<Int> make_problem(const IntegerRows& rows, std::size_t d)
{
    LatticeProblem<Int> p;
    p.d = d;
    p.empty = rows.empty;
    p.rows_at.assign(d, {});
    for (std::size_t r = 0; r < rows.a.size(); ++r) {
        std::vector<Int> coeffs(d);
        std::size_t last = 0;
        for (std::size_t j = 0; j < d; ++j) {
            coeffs[j] = to_int(rows.a[r][j], static_cast<Int*>(nullptr));
            if (rows.a[r][j] != 0)
                last = j;
        }
        p.a.push_back(std::move(coeffs));
        p.b.push_back(to_int(rows.b[r], static_cast<Int*>(nullptr)));
        p.rows_at[last].push_back(r);
    }
    for (std::size_t j = 0; j < d; ++j) {
        p.lo.push_back(to_int(rows.lo[j], static_cast<Int*>(nullptr)));
        p.hi.push_back(to_int(rows.hi[j], static_cast<Int*>(nullptr)));
    }
    return p;
}

/// Machine integers suffice when every partial sum stays far below 2^62.
bool fits_int64(const IntegerRows& rows, std::size_t d)
{
    Integer box = 0;
    for (std::size_t j = 0; j < d; ++j) {
        box = std::max(box, Integer(abs(rows.lo[j])));
        box = std::max(box, Integer(abs(rows.hi[j])));
    }
    Integer coef = 0;
    Integer rhs = 0;
    for (std::size_t r = 0; r < rows.a.size(); ++r) {
        for (const auto& c : rows.a[r])
            coef = std::max(coef, Integer(abs(c)));
        rhs = std::max(rhs, Integer(abs(rows.b[r])));
    }
    Integer worst = coef * box * Integer(static_cast<unsigned long>(d + 1)) + rhs + box + 1;
    Integer limit = Integer(1) << 62;
    return worst < limit;
}

Integer count_impl(const HRepresentation& h, const VRepresentation& vertices, long dilation, bool parallel)
{
    if (dilation < 0)
        throw Error(ErrorKind::InvalidArgument, "dilation must be nonnegative");
    const std::size_t d = h.ambient_dimension();
    if (d == 0)
        return 1;
    IntegerRows rows = integer_rows(h, vertices, dilation);
    if (rows.empty)
        return 0;

    if (!fits_int64(rows, d)) {
        LatticeProblem<Integer> p = make_problem<Integer>(rows, d);
        std::vector<Integer> x(d);
        return p.count_level(0, x);
    }

    LatticeProblem<std::int64_t> p = make_problem<std::int64_t>(rows, d);
    if (!parallel || d == 1) {
        std::vector<std::int64_t> x(d);
        return Integer(static_cast<long>(p.count_level(0, x)));
    }
    // Split on the outermost coordinate; level 0 only sees rows supported on x_0.
    std::int64_t low = p.lo[0];
    std::int64_t high = p.hi[0];
    for (std::size_t r : p.rows_at[0]) {
        if (p.a[r][0] > 0)
            high = std::min(high, floor_div(p.b[r], p.a[r][0]));
        else
            low = std::max(low, ceil_div(p.b[r], p.a[r][0]));
    }
    std::int64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic, 1)
    for (std::int64_t v = low; v <= high; ++v) {
        std::vector<std::int64_t> x(d);
        x[0] = v;
        total += p.count_level(1, x);
    }
    return Integer(static_cast<long>(total));
}

}  // namespace

Integer count_lattice_points(const HRepresentation& h, long dilation)
{
    return count_impl(h, enumerate_vertices(h), dilation, true);
}

Integer count_lattice_points(const HRepresentation& h, const VRepresentation& vertices, long dilation)
{
    return count_impl(h, vertices, dilation, true);
}

Integer count_lattice_points_serial(const HRepresentation& h, long dilation)
{
    return count_impl(h, enumerate_vertices_serial(h), dilation, false);
}

Integer count_lattice_points_serial(const HRepresentation& h, const VRepresentation& vertices, long dilation)
{
    return count_impl(h, vertices, dilation, false);
}

std::string format_inequality(const LinearInequality& row, const std::vector<std::string>& coordinates)
{
    std::string lhs;
    for (std::size_t j = 0; j < row.coeffs.size(); ++j) {
        const Rational& c = row.coeffs[j];
        if (sgn(c) == 0)
            continue;
        std::string name = j < coordinates.size() ? coordinates[j] : "x" + std::to_string(j);
        if (lhs.empty())
            lhs = (c == 1 ? "" : c == -1 ? "-" : to_string(c) + "*") + name;
        else if (sgn(c) > 0)
            lhs += " + " + (c == 1 ? "" : to_string(c) + "*") + name;
        else
            lhs += " - " + (c == -1 ? "" : to_string(Rational(-c)) + "*") + name;
    }
    return lhs + " <= " + to_string(row.rhs);
}

}  // namespace mpp
