#pragma once

#include "mpp/corpus.hpp"
#include "mpp/polytope.hpp"
#include "mpp/poset.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace testing {

using mpp::Element;
using mpp::HRepresentation;
using mpp::MarkedPoset;
using mpp::Point;
using mpp::Poset;
using mpp::Rational;

using Covers = std::vector<std::pair<std::string, std::string>>;

inline MarkedPoset marked_poset(std::vector<std::string> ids, const Covers& covers,
                                const std::map<std::string, Rational>& marks)
{
    return MarkedPoset(Poset(std::move(ids), covers), marks);
}

inline Rational q(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Point pt(std::initializer_list<long> xs)
{
    Point p;
    for (long x : xs)
        p.emplace_back(x);
    return p;
}

struct Row {
    std::vector<long> coeffs;
    long rhs;
};

inline HRepresentation hrep(std::vector<std::string> coords, const std::vector<Row>& rows)
{
    HRepresentation h(std::move(coords));
    for (const auto& r : rows) {
        std::vector<Rational> c(r.coeffs.begin(), r.coeffs.end());
        h.add_inequality(std::move(c), Rational(r.rhs));
    }
    return h;
}

inline HRepresentation unit_square()
{
    return hrep({"x", "y"}, {{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 0}, 1}, {{0, 1}, 1}});
}

inline HRepresentation simplex2()
{
    return hrep({"x", "y"}, {{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 1}, 1}});
}

/// {0 ≤ x ≤ 2, x ≤ y ≤ 2, y ≥ 1}
inline HRepresentation trapezoid()
{
    return hrep({"x", "y"}, {{{-1, 0}, 0}, {{1, 0}, 2}, {{1, -1}, 0}, {{0, 1}, 2}, {{0, -1}, -1}});
}

/// Two marked chains sharing x1: m1(1) ≺ x1 ≺ m2r(2), x1 ≺ x2 ≺ m3(3), m2l(2) ≺ x2.
inline MarkedPoset two_chains()
{
    return marked_poset({"m1", "m2l", "m2r", "m3", "x1", "x2"},
                        {{"m1", "x1"}, {"x1", "m2r"}, {"x1", "x2"}, {"m2l", "x2"}, {"x2", "m3"}},
                        {{"m1", 1}, {"m2l", 2}, {"m2r", 2}, {"m3", 3}});
}

inline MarkedPoset diamond(long lo, long hi)
{
    return marked_poset({"a", "b", "x", "y"}, {{"a", "x"}, {"a", "y"}, {"x", "b"}, {"y", "b"}},
                        {{"a", lo}, {"b", hi}});
}

inline MarkedPoset segment()
{
    return marked_poset({"a", "b", "x"}, {{"a", "x"}, {"x", "b"}}, {{"a", 0}, {"b", 1}});
}

/// a(0) ≺ x ≺ y ≺ b(2), m(1) ≺ y
inline MarkedPoset trapezoid_poset()
{
    return marked_poset({"a", "b", "m", "x", "y"}, {{"a", "x"}, {"x", "y"}, {"m", "y"}, {"y", "b"}},
                        {{"a", 0}, {"b", 2}, {"m", 1}});
}

/// Random linear extension read as a natural labeling.
inline mpp::Labeling random_natural_labeling(const Poset& P, std::mt19937_64& rng)
{
    const std::size_t n = P.size();
    std::vector<std::size_t> waiting(n);
    std::vector<Element> available;
    for (Element e = 0; e < n; ++e) {
        waiting[e] = P.lower_covers(e).size();
        if (waiting[e] == 0)
            available.push_back(e);
    }
    mpp::Labeling label(n, 0);
    for (std::size_t next = 1; next <= n; ++next) {
        std::size_t pick = rng() % available.size();
        Element e = available[pick];
        available.erase(available.begin() + static_cast<long>(pick));
        label[e] = next;
        for (Element u : P.upper_covers(e))
            if (--waiting[u] == 0)
                available.push_back(u);
    }
    return label;
}

/// Random DAG on n elements "e0" … with edges only upward in index order.
inline Poset random_poset(std::size_t n, unsigned density_percent, std::mt19937_64& rng)
{
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i)
        ids.push_back("e" + std::to_string(i));
    Covers rel;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng() % 100 < density_percent)
                rel.emplace_back(ids[i], ids[j]);
    return Poset::from_relations(ids, rel);
}

/// x ↦ U x + t with U integral and unimodular; `inverse` is U^{-1}.
struct AffineMap {
    std::vector<std::vector<Rational>> matrix;
    std::vector<std::vector<Rational>> inverse;
    std::vector<Rational> shift;
};

inline AffineMap random_unimodular(std::size_t d, std::mt19937_64& rng)
{
    AffineMap m;
    m.matrix.assign(d, std::vector<Rational>(d, Rational(0)));
    m.inverse = m.matrix;
    for (std::size_t i = 0; i < d; ++i)
        m.matrix[i][i] = m.inverse[i][i] = 1;
    for (int step = 0; step < 6 && d > 0; ++step) {
        std::size_t i = rng() % d, j = rng() % d;
        if (d > 1 && i == j)
            j = (i + 1) % d;
        int kind = static_cast<int>(rng() % 3);
        if (kind == 0 && i != j) {
            // row_i += k row_j; inverse gets column_j −= k column_i.
            long k = static_cast<long>(rng() % 5) - 2;
            for (std::size_t c = 0; c < d; ++c)
                m.matrix[i][c] += k * m.matrix[j][c];
            for (std::size_t r = 0; r < d; ++r)
                m.inverse[r][j] -= k * m.inverse[r][i];
        } else if (kind == 1 && i != j) {
            std::swap(m.matrix[i], m.matrix[j]);
            for (std::size_t r = 0; r < d; ++r)
                std::swap(m.inverse[r][i], m.inverse[r][j]);
        } else {
            for (std::size_t c = 0; c < d; ++c)
                m.matrix[i][c] = -m.matrix[i][c];
            for (std::size_t r = 0; r < d; ++r)
                m.inverse[r][i] = -m.inverse[r][i];
        }
    }
    for (std::size_t i = 0; i < d; ++i)
        m.shift.emplace_back(static_cast<long>(rng() % 7) - 3);
    return m;
}

inline Point apply(const AffineMap& m, const Point& x)
{
    Point y(x.size(), Rational(0));
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < x.size(); ++j)
            y[i] += m.matrix[i][j] * x[j];
        y[i] += m.shift[i];
    }
    return y;
}

/// Image of {a·x ≤ b} under x ↦ Ux + t: (a U^{-1}) y ≤ b + a U^{-1} t.
inline HRepresentation apply(const AffineMap& m, const HRepresentation& h)
{
    const std::size_t d = h.ambient_dimension();
    HRepresentation out(h.coordinates());
    auto map_row = [&](const mpp::LinearInequality& row) {
        std::vector<Rational> c(d, Rational(0));
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t i = 0; i < d; ++i)
                c[j] += row.coeffs[i] * m.inverse[i][j];
        Rational rhs = row.rhs;
        for (std::size_t j = 0; j < d; ++j)
            rhs += c[j] * m.shift[j];
        return std::make_pair(std::move(c), std::move(rhs));
    };
    for (const auto& row : h.inequalities()) {
        auto [c, rhs] = map_row(row);
        out.add_inequality(std::move(c), std::move(rhs));
    }
    for (const auto& row : h.equalities()) {
        auto [c, rhs] = map_row(row);
        out.add_equality(std::move(c), std::move(rhs));
    }
    return out;
}

/// Independent oracle: scan every integer point of [lo, hi]^d.
inline long brute_force_count(const HRepresentation& h, long dilation, long lo, long hi)
{
    const std::size_t d = h.ambient_dimension();
    std::vector<long> z(d, lo);
    long count = 0;
    const Rational n(dilation);
    while (true) {
        bool inside = true;
        for (const auto& row : h.inequalities()) {
            Rational s = 0;
            for (std::size_t j = 0; j < d; ++j)
                s += row.coeffs[j] * z[j];
            inside = inside && s <= row.rhs * n;
        }
        for (const auto& row : h.equalities()) {
            Rational s = 0;
            for (std::size_t j = 0; j < d; ++j)
                s += row.coeffs[j] * z[j];
            inside = inside && s == row.rhs * n;
        }
        count += inside ? 1 : 0;
        std::size_t k = 0;
        while (k < d && z[k] == hi)
            z[k++] = lo;
        if (k == d)
            break;
        ++z[k];
    }
    return count;
}

/// Random convex combination of vertices with small positive integer weights.
inline Point random_point(const mpp::VRepresentation& v, std::mt19937_64& rng, bool interior_weights = false)
{
    const std::size_t d = v.vertices.front().size();
    Point x(d, Rational(0));
    Rational total = 0;
    for (const auto& vert : v.vertices) {
        long w = static_cast<long>(rng() % 4) + (interior_weights ? 1 : 0);
        if (!interior_weights && rng() % 2)
            w = 0;
        total += w;
        for (std::size_t j = 0; j < d; ++j)
            x[j] += w * vert[j];
    }
    if (total == 0)
        return v.vertices[rng() % v.vertices.size()];
    for (auto& c : x)
        c /= total;
    return x;
}

inline std::vector<MarkedPoset> corpus(std::uint64_t seed, std::size_t count, std::size_t max_unmarked)
{
    mpp::CorpusOptions options;
    options.max_unmarked = max_unmarked;
    return mpp::generate_corpus(seed, count, options);
}

}  // namespace testing
