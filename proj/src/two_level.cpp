#include "mpp/two_level.hpp"

#include "mpp/error.hpp"
#include "mpp/marked_polytopes.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mpp {

namespace {

std::vector<Rational> distinct_values(const VRepresentation& v, const LinearInequality& row)
{
    std::vector<Rational> values = evaluate_affine_values(v, row);
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

void require_strict(const MarkedPoset& mp)
{
    if (!is_strict(mp))
        throw Error(ErrorKind::PreconditionViolated, "the marking is not strict");
}

void require_strict_regular(const MarkedPoset& mp)
{
    require_strict(mp);
    if (!is_regular(mp))
        throw Error(ErrorKind::PreconditionViolated, "the marked poset is not regular");
}

}  // namespace

TwoLevelReport is_two_level_direct(const HRepresentation& h)
{
    VRepresentation v = enumerate_vertices(h);
    TwoLevelReport report;
    if (affine_dimension(v) <= 1)
        return report;
    HRepresentation facets = irredundant(h, v);
    facets.sort();
    for (const auto& row : facets.inequalities()) {
        std::vector<Rational> values = distinct_values(v, row);
        if (values.size() > 2) {
            report.two_level = false;
            report.witness = row;
            report.witness_values = std::move(values);
            return report;
        }
    }
    return report;
}

bool EffectiveComponent::uniform() const
{
    return std::all_of(lower.begin(), lower.end(), [&](const Rational& l) { return l == lower.front(); }) &&
           std::all_of(upper.begin(), upper.end(), [&](const Rational& u) { return u == upper.front(); });
}

std::vector<EffectiveComponent> effective_components(const MarkedPoset& mp)
{
    const Poset& P = mp.poset();
    const std::vector<Element>& free = mp.unmarked();
    std::vector<Rational> lo(P.size()), hi(P.size());
    for (Element p : free) {
        bool has_lo = false, has_hi = false;
        for (Element a : mp.marked()) {
            if (P.less(a, p) && (!has_lo || mp.mark(a) > lo[p])) {
                lo[p] = mp.mark(a);
                has_lo = true;
            }
            if (P.less(p, a) && (!has_hi || mp.mark(a) < hi[p])) {
                hi[p] = mp.mark(a);
                has_hi = true;
            }
        }
    }

    std::vector<std::size_t> parent(P.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [p, q] : P.covers())
        if (!mp.is_marked(p) && !mp.is_marked(q) && lo[q] < hi[p])
            parent[find(p)] = find(q);

    std::map<std::size_t, EffectiveComponent> groups;
    for (Element p : free) {
        auto& g = groups[find(p)];
        g.elements.push_back(p);
        g.lower.push_back(lo[p]);
        g.upper.push_back(hi[p]);
    }
    std::vector<EffectiveComponent> out;
    for (auto& [root, g] : groups)
        out.push_back(std::move(g));
    std::sort(out.begin(), out.end(),
              [](const EffectiveComponent& a, const EffectiveComponent& b) { return a.elements < b.elements; });
    return out;
}

bool order_two_level_unchecked(const MarkedPoset& mp)
{
    auto comps = effective_components(mp);
    return std::all_of(comps.begin(), comps.end(), [](const EffectiveComponent& c) { return c.uniform(); });
}

bool order_two_level_criterion(const MarkedPoset& mp)
{
    require_strict_regular(mp);
    return order_two_level_unchecked(mp);
}

ChainCriterionReport chain_two_level_criterion(const MarkedPoset& mp)
{
    require_strict(mp);
    HRepresentation h = build_chain_hrep(mp);
    VRepresentation v = enumerate_vertices(h);
    const std::size_t d = h.ambient_dimension();

    ChainCriterionReport report;
    std::vector<Rational> scale(d);
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Rational> values;
        for (const auto& x : v.vertices)
            values.push_back(x[j]);
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        if (values.size() != 2 || sgn(values[0]) != 0)
            return report;
        scale[j] = values[1];
    }

    HRepresentation facets = irredundant(h, v);
    for (const auto& row : facets.inequalities()) {
        LinearInequality scaled = row;
        for (std::size_t j = 0; j < d; ++j)
            scaled.coeffs[j] *= scale[j];
        scaled.normalize();
        std::size_t nonzero = 0;
        bool all_one = true;
        for (const auto& c : scaled.coeffs) {
            if (sgn(c) == 0)
                continue;
            ++nonzero;
            all_one = all_one && c == 1;
        }
        bool nonnegativity = nonzero == 1 && sgn(scaled.rhs) == 0 &&
                             std::any_of(scaled.coeffs.begin(), scaled.coeffs.end(),
                                         [](const Rational& c) { return c == -1; });
        bool unit_sum = all_one && scaled.rhs == 1;
        if (!nonnegativity && !unit_sum)
            return report;
    }
    report.two_level = true;
    std::vector<Rational> factors(d);
    for (std::size_t j = 0; j < d; ++j)
        factors[j] = 1 / scale[j];
    report.scaling = std::move(factors);
    return report;
}

bool chain_order_two_level_criterion(const MarkedPoset& mp, const ChainOrderPartition& part)
{
    require_strict_regular(mp);
    check_partition(mp, part);
    const Poset& P = mp.poset();

    std::vector<unsigned char> in_chain(P.size(), 0);
    for (Element c : part.chain)
        in_chain[c] = 1;
    std::vector<Element> keep;
    for (Element e = 0; e < P.size(); ++e)
        if (!in_chain[e])
            keep.push_back(e);
    MarkedPoset rest = restrict_marked_poset(mp, keep);
    auto comps = effective_components(rest);
    if (!std::all_of(comps.begin(), comps.end(), [](const EffectiveComponent& c) { return c.uniform(); }))
        return false;
    if (part.chain.empty())
        return true;

    // Order coordinates must sit at the two bounds of their component, chain
    // coordinates at 0 and one positive value; both rescale to {0, 1}.
    std::map<ElementId, std::pair<Rational, Rational>> bounds;
    for (const auto& comp : comps)
        for (Element e : comp.elements)
            bounds[rest.poset().id(e)] = {comp.lower.front(), comp.upper.front()};

    HRepresentation h = build_chain_order_hrep(mp, part);
    VRepresentation v = enumerate_vertices(h);
    const std::size_t d = h.ambient_dimension();
    std::vector<Rational> offset(d, Rational(0)), width(d);
    std::vector<unsigned char> chain_coord(d, 0);
    for (Element p : mp.unmarked()) {
        const std::size_t j = mp.coordinate(p);
        std::vector<Rational> values;
        for (const auto& x : v.vertices)
            values.push_back(x[j]);
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        if (in_chain[p]) {
            chain_coord[j] = 1;
            if (values.size() != 2 || sgn(values[0]) != 0)
                return false;
            width[j] = values[1];
        } else {
            const auto& [alpha, beta] = bounds.at(P.id(p));
            for (const auto& val : values)
                if (val != alpha && val != beta)
                    return false;
            offset[j] = alpha;
            width[j] = beta - alpha;
        }
    }

    HRepresentation facets = irredundant(h, v);
    for (const auto& row : facets.inequalities()) {
        bool touches_chain = false;
        for (std::size_t j = 0; j < d; ++j)
            touches_chain = touches_chain || (chain_coord[j] && sgn(row.coeffs[j]) != 0);
        if (!touches_chain)
            continue;
        LinearInequality t = row;
        for (std::size_t j = 0; j < d; ++j) {
            t.rhs -= row.coeffs[j] * offset[j];
            t.coeffs[j] = row.coeffs[j] * width[j];
        }
        t.normalize();
        Rational lo, hi;
        bool first = true;
        for (const auto& x : v.vertices) {
            Rational val = 0;
            for (std::size_t j = 0; j < d; ++j)
                if (sgn(t.coeffs[j]) != 0)
                    val += t.coeffs[j] * ((x[j] - offset[j]) / width[j]);
            if (first || val < lo)
                lo = val;
            if (first || val > hi)
                hi = val;
            first = false;
        }
        if (hi - lo != 1)
            return false;
    }
    return true;
}

}  // namespace mpp
