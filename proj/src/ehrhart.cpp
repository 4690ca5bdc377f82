#include "mpp/ehrhart.hpp"

#include "mpp/error.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace mpp {

namespace {

UnivariatePolynomial counting_impl(const HRepresentation& h, bool parallel)
{
    VRepresentation v = parallel ? enumerate_vertices(h) : enumerate_vertices_serial(h);
    for (const auto& x : v.vertices)
        for (const auto& c : x)
            if (!is_integer(c))
                throw Error(ErrorKind::NonIntegralVertices, "vertex " + to_string(x) + " is not a lattice point");
    const int dim = affine_dimension(v);
    auto count = [&](long n) {
        return parallel ? count_lattice_points(h, v, n) : count_lattice_points_serial(h, v, n);
    };
    std::vector<std::pair<Integer, Integer>> samples;
    for (long n = 0; n <= dim; ++n)
        samples.emplace_back(Integer(n), count(n));
    UnivariatePolynomial p = interpolate_polynomial(samples);
    const long check = dim + 1;
    Integer expected = count(check);
    if (p.evaluate(Rational(check)) != Rational(expected))
        throw Error(ErrorKind::VerificationFailed, "interpolated polynomial misses the count " + expected.get_str() +
                                                       " at n = " + std::to_string(check));
    return p;
}

void require_formula_hypotheses(const MarkedPoset& mp)
{
    if (!is_strict(mp))
        throw Error(ErrorKind::PreconditionViolated, "the marking is not strict");
    if (!is_regular(mp))
        throw Error(ErrorKind::PreconditionViolated, "the marked poset is not regular");
    if (!mp.integral_marking())
        throw Error(ErrorKind::PreconditionViolated, "the marking is not integral");
}

std::vector<ExtensionWord> collect_extensions(const Poset& ext, const Labeling& labeling)
{
    const std::size_t cap = work_cap(1'000'000);
    std::vector<ExtensionWord> words;
    for_each_linear_extension(ext, labeling, [&](const ExtensionWord& w) {
        if (words.size() >= cap)
            throw Error(ErrorKind::ExtensionExplosion,
                        "more than " + std::to_string(cap) + " linear extensions");
        words.push_back(w);
        return true;
    });
    return words;
}

std::vector<SegmentTerm> segments_of(const MarkedPoset& mp, const ExtensionWord& w)
{
    std::vector<SegmentTerm> out;
    std::size_t last = 0;
    for (std::size_t t = 1; t < w.word.size(); ++t) {
        if (!mp.is_marked(w.word[t]))
            continue;
        out.push_back({w.word[last], w.word[t], t - last - 1, w.descent_prefix[t] - w.descent_prefix[last]});
        last = t;
    }
    return out;
}

/// Segment key (Δ, k, d) with Δ = λ(b) − λ(a).
using SegmentKey = std::array<long, 3>;

class TermCache {
public:
    explicit TermCache(const MarkedPoset& mp) : mp_(mp) {}

    const UnivariatePolynomial& factor(const SegmentTerm& s)
    {
        Rational delta = mp_.mark(s.top) - mp_.mark(s.bottom);
        SegmentKey key{delta.get_num().get_si(), static_cast<long>(s.unmarked), s.descents};
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            auto poly = binomial_in_n(delta, Rational(static_cast<long>(s.unmarked) - s.descents),
                                      static_cast<unsigned>(s.unmarked));
            it = cache_.emplace(key, std::move(poly)).first;
        }
        return it->second;
    }

    UnivariatePolynomial product(const std::vector<SegmentTerm>& segments)
    {
        UnivariatePolynomial p = UnivariatePolynomial::constant(Rational(1));
        for (const auto& s : segments)
            if (s.unmarked > 0)
                p *= factor(s);
        return p;
    }

private:
    const MarkedPoset& mp_;
    std::map<SegmentKey, UnivariatePolynomial> cache_;
};

UnivariatePolynomial formula_impl(const MarkedPoset& mp, const Labeling& labeling, bool parallel)
{
    require_formula_hypotheses(mp);
    Poset ext = ehrhart_extension_poset(mp);
    std::vector<ExtensionWord> words = collect_extensions(ext, labeling);
    const long count = static_cast<long>(words.size());

    UnivariatePolynomial total;
    if (!parallel) {
        TermCache cache(mp);
        for (const auto& w : words)
            total += cache.product(segments_of(mp, w));
        return total;
    }
#pragma omp parallel
    {
        TermCache cache(mp);
        UnivariatePolynomial local;
#pragma omp for schedule(static)
        for (long i = 0; i < count; ++i)
            local += cache.product(segments_of(mp, words[static_cast<std::size_t>(i)]));
#pragma omp critical(mpp_formula_merge)
        total += local;
    }
    return total;
}

}  // namespace

UnivariatePolynomial ehrhart_by_counting(const HRepresentation& h)
{
    return counting_impl(h, true);
}

UnivariatePolynomial ehrhart_by_counting_serial(const HRepresentation& h)
{
    return counting_impl(h, false);
}

Poset ehrhart_extension_poset(const MarkedPoset& mp)
{
    if (!is_strict(mp))
        throw Error(ErrorKind::PreconditionViolated, "the marking is not strict");
    const Poset& P = mp.poset();
    std::vector<std::pair<ElementId, ElementId>> relations;
    for (const auto& [p, q] : P.covers())
        relations.emplace_back(P.id(p), P.id(q));
    std::vector<Element> marked = mp.marked();
    std::sort(marked.begin(), marked.end(), [&](Element a, Element b) {
        return mp.mark(a) != mp.mark(b) ? mp.mark(a) < mp.mark(b) : P.id(a) < P.id(b);
    });
    for (std::size_t i = 0; i + 1 < marked.size(); ++i)
        relations.emplace_back(P.id(marked[i]), P.id(marked[i + 1]));
    return Poset::from_relations(P.ids(), relations);
}

Labeling canonical_labeling(const MarkedPoset& mp)
{
    return greedy_labeling(ehrhart_extension_poset(mp));
}

UnivariatePolynomial ehrhart_formula_marked_order(const MarkedPoset& mp)
{
    require_formula_hypotheses(mp);
    return formula_impl(mp, canonical_labeling(mp), true);
}

UnivariatePolynomial ehrhart_formula_marked_order(const MarkedPoset& mp, const Labeling& labeling)
{
    return formula_impl(mp, labeling, true);
}

UnivariatePolynomial ehrhart_formula_marked_order_serial(const MarkedPoset& mp, const Labeling& labeling)
{
    return formula_impl(mp, labeling, false);
}

std::vector<ExtensionTerm> ehrhart_formula_terms(const MarkedPoset& mp, const Labeling& labeling)
{
    require_formula_hypotheses(mp);
    Poset ext = ehrhart_extension_poset(mp);
    TermCache cache(mp);
    std::vector<ExtensionTerm> out;
    for (auto& w : collect_extensions(ext, labeling)) {
        ExtensionTerm term{std::move(w), {}, {}};
        term.segments = segments_of(mp, term.word);
        term.product = cache.product(term.segments);
        out.push_back(std::move(term));
    }
    return out;
}

MarkedPoset pm_family(int m, int c)
{
    if (m < 3)
        throw Error(ErrorKind::InvalidArgument, "pm_family needs m >= 3, got " + std::to_string(m));
    if (c < 1)
        throw Error(ErrorKind::InvalidArgument, "pm_family needs c >= 1, got " + std::to_string(c));
    auto a = [](int i) { return "a" + std::to_string(i); };
    auto x = [](int i) { return "x" + std::to_string(i); };
    std::vector<ElementId> ids;
    for (int i = 1; i <= m; ++i) {
        ids.push_back(a(i));
        ids.push_back(x(i));
    }
    std::vector<std::pair<ElementId, ElementId>> covers{
        {a(1), x(1)}, {x(1), a(2)}, {x(1), x(2)}, {x(2), x(m)}};
    for (int i = 2; i <= m - 1; ++i) {
        covers.emplace_back(a(i), x(i + 1));
        covers.emplace_back(x(i + 1), a(i + 1));
    }
    std::map<ElementId, Rational> marks;
    for (int i = 1; i <= m; ++i)
        marks.emplace(a(i), Rational((i - 1) * c));
    return MarkedPoset(Poset(std::move(ids), covers), marks);
}

UnivariatePolynomial pm_closed_form(int m, int c)
{
    if (m < 3)
        throw Error(ErrorKind::InvalidArgument, "pm_closed_form needs m >= 3, got " + std::to_string(m));
    if (c < 1)
        throw Error(ErrorKind::InvalidArgument, "pm_closed_form needs c >= 1, got " + std::to_string(c));
    UnivariatePolynomial base = UnivariatePolynomial::linear(Rational(c), Rational(1));
    UnivariatePolynomial power = UnivariatePolynomial::constant(Rational(1));
    for (int i = 0; i < m - 1; ++i)
        power *= base;
    UnivariatePolynomial lead = UnivariatePolynomial::linear(Rational((m - 2) * c), Rational(0));
    return lead * power + power;
}

}  // namespace mpp
