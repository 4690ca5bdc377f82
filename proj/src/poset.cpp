#include "mpp/poset.hpp"

#include "mpp/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace mpp {

Poset::Poset(std::vector<ElementId> elements, const std::vector<std::pair<ElementId, ElementId>>& covers)
{
    std::vector<ElementId> sorted = elements;
    std::sort(sorted.begin(), sorted.end());
    std::map<ElementId, Element> index;
    for (Element i = 0; i < sorted.size(); ++i)
        if (!index.emplace(sorted[i], i).second)
            throw Error(ErrorKind::InvalidPoset, "duplicate element id '" + sorted[i] + "'");

    std::vector<std::pair<Element, Element>> relations;
    relations.reserve(covers.size());
    for (const auto& [p, q] : covers) {
        auto ip = index.find(p);
        auto iq = index.find(q);
        if (ip == index.end())
            throw Error(ErrorKind::UnknownElement, "cover references unknown element '" + p + "'");
        if (iq == index.end())
            throw Error(ErrorKind::UnknownElement, "cover references unknown element '" + q + "'");
        relations.emplace_back(ip->second, iq->second);
    }
    build(std::move(sorted), relations, true);
}

Poset Poset::from_relations(std::vector<ElementId> elements,
                            const std::vector<std::pair<ElementId, ElementId>>& relations)
{
    Poset probe(elements, {});
    std::vector<std::pair<Element, Element>> rel;
    rel.reserve(relations.size());
    for (const auto& [p, q] : relations)
        rel.emplace_back(probe.index(p), probe.index(q));
    Poset out;
    out.build(probe.ids_, rel, false);
    return out;
}

void Poset::build(std::vector<ElementId> elements, const std::vector<std::pair<Element, Element>>& relations,
                  bool require_irredundant)
{
    ids_ = std::move(elements);
    index_.clear();
    for (Element i = 0; i < ids_.size(); ++i)
        index_.emplace(ids_[i], i);

    const std::size_t n = ids_.size();
    leq_.assign(n * n, 0);
    for (Element i = 0; i < n; ++i)
        leq_[i * n + i] = 1;
    for (const auto& [p, q] : relations) {
        if (p == q)
            throw Error(ErrorKind::InvalidPoset, "relation '" + ids_[p] + "' ≺ '" + ids_[p] + "' is a loop");
        leq_[p * n + q] = 1;
    }
    for (Element k = 0; k < n; ++k)
        for (Element i = 0; i < n; ++i)
            if (leq_[i * n + k])
                for (Element j = 0; j < n; ++j)
                    if (leq_[k * n + j])
                        leq_[i * n + j] = 1;
    for (Element i = 0; i < n; ++i)
        for (Element j = i + 1; j < n; ++j)
            if (leq_[i * n + j] && leq_[j * n + i])
                throw Error(ErrorKind::InvalidPoset,
                            "cover relations contain a cycle through '" + ids_[i] + "' and '" + ids_[j] + "'");

    covers_.clear();
    for (Element p = 0; p < n; ++p)
        for (Element q = 0; q < n; ++q) {
            if (!less(p, q))
                continue;
            bool cover = true;
            for (Element r = 0; r < n && cover; ++r)
                if (less(p, r) && less(r, q))
                    cover = false;
            if (cover)
                covers_.emplace_back(p, q);
        }

    if (require_irredundant) {
        std::set<std::pair<Element, Element>> seen;
        for (const auto& rel : relations) {
            if (!seen.insert(rel).second)
                throw Error(ErrorKind::InvalidPoset,
                            "duplicate cover '" + ids_[rel.first] + "' ≺ '" + ids_[rel.second] + "'");
            if (!std::binary_search(covers_.begin(), covers_.end(), rel))
                throw Error(ErrorKind::InvalidPoset, "cover '" + ids_[rel.first] + "' ≺ '" + ids_[rel.second] +
                                                         "' is implied by other covers");
        }
    }

    up_.assign(n, {});
    down_.assign(n, {});
    for (const auto& [p, q] : covers_) {
        up_[p].push_back(q);
        down_[q].push_back(p);
    }
}

Element Poset::index(const ElementId& id) const
{
    auto it = index_.find(id);
    if (it == index_.end())
        throw Error(ErrorKind::UnknownElement, "unknown element '" + id + "'");
    return it->second;
}

std::optional<Element> Poset::find(const ElementId& id) const
{
    auto it = index_.find(id);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

bool Poset::is_cover(Element p, Element q) const
{
    return std::binary_search(covers_.begin(), covers_.end(), std::make_pair(p, q));
}

std::vector<Element> Poset::minimal() const
{
    std::vector<Element> out;
    for (Element e = 0; e < size(); ++e)
        if (down_[e].empty())
            out.push_back(e);
    return out;
}

std::vector<Element> Poset::maximal() const
{
    std::vector<Element> out;
    for (Element e = 0; e < size(); ++e)
        if (up_[e].empty())
            out.push_back(e);
    return out;
}

Poset Poset::induced(const std::vector<Element>& keep) const
{
    std::vector<ElementId> ids;
    for (Element e : keep)
        ids.push_back(id(e));
    std::vector<std::pair<ElementId, ElementId>> rel;
    for (Element p : keep)
        for (Element q : keep)
            if (less(p, q))
                rel.emplace_back(id(p), id(q));
    return from_relations(std::move(ids), rel);
}

bool transitive_relation(const Poset& poset, const ElementId& p, const ElementId& q)
{
    return poset.leq(poset.index(p), poset.index(q));
}

MarkedPoset::MarkedPoset(Poset poset, const std::map<ElementId, Rational>& marking) : poset_(std::move(poset))
{
    const std::size_t n = poset_.size();
    marked_flag_.assign(n, 0);
    marks_.assign(n, Rational(0));
    for (const auto& [id, value] : marking) {
        Element e = poset_.index(id);
        marked_flag_[e] = 1;
        marks_[e] = value;
    }
    for (Element e : poset_.minimal())
        if (!marked_flag_[e])
            throw Error(ErrorKind::InvalidMarking, "minimal element '" + poset_.id(e) + "' is not marked");
    for (Element e : poset_.maximal())
        if (!marked_flag_[e])
            throw Error(ErrorKind::InvalidMarking, "maximal element '" + poset_.id(e) + "' is not marked");

    coordinate_.assign(n, static_cast<std::size_t>(-1));
    for (Element e = 0; e < n; ++e) {
        if (marked_flag_[e]) {
            marked_.push_back(e);
        } else {
            coordinate_[e] = unmarked_.size();
            unmarked_.push_back(e);
        }
    }
    for (Element a : marked_)
        for (Element b : marked_)
            if (poset_.less(a, b) && marks_[a] > marks_[b])
                throw Error(ErrorKind::InvalidMarking, "marking is not order preserving on '" + poset_.id(a) +
                                                           "' ≺ '" + poset_.id(b) + "'");
}

const Rational& MarkedPoset::mark(Element e) const
{
    if (!is_marked(e))
        throw Error(ErrorKind::InvalidArgument, "element '" + poset_.id(e) + "' is not marked");
    return marks_[e];
}

std::map<ElementId, Rational> MarkedPoset::marking() const
{
    std::map<ElementId, Rational> out;
    for (Element e : marked_)
        out.emplace(poset_.id(e), marks_[e]);
    return out;
}

bool MarkedPoset::integral_marking() const
{
    return std::all_of(marked_.begin(), marked_.end(), [&](Element e) { return is_integer(marks_[e]); });
}

std::size_t MarkedPoset::coordinate(Element e) const
{
    if (is_marked(e))
        throw Error(ErrorKind::InvalidArgument, "marked element '" + poset_.id(e) + "' has no coordinate");
    return coordinate_[e];
}

std::vector<std::string> MarkedPoset::coordinate_ids() const
{
    std::vector<std::string> out;
    for (Element e : unmarked_)
        out.push_back(poset_.id(e));
    return out;
}

ValidationReport validate_marked(const MarkedPoset& mp)
{
    const Poset& P = mp.poset();
    ValidationReport report;
    for (Element a : mp.marked())
        for (Element b : mp.marked())
            if (P.less(a, b) && !(mp.mark(a) < mp.mark(b))) {
                report.strict = false;
                report.violations.push_back({Violation::Kind::NotStrict, {a, b}});
            }
    for (const auto& [p, q] : P.covers())
        for (Element a : mp.marked()) {
            if (!P.leq(a, q))
                continue;
            for (Element b : mp.marked()) {
                if (!P.leq(p, b) || a == b || mp.mark(a) < mp.mark(b))
                    continue;
                report.regular = false;
                report.violations.push_back({Violation::Kind::NotRegular, {p, q, a, b}});
            }
        }
    return report;
}

std::string describe(const MarkedPoset& mp, const Violation& v)
{
    const Poset& P = mp.poset();
    auto label = [&](Element e) { return P.id(e) + "(" + to_string(mp.mark(e)) + ")"; };
    if (v.kind == Violation::Kind::NotStrict)
        return "not-strict: " + label(v.witness[0]) + " < " + label(v.witness[1]);
    return "not-regular: cover " + P.id(v.witness[0]) + " < " + P.id(v.witness[1]) + " with a=" +
           label(v.witness[2]) + ", b=" + label(v.witness[3]);
}

bool is_strict(const MarkedPoset& mp)
{
    const Poset& P = mp.poset();
    for (Element a : mp.marked())
        for (Element b : mp.marked())
            if (P.less(a, b) && !(mp.mark(a) < mp.mark(b)))
                return false;
    return true;
}

bool is_regular(const MarkedPoset& mp)
{
    const Poset& P = mp.poset();
    for (const auto& [p, q] : P.covers())
        for (Element a : mp.marked())
            for (Element b : mp.marked())
                if (P.leq(a, q) && P.leq(p, b) && a != b && !(mp.mark(a) < mp.mark(b)))
                    return false;
    return true;
}

std::vector<std::vector<Element>> hasse_components(const Poset& poset)
{
    const std::size_t n = poset.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [p, q] : poset.covers())
        parent[root(p)] = root(q);
    std::map<std::size_t, std::vector<Element>> groups;
    for (Element e = 0; e < n; ++e)
        groups[root(e)].push_back(e);
    std::vector<std::vector<Element>> out;
    for (auto& [r, members] : groups)
        out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Element>> hasse_components(const MarkedPoset& mp)
{
    return hasse_components(mp.poset());
}

std::vector<MarkedChain> maximal_marked_chains(const MarkedPoset& mp)
{
    const Poset& P = mp.poset();
    std::vector<MarkedChain> out;
    std::vector<Element> path;
    std::function<void(Element, Element)> extend = [&](Element bottom, Element at) {
        for (Element next : P.upper_covers(at)) {
            if (mp.is_marked(next)) {
                out.push_back({bottom, path, next});
            } else {
                path.push_back(next);
                extend(bottom, next);
                path.pop_back();
            }
        }
    };
    for (Element a : mp.marked())
        extend(a, a);
    std::sort(out.begin(), out.end());
    return out;
}

Poset augment_marked_order(const MarkedPoset& mp)
{
    const Poset& P = mp.poset();
    std::vector<std::pair<ElementId, ElementId>> rel;
    for (const auto& [p, q] : P.covers())
        rel.emplace_back(P.id(p), P.id(q));
    for (Element a : mp.marked())
        for (Element b : mp.marked())
            if (mp.mark(a) < mp.mark(b))
                rel.emplace_back(P.id(a), P.id(b));
    try {
        return Poset::from_relations(P.ids(), rel);
    } catch (const Error& err) {
        throw Error(ErrorKind::PreconditionViolated, std::string("augmented marked order is cyclic: ") + err.what());
    }
}

ChainOrderPartition make_partition(const MarkedPoset& mp, const std::vector<ElementId>& chain,
                                   const std::vector<ElementId>& order)
{
    ChainOrderPartition part;
    for (const auto& id : chain)
        part.chain.push_back(mp.poset().index(id));
    for (const auto& id : order)
        part.order.push_back(mp.poset().index(id));
    std::sort(part.chain.begin(), part.chain.end());
    std::sort(part.order.begin(), part.order.end());
    check_partition(mp, part);
    return part;
}

void check_partition(const MarkedPoset& mp, const ChainOrderPartition& part)
{
    std::vector<int> seen(mp.size(), 0);
    auto take = [&](Element e, const char* role) {
        if (e >= mp.size())
            throw Error(ErrorKind::InvalidArgument, std::string(role) + " element index out of range");
        if (mp.is_marked(e))
            throw Error(ErrorKind::InvalidArgument,
                        std::string(role) + " element '" + mp.poset().id(e) + "' is marked");
        if (seen[e]++)
            throw Error(ErrorKind::InvalidArgument, "element '" + mp.poset().id(e) + "' listed twice in partition");
    };
    for (Element e : part.chain)
        take(e, "chain");
    for (Element e : part.order)
        take(e, "order");
    for (Element e : mp.unmarked())
        if (!seen[e])
            throw Error(ErrorKind::InvalidArgument, "unmarked element '" + mp.poset().id(e) +
                                                        "' is neither a chain nor an order element");
}

std::vector<ChainOrderPartition> all_partitions(const MarkedPoset& mp)
{
    const auto& U = mp.unmarked();
    if (U.size() >= 8 * sizeof(std::size_t) - 1)
        throw Error(ErrorKind::WorkCapExceeded, "too many unmarked elements to list all partitions");
    std::vector<ChainOrderPartition> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << U.size()); ++mask) {
        ChainOrderPartition part;
        for (std::size_t i = 0; i < U.size(); ++i)
            ((mask >> i) & 1 ? part.chain : part.order).push_back(U[i]);
        out.push_back(std::move(part));
    }
    return out;
}

bool is_natural_labeling(const Poset& poset, const Labeling& labeling)
{
    const std::size_t n = poset.size();
    if (labeling.size() != n)
        return false;
    std::vector<int> used(n + 1, 0);
    for (std::size_t label : labeling) {
        if (label < 1 || label > n || used[label]++)
            return false;
    }
    return std::all_of(poset.covers().begin(), poset.covers().end(),
                       [&](const auto& c) { return labeling[c.first] < labeling[c.second]; });
}

Labeling greedy_labeling(const Poset& poset)
{
    const std::size_t n = poset.size();
    std::vector<std::size_t> waiting(n);
    for (Element e = 0; e < n; ++e)
        waiting[e] = poset.lower_covers(e).size();
    std::set<Element> available;
    for (Element e = 0; e < n; ++e)
        if (waiting[e] == 0)
            available.insert(e);
    Labeling label(n, 0);
    for (std::size_t next = 1; next <= n; ++next) {
        Element e = *available.begin();
        available.erase(available.begin());
        label[e] = next;
        for (Element u : poset.upper_covers(e))
            if (--waiting[u] == 0)
                available.insert(u);
    }
    return label;
}

void for_each_linear_extension(const Poset& poset, const Labeling& labeling,
                               const std::function<bool(const ExtensionWord&)>& visit)
{
    if (!is_natural_labeling(poset, labeling))
        throw Error(ErrorKind::InvalidArgument, "labeling is not a natural labeling of the poset");
    const std::size_t n = poset.size();
    std::vector<Element> by_label(n);
    for (Element e = 0; e < n; ++e)
        by_label[labeling[e] - 1] = e;
    std::vector<std::size_t> waiting(n);
    for (Element e = 0; e < n; ++e)
        waiting[e] = poset.lower_covers(e).size();
    std::vector<unsigned char> placed(n, 0);

    ExtensionWord current;
    current.word.reserve(n);
    current.descent_prefix.reserve(n);
    bool stop = false;

    std::function<void()> step = [&]() {
        if (current.word.size() == n) {
            if (!visit(current))
                stop = true;
            return;
        }
        for (Element e : by_label) {
            if (stop)
                return;
            if (placed[e] || waiting[e] != 0)
                continue;
            int d = 0;
            if (!current.word.empty())
                d = current.descent_prefix.back() + (labeling[current.word.back()] > labeling[e] ? 1 : 0);
            placed[e] = 1;
            for (Element u : poset.upper_covers(e))
                --waiting[u];
            current.word.push_back(e);
            current.descent_prefix.push_back(d);
            step();
            current.word.pop_back();
            current.descent_prefix.pop_back();
            for (Element u : poset.upper_covers(e))
                ++waiting[u];
            placed[e] = 0;
        }
    };
    step();
}

std::vector<ExtensionWord> linear_extensions(const Poset& poset, const Labeling& labeling)
{
    std::vector<ExtensionWord> out;
    for_each_linear_extension(poset, labeling, [&](const ExtensionWord& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

std::vector<ExtensionWord> linear_extensions(const Poset& poset)
{
    return linear_extensions(poset, greedy_labeling(poset));
}

std::size_t count_linear_extensions(const Poset& poset)
{
    std::size_t count = 0;
    for_each_linear_extension(poset, greedy_labeling(poset), [&](const ExtensionWord&) {
        ++count;
        return true;
    });
    return count;
}

}  // namespace mpp
