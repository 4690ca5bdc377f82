#include "mpp/marked_polytopes.hpp"

#include "mpp/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace mpp {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

std::string id_list(const MarkedPoset& mp, const std::vector<Element>& elements)
{
    std::string out;
    for (Element e : elements)
        out += (out.empty() ? "" : " ≺ ") + mp.poset().id(e);
    return out;
}

void require_consistent(const MarkedPoset& mp, Element a, Element b)
{
    if (mp.mark(a) > mp.mark(b))
        throw Error(ErrorKind::InfeasibleMarking, "marks violate " + mp.poset().id(a) + " ⪯ " + mp.poset().id(b));
}

}  // namespace

HRepresentation build_order_hrep(const MarkedPoset& mp)
{
    const std::size_t d = mp.unmarked().size();
    HRepresentation h(mp.coordinate_ids());
    for (const auto& [p, q] : mp.poset().covers()) {
        std::vector<Rational> coeffs(d, Rational(0));
        Rational rhs = 0;
        if (mp.is_marked(p) && mp.is_marked(q)) {
            require_consistent(mp, p, q);
            continue;
        }
        if (mp.is_marked(p))
            rhs -= mp.mark(p);
        else
            coeffs[mp.coordinate(p)] += 1;
        if (mp.is_marked(q))
            rhs += mp.mark(q);
        else
            coeffs[mp.coordinate(q)] -= 1;
        h.add_inequality(std::move(coeffs), std::move(rhs));
    }
    return h;
}

HRepresentation build_chain_hrep(const MarkedPoset& mp)
{
    const std::size_t d = mp.unmarked().size();
    HRepresentation h(mp.coordinate_ids());
    for (Element p : mp.unmarked()) {
        std::vector<Rational> coeffs(d, Rational(0));
        coeffs[mp.coordinate(p)] = -1;
        h.add_inequality(std::move(coeffs), Rational(0));
    }
    for (const auto& chain : maximal_marked_chains(mp)) {
        Rational gap = mp.mark(chain.top) - mp.mark(chain.bottom);
        if (sgn(gap) < 0) {
            std::vector<Element> all{chain.bottom};
            all.insert(all.end(), chain.interior.begin(), chain.interior.end());
            all.push_back(chain.top);
            throw Error(ErrorKind::InfeasibleMarking, "negative mark difference along " + id_list(mp, all));
        }
        if (chain.interior.empty())
            continue;
        std::vector<Rational> coeffs(d, Rational(0));
        for (Element p : chain.interior)
            coeffs[mp.coordinate(p)] = 1;
        h.add_inequality(std::move(coeffs), std::move(gap));
    }
    return h;
}

HRepresentation build_chain_order_hrep(const MarkedPoset& mp, const ChainOrderPartition& part)
{
    check_partition(mp, part);
    const Poset& P = mp.poset();
    const std::size_t d = mp.unmarked().size();
    std::vector<unsigned char> in_chain(P.size(), 0);
    for (Element c : part.chain)
        in_chain[c] = 1;

    HRepresentation h(mp.coordinate_ids());
    for (Element c : part.chain) {
        std::vector<Rational> coeffs(d, Rational(0));
        coeffs[mp.coordinate(c)] = -1;
        h.add_inequality(std::move(coeffs), Rational(0));
    }

    // Σ x_{p_i} + x_a − x_b ≤ 0 over saturated chains a ≺ p_1 ≺ … ≺ p_r ≺ b
    // with a, b ∈ P* ∪ O and every p_i ∈ C.
    std::vector<Element> interior;
    std::function<void(Element, Element)> extend = [&](Element bottom, Element at) {
        for (Element next : P.upper_covers(at)) {
            if (in_chain[next]) {
                interior.push_back(next);
                extend(bottom, next);
                interior.pop_back();
                continue;
            }
            std::vector<Rational> coeffs(d, Rational(0));
            Rational rhs = 0;
            for (Element c : interior)
                coeffs[mp.coordinate(c)] += 1;
            if (mp.is_marked(bottom))
                rhs -= mp.mark(bottom);
            else
                coeffs[mp.coordinate(bottom)] += 1;
            if (mp.is_marked(next))
                rhs += mp.mark(next);
            else
                coeffs[mp.coordinate(next)] -= 1;
            bool zero = std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return sgn(c) == 0; });
            if (zero) {
                if (sgn(rhs) < 0) {
                    std::vector<Element> all{bottom};
                    all.insert(all.end(), interior.begin(), interior.end());
                    all.push_back(next);
                    throw Error(ErrorKind::InfeasibleMarking, "negative mark difference along " + id_list(mp, all));
                }
                continue;
            }
            h.add_inequality(std::move(coeffs), std::move(rhs));
        }
    };
    for (Element e = 0; e < P.size(); ++e)
        if (!in_chain[e])
            extend(e, e);
    return h;
}

FacePartition make_face_partition(const MarkedPoset& mp, std::vector<std::vector<Element>> blocks)
{
    std::vector<int> seen(mp.size(), 0);
    for (auto& block : blocks) {
        if (block.empty())
            throw Error(ErrorKind::InvalidArgument, "face partition has an empty block");
        std::sort(block.begin(), block.end());
        for (Element e : block) {
            if (e >= mp.size())
                throw Error(ErrorKind::InvalidArgument, "face partition references an unknown element");
            if (seen[e]++)
                throw Error(ErrorKind::InvalidArgument, "element " + mp.poset().id(e) + " occurs in two blocks");
        }
    }
    for (Element e = 0; e < mp.size(); ++e)
        if (!seen[e])
            throw Error(ErrorKind::InvalidArgument, "element " + mp.poset().id(e) + " is in no block");
    std::sort(blocks.begin(), blocks.end());
    FacePartition fp{std::move(blocks), {}};
    for (std::size_t i = 0; i < fp.blocks.size(); ++i)
        if (std::none_of(fp.blocks[i].begin(), fp.blocks[i].end(), [&](Element e) { return mp.is_marked(e); }))
            fp.free_blocks.push_back(i);
    return fp;
}

std::vector<Rational> element_values(const MarkedPoset& mp, const Point& x)
{
    if (x.size() != mp.unmarked().size())
        throw Error(ErrorKind::InvalidArgument, "point has " + std::to_string(x.size()) + " coordinates, expected " +
                                                    std::to_string(mp.unmarked().size()));
    std::vector<Rational> values(mp.size());
    for (Element e = 0; e < mp.size(); ++e)
        values[e] = mp.is_marked(e) ? mp.mark(e) : x[mp.coordinate(e)];
    return values;
}

namespace {

FacePartition partition_by_values(const MarkedPoset& mp, const std::vector<Rational>& values)
{
    const Poset& P = mp.poset();
    UnionFind uf(P.size());
    for (Element p = 0; p < P.size(); ++p)
        for (Element q = p + 1; q < P.size(); ++q)
            if (values[p] == values[q] && P.comparable(p, q))
                uf.unite(p, q);
    std::vector<std::vector<Element>> groups(P.size());
    for (Element e = 0; e < P.size(); ++e)
        groups[uf.find(e)].push_back(e);
    std::vector<std::vector<Element>> blocks;
    for (auto& g : groups)
        if (!g.empty())
            blocks.push_back(std::move(g));
    return make_face_partition(mp, std::move(blocks));
}

}  // namespace

FacePartition face_partition_of_point(const MarkedPoset& mp, const Point& x)
{
    std::vector<Rational> values = element_values(mp, x);
    for (const auto& [p, q] : mp.poset().covers())
        if (values[p] > values[q])
            throw Error(ErrorKind::PointOutsidePolytope,
                        "point violates " + mp.poset().id(p) + " ⪯ " + mp.poset().id(q));
    return partition_by_values(mp, values);
}

bool is_face_partition(const MarkedPoset& mp, const FacePartition& fp)
{
    const Poset& P = mp.poset();
    const std::size_t k = fp.blocks.size();
    std::vector<std::size_t> block_of(P.size(), k);
    for (std::size_t b = 0; b < k; ++b)
        for (Element e : fp.blocks[b]) {
            if (e >= P.size() || block_of[e] != k)
                throw Error(ErrorKind::InvalidArgument, "not a partition of the poset");
            block_of[e] = b;
        }
    if (std::find(block_of.begin(), block_of.end(), k) != block_of.end())
        throw Error(ErrorKind::InvalidArgument, "not a partition of the poset");

    // Connected as induced subposets.
    for (const auto& block : fp.blocks) {
        std::vector<unsigned char> reached(block.size(), 0);
        std::vector<std::size_t> stack{0};
        reached[0] = 1;
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < block.size(); ++j)
                if (!reached[j] && P.comparable(block[i], block[j])) {
                    reached[j] = 1;
                    stack.push_back(j);
                }
        }
        if (std::find(reached.begin(), reached.end(), 0) != reached.end())
            return false;
    }

    // Block order: transitive closure, then antisymmetry.
    std::vector<unsigned char> reach(k * k, 0);
    for (std::size_t b = 0; b < k; ++b)
        reach[b * k + b] = 1;
    for (const auto& [p, q] : P.covers())
        reach[block_of[p] * k + block_of[q]] = 1;
    for (std::size_t m = 0; m < k; ++m)
        for (std::size_t i = 0; i < k; ++i)
            if (reach[i * k + m])
                for (std::size_t j = 0; j < k; ++j)
                    if (reach[m * k + j])
                        reach[i * k + j] = 1;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (reach[i * k + j] && reach[j * k + i])
                return false;

    // Marks agree inside blocks; the quotient marking is strictly increasing.
    std::vector<const Rational*> block_mark(k, nullptr);
    for (std::size_t b = 0; b < k; ++b)
        for (Element e : fp.blocks[b]) {
            if (!mp.is_marked(e))
                continue;
            if (block_mark[b] && *block_mark[b] != mp.mark(e))
                return false;
            block_mark[b] = &mp.mark(e);
        }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i != j && reach[i * k + j] && block_mark[i] && block_mark[j] && *block_mark[i] >= *block_mark[j])
                return false;
    return true;
}

VRepresentation order_vertices_combinatorial(const MarkedPoset& mp)
{
    const Poset& P = mp.poset();
    std::vector<Rational> levels;
    for (Element a : mp.marked())
        levels.push_back(mp.mark(a));
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    // Unmarked elements in a linear extension order, so every lower element is
    // assigned before its upper neighbours.
    Labeling label = greedy_labeling(P);
    std::vector<Element> order = mp.unmarked();
    std::sort(order.begin(), order.end(), [&](Element a, Element b) { return label[a] < label[b]; });

    const std::size_t cap = work_cap(10'000'000);
    std::size_t nodes = 0;
    std::vector<Rational> values(P.size());
    std::vector<unsigned char> assigned(P.size(), 0);
    for (Element a : mp.marked()) {
        values[a] = mp.mark(a);
        assigned[a] = 1;
    }
    std::vector<Point> found;
    std::function<void(std::size_t)> assign = [&](std::size_t i) {
        if (++nodes > cap)
            throw Error(ErrorKind::WorkCapExceeded, "combinatorial vertex search exceeded " + std::to_string(cap) +
                                                        " nodes");
        if (i == order.size()) {
            FacePartition fp = partition_by_values(mp, values);
            if (fp.free_blocks.empty()) {
                Point x(order.size());
                for (Element p : mp.unmarked())
                    x[mp.coordinate(p)] = values[p];
                found.push_back(std::move(x));
            }
            return;
        }
        Element p = order[i];
        const Rational* lo = nullptr;
        const Rational* hi = nullptr;
        for (Element q = 0; q < P.size(); ++q) {
            if (q == p || !assigned[q])
                continue;
            if (P.leq(q, p) && (!lo || values[q] > *lo))
                lo = &values[q];
            if (P.leq(p, q) && (!hi || values[q] < *hi))
                hi = &values[q];
        }
        assigned[p] = 1;
        for (const auto& v : levels) {
            if ((lo && v < *lo) || (hi && v > *hi))
                continue;
            values[p] = v;
            assign(i + 1);
        }
        assigned[p] = 0;
    };
    assign(0);
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return {std::move(found)};
}

std::vector<LinearInequality> order_facets_combinatorial(const MarkedPoset& mp)
{
    const std::size_t d = mp.unmarked().size();
    std::vector<LinearInequality> out;
    for (const auto& [p, q] : mp.poset().covers()) {
        if (mp.is_marked(p) && mp.is_marked(q))
            continue;
        LinearInequality row{std::vector<Rational>(d, Rational(0)), Rational(0)};
        if (mp.is_marked(p))
            row.rhs -= mp.mark(p);
        else
            row.coeffs[mp.coordinate(p)] += 1;
        if (mp.is_marked(q))
            row.rhs += mp.mark(q);
        else
            row.coeffs[mp.coordinate(q)] -= 1;
        row.normalize();
        out.push_back(std::move(row));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool covers_define_facets(const MarkedPoset& mp)
{
    const Poset& P = mp.poset();
    for (const auto& [p, q] : P.covers()) {
        if (mp.is_marked(p) && mp.is_marked(q))
            continue;
        std::vector<std::vector<Element>> blocks;
        for (Element e = 0; e < P.size(); ++e)
            if (e != p && e != q)
                blocks.push_back({e});
        blocks.push_back({p, q});
        if (!is_face_partition(mp, make_face_partition(mp, std::move(blocks))))
            return false;
    }
    return true;
}

MarkedPoset restrict_marked_poset(const MarkedPoset& mp, const std::vector<Element>& keep)
{
    std::vector<unsigned char> kept(mp.size(), 0);
    for (Element e : keep)
        kept.at(e) = 1;
    std::map<ElementId, Rational> marks;
    for (Element a : mp.marked()) {
        if (!kept[a])
            throw Error(ErrorKind::InvalidArgument, "restriction drops marked element " + mp.poset().id(a));
        marks.emplace(mp.poset().id(a), mp.mark(a));
    }
    return MarkedPoset(mp.poset().induced(keep), marks);
}

MarkedPoset disjoint_union(const MarkedPoset& a, const MarkedPoset& b)
{
    std::vector<ElementId> ids;
    std::vector<std::pair<ElementId, ElementId>> covers;
    std::map<ElementId, Rational> marks;
    auto absorb = [&](const MarkedPoset& part, const std::string& prefix) {
        const Poset& P = part.poset();
        for (const auto& id : P.ids())
            ids.push_back(prefix + id);
        for (const auto& [p, q] : P.covers())
            covers.emplace_back(prefix + P.id(p), prefix + P.id(q));
        for (Element m : part.marked())
            marks.emplace(prefix + P.id(m), part.mark(m));
    };
    absorb(a, "0:");
    absorb(b, "1:");
    return MarkedPoset(Poset(std::move(ids), covers), marks);
}

}  // namespace mpp
