#pragma once

#include "mpp/rational.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mpp {

using ElementId = std::string;
/// Index of an element inside its poset. Indices follow lexicographic id order.
using Element = std::size_t;

/// A finite poset given by its covering relations.
///
/// Elements are stored sorted by id, so every derived ordering (components,
/// chains, vertex coordinates) is deterministic. The constructor rejects
/// duplicate ids, unknown ids, cycles and covers implied by other covers.
class Poset {
public:
    Poset() = default;
    Poset(std::vector<ElementId> elements, const std::vector<std::pair<ElementId, ElementId>>& covers);

    /// Builds the poset generated by an arbitrary (acyclic) relation list and
    /// keeps only its transitive reduction as covers.
    static Poset from_relations(std::vector<ElementId> elements,
                                const std::vector<std::pair<ElementId, ElementId>>& relations);

    std::size_t size() const { return ids_.size(); }
    const ElementId& id(Element e) const { return ids_.at(e); }
    const std::vector<ElementId>& ids() const { return ids_; }
    Element index(const ElementId& id) const;
    std::optional<Element> find(const ElementId& id) const;

    /// p ⪯ q in the transitive closure.
    bool leq(Element p, Element q) const { return leq_[p * ids_.size() + q] != 0; }
    bool less(Element p, Element q) const { return p != q && leq(p, q); }
    bool comparable(Element p, Element q) const { return leq(p, q) || leq(q, p); }

    const std::vector<std::pair<Element, Element>>& covers() const { return covers_; }
    const std::vector<Element>& upper_covers(Element e) const { return up_.at(e); }
    const std::vector<Element>& lower_covers(Element e) const { return down_.at(e); }
    bool is_cover(Element p, Element q) const;

    std::vector<Element> minimal() const;
    std::vector<Element> maximal() const;

    /// Subposet induced on `keep`; covers are recomputed from the induced order.
    Poset induced(const std::vector<Element>& keep) const;

private:
    void build(std::vector<ElementId> elements, const std::vector<std::pair<Element, Element>>& relations,
               bool require_irredundant);

    std::vector<ElementId> ids_;
    std::map<ElementId, Element> index_;
    std::vector<std::pair<Element, Element>> covers_;
    std::vector<std::vector<Element>> up_;
    std::vector<std::vector<Element>> down_;
    std::vector<unsigned char> leq_;
};

bool transitive_relation(const Poset& poset, const ElementId& p, const ElementId& q);

/// A poset with marked elements P* carrying values λ. The marking must cover
/// min(P) ∪ max(P) and be order preserving.
class MarkedPoset {
public:
    MarkedPoset() = default;
    MarkedPoset(Poset poset, const std::map<ElementId, Rational>& marking);

    const Poset& poset() const { return poset_; }
    std::size_t size() const { return poset_.size(); }
    bool is_marked(Element e) const { return marked_flag_.at(e) != 0; }
    const Rational& mark(Element e) const;
    const std::vector<Element>& marked() const { return marked_; }
    const std::vector<Element>& unmarked() const { return unmarked_; }
    std::map<ElementId, Rational> marking() const;
    bool integral_marking() const;

    /// Position of an unmarked element among the polytope coordinates.
    std::size_t coordinate(Element e) const;
    /// Coordinate ids: the unmarked elements in id order.
    std::vector<std::string> coordinate_ids() const;

private:
    Poset poset_;
    std::vector<unsigned char> marked_flag_;
    std::vector<Rational> marks_;
    std::vector<Element> marked_;
    std::vector<Element> unmarked_;
    std::vector<std::size_t> coordinate_;
};

struct Violation {
    enum class Kind { NotStrict, NotRegular };
    Kind kind;
    /// NotStrict: (a, b) with a ≺ b and λ(a) ≥ λ(b).
    /// NotRegular: (p, q, a, b) for cover p ≺ q, a ⪯ q, p ⪯ b, a ≠ b, λ(a) ≥ λ(b).
    std::vector<Element> witness;
};

struct ValidationReport {
    bool strict = true;
    bool regular = true;
    std::vector<Violation> violations;
};

ValidationReport validate_marked(const MarkedPoset& mp);
std::string describe(const MarkedPoset& mp, const Violation& v);
bool is_strict(const MarkedPoset& mp);
bool is_regular(const MarkedPoset& mp);

/// Connected components of the undirected Hasse diagram, each sorted, ordered
/// by least element.
std::vector<std::vector<Element>> hasse_components(const Poset& poset);
std::vector<std::vector<Element>> hasse_components(const MarkedPoset& mp);

/// Saturated chain a ≺ p_1 ≺ … ≺ p_k ≺ b with a, b marked and every p_i unmarked.
struct MarkedChain {
    Element bottom;
    std::vector<Element> interior;
    Element top;

    auto operator<=>(const MarkedChain&) const = default;
};

std::vector<MarkedChain> maximal_marked_chains(const MarkedPoset& mp);

/// P plus a ≺ b for every marked pair with λ(a) < λ(b), reduced to covers.
Poset augment_marked_order(const MarkedPoset& mp);

/// Chain elements C and order elements O: together they partition P \ P*.
struct ChainOrderPartition {
    std::vector<Element> chain;
    std::vector<Element> order;
};

ChainOrderPartition make_partition(const MarkedPoset& mp, const std::vector<ElementId>& chain,
                                   const std::vector<ElementId>& order);
/// Throws InvalidArgument unless `part` partitions the unmarked elements.
void check_partition(const MarkedPoset& mp, const ChainOrderPartition& part);
/// All 2^|P \ P*| partitions, indexed by the bitmask of chain elements over `unmarked()`.
std::vector<ChainOrderPartition> all_partitions(const MarkedPoset& mp);

/// label[e] ∈ {1, …, n}; natural when p ≺ q implies label[p] < label[q].
using Labeling = std::vector<std::size_t>;

bool is_natural_labeling(const Poset& poset, const Labeling& labeling);
/// Topological sort that always removes the available element with smallest id.
Labeling greedy_labeling(const Poset& poset);

/// A linear extension x_1 … x_n with d_i = #{j ≤ i−1 : label(x_j) > label(x_{j+1})}.
struct ExtensionWord {
    std::vector<Element> word;
    std::vector<int> descent_prefix;

    int descents() const { return descent_prefix.empty() ? 0 : descent_prefix.back(); }
};

/// Streams the linear extensions in lexicographic order of labels; the visitor
/// returns false to stop early.
void for_each_linear_extension(const Poset& poset, const Labeling& labeling,
                               const std::function<bool(const ExtensionWord&)>& visit);
std::vector<ExtensionWord> linear_extensions(const Poset& poset, const Labeling& labeling);
std::vector<ExtensionWord> linear_extensions(const Poset& poset);
std::size_t count_linear_extensions(const Poset& poset);

}  // namespace mpp
