#include "mpp/corpus.hpp"

#include "mpp/ehrhart.hpp"
#include "mpp/error.hpp"
#include "mpp/marked_polytopes.hpp"
#include "mpp/two_level.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>

namespace mpp {

namespace {

std::optional<MarkedPoset> try_sample(std::mt19937_64& rng, const CorpusOptions& options)
{
    const std::size_t n = 2 + rng() % (options.max_unmarked + 3);
    const unsigned density = 20 + rng() % 41;  // percent

    // Edges only run from lower to higher index, so the index order is topological.
    std::vector<unsigned char> less(n * n, 0);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng() % 100 < density) {
                edges.emplace_back(i, j);
                less[i * n + j] = 1;
            }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < k; ++i)
            if (less[i * n + k])
                for (std::size_t j = k + 1; j < n; ++j)
                    if (less[k * n + j])
                        less[i * n + j] = 1;

    std::vector<unsigned char> marked(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        bool has_lower = false, has_upper = false;
        for (std::size_t j = 0; j < n; ++j) {
            has_lower = has_lower || less[j * n + i];
            has_upper = has_upper || less[i * n + j];
        }
        marked[i] = !has_lower || !has_upper;
    }
    std::size_t extras = rng() % (options.max_extra_marked + 1);
    for (std::size_t t = 0; t < extras; ++t)
        marked[rng() % n] = 1;
    const std::size_t free = static_cast<std::size_t>(std::count(marked.begin(), marked.end(), 0));
    if (free < 1 || free > options.max_unmarked)
        return std::nullopt;

    std::vector<int> above(n, 0);
    for (std::size_t i = n; i-- > 0;)
        for (std::size_t j = i + 1; j < n; ++j)
            if (marked[i] && marked[j] && less[i * n + j])
                above[i] = std::max(above[i], above[j] + 1);
    std::vector<int> mark(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!marked[i])
            continue;
        int lo = 0;
        for (std::size_t j = 0; j < i; ++j)
            if (marked[j] && less[j * n + i])
                lo = std::max(lo, mark[j] + 1);
        int hi = options.max_mark - above[i];
        if (lo > hi)
            return std::nullopt;
        mark[i] = lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
    }

    std::vector<ElementId> ids(n);
    std::size_t next_marked = 0, next_free = 0;
    for (std::size_t i = 0; i < n; ++i)
        ids[i] = marked[i] ? "a" + std::to_string(next_marked++) : "x" + std::to_string(next_free++);
    std::vector<std::pair<ElementId, ElementId>> relations;
    for (const auto& [i, j] : edges)
        relations.emplace_back(ids[i], ids[j]);
    std::map<ElementId, Rational> marks;
    for (std::size_t i = 0; i < n; ++i)
        if (marked[i])
            marks.emplace(ids[i], Rational(mark[i]));
    MarkedPoset mp(Poset::from_relations(ids, relations), marks);
    if (!is_strict(mp) || !is_regular(mp))
        return std::nullopt;
    return mp;
}

}  // namespace

MarkedPoset random_marked_poset(std::mt19937_64& rng, const CorpusOptions& options)
{
    if (options.max_unmarked < 1)
        throw Error(ErrorKind::InvalidArgument, "corpus needs at least one unmarked element");
    for (int attempt = 0; attempt < 100'000; ++attempt)
        if (auto mp = try_sample(rng, options))
            return *std::move(mp);
    throw Error(ErrorKind::WorkCapExceeded, "no strict regular marked poset found within 100000 attempts");
}

std::vector<MarkedPoset> generate_corpus(std::uint64_t seed, std::size_t count, const CorpusOptions& options)
{
    std::mt19937_64 rng(seed);
    std::vector<MarkedPoset> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(random_marked_poset(rng, options));
    return out;
}

bool CorpusReport::all_passed() const
{
    return std::all_of(suites.begin(), suites.end(), [](const SuiteTally& s) { return s.failed == 0; });
}

namespace {

const char* const kSuites[] = {"order-two-level", "chain-two-level", "ehrhart-formula", "ehrhart-order-chain"};
constexpr std::size_t kSuiteCount = 4;

struct TrialOutcome {
    std::array<std::string, kSuiteCount> failure;  // empty = pass
};

template <class F>
std::string guarded(F&& check)
{
    try {
        return check();
    } catch (const std::exception& e) {
        return std::string("error: ") + e.what();
    }
}

TrialOutcome run_trial(const MarkedPoset& mp)
{
    TrialOutcome out;
    out.failure[0] = guarded([&]() -> std::string {
        bool direct = is_two_level_direct(build_order_hrep(mp)).two_level;
        bool crit = order_two_level_criterion(mp);
        return direct == crit ? "" : "direct " + std::to_string(direct) + ", criterion " + std::to_string(crit);
    });
    out.failure[1] = guarded([&]() -> std::string {
        bool direct = is_two_level_direct(build_chain_hrep(mp)).two_level;
        bool crit = chain_two_level_criterion(mp).two_level;
        return direct == crit ? "" : "direct " + std::to_string(direct) + ", criterion " + std::to_string(crit);
    });
    UnivariatePolynomial order_count;
    out.failure[2] = guarded([&]() -> std::string {
        order_count = ehrhart_by_counting(build_order_hrep(mp));
        UnivariatePolynomial formula = ehrhart_formula_marked_order(mp);
        return formula == order_count ? "" : "formula [" + to_string(formula) + "], count [" + to_string(order_count) + "]";
    });
    out.failure[3] = guarded([&]() -> std::string {
        UnivariatePolynomial order = order_count.is_zero() ? ehrhart_by_counting(build_order_hrep(mp)) : order_count;
        UnivariatePolynomial chain = ehrhart_by_counting(build_chain_hrep(mp));
        return order == chain ? "" : "order [" + to_string(order) + "], chain [" + to_string(chain) + "]";
    });
    return out;
}

std::string describe_poset(const MarkedPoset& mp)
{
    std::ostringstream os;
    os << "covers";
    for (const auto& [p, q] : mp.poset().covers())
        os << ' ' << mp.poset().id(p) << '<' << mp.poset().id(q);
    os << "; marks";
    for (Element a : mp.marked())
        os << ' ' << mp.poset().id(a) << '=' << to_string(mp.mark(a));
    return os.str();
}

}  // namespace

CorpusReport run_corpus(std::uint64_t seed, std::size_t trials, const CorpusOptions& options)
{
    std::vector<MarkedPoset> corpus = generate_corpus(seed, trials, options);
    std::vector<TrialOutcome> outcomes(trials);
    const long count = static_cast<long>(trials);
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i)
        outcomes[static_cast<std::size_t>(i)] = run_trial(corpus[static_cast<std::size_t>(i)]);

    CorpusReport report;
    report.seed = seed;
    report.trials = trials;
    for (std::size_t s = 0; s < kSuiteCount; ++s) {
        SuiteTally tally;
        tally.name = kSuites[s];
        for (std::size_t i = 0; i < trials; ++i) {
            const std::string& f = outcomes[i].failure[s];
            if (f.empty()) {
                ++tally.passed;
            } else {
                ++tally.failed;
                tally.failures.push_back("trial " + std::to_string(i) + ": " + f + " (" + describe_poset(corpus[i]) + ")");
            }
        }
        report.suites.push_back(std::move(tally));
    }
    return report;
}

std::string format_report(const CorpusReport& report)
{
    std::ostringstream os;
    os << "seed " << report.seed << ", " << report.trials << " trials\n";
    for (const auto& s : report.suites) {
        os << s.name << ": " << s.passed << "/" << (s.passed + s.failed) << " pass\n";
        for (const auto& f : s.failures)
            os << "  " << f << "\n";
    }
    os << (report.all_passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace mpp
