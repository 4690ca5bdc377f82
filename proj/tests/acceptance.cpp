// Acceptance harness: one [PASS]/[FAIL] line per criterion, exit 1 on any failure.
#include "mpp/ehrhart.hpp"
#include "mpp/marked_polytopes.hpp"
#include "mpp/two_level.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace mpp;
using namespace testing;

namespace {

struct Verdict {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail << "first failure: " << what;
        } else if (!cond) {
            ok = false;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_seconds, const std::function<void(Verdict&)>& body)
{
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(v);
    } catch (const std::exception& e) {
        v.ok = false;
        v.detail << "exception: " << e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < limit_seconds;
    const bool pass = v.ok && in_time;
    if (!pass)
        ++failures;
    std::printf("[%s] %d %s (%.2f s, limit %.0f s)", pass ? "PASS" : "FAIL", id, name.c_str(), seconds,
                limit_seconds);
    std::string detail = v.detail.str();
    if (!in_time)
        detail += detail.empty() ? "over time limit" : "; over time limit";
    if (!detail.empty())
        std::printf(" %s", detail.c_str());
    std::printf("\n");
    std::fflush(stdout);
}

std::string show(const MarkedPoset& mp)
{
    std::ostringstream out;
    for (const auto& [p, q] : mp.poset().covers())
        out << mp.poset().id(p) << "<" << mp.poset().id(q) << " ";
    for (Element a : mp.marked())
        out << mp.poset().id(a) << "=" << mp.mark(a) << " ";
    return out.str();
}

UnivariatePolynomial pm_expected(int m, int c)
{
    // (m-2)·nc·(nc+1)^(m-1) + (nc+1)^(m-1), built from scratch.
    UnivariatePolynomial nc({Rational(0), Rational(c)});
    UnivariatePolynomial nc1({Rational(1), Rational(c)});
    UnivariatePolynomial pw({Rational(1)});
    for (int i = 0; i < m - 1; ++i)
        pw *= nc1;
    return UnivariatePolynomial({Rational(m - 2)}) * nc * pw + pw;
}

}  // namespace

int main()
{
    // Shared corpus for criteria 4, 5, 7: strict regular, ≤ 5 unmarked, marks in {0..4}.
    const std::vector<MarkedPoset> main_corpus = corpus(2024, 200, 5);
    std::vector<bool> order_verdicts, chain_verdicts;

    criterion(1, "two-chains chain polytope", 1.0, [](Verdict& v) {
        MarkedPoset fig = two_chains();
        HRepresentation h = build_chain_hrep(fig);
        v.expect(h.inequalities().size() == 5, "expected 5 inequalities");
        HRepresentation irr = irredundant(h);
        const LinearInequality dropped = make_inequality({Rational(1), Rational(1)}, Rational(2));
        v.expect(irr.inequalities().size() == 4, "irredundant keeps 4 rows");
        bool only_dropped = true;
        for (const auto& row : h.inequalities()) {
            const bool kept =
                std::find(irr.inequalities().begin(), irr.inequalities().end(), row) != irr.inequalities().end();
            only_dropped = only_dropped && (kept != (row == dropped));
        }
        v.expect(only_dropped, "irredundant drops exactly x1 + x2 <= 2");
        std::vector<Point> square{pt({0, 0}), pt({0, 1}), pt({1, 0}), pt({1, 1})};
        v.expect(enumerate_vertices(h).vertices == square, "vertices are the unit square");
        v.expect(chain_two_level_criterion(fig).two_level, "chain criterion true");
        v.detail << "";
    });

    criterion(2, "P_m closed forms", 60.0, [](Verdict& v) {
        for (int m = 3; m <= 6; ++m)
            for (int c = 1; c <= 2; ++c) {
                auto formula = ehrhart_formula_marked_order(pm_family(m, c));
                v.expect(formula == pm_expected(m, c),
                         "formula for m=" + std::to_string(m) + " c=" + std::to_string(c));
            }
        for (auto [m, c] : {std::pair{3, 1}, std::pair{3, 2}, std::pair{4, 1}})
            v.expect(ehrhart_by_counting(build_order_hrep(pm_family(m, c))) == pm_expected(m, c),
                     "counting for m=" + std::to_string(m) + " c=" + std::to_string(c));
    });

    criterion(3, "P_m extension census 2m-4", 5.0, [](Verdict& v) {
        for (int m = 3; m <= 6; ++m)
            v.expect(count_linear_extensions(ehrhart_extension_poset(pm_family(m, 1))) ==
                         static_cast<std::size_t>(2 * m - 4),
                     "m=" + std::to_string(m));
    });

    criterion(4, "order criterion vs direct test", 300.0, [&](Verdict& v) {
        std::size_t positives = 0;
        for (const auto& mp : main_corpus) {
            const bool crit = order_two_level_criterion(mp);
            order_verdicts.push_back(crit);
            positives += crit;
            v.expect(crit == is_two_level_direct(build_order_hrep(mp)).two_level, show(mp));
        }
        v.detail << main_corpus.size() << " posets, " << positives << " 2-level";
    });

    criterion(5, "chain criterion vs direct test", 300.0, [&](Verdict& v) {
        std::size_t positives = 0;
        for (const auto& mp : main_corpus) {
            const bool crit = chain_two_level_criterion(mp).two_level;
            chain_verdicts.push_back(crit);
            positives += crit;
            v.expect(crit == is_two_level_direct(build_chain_hrep(mp)).two_level, show(mp));
        }
        v.detail << main_corpus.size() << " posets, " << positives << " 2-level";
    });

    criterion(6, "chain-order criterion vs direct test", 600.0, [&](Verdict& v) {
        std::size_t posets = 0, instances = 0, positives = 0;
        for (std::size_t i = 0; i < main_corpus.size(); ++i) {
            const MarkedPoset& mp = main_corpus[i];
            if (mp.unmarked().size() > 4)
                continue;
            ++posets;
            for (const auto& part : all_partitions(mp)) {
                const bool crit = chain_order_two_level_criterion(mp, part);
                ++instances;
                positives += crit;
                v.expect(crit == is_two_level_direct(build_chain_order_hrep(mp, part)).two_level, show(mp));
                if (part.chain.empty() && i < order_verdicts.size())
                    v.expect(crit == order_verdicts[i], "C empty column differs from criterion 4: " + show(mp));
                if (part.order.empty() && i < chain_verdicts.size())
                    v.expect(crit == chain_verdicts[i], "O empty column differs from criterion 5: " + show(mp));
            }
        }
        v.expect(posets >= 50, "fewer than 50 posets with at most 4 unmarked elements");
        v.detail << posets << " posets, " << instances << " partitions, " << positives << " 2-level";
    });

    criterion(7, "Ehrhart polynomials across families", 600.0, [&](Verdict& v) {
        std::size_t polytopes = 0;
        for (const auto& mp : main_corpus) {
            const auto order = ehrhart_by_counting(build_order_hrep(mp));
            v.expect(ehrhart_formula_marked_order(mp) == order, "formula vs count: " + show(mp));
            v.expect(ehrhart_by_counting(build_chain_hrep(mp)) == order, "chain: " + show(mp));
            polytopes += 2;
            for (const auto& part : all_partitions(mp)) {
                if (part.chain.empty() || part.order.empty())
                    continue;
                v.expect(ehrhart_by_counting(build_chain_order_hrep(mp, part)) == order, "chain-order: " + show(mp));
                ++polytopes;
            }
        }
        v.detail << polytopes << " polytopes";
    });

    criterion(8, "face partitions of points", 60.0, [&](Verdict& v) {
        std::mt19937_64 rng(808);
        std::size_t vertices = 0;
        for (std::size_t i = 0; i < 20; ++i) {
            const MarkedPoset& mp = main_corpus[i];
            auto vrep = enumerate_vertices(build_order_hrep(mp));
            for (int t = 0; t < 5; ++t) {
                Point x = random_point(vrep, rng, t % 2 == 1);
                v.expect(is_face_partition(mp, face_partition_of_point(mp, x)), "random point: " + show(mp));
            }
            for (const auto& x : vrep.vertices) {
                FacePartition fp = face_partition_of_point(mp, x);
                v.expect(is_face_partition(mp, fp), "vertex: " + show(mp));
                v.expect(fp.free_blocks.empty(), "vertex with a free block: " + show(mp));
                ++vertices;
            }
        }
        v.detail << "100 points, " << vertices << " vertices";
    });

    criterion(9, "unimodular affine invariance", 120.0, [&](Verdict& v) {
        std::mt19937_64 rng(909);
        for (std::size_t i = 0; i < 20; ++i) {
            const MarkedPoset& mp = main_corpus[i];
            HRepresentation h = i % 2 ? build_chain_hrep(mp) : build_order_hrep(mp);
            auto vrep = enumerate_vertices(h);
            const bool verdict = is_two_level_direct(h).two_level;
            const Integer c1 = count_lattice_points(h, vrep, 1), c2 = count_lattice_points(h, vrep, 2);
            for (int t = 0; t < 5; ++t) {
                HRepresentation image = testing::apply(random_unimodular(h.ambient_dimension(), rng), h);
                v.expect(is_two_level_direct(image).two_level == verdict, "2-level verdict: " + show(mp));
                v.expect(count_lattice_points(image, 1) == c1, "count n=1: " + show(mp));
                v.expect(count_lattice_points(image, 2) == c2, "count n=2: " + show(mp));
            }
        }
        v.detail << "20 polytopes, 5 maps each";
    });

    return failures == 0 ? 0 : 1;
}
