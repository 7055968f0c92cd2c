#include <doctest.h>

#include <algorithm>
#include <random>

#include "gring/method.hpp"
#include "support.hpp"

using namespace gring;
using namespace gring::testsupport;

namespace {

PAVector concentrated(const CharacterTable& t, long m, const std::string& cname) {
    PAVector v;
    v.classes = classes_of_order_dividing(t, m);
    for (const std::string& c : v.classes) v.values.push_back(c == cname ? 1 : 0);
    return v;
}

// powers of an actual group element, read off the table's power maps
PowerScenario element_scenario(const CharacterTable& t, const std::string& cname) {
    const long k = t.cls(cname).order;
    PowerScenario sc;
    for (long m : divisors(k))
        if (m > 1 && m < k) sc.powers[m] = concentrated(t, m, class_power(t, cname, k / m));
    return sc;
}

const ConstraintRow& row_labelled(const IntegerLinearSystem& s, const std::string& label) {
    for (const ConstraintRow& r : s.rows)
        if (r.label == label) return r;
    REQUIRE_MESSAGE(false, "no row labelled '" << label << "'");
    static ConstraintRow dummy;
    return dummy;
}

Integer row_at(const ConstraintRow& r, const std::vector<Integer>& x) {
    Integer v = r.constant;
    for (size_t i = 0; i < x.size(); ++i) v += r.coeffs[i] * x[i];
    return v;
}

std::vector<Integer> iv(std::initializer_list<long> xs) {
    std::vector<Integer> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

std::vector<std::vector<Integer>> tuples(std::initializer_list<std::initializer_list<long>> xss) {
    std::vector<std::vector<Integer>> out;
    for (const auto& xs : xss) out.push_back(iv(xs));
    return out;
}

std::vector<std::vector<Integer>> solution_values(const OrderResult& r) {
    std::vector<std::vector<Integer>> out;
    for (const PAVector& p : r.solutions) out.push_back(p.values);
    return out;
}

// three-class table for a unit of order s*t: one class per prime, one
// character with rational values xi on them
CharacterTable two_prime_table(long s, long t, long xi_s, long xi_t, long deg) {
    CharacterTable tab;
    tab.group = "P" + std::to_string(s) + "Q" + std::to_string(t);
    tab.order_factored = {{s, 1}, {t, 1}};
    tab.exponent = s * t;
    tab.classes = {
        {"1a", 1, std::nullopt, {{s, "1a"}, {t, "1a"}}},
        {"sA", s, std::nullopt, {{s, "1a"}, {t, "sA"}}},
        {"tA", t, std::nullopt, {{s, "tA"}, {t, "1a"}}},
    };
    CharacterRow r;
    r.id = "chi";
    r.values = {Cyc::from_rational(deg), Cyc::from_rational(xi_s), Cyc::from_rational(xi_t)};
    tab.ordinary.push_back(std::move(r));
    return tab;
}

// k times the average over the cyclic group of u: recomputed from scratch in
// field arithmetic, independently of the row assembly
Integer direct_value(const CharacterTable& t, const CharacterRow& chi,
                     const std::vector<std::string>& cls, long k, long l,
                     const std::vector<std::string>& vars, const std::vector<Integer>& x,
                     const PowerScenario& sc) {
    auto value = [&](const std::string& name) -> const Cyc& {
        for (size_t i = 0; i < cls.size(); ++i)
            if (cls[i] == name) return chi.values[i];
        throw DomainError("no value on " + name);
    };
    Rational total(t.degree(chi)); // the order-1 power is the identity
    for (long d : divisors(k)) {
        if (d == k) continue;
        const long m = k / d;
        Cyc at_power;
        if (d == 1) {
            for (size_t i = 0; i < vars.size(); ++i)
                at_power = at_power + value(vars[i]) * Cyc::from_rational(Rational(x[i]));
        } else {
            const PAVector& pa = sc.powers.at(m);
            for (size_t i = 0; i < pa.classes.size(); ++i)
                at_power = at_power + value(pa.classes[i]) * Cyc::from_rational(Rational(pa.values[i]));
        }
        total += (at_power * Cyc::root_of_unity(m, -l)).lifted(m).trace_to_rationals();
    }
    REQUIRE(is_integral(total));
    return as_integer(total);
}

} // namespace

TEST_CASE("order-5 rows on the mod-11 slice match the stored system") {
    const CharacterTable t = make_slice5();
    MuOptions raw;
    raw.dedup = false;
    const IntegerLinearSystem sys = build_mu_system(t, 5, {}, raw);

    CHECK(sys.name == "sl5 order 5");
    CHECK(sys.variables == std::vector<std::string>{"5a", "5b"});
    CHECK(sys.rows.size() == 20); // the trivial row plus three mod-11 rows, five residues each
    CHECK(sys.congruences.empty());
    REQUIRE(sys.equalities.size() == 1);
    CHECK(sys.equalities[0].coeffs == iv({1, 1}));
    CHECK(sys.equalities[0].constant == 1);

    struct Expect {
        const char* label;
        std::vector<Integer> coeffs;
        long constant;
    };
    const Expect expected[] = {
        {"phi2[11] l=1", iv({3, -2}), 7},    {"phi2[11] l=2", iv({-2, 3}), 7},
        {"phi3[11] l=1", iv({-4, 1}), 14},   {"phi3[11] l=2", iv({1, -4}), 14},
        {"phi12[11] l=1", iv({4, -1}), 106}, {"phi12[11] l=2", iv({-1, 4}), 106},
    };
    for (const Expect& e : expected) {
        const ConstraintRow& r = row_labelled(sys, e.label);
        CHECK(r.coeffs == e.coeffs);
        CHECK(r.constant == e.constant);
        CHECK(r.modulus == 5);
    }

    SolutionStore store;
    const OrderResult res = solve_order(t, 5, store);
    CHECK(res.possible);
    CHECK_FALSE(res.killed_by_power);
    CHECK(res.scenario_count == 1);
    CHECK_FALSE(res.all_trivial);
    CHECK(solution_values(res) == tuples({{-1, 2}, {0, 1}, {1, 0}, {2, -1}}));
    CHECK(store.by_order.at(5).size() == 4);
}

TEST_CASE("order-19 rows on the period slice match the stored system") {
    const CharacterTable t = make_slice19();
    MuOptions raw;
    raw.dedup = false;
    const IntegerLinearSystem sys = build_mu_system(t, 19, {}, raw);
    CHECK(sys.rows.size() == 4 * 19);

    struct Expect {
        const char* label;
        std::vector<Integer> coeffs;
        long constant;
    };
    const Expect expected[] = {
        {"phi2[11] l=1", iv({-7, 12, -7}), 7},     {"phi2[11] l=2", iv({-7, -7, 12}), 7},
        {"phi2[11] l=4", iv({12, -7, -7}), 7},     {"phi8[11] l=1", iv({7, -12, 7}), 69},
        {"phi8[11] l=2", iv({7, 7, -12}), 69},     {"phi8[11] l=4", iv({-12, 7, 7}), 69},
        {"phi13[11] l=1", iv({14, -5, -5}), 119},  {"phi13[11] l=2", iv({-5, 14, -5}), 119},
        {"phi13[11] l=4", iv({-5, -5, 14}), 119},
    };
    for (const Expect& e : expected) {
        const ConstraintRow& r = row_labelled(sys, e.label);
        CHECK(r.coeffs == e.coeffs);
        CHECK(r.constant == e.constant);
        CHECK(r.modulus == 19);
    }

    SolutionStore store;
    const OrderResult res = solve_order(t, 19, store);
    CHECK(res.possible);
    CHECK(res.all_trivial);
    CHECK(solution_values(res) == tuples({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
}

TEST_CASE("two-prime shortcut rows agree with the generic builder") {
    std::mt19937_64 rng(20260823);
    const std::pair<long, long> pairs[] = {{2, 7},  {3, 7},  {2, 11}, {3, 11}, {5, 7},
                                           {2, 19}, {5, 11}, {3, 19}, {7, 11}, {5, 19},
                                           {7, 19}, {11, 19}, {2, 17}, {3, 17}, {5, 17}};
    for (const auto& [s, q] : pairs) {
        const long xi_s = static_cast<long>(rng() % 13) - 6;
        const long xi_q = static_cast<long>(rng() % 13) - 6;
        const long deg = 1 + static_cast<long>(rng() % 200);
        const CharacterTable tab = two_prime_table(s, q, xi_s, xi_q, deg);

        PowerScenario sc;
        sc.powers[s] = concentrated(tab, s, "sA");
        sc.powers[q] = concentrated(tab, q, "tA");
        MuOptions raw;
        raw.dedup = false;
        const IntegerLinearSystem sys = build_mu_system(tab, s * q, sc, raw);
        REQUIRE(sys.variables == std::vector<std::string>{"sA", "tA"});

        for (long l = 0; l < s * q; ++l) {
            const ConstraintRow& r = row_labelled(sys, "chi l=" + std::to_string(l));
            const PqRow pq = build_pq_row(s, q, xi_s, xi_q, deg, l);
            CHECK(r.constant == pq.m1);
            CHECK(r.coeffs[0] == pq.ms);
            CHECK(r.coeffs[1] == pq.mt);
        }
    }
}

TEST_CASE("row values match a direct trace recomputation") {
    std::mt19937_64 rng(20260823);
    auto random_pa = [&](const CharacterTable& t, long m) {
        PAVector v;
        v.classes = classes_of_order_dividing(t, m);
        Integer sum = 0;
        for (size_t i = 0; i + 1 < v.classes.size(); ++i) {
            const long val = static_cast<long>(rng() % 5) - 2;
            v.values.emplace_back(val);
            sum += val;
        }
        v.values.push_back(1 - sum);
        return v;
    };

    const std::pair<CharacterTable, long> jobs[] = {
        {make_cyclic(6), 6}, {make_cyclic(4), 4}, {make_d8(), 4},
        {make_a4(), 6},      {make_s3(), 6},      {make_slice5(), 5},
    };
    for (const auto& [t, k] : jobs) {
        for (int rep = 0; rep < 3; ++rep) {
            PowerScenario sc;
            for (long m : divisors(k))
                if (m > 1 && m < k) sc.powers[m] = random_pa(t, m);
            MuOptions raw;
            raw.dedup = false;
            const IntegerLinearSystem sys = build_mu_system(t, k, sc, raw);

            std::vector<Integer> x;
            Integer sum = 0;
            for (size_t i = 0; i + 1 < sys.variables.size(); ++i) {
                const long val = static_cast<long>(rng() % 7) - 3;
                x.emplace_back(val);
                sum += val;
            }
            x.push_back(1 - sum);

            std::vector<std::string> all_names;
            for (const ClassInfo& c : t.classes) all_names.push_back(c.name);
            auto check_block = [&](const CharacterRow& chi, const std::vector<std::string>& cls,
                                   const std::string& tag) {
                Integer total = 0;
                for (long l = 0; l < k; ++l) {
                    const ConstraintRow& r = row_labelled(sys, tag + " l=" + std::to_string(l));
                    const Integer got = row_at(r, x);
                    CHECK(got == direct_value(t, chi, cls, k, l, sys.variables, x, sc));
                    total += got;
                }
                // the residues average the degree, whatever the distributions are
                CHECK(total == Integer(k) * t.degree(chi));
            };
            for (const CharacterRow& chi : t.ordinary) check_block(chi, all_names, chi.id);
            for (const auto& [p, blk] : t.brauer) {
                if (k % p == 0) continue;
                for (const CharacterRow& chi : blk.rows)
                    check_block(chi, blk.classes, chi.id + "[" + std::to_string(p) + "]");
            }
        }
    }
}

TEST_CASE("distributions of real group elements always pass") {
    std::vector<std::pair<std::string, CharacterTable>> tables = fixture_tables();
    tables.emplace_back("slice5", make_slice5());
    tables.emplace_back("slice19", make_slice19());
    for (const auto& [name, t] : tables) {
        for (const ClassInfo& c : t.classes) {
            if (c.order < 2) continue;
            CAPTURE(name);
            CAPTURE(c.name);
            const IntegerLinearSystem sys =
                build_mu_system(t, c.order, element_scenario(t, c.name), {});
            std::string why;
            const bool ok = verify_solution(sys, concentrated(t, c.order, c.name).values, &why);
            CHECK_MESSAGE(ok, why);
        }
    }
}

TEST_CASE("solve recursion walks the divisor chain of a cyclic group") {
    const CharacterTable c4 = make_cyclic(4);
    SolutionStore store;
    const OrderResult res = solve_order(c4, 4, store);
    CHECK(store.by_order.at(2).size() == 1);
    CHECK(store.by_order.at(2)[0].pa.values == iv({1}));
    CHECK(res.scenario_count == 1);
    CHECK(res.possible);
    CHECK(res.all_trivial);
    // both generators square into the same class, so both survive
    CHECK(solution_values(res) == tuples({{0, 0, 1}, {1, 0, 0}}));
    REQUIRE(res.outcomes.size() == 1);
    CHECK(res.outcomes[0].solutions == 2);
    CHECK(store.by_order.at(4).size() == 2);
}

TEST_CASE("composite order with two branches keeps scenarios apart") {
    const CharacterTable c6 = make_cyclic(6);
    SolutionStore store;
    const OrderResult res = solve_order(c6, 6, store);
    CHECK(store.by_order.at(2).size() == 1);
    CHECK(store.by_order.at(3).size() == 2); // both nontrivial cube roots
    CHECK(res.scenario_count == 2);
    CHECK(res.possible);
    CHECK(res.all_trivial);
    CHECK(solution_values(res) == tuples({{0, 0, 0, 0, 1}, {1, 0, 0, 0, 0}}));
    REQUIRE(res.outcomes.size() == 2);
    // each square pins down the matching generator and nothing else
    CHECK(res.outcomes[0].solutions == 1);
    CHECK(res.outcomes[1].solutions == 1);

    SolutionStore store_mt;
    SolveOptions par;
    par.jobs = 3;
    const OrderResult res_mt = solve_order(c6, 6, store_mt, par);
    CHECK(solution_values(res_mt) == solution_values(res));
    CHECK(res_mt.scenario_count == res.scenario_count);
}

TEST_CASE("orders without group elements can die on rows or congruences") {
    SUBCASE("rows kill order six") {
        const CharacterTable s3 = make_s3();
        SolutionStore store;
        const OrderResult res = solve_order(s3, 6, store);
        CHECK(res.scenario_count == 1);
        CHECK_FALSE(res.possible);
        CHECK_FALSE(res.killed_by_power);
        CHECK(res.solutions.empty());
        CHECK(store.by_order.at(6).empty());
    }
    SUBCASE("a dead divisor kills every scenario") {
        const CharacterTable s3 = make_s3();
        SolutionStore store;
        const OrderResult res = solve_order(s3, 12, store);
        CHECK(store.by_order.at(4).empty()); // no order-four units either
        CHECK(res.killed_by_power);
        CHECK(res.scenario_count == 0);
        CHECK_FALSE(res.possible);
    }
    SUBCASE("the layer congruence is the one that kills order four") {
        const CharacterTable a4 = make_a4();
        SolutionStore store;
        const OrderResult res = solve_order(a4, 4, store);
        CHECK(res.scenario_count == 1);
        CHECK_FALSE(res.possible);

        SolveOptions lax;
        lax.mu.congruences = false;
        SolutionStore store2;
        const OrderResult relaxed = solve_order(a4, 4, store2, lax);
        CHECK(relaxed.possible); // the rows alone cannot tell 2a from a unit square
        CHECK(solution_values(relaxed) == tuples({{1}}));
    }
}

TEST_CASE("layer congruences appear exactly for prime power orders") {
    const CharacterTable c8 = make_cyclic(8);
    PowerScenario sc;
    sc.powers[2] = concentrated(c8, 2, "2a");
    sc.powers[4] = concentrated(c8, 4, "4a");
    const IntegerLinearSystem sys = build_mu_system(c8, 8, sc, {});
    REQUIRE(sys.variables ==
            std::vector<std::string>{"8a", "4a", "8b", "2a", "8c", "4b", "8d"});
    REQUIRE(sys.congruences.size() == 2);
    CHECK(sys.congruences[0].label == "layer 2");
    CHECK(sys.congruences[0].modulus == 2);
    CHECK(sys.congruences[0].coeffs == iv({0, 0, 0, 1, 0, 0, 0}));
    CHECK(sys.congruences[1].label == "layer 4");
    CHECK(sys.congruences[1].modulus == 2);
    CHECK(sys.congruences[1].coeffs == iv({0, 1, 0, 0, 0, 1, 0}));

    const CharacterTable c6 = make_cyclic(6);
    PowerScenario sc6;
    sc6.powers[2] = concentrated(c6, 2, "2a");
    sc6.powers[3] = concentrated(c6, 3, "3a");
    CHECK(build_mu_system(c6, 6, sc6, {}).congruences.empty());

    MuOptions off;
    off.congruences = false;
    CHECK(build_mu_system(c8, 8, sc, off).congruences.empty());
}

TEST_CASE("dedup folds scaled and repeated rows but keeps the solution set") {
    const CharacterTable c3 = make_cyclic(3);
    MuOptions raw;
    raw.dedup = false;
    const IntegerLinearSystem full = build_mu_system(c3, 3, {}, raw);
    const IntegerLinearSystem folded = build_mu_system(c3, 3, {}, {});
    CHECK(full.rows.size() == 9);
    // the conjugate row is a residue permutation of the faithful one, and the
    // trivial row at l=1 collides with the faithful row at l=0
    CHECK(folded.rows.size() == 4);
    CHECK(enumerate_solutions(full) == enumerate_solutions(folded));
    CHECK(enumerate_solutions(folded) == tuples({{0, 1}, {1, 0}}));
}

TEST_CASE("scenario streams follow the store odometer") {
    const PAVector A{{"x"}, iv({1})};
    const PAVector B{{"x"}, iv({-1})};
    const PAVector C{{"y"}, iv({1})};
    const PAVector D{{"z"}, iv({1})};
    const PAVector E{{"w"}, iv({1})};
    SolutionStore st;
    st.by_order[2] = {{A, {}}, {B, {}}};
    st.by_order[3] = {{C, {}}};
    PowerScenario w6;
    w6.powers[2] = A;
    w6.powers[3] = C;
    st.by_order[6] = {{D, w6}};
    PowerScenario w9;
    w9.powers[3] = C;
    st.by_order[9] = {{E, w9}};

    SUBCASE("plain product, last order fastest") {
        const auto scs = scenarios(6, st);
        REQUIRE(scs.size() == 2);
        CHECK(scs[0].powers.at(2).values == A.values);
        CHECK(scs[1].powers.at(2).values == B.values);
        CHECK(scs[0].powers.at(3).values == C.values);
    }
    SUBCASE("product over four orders") {
        CHECK(scenarios(18, st).size() == 2);
    }
    SUBCASE("witness chains prune mismatched lower choices") {
        const auto scs = scenarios(18, st, true);
        REQUIRE(scs.size() == 1); // the order-6 witness squares to A, so B drops out
        CHECK(scs[0].powers.at(2).values == A.values);
    }
    SUBCASE("an empty pool is fatal, a missing one throws") {
        st.by_order[5] = {};
        CHECK(scenarios(10, st).empty());
        CHECK_THROWS_AS(scenarios(12, st), MissingScenarioOrder);
    }
    SUBCASE("prime orders need no store at all") {
        const auto scs = scenarios(7, SolutionStore{});
        REQUIRE(scs.size() == 1);
        CHECK(scs[0].powers.empty());
    }
}

TEST_CASE("candidate orders stop at the first gap") {
    CHECK(candidate_orders(make_cyclic(6)) == std::vector<long>{2, 3, 6});
    CHECK(candidate_orders(make_cyclic(12)) == std::vector<long>{2, 3, 4, 6, 12});
    CHECK(candidate_orders(make_s3()) == std::vector<long>{2, 3, 6});
    CHECK(candidate_orders(make_a4()) == std::vector<long>{2, 3, 6});
    CHECK(candidate_orders(make_d8()) == std::vector<long>{2, 4});
    CHECK(candidate_orders(make_slice5()) == std::vector<long>{5});
    CHECK(candidate_orders(make_slice19()) == std::vector<long>{19});
    CHECK(candidate_orders(two_prime_table(5, 7, 1, 1, 1)) == std::vector<long>{5, 7, 35});

    // three primes: the pairwise products are frontiers, their product is not
    CharacterTable t;
    t.group = "T30";
    t.order_factored = {{2, 1}, {3, 1}, {5, 1}};
    t.exponent = 30;
    t.classes = {
        {"1a", 1, std::nullopt, {{2, "1a"}, {3, "1a"}, {5, "1a"}}},
        {"2a", 2, std::nullopt, {{2, "1a"}, {3, "2a"}, {5, "2a"}}},
        {"3a", 3, std::nullopt, {{2, "3a"}, {3, "1a"}, {5, "3a"}}},
        {"5a", 5, std::nullopt, {{2, "5a"}, {3, "5a"}, {5, "1a"}}},
    };
    CharacterRow triv;
    triv.id = "chi1";
    triv.values = {Cyc::from_rational(1), Cyc::from_rational(1), Cyc::from_rational(1),
                   Cyc::from_rational(1)};
    t.ordinary.push_back(std::move(triv));
    CHECK(candidate_orders(t) == std::vector<long>{2, 3, 5, 6, 10, 15});
}

TEST_CASE("two-prime shortcut reproduces a frozen triple") {
    const long rows[][4] = {{0, 82, 30, 0}, {1, 72, 5, 0}, {7, 72, -30, 0}};
    for (const auto& r : rows) {
        const PqRow pq = build_pq_row(2, 7, 5, 0, 77, r[0]);
        CHECK(pq.m1 == r[1]);
        CHECK(pq.ms == r[2]);
        CHECK(pq.mt == r[3]);
    }
}

TEST_CASE("malformed scenarios and tables are rejected") {
    const CharacterTable c6 = make_cyclic(6);
    CHECK_THROWS_AS(build_mu_system(c6, 6, {}, {}), MissingScenarioOrder);
    CHECK_THROWS_AS(build_mu_system(c6, 1, {}, {}), DomainError);

    PowerScenario sc;
    sc.powers[2] = PAVector{{"3a"}, iv({1})}; // wrong support
    sc.powers[3] = concentrated(c6, 3, "3a");
    CHECK_THROWS_AS(build_mu_system(c6, 6, sc, {}), DomainError);

    sc.powers[2] = PAVector{{"2a"}, iv({2})}; // does not sum to 1
    CHECK_THROWS_AS(build_mu_system(c6, 6, sc, {}), DomainError);

    CharacterTable broken = make_cyclic(2);
    broken.ordinary[1].values[1] = Cyc::from_rational(make_rational(1, 2));
    CHECK_THROWS_AS(build_mu_system(broken, 2, {}, {}), NonIntegerCoefficient);

    broken.ordinary[1].values[1] = Cyc::root_of_unity(3, 1); // cannot lie in the order-2 field
    CHECK_THROWS_AS(build_mu_system(broken, 2, {}, {}), DomainError);
}

TEST_CASE("distribution helpers") {
    CHECK(PAVector{{"2a", "3a"}, iv({0, 1})}.is_trivial());
    CHECK(PAVector{{"2a"}, iv({1})}.is_trivial());
    CHECK_FALSE(PAVector{{"2a", "3a"}, iv({1, 1})}.is_trivial());
    CHECK_FALSE(PAVector{{"2a", "3a"}, iv({-1, 2})}.is_trivial());
    CHECK_FALSE(PAVector{{"2a", "3a"}, iv({0, 0})}.is_trivial());
    CHECK(PAVector{{"2a", "3a"}, iv({-1, 2})}.str() == "(2a=-1, 3a=2)");

    PowerScenario sc;
    CHECK(sc.describe() == "-");
    sc.powers[2] = PAVector{{"2a"}, iv({1})};
    sc.powers[3] = PAVector{{"3a", "3b"}, iv({0, 1})};
    CHECK(sc.describe() == "2:(2a=1); 3:(3a=0, 3b=1)");
}

TEST_CASE("prime graph comparison") {
    SUBCASE("group edges need no solving") {
        const GraphReport rep = prime_graph_compare(make_cyclic(6), {});
        CHECK(rep.verdict == GraphVerdict::Equal);
        REQUIRE(rep.pairs.size() == 1);
        CHECK(rep.pairs[0].p == 2);
        CHECK(rep.pairs[0].q == 3);
        CHECK(rep.pairs[0].group_edge);
        CHECK(rep.pairs[0].unit_edge);
        CHECK(rep.pairs[0].settled);
    }
    SUBCASE("an excluded order settles the missing edge") {
        std::map<long, OrderResult> results;
        results[6].order = 6;
        results[6].possible = false;
        const GraphReport rep = prime_graph_compare(make_s3(), results);
        CHECK(rep.verdict == GraphVerdict::Equal);
        REQUIRE(rep.pairs.size() == 1);
        CHECK_FALSE(rep.pairs[0].group_edge);
        CHECK_FALSE(rep.pairs[0].unit_edge);
        CHECK(rep.pairs[0].settled);
    }
    SUBCASE("survivors leave the pair open") {
        std::map<long, OrderResult> results;
        results[6].order = 6;
        results[6].possible = true;
        const GraphReport rep = prime_graph_compare(make_s3(), results);
        CHECK(rep.verdict == GraphVerdict::Undecided);
        CHECK_FALSE(rep.pairs[0].settled);
    }
    SUBCASE("a missing order is an error") {
        CHECK_THROWS_AS(prime_graph_compare(make_s3(), {}), IncompleteResults);
    }
    SUBCASE("three primes, one open pair") {
        CharacterTable t;
        t.group = "T30";
        t.order_factored = {{2, 1}, {3, 1}, {5, 1}};
        t.exponent = 30;
        t.classes = {
            {"1a", 1, std::nullopt, {}},
            {"2a", 2, std::nullopt, {}},
            {"3a", 3, std::nullopt, {}},
            {"5a", 5, std::nullopt, {}},
        };
        std::map<long, OrderResult> results;
        results[6].possible = false;
        results[10].possible = false;
        results[15].possible = true;
        const GraphReport rep = prime_graph_compare(t, results);
        CHECK(rep.verdict == GraphVerdict::Undecided);
        REQUIRE(rep.pairs.size() == 3);
        CHECK(rep.pairs[0].settled);  // (2,3)
        CHECK(rep.pairs[1].settled);  // (2,5)
        CHECK_FALSE(rep.pairs[2].settled); // (3,5)
    }
}
