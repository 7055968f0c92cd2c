#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gring/chartab.hpp"
#include "gring/solver.hpp"

namespace gring {

// class distribution of a torsion unit: support classes in table order,
// values summing to 1; the identity class never appears
struct PAVector {
    std::vector<std::string> classes;
    std::vector<Integer> values;

    bool is_trivial() const; // a single 1, everything else 0
    std::string str() const;
};

// chosen distributions for all proper powers of a unit of composite order,
// keyed by the order of the power
struct PowerScenario {
    std::map<long, PAVector> powers;

    std::string describe() const;
};

struct MuOptions {
    bool dedup = true;               // drop rows equal up to integer scaling
    bool congruences = true;         // prime-power layer conditions
    bool use_ordinary = true;
    bool use_brauer = true;          // blocks with p | order are always skipped
};

// Full constraint system on the support of a unit of order k. The scenario
// must carry one distribution per proper divisor order; rows come from every
// usable character row and every residue l mod k.
IntegerLinearSystem build_mu_system(const CharacterTable& t, long k,
                                    const PowerScenario& scenario,
                                    const MuOptions& opts = {});

// Shortcut for order s*t in a group with one relevant class per prime,
// no elements of order s*t, and rational character values xi on them.
struct PqRow {
    Integer m1; // constant
    Integer ms; // coefficient of the order-s class
    Integer mt; // coefficient of the order-t class
};
PqRow build_pq_row(long s, long t, const Integer& xi_s, const Integer& xi_t,
                   const Integer& degree, long l);

struct SolutionStore {
    struct Entry {
        PAVector pa;
        PowerScenario scenario; // a witness producing this distribution
    };
    std::map<long, std::vector<Entry>> by_order;
};

// Cartesian product of stored solutions over the proper divisor orders of k.
// With chain_consistent, a choice at order m must match the witness scenario
// of every chosen higher power. Throws MissingScenarioOrder when a divisor
// order has not been solved yet.
std::vector<PowerScenario> scenarios(long k, const SolutionStore& store,
                                     bool chain_consistent = false);

struct SolveOptions {
    MuOptions mu;
    long long limit = 2'000'000;
    std::optional<Integer> clamp_abs;
    int jobs = 1;
    bool prune_power = false;
    bool keep_outcomes = true;
};

struct ScenarioOutcome {
    PowerScenario scenario;
    long long solutions = 0;
};

struct OrderResult {
    long order = 0;
    bool possible = false;
    bool killed_by_power = false;   // no scenario could even be formed
    long long scenario_count = 0;
    std::vector<PAVector> solutions; // deduplicated, sorted
    bool all_trivial = false;
    std::vector<ScenarioOutcome> outcomes; // present when keep_outcomes
};

// Solve order k, recursing into unsolved divisor orders first. Results land
// in the store so later composite orders can build their scenarios.
OrderResult solve_order(const CharacterTable& t, long k, SolutionStore& store,
                        const SolveOptions& opts = {});

// orders of elements, plus every divisor k of the exponent whose proper
// divisors all occur as element orders (the frontier where new torsion
// units could first appear)
std::vector<long> candidate_orders(const CharacterTable& t);

enum class GraphVerdict { Equal, Differs, Undecided };

struct PrimePairReport {
    long p = 0, q = 0;
    bool group_edge = false;
    bool unit_edge = false;
    bool settled = true; // false when units of order p*q survive the sieve
};

struct GraphReport {
    GraphVerdict verdict = GraphVerdict::Undecided;
    std::vector<PrimePairReport> pairs;
};

// Compare the prime graph of the group with what the solved orders allow.
// Throws IncompleteResults if some prime pair has no verdict in `results`.
GraphReport prime_graph_compare(const CharacterTable& t,
                                const std::map<long, OrderResult>& results);

} // namespace gring
