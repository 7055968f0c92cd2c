#include "gring/method.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <set>
#include <thread>

namespace gring {

bool PAVector::is_trivial() const {
    int ones = 0;
    for (const Integer& v : values) {
        if (v == 1) ++ones;
        else if (v != 0) return false;
    }
    return ones == 1;
}

std::string PAVector::str() const {
    std::string out = "(";
    for (size_t i = 0; i < classes.size(); ++i) {
        if (i) out += ", ";
        out += classes[i] + "=" + values[i].get_str();
    }
    return out + ")";
}

std::string PowerScenario::describe() const {
    std::string out;
    for (const auto& [m, pa] : powers) {
        if (!out.empty()) out += "; ";
        out += std::to_string(m) + ":" + pa.str();
    }
    return out.empty() ? "-" : out;
}

namespace {

// trace down from Q(zeta_m); every value fed here lies in that field because
// character values on a class of order dividing m have conductor dividing m
Integer integral_trace(const Cyc& x, long m, const std::string& where) {
    if (m % x.conductor() != 0)
        throw DomainError(where + ": value of conductor " + std::to_string(x.conductor()) +
                          " cannot lie in the order-" + std::to_string(m) + " field");
    const Rational t = x.lifted(m).trace_to_rationals();
    if (!is_integral(t))
        throw NonIntegerCoefficient(where + ": trace " + to_string(t) + " is not an integer");
    return as_integer(t);
}

std::string normalized_key(const ConstraintRow& r) {
    Integer g = 0;
    for (const Integer& c : r.coeffs) g = gcd(g, c);
    g = gcd(g, r.constant);
    if (g == 0) g = 1;
    std::string key;
    for (const Integer& c : r.coeffs) key += Integer(c / g).get_str() + ",";
    key += "|" + Integer(r.constant / g).get_str();
    key += "|" + Integer(r.modulus / gcd(r.modulus, g)).get_str();
    return key;
}

} // namespace

IntegerLinearSystem build_mu_system(const CharacterTable& t, long k,
                                    const PowerScenario& scenario, const MuOptions& opts) {
    if (k < 2) throw DomainError("unit order must be at least 2");
    IntegerLinearSystem sys;
    sys.name = t.group + " order " + std::to_string(k);
    sys.variables = classes_of_order_dividing(t, k);

    Equality sum;
    sum.coeffs.assign(sys.variables.size(), 1);
    sum.constant = 1;
    sum.label = "sum";
    sys.equalities.push_back(std::move(sum));

    const std::vector<long> divs = divisors(k);
    std::map<long, const PAVector*> power_of_order;
    for (long m : divs) {
        if (m == 1 || m == k) continue;
        auto it = scenario.powers.find(m);
        if (it == scenario.powers.end())
            throw MissingScenarioOrder("no distribution for the order-" + std::to_string(m) +
                                       " power of an order-" + std::to_string(k) + " unit");
        const PAVector& pa = it->second;
        if (pa.classes != classes_of_order_dividing(t, m))
            throw DomainError("order-" + std::to_string(m) + " distribution has the wrong support");
        Integer total = 0;
        for (const Integer& v : pa.values) total += v;
        if (total != 1)
            throw DomainError("order-" + std::to_string(m) + " distribution does not sum to 1");
        power_of_order[m] = &pa;
    }

    std::vector<std::string> all_names;
    for (const ClassInfo& c : t.classes) all_names.push_back(c.name);

    struct Source {
        const CharacterRow* row;
        const std::vector<std::string>* cls;
        long p; // 0 for ordinary rows
    };
    std::vector<Source> sources;
    if (opts.use_ordinary)
        for (const CharacterRow& r : t.ordinary) sources.push_back({&r, &all_names, 0});
    if (opts.use_brauer)
        for (const auto& [p, blk] : t.brauer) {
            if (k % p == 0) continue; // the block cannot see units of this order
            for (const CharacterRow& r : blk.rows) sources.push_back({&r, &blk.classes, p});
        }

    std::set<std::string> seen;
    for (const Source& src : sources) {
        const std::string tag =
            src.p == 0 ? src.row->id : src.row->id + "[" + std::to_string(src.p) + "]";
        std::map<std::string, size_t> index;
        for (size_t i = 0; i < src.cls->size(); ++i) index[(*src.cls)[i]] = i;
        auto value_at = [&](const std::string& cname) -> const Cyc& {
            auto it = index.find(cname);
            if (it == index.end())
                throw DanglingClassRef(tag + ": no value on class '" + cname + "'");
            return src.row->values[it->second];
        };

        // chi at the proper powers, fixed by the scenario
        std::vector<std::pair<long, Cyc>> at_powers; // (order m of the power, value)
        for (long d : divs) {
            if (d == 1 || d == k) continue;
            const long m = k / d;
            const PAVector& pa = *power_of_order.at(m);
            Cyc v;
            for (size_t i = 0; i < pa.classes.size(); ++i)
                if (pa.values[i] != 0)
                    v = v + value_at(pa.classes[i]) * Cyc::from_rational(Rational(pa.values[i]));
            at_powers.emplace_back(m, std::move(v));
        }

        for (long l = 0; l < k; ++l) {
            ConstraintRow row;
            row.modulus = k;
            row.label = tag + " l=" + std::to_string(l);
            row.constant = t.degree(*src.row);
            for (const auto& [m, v] : at_powers)
                row.constant += integral_trace(v * Cyc::root_of_unity(m, -l), m, row.label);
            for (const std::string& cname : sys.variables)
                row.coeffs.push_back(
                    integral_trace(value_at(cname) * Cyc::root_of_unity(k, -l), k, row.label));
            if (opts.dedup && !seen.insert(normalized_key(row)).second) continue;
            sys.rows.push_back(std::move(row));
        }
    }

    if (opts.congruences) {
        const auto pk = factorize(k);
        if (pk.size() == 1 && pk[0].second >= 2) {
            const long p = pk[0].first;
            long layer = p;
            for (int e = 1; e < pk[0].second; ++e, layer *= p) {
                Congruence cg;
                cg.modulus = p;
                cg.residue = 0;
                cg.label = "layer " + std::to_string(layer);
                for (const std::string& cname : sys.variables)
                    cg.coeffs.push_back(t.cls(cname).order == layer ? 1 : 0);
                sys.congruences.push_back(std::move(cg));
            }
        }
    }
    return sys;
}

PqRow build_pq_row(long s, long t, const Integer& xi_s, const Integer& xi_t,
                   const Integer& degree, long l) {
    PqRow r;
    r.m1 = degree + xi_t * root_trace(t, l) + xi_s * root_trace(s, l);
    r.ms = xi_s * root_trace(s * t, l);
    r.mt = xi_t * root_trace(s * t, l);
    return r;
}

std::vector<PowerScenario> scenarios(long k, const SolutionStore& store, bool chain_consistent) {
    std::vector<long> orders;
    for (long m : divisors(k))
        if (m > 1 && m < k) orders.push_back(m);
    std::vector<const std::vector<SolutionStore::Entry>*> pools;
    for (long m : orders) {
        auto it = store.by_order.find(m);
        if (it == store.by_order.end())
            throw MissingScenarioOrder("order " + std::to_string(m) + " has not been solved yet");
        pools.push_back(&it->second);
    }
    std::vector<PowerScenario> out;
    if (orders.empty()) {
        out.emplace_back();
        return out;
    }
    for (const auto* p : pools)
        if (p->empty()) return {};

    std::vector<size_t> pick(orders.size(), 0);
    while (true) {
        bool ok = true;
        if (chain_consistent) {
            for (size_t i = 0; i < orders.size() && ok; ++i)
                for (size_t j = 0; j < i && ok; ++j) {
                    if (orders[i] % orders[j] != 0) continue;
                    const auto& wit = (*pools[i])[pick[i]].scenario.powers;
                    auto it = wit.find(orders[j]);
                    if (it != wit.end() &&
                        it->second.values != (*pools[j])[pick[j]].pa.values)
                        ok = false;
                }
        }
        if (ok) {
            PowerScenario sc;
            for (size_t i = 0; i < orders.size(); ++i)
                sc.powers.emplace(orders[i], (*pools[i])[pick[i]].pa);
            out.push_back(std::move(sc));
        }
        size_t i = orders.size();
        while (i-- > 0) {
            if (++pick[i] < pools[i]->size()) break;
            pick[i] = 0;
            if (i == 0) return out;
        }
    }
}

OrderResult solve_order(const CharacterTable& t, long k, SolutionStore& store,
                        const SolveOptions& opts) {
    for (long m : divisors(k))
        if (m > 1 && m < k && !store.by_order.count(m)) solve_order(t, m, store, opts);

    OrderResult res;
    res.order = k;
    std::vector<PowerScenario> scs = scenarios(k, store, opts.prune_power);
    res.scenario_count = static_cast<long long>(scs.size());
    if (scs.empty()) {
        res.killed_by_power = true;
        store.by_order[k]; // solved, empty
        return res;
    }

    std::vector<std::vector<std::vector<Integer>>> found(scs.size());
    std::vector<std::exception_ptr> errors(scs.size());
    auto work = [&](size_t i) {
        try {
            const IntegerLinearSystem sys = build_mu_system(t, k, scs[i], opts.mu);
            EnumerateOptions eopts;
            eopts.limit = opts.limit;
            eopts.clamp_abs = opts.clamp_abs;
            found[i] = enumerate_solutions(sys, eopts);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1 || scs.size() <= 1) {
        for (size_t i = 0; i < scs.size(); ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back([&, w]() {
                for (size_t i = static_cast<size_t>(w); i < scs.size(); i += jobs) work(i);
            });
        for (std::thread& th : pool) th.join();
    }
    for (size_t i = 0; i < scs.size(); ++i)
        if (errors[i]) std::rethrow_exception(errors[i]);

    const std::vector<std::string> support = classes_of_order_dividing(t, k);
    std::map<std::vector<Integer>, size_t> first_seen; // values -> scenario index
    for (size_t i = 0; i < scs.size(); ++i) {
        if (opts.keep_outcomes)
            res.outcomes.push_back({scs[i], static_cast<long long>(found[i].size())});
        for (const auto& vals : found[i])
            first_seen.emplace(vals, i);
    }
    std::vector<SolutionStore::Entry> entries;
    for (const auto& [vals, idx] : first_seen) {
        PAVector pa{support, vals};
        res.solutions.push_back(pa);
        entries.push_back({std::move(pa), scs[idx]});
    }
    res.possible = !res.solutions.empty();
    res.all_trivial = res.possible &&
                      std::all_of(res.solutions.begin(), res.solutions.end(),
                                  [](const PAVector& p) { return p.is_trivial(); });
    store.by_order[k] = std::move(entries);
    return res;
}

std::vector<long> candidate_orders(const CharacterTable& t) {
    const std::vector<long> elem = element_orders(t);
    const std::set<long> elems(elem.begin(), elem.end());
    std::vector<long> out;
    for (long k = 2; k <= t.exponent; ++k) {
        if (t.exponent % k != 0) continue;
        if (elems.count(k)) {
            out.push_back(k);
            continue;
        }
        bool frontier = true;
        for (long d = 2; d < k && frontier; ++d)
            if (k % d == 0 && !elems.count(d)) frontier = false;
        if (frontier) out.push_back(k);
    }
    return out;
}

GraphReport prime_graph_compare(const CharacterTable& t,
                                const std::map<long, OrderResult>& results) {
    std::vector<long> primes;
    for (const auto& [p, e] : t.order_factored) {
        (void)e;
        primes.push_back(p);
    }
    std::sort(primes.begin(), primes.end());
    const std::vector<long> elem = element_orders(t);
    const std::set<long> elems(elem.begin(), elem.end());

    GraphReport rep;
    bool unsettled = false;
    for (size_t i = 0; i < primes.size(); ++i)
        for (size_t j = i + 1; j < primes.size(); ++j) {
            PrimePairReport pr;
            pr.p = primes[i];
            pr.q = primes[j];
            pr.group_edge = elems.count(pr.p * pr.q) > 0;
            if (pr.group_edge) {
                pr.unit_edge = true; // group elements already realize the edge
            } else {
                auto it = results.find(pr.p * pr.q);
                if (it == results.end())
                    throw IncompleteResults("no result for order " + std::to_string(pr.p * pr.q));
                if (it->second.possible) {
                    // survivors leave the edge question open, they do not settle it
                    pr.unit_edge = true;
                    pr.settled = false;
                    unsettled = true;
                } else {
                    pr.unit_edge = false;
                }
            }
            rep.pairs.push_back(pr);
        }
    rep.verdict = unsettled ? GraphVerdict::Undecided : GraphVerdict::Equal;
    return rep;
}

} // namespace gring
