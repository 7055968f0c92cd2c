#include "gring/runner.hpp"

#include <fstream>
#include <ostream>
#include <set>

namespace gring {

namespace {

nlohmann::json int_json(const Integer& x) {
    return x.fits_slong_p() ? nlohmann::json(x.get_si()) : nlohmann::json(x.get_str());
}

std::string factored_str(const std::vector<std::pair<long, int>>& f) {
    std::string out;
    for (const auto& [p, e] : f) {
        if (!out.empty()) out += "*";
        out += std::to_string(p);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string tuple_str(const std::vector<Integer>& xs) {
    std::string out = "(";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += xs[i].get_str();
    }
    return out + ")";
}

const char* verdict_str(GraphVerdict v) {
    switch (v) {
        case GraphVerdict::Equal: return "equal";
        case GraphVerdict::Differs: return "differs";
        default: return "undecided";
    }
}

void print_order_line(std::ostream& out, const OrderResult& r) {
    out << "order " << r.order << ": ";
    if (r.killed_by_power) {
        out << "impossible, no power chain\n";
    } else if (!r.possible) {
        out << "impossible (" << r.scenario_count << " scenario"
            << (r.scenario_count == 1 ? "" : "s") << ")\n";
    } else {
        out << r.solutions.size() << " distribution" << (r.solutions.size() == 1 ? "" : "s");
        if (r.all_trivial) out << ", all trivial";
        out << " (" << r.scenario_count << " scenario" << (r.scenario_count == 1 ? "" : "s")
            << ")\n";
    }
}

void print_graph(std::ostream& out, const GraphReport& g) {
    out << "prime graph: " << verdict_str(g.verdict) << "\n";
    for (const PrimePairReport& pr : g.pairs) {
        out << "  (" << pr.p << "," << pr.q << "): ";
        if (pr.group_edge)
            out << "edge in both\n";
        else if (!pr.unit_edge)
            out << "no units of order " << pr.p * pr.q << ", no edge\n";
        else
            out << "open, units of order " << pr.p * pr.q << " not excluded\n";
    }
}

nlohmann::json graph_json(const GraphReport& g) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const PrimePairReport& pr : g.pairs)
        pairs.push_back({{"p", pr.p},
                         {"q", pr.q},
                         {"group_edge", pr.group_edge},
                         {"unit_edge", pr.unit_edge},
                         {"settled", pr.settled}});
    return {{"verdict", verdict_str(g.verdict)}, {"pairs", pairs}};
}

void emit(std::ostream& out, const RunnerOptions& opts, const nlohmann::json& doc) {
    if (opts.format == OutputFormat::Json) out << doc.dump(2) << "\n";
    if (opts.artifact_path) {
        std::ofstream f(*opts.artifact_path);
        f << doc.dump(2) << "\n";
    }
}

CharacterTable load_table(const std::string& path, std::ostream& err, bool* bad) {
    try {
        return parse_table_file(path);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        *bad = true;
        return {};
    }
}

} // namespace

nlohmann::json order_json(const OrderResult& r) {
    nlohmann::json sols = nlohmann::json::array();
    for (const PAVector& p : r.solutions) {
        nlohmann::json vals = nlohmann::json::array();
        for (const Integer& v : p.values) vals.push_back(int_json(v));
        sols.push_back(vals);
    }
    nlohmann::json doc = {{"order", r.order},
                          {"possible", r.possible},
                          {"killed_by_power", r.killed_by_power},
                          {"scenarios", r.scenario_count},
                          {"all_trivial", r.all_trivial},
                          {"solutions", sols}};
    if (!r.solutions.empty()) doc["support"] = r.solutions.front().classes;
    return doc;
}

nlohmann::json report_json(const RunReport& rep) {
    nlohmann::json orders = nlohmann::json::array();
    for (long k : rep.orders) orders.push_back(k);
    nlohmann::json results = nlohmann::json::array();
    for (const auto& [k, r] : rep.results) results.push_back(order_json(r));
    return {{"group", rep.group},
            {"orders", orders},
            {"results", results},
            {"graph", graph_json(rep.graph)}};
}

RunReport run_table(const CharacterTable& t, const RunnerOptions& opts) {
    RunReport rep;
    rep.group = t.group;
    rep.orders = candidate_orders(t);
    SolutionStore store;
    for (long k : rep.orders) rep.results.emplace(k, solve_order(t, k, store, opts.solve));
    // orders of prime pairs are usually candidates already, but a prime
    // without elements (a Brauer characteristic, say) still needs a verdict
    std::vector<long> primes;
    for (const auto& [p, e] : t.order_factored) {
        (void)e;
        primes.push_back(p);
    }
    for (size_t i = 0; i < primes.size(); ++i)
        for (size_t j = i + 1; j < primes.size(); ++j) {
            const long pq = primes[i] * primes[j];
            if (!rep.results.count(pq)) rep.results.emplace(pq, solve_order(t, pq, store, opts.solve));
        }
    rep.graph = prime_graph_compare(t, rep.results);
    return rep;
}

int cmd_validate(const std::string& table_path, const RunnerOptions& opts, std::ostream& out,
                 std::ostream& err) {
    bool bad = false;
    const CharacterTable t = load_table(table_path, err, &bad);
    if (bad) return 2;
    ValidateOptions vopts;
    vopts.orthogonality = opts.orthogonality;
    const std::vector<ValidationIssue> issues = validate(t, vopts);
    if (opts.format == OutputFormat::Json) {
        nlohmann::json list = nlohmann::json::array();
        for (const ValidationIssue& i : issues)
            list.push_back({{"kind", i.kind}, {"message", i.message}});
        emit(out, opts, {{"group", t.group}, {"issues", list}});
    } else {
        if (issues.empty())
            out << t.group << ": ok\n";
        else
            for (const ValidationIssue& i : issues) out << i.kind << ": " << i.message << "\n";
    }
    return issues.empty() ? 0 : 1;
}

int cmd_solve(const std::string& table_path, long order, const RunnerOptions& opts,
              std::ostream& out, std::ostream& err) {
    bool bad = false;
    const CharacterTable t = load_table(table_path, err, &bad);
    if (bad) return 2;
    try {
        SolutionStore store;
        const OrderResult res = solve_order(t, order, store, opts.solve);
        if (opts.format == OutputFormat::Json || opts.artifact_path) {
            nlohmann::json doc = order_json(res);
            doc["group"] = t.group;
            emit(out, opts, doc);
        }
        if (opts.format == OutputFormat::Text) {
            out << t.group << " ";
            print_order_line(out, res);
            for (const PAVector& p : res.solutions) out << "  " << p.str() << "\n";
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_run(const std::string& table_path, const RunnerOptions& opts, std::ostream& out,
            std::ostream& err) {
    bool bad = false;
    const CharacterTable t = load_table(table_path, err, &bad);
    if (bad) return 2;
    try {
        const RunReport rep = run_table(t, opts);
        if (opts.format == OutputFormat::Json || opts.artifact_path)
            emit(out, opts, report_json(rep));
        if (opts.format == OutputFormat::Text) {
            out << "group " << rep.group << " (|G| = " << factored_str(t.order_factored)
                << ", exponent " << t.exponent << ")\n";
            out << "candidate orders:";
            for (long k : rep.orders) out << " " << k;
            out << "\n";
            for (const auto& [k, r] : rep.results) print_order_line(out, r);
            print_graph(out, rep.graph);
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_graph(const std::string& table_path, const RunnerOptions& opts, std::ostream& out,
              std::ostream& err) {
    bool bad = false;
    const CharacterTable t = load_table(table_path, err, &bad);
    if (bad) return 2;
    try {
        std::vector<long> primes;
        for (const auto& [p, e] : t.order_factored) {
            (void)e;
            primes.push_back(p);
        }
        const std::vector<long> elem = element_orders(t);
        const std::set<long> elems(elem.begin(), elem.end());
        SolutionStore store;
        std::map<long, OrderResult> results;
        for (size_t i = 0; i < primes.size(); ++i)
            for (size_t j = i + 1; j < primes.size(); ++j) {
                const long pq = primes[i] * primes[j];
                if (!elems.count(pq)) results.emplace(pq, solve_order(t, pq, store, opts.solve));
            }
        const GraphReport g = prime_graph_compare(t, results);
        if (opts.format == OutputFormat::Json || opts.artifact_path)
            emit(out, opts, {{"group", t.group}, {"graph", graph_json(g)}});
        if (opts.format == OutputFormat::Text) print_graph(out, g);
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_raw(const std::string& system_path, RawMode mode, const RunnerOptions& opts,
            std::ostream& out, std::ostream& err) {
    IntegerLinearSystem s;
    try {
        s = parse_system_file(system_path);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    try {
        if (mode == RawMode::Enumerate) {
            EnumerateOptions eo;
            eo.limit = opts.solve.limit;
            eo.clamp_abs = opts.solve.clamp_abs;
            const auto sols = enumerate_solutions(s, eo);
            if (opts.format == OutputFormat::Json || opts.artifact_path) {
                nlohmann::json list = nlohmann::json::array();
                for (const auto& x : sols) {
                    nlohmann::json row = nlohmann::json::array();
                    for (const Integer& v : x) row.push_back(int_json(v));
                    list.push_back(row);
                }
                emit(out, opts,
                     {{"name", s.name},
                      {"variables", s.variables},
                      {"count", static_cast<long long>(sols.size())},
                      {"solutions", list}});
            }
            if (opts.format == OutputFormat::Text) {
                std::string vars = "(";
                for (size_t i = 0; i < s.variables.size(); ++i) {
                    if (i) vars += ", ";
                    vars += s.variables[i];
                }
                vars += ")";
                out << s.name << ": " << sols.size() << " solution"
                    << (sols.size() == 1 ? "" : "s") << " over " << vars << "\n";
                for (const auto& x : sols) out << "  " << tuple_str(x) << "\n";
            }
        }
        if (mode == RawMode::Count) {
            CountOptions co;
            co.enumerate_limit = opts.solve.limit;
            const Integer n = count_solutions(s, co);
            if (opts.format == OutputFormat::Json || opts.artifact_path)
                emit(out, opts, {{"name", s.name}, {"count", int_json(n)}});
            if (opts.format == OutputFormat::Text)
                out << s.name << ": " << n.get_str() << " solutions\n";
        }
        if (mode == RawMode::Bounds) {
            const BoundsResult b = derive_bounds(s);
            if (opts.format == OutputFormat::Json || opts.artifact_path) {
                nlohmann::json list = nlohmann::json::array();
                for (const VarBounds& v : b.vars)
                    list.push_back({int_json(v.lo), int_json(v.hi)});
                emit(out, opts,
                     {{"name", s.name}, {"feasible", b.feasible}, {"bounds", list}});
            }
            if (opts.format == OutputFormat::Text) {
                if (!b.feasible) {
                    out << s.name << ": infeasible\n";
                } else {
                    for (size_t i = 0; i < s.variables.size(); ++i)
                        out << s.variables[i] << " in [" << b.vars[i].lo.get_str() << ", "
                            << b.vars[i].hi.get_str() << "]\n";
                }
            }
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace gring
