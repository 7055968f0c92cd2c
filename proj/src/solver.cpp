#include "gring/solver.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <utility>

namespace gring {

using nlohmann::json;

void IntegerLinearSystem::check_shapes() const {
    const size_t n = variables.size();
    for (const Equality& e : equalities)
        if (e.coeffs.size() != n) throw SchemaError("equality '" + e.label + "': coefficient count mismatch");
    for (const ConstraintRow& r : rows) {
        if (r.coeffs.size() != n) throw SchemaError("row '" + r.label + "': coefficient count mismatch");
        if (r.modulus < 1) throw SchemaError("row '" + r.label + "': modulus must be positive");
    }
    for (const Congruence& c : congruences) {
        if (c.coeffs.size() != n) throw SchemaError("congruence '" + c.label + "': coefficient count mismatch");
        if (c.modulus < 1) throw SchemaError("congruence '" + c.label + "': modulus must be positive");
    }
}

namespace {

Integer to_integer(const json& j, const char* what) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw SchemaError(std::string(what) + ": not an integer literal");
        }
    }
    throw SchemaError(std::string(what) + ": integer or decimal string expected");
}

std::vector<Integer> to_coeffs(const json& j, const char* what) {
    if (!j.is_array()) throw SchemaError(std::string(what) + ": coefficient array expected");
    std::vector<Integer> out;
    for (const json& x : j) out.push_back(to_integer(x, what));
    return out;
}

json integer_to_json(const Integer& x) {
    return x.fits_slong_p() ? json(x.get_si()) : json(x.get_str());
}

json coeffs_to_json(const std::vector<Integer>& c) {
    json arr = json::array();
    for (const Integer& x : c) arr.push_back(integer_to_json(x));
    return arr;
}

} // namespace

IntegerLinearSystem parse_system(const json& doc) {
    if (!doc.is_object()) throw SchemaError("system document must be a JSON object");
    if (!doc.contains("variables") || !doc.at("variables").is_array())
        throw SchemaError("system needs a 'variables' array");
    IntegerLinearSystem s;
    if (doc.contains("name")) s.name = doc.at("name").get<std::string>();
    for (const json& v : doc.at("variables")) s.variables.push_back(v.get<std::string>());
    Integer default_mod = 1;
    if (doc.contains("modulus")) default_mod = to_integer(doc.at("modulus"), "modulus");

    if (doc.contains("equalities"))
        for (const json& e : doc.at("equalities")) {
            Equality eq;
            eq.coeffs = to_coeffs(e.at("coeffs"), "equality coeffs");
            eq.constant = to_integer(e.at("constant"), "equality constant");
            if (e.contains("label")) eq.label = e.at("label").get<std::string>();
            s.equalities.push_back(std::move(eq));
        }
    if (doc.contains("rows"))
        for (const json& r : doc.at("rows")) {
            ConstraintRow row;
            row.coeffs = to_coeffs(r.at("coeffs"), "row coeffs");
            row.constant = to_integer(r.at("constant"), "row constant");
            row.modulus = r.contains("modulus") ? to_integer(r.at("modulus"), "row modulus") : default_mod;
            if (r.contains("label")) row.label = r.at("label").get<std::string>();
            s.rows.push_back(std::move(row));
        }
    if (doc.contains("congruences"))
        for (const json& c : doc.at("congruences")) {
            Congruence cg;
            cg.coeffs = to_coeffs(c.at("coeffs"), "congruence coeffs");
            cg.residue = to_integer(c.at("residue"), "congruence residue");
            cg.modulus = to_integer(c.at("modulus"), "congruence modulus");
            if (c.contains("label")) cg.label = c.at("label").get<std::string>();
            s.congruences.push_back(std::move(cg));
        }
    s.check_shapes();
    return s;
}

IntegerLinearSystem parse_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open system file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw SchemaError("invalid JSON in '" + path + "': " + e.what());
    }
    return parse_system(doc);
}

json serialize(const IntegerLinearSystem& s) {
    json doc;
    if (!s.name.empty()) doc["name"] = s.name;
    doc["variables"] = s.variables;
    json eqs = json::array();
    for (const Equality& e : s.equalities)
        eqs.push_back({{"coeffs", coeffs_to_json(e.coeffs)},
                       {"constant", integer_to_json(e.constant)},
                       {"label", e.label}});
    doc["equalities"] = eqs;
    json rows = json::array();
    for (const ConstraintRow& r : s.rows)
        rows.push_back({{"coeffs", coeffs_to_json(r.coeffs)},
                        {"constant", integer_to_json(r.constant)},
                        {"modulus", integer_to_json(r.modulus)},
                        {"label", r.label}});
    doc["rows"] = rows;
    json congs = json::array();
    for (const Congruence& c : s.congruences)
        congs.push_back({{"coeffs", coeffs_to_json(c.coeffs)},
                         {"residue", integer_to_json(c.residue)},
                         {"modulus", integer_to_json(c.modulus)},
                         {"label", c.label}});
    doc["congruences"] = congs;
    return doc;
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin machinery over integer rows c0 + c.x >= 0

namespace {

constexpr size_t kFmRowCap = 20000;

struct IRow {
    std::vector<Integer> c;
    Integer c0;
};

// divide by the coefficient content; the constant may be floor-tightened
// because we only care about integer points
void normalize_row(IRow& r) {
    Integer g = 0;
    for (const Integer& x : r.c) g = gcd(g, x);
    if (g <= 1) return;
    for (Integer& x : r.c) x /= g;
    r.c0 = floor_div(r.c0, g);
}

bool is_constant(const IRow& r) {
    return std::all_of(r.c.begin(), r.c.end(), [](const Integer& x) { return x == 0; });
}

// false on a contradictory constant row
bool eliminate_var(std::vector<IRow>& rows, size_t j) {
    std::vector<IRow> keep, lower, upper;
    for (IRow& r : rows) {
        if (r.c[j] == 0) keep.push_back(std::move(r));
        else if (r.c[j] > 0) lower.push_back(std::move(r));
        else upper.push_back(std::move(r));
    }
    std::set<std::pair<std::vector<Integer>, Integer>> seen;
    for (const IRow& r : keep) seen.insert({r.c, r.c0});
    for (const IRow& lo : lower)
        for (const IRow& up : upper) {
            IRow n;
            n.c.resize(lo.c.size());
            const Integer a = lo.c[j];   // > 0
            const Integer b = -up.c[j];  // > 0
            for (size_t k = 0; k < n.c.size(); ++k) n.c[k] = b * lo.c[k] + a * up.c[k];
            n.c0 = b * lo.c0 + a * up.c0;
            normalize_row(n);
            if (is_constant(n)) {
                if (n.c0 < 0) return false;
                continue;
            }
            if (seen.insert({n.c, n.c0}).second) {
                keep.push_back(std::move(n));
                if (keep.size() > kFmRowCap)
                    throw LimitExceeded("bound derivation exceeded the internal row cap");
            }
        }
    rows = std::move(keep);
    return true;
}

// next variable to eliminate, by smallest lower*upper product
std::optional<size_t> pick_var(const std::vector<IRow>& rows, const std::vector<bool>& alive) {
    std::optional<size_t> best;
    long long best_cost = 0;
    for (size_t j = 0; j < alive.size(); ++j) {
        if (!alive[j]) continue;
        long long pos = 0, neg = 0;
        for (const IRow& r : rows) {
            if (r.c[j] > 0) ++pos;
            else if (r.c[j] < 0) ++neg;
        }
        if (pos == 0 && neg == 0) continue;
        const long long cost = pos * neg;
        if (!best || cost < best_cost) {
            best = j;
            best_cost = cost;
        }
    }
    return best;
}

std::vector<IRow> base_rows(const IntegerLinearSystem& s, const std::optional<Integer>& clamp) {
    std::vector<IRow> rows;
    const size_t n = s.arity();
    for (const ConstraintRow& r : s.rows) rows.push_back({r.coeffs, r.constant});
    for (const Equality& e : s.equalities) {
        IRow lo{e.coeffs, -e.constant};
        IRow hi;
        hi.c0 = e.constant;
        for (const Integer& c : e.coeffs) hi.c.push_back(-c);
        rows.push_back(std::move(lo));
        rows.push_back(std::move(hi));
    }
    if (clamp) {
        for (size_t j = 0; j < n; ++j) {
            IRow lo, hi;
            lo.c.assign(n, 0);
            hi.c.assign(n, 0);
            lo.c[j] = 1;
            lo.c0 = *clamp;
            hi.c[j] = -1;
            hi.c0 = *clamp;
            rows.push_back(std::move(lo));
            rows.push_back(std::move(hi));
        }
    }
    for (IRow& r : rows) normalize_row(r);
    return rows;
}

// true when the rows are satisfiable, by eliminating every variable
bool fm_feasible(std::vector<IRow> rows, size_t nvars) {
    for (const IRow& r : rows)
        if (is_constant(r) && r.c0 < 0) return false;
    std::vector<bool> alive(nvars, true);
    while (auto j = pick_var(rows, alive)) {
        if (!eliminate_var(rows, *j)) return false;
        alive[*j] = false;
    }
    return true;
}

struct FmBound {
    bool infeasible = false;
    std::optional<Integer> lo, hi; // nullopt = unbounded on that side
};

FmBound fm_bound_var(std::vector<IRow> rows, size_t nvars, size_t target) {
    FmBound out;
    std::vector<bool> alive(nvars, true);
    alive[target] = false;
    while (true) {
        auto j = pick_var(rows, alive);
        if (!j) break;
        if (!eliminate_var(rows, *j)) {
            out.infeasible = true;
            return out;
        }
        alive[*j] = false;
    }
    for (const IRow& r : rows) {
        if (is_constant(r)) {
            if (r.c0 < 0) {
                out.infeasible = true;
                return out;
            }
            continue;
        }
        const Integer& c = r.c[target];
        const Integer b = -r.c0;
        if (c > 0) {
            Integer v = ceil_div(b, c);
            if (!out.lo || v > *out.lo) out.lo = v;
        } else {
            Integer v = floor_div(b, c);
            if (!out.hi || v < *out.hi) out.hi = v;
        }
    }
    if (out.lo && out.hi && *out.lo > *out.hi) out.infeasible = true;
    return out;
}

BoundsResult bounds_for(const IntegerLinearSystem& s, const std::optional<Integer>& clamp) {
    s.check_shapes();
    const size_t n = s.arity();
    std::vector<IRow> rows = base_rows(s, clamp);
    BoundsResult res;
    res.vars.assign(n, VarBounds{});
    if (!fm_feasible(rows, n)) {
        res.feasible = false;
        return res;
    }
    for (size_t j = 0; j < n; ++j) {
        FmBound b = fm_bound_var(rows, n, j);
        if (b.infeasible) {
            res.feasible = false;
            return res;
        }
        if (!b.lo || !b.hi)
            throw Unbounded("variable '" + s.variables[j] + "' has no finite " +
                            (b.lo ? "upper" : "lower") + " bound");
        res.vars[j] = VarBounds{*b.lo, *b.hi};
    }
    return res;
}

} // namespace

BoundsResult derive_bounds(const IntegerLinearSystem& s) { return bounds_for(s, std::nullopt); }

// ---------------------------------------------------------------------------
// enumeration

namespace {

enum class CondKind { Row, Eq, Cong };

// unified check: value = c0 + c.x, then
//   Row:  value >= 0 and m | value
//   Eq:   value == 0
//   Cong: m | value
struct Cond {
    CondKind kind;
    size_t orig;
    std::vector<Integer> c;
    Integer c0;
    Integer m = 1;
    long last_nz = -1;
};

struct ResidueClass { // x ≡ off (mod step)
    Integer off = 0;
    Integer step = 1;
};

bool merge_residue(ResidueClass& rc, const Integer& off2, const Integer& step2) {
    Integer g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), rc.step.get_mpz_t(), step2.get_mpz_t());
    Integer diff = off2 - rc.off;
    if (diff % g != 0) return false;
    Integer l = rc.step / g * step2;
    Integer t = mod_floor(u * (diff / g), step2 / g);
    rc.off = mod_floor(rc.off + rc.step * t, l);
    rc.step = l;
    return true;
}

// solutions of c*x ≡ rhs (mod m) as a residue class, or nullopt when none
std::optional<ResidueClass> solve_unary_congruence(const Integer& c, const Integer& rhs, const Integer& m) {
    Integer g = gcd(c, m);
    if (g == 0) return ResidueClass{0, 1}; // c == 0, m == 0 cannot happen (m >= 1)
    Integer r = mod_floor(rhs, m);
    if (r % g != 0) return std::nullopt;
    Integer m2 = m / g;
    if (m2 == 1) return ResidueClass{0, 1};
    Integer c2 = mod_floor(c / g, m2);
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), c2.get_mpz_t(), m2.get_mpz_t()) == 0)
        throw DomainError("internal congruence solve failed"); // unreachable by construction
    return ResidueClass{mod_floor(inv * (r / g), m2), m2};
}

struct Searcher {
    const IntegerLinearSystem& sys;
    std::vector<Cond> conds;
    std::vector<VarBounds> box;
    // suff_min[r][i], suff_max[r][i]: range of sum over variables >= i
    std::vector<std::vector<Integer>> suff_min, suff_max;
    std::vector<std::vector<Integer>> solutions;
    SolveStats* stats;
    long long limit;
    size_t n;

    void kill(const Cond& cd) {
        if (!stats) return;
        if (cd.kind == CondKind::Row) ++stats->row_kills[cd.orig];
        else if (cd.kind == CondKind::Eq) ++stats->eq_kills[cd.orig];
        else ++stats->cong_kills[cd.orig];
    }

    void dfs(size_t i, std::vector<Integer>& x, std::vector<Integer>& sums) {
        if (stats) ++stats->nodes;
        if (i == n) {
            if (!verify_solution(sys, x)) return; // pruning is exact, defensive only
            solutions.push_back(x);
            if (static_cast<long long>(solutions.size()) > limit)
                throw LimitExceeded("solution count exceeded the limit of " + std::to_string(limit));
            return;
        }
        Integer lo = box[i].lo, hi = box[i].hi;
        ResidueClass rc;
        for (size_t r = 0; r < conds.size(); ++r) {
            const Cond& cd = conds[r];
            const Integer& ci = cd.c[i];
            if (ci != 0) {
                // value = sums[r] + ci*xi + suffix must reach 0 (Eq) or >= 0 (Row)
                const Integer hi_reach = sums[r] + suff_max[r][i + 1];
                if (cd.kind != CondKind::Cong) {
                    // ci*xi >= -hi_reach
                    if (ci > 0) lo = std::max(lo, ceil_div(-hi_reach, ci));
                    else hi = std::min(hi, floor_div(-hi_reach, ci));
                }
                if (cd.kind == CondKind::Eq) {
                    // ci*xi <= -lo_reach
                    const Integer lo_reach = sums[r] + suff_min[r][i + 1];
                    if (ci > 0) hi = std::min(hi, floor_div(-lo_reach, ci));
                    else lo = std::max(lo, ceil_div(-lo_reach, ci));
                }
                if (lo > hi) {
                    kill(cd);
                    return;
                }
            }
            if (cd.last_nz == static_cast<long>(i) && cd.m > 1) {
                auto sol = solve_unary_congruence(ci, -sums[r], cd.m);
                if (!sol || !merge_residue(rc, sol->off, sol->step)) {
                    kill(cd);
                    return;
                }
            }
        }
        Integer x0 = lo + mod_floor(rc.off - lo, rc.step);
        for (Integer v = x0; v <= hi; v += rc.step) {
            x.push_back(v);
            std::vector<Integer> next = sums;
            for (size_t r = 0; r < conds.size(); ++r)
                if (conds[r].c[i] != 0) next[r] += conds[r].c[i] * v;
            dfs(i + 1, x, next);
            x.pop_back();
        }
    }
};

} // namespace

std::vector<std::vector<Integer>> enumerate_solutions(const IntegerLinearSystem& s,
                                                      const EnumerateOptions& opts,
                                                      SolveStats* stats) {
    s.check_shapes();
    if (stats) {
        stats->nodes = 0;
        stats->row_kills.assign(s.rows.size(), 0);
        stats->eq_kills.assign(s.equalities.size(), 0);
        stats->cong_kills.assign(s.congruences.size(), 0);
    }
    BoundsResult bounds = bounds_for(s, opts.clamp_abs);
    if (!bounds.feasible) return {};

    Searcher sr{s, {}, std::move(bounds.vars), {}, {}, {}, stats, opts.limit, s.arity()};
    for (size_t i = 0; i < s.rows.size(); ++i)
        sr.conds.push_back({CondKind::Row, i, s.rows[i].coeffs, s.rows[i].constant, s.rows[i].modulus, -1});
    for (size_t i = 0; i < s.equalities.size(); ++i)
        sr.conds.push_back({CondKind::Eq, i, s.equalities[i].coeffs, -s.equalities[i].constant, 1, -1});
    for (size_t i = 0; i < s.congruences.size(); ++i)
        sr.conds.push_back(
            {CondKind::Cong, i, s.congruences[i].coeffs, -s.congruences[i].residue, s.congruences[i].modulus, -1});

    const size_t n = sr.n;
    std::vector<Integer> init_sums;
    for (Cond& cd : sr.conds) {
        for (size_t j = 0; j < n; ++j)
            if (cd.c[j] != 0) cd.last_nz = static_cast<long>(j);
        if (cd.last_nz < 0) {
            // constant condition, decide it up front
            bool ok = true;
            if (cd.kind == CondKind::Eq) ok = cd.c0 == 0;
            else if (cd.kind == CondKind::Row) ok = cd.c0 >= 0 && cd.c0 % cd.m == 0;
            else ok = cd.c0 % cd.m == 0;
            if (!ok) {
                sr.kill(cd);
                return {};
            }
        }
        init_sums.push_back(cd.c0);
    }
    sr.suff_min.assign(sr.conds.size(), std::vector<Integer>(n + 1, 0));
    sr.suff_max.assign(sr.conds.size(), std::vector<Integer>(n + 1, 0));
    for (size_t r = 0; r < sr.conds.size(); ++r)
        for (size_t j = n; j-- > 0;) {
            const Integer& c = sr.conds[r].c[j];
            Integer a = c * sr.box[j].lo, b = c * sr.box[j].hi;
            if (a > b) std::swap(a, b);
            sr.suff_min[r][j] = sr.suff_min[r][j + 1] + a;
            sr.suff_max[r][j] = sr.suff_max[r][j + 1] + b;
        }
    for (size_t j = 0; j < n; ++j)
        if (sr.box[j].empty()) return {};

    std::vector<Integer> x;
    sr.dfs(0, x, init_sums);
    return std::move(sr.solutions);
}

bool verify_solution(const IntegerLinearSystem& s, const std::vector<Integer>& x, std::string* why) {
    if (x.size() != s.arity()) {
        if (why) *why = "wrong arity";
        return false;
    }
    auto dot = [&](const std::vector<Integer>& c) {
        Integer acc = 0;
        for (size_t i = 0; i < c.size(); ++i) acc += c[i] * x[i];
        return acc;
    };
    for (const Equality& e : s.equalities)
        if (dot(e.coeffs) != e.constant) {
            if (why) *why = "equality '" + e.label + "' violated";
            return false;
        }
    for (const ConstraintRow& r : s.rows) {
        const Integer v = r.constant + dot(r.coeffs);
        if (v < 0) {
            if (why) *why = "row '" + r.label + "' negative";
            return false;
        }
        if (v % r.modulus != 0) {
            if (why) *why = "row '" + r.label + "' not divisible by " + r.modulus.get_str();
            return false;
        }
    }
    for (const Congruence& c : s.congruences)
        if (mod_floor(dot(c.coeffs) - c.residue, c.modulus) != 0) {
            if (why) *why = "congruence '" + c.label + "' violated";
            return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// exact counting

Integer floor_sum(const Integer& n_in, const Integer& m_in, Integer a, Integer b) {
    if (n_in <= 0) return 0;
    if (m_in <= 0) throw DomainError("floor_sum needs a positive modulus");
    Integer n = n_in, m = m_in, ans = 0;
    if (a < 0) {
        Integer a2 = mod_floor(a, m);
        ans -= n * (n - 1) / 2 * ((a2 - a) / m);
        a = a2;
    }
    if (b < 0) {
        Integer b2 = mod_floor(b, m);
        ans -= n * ((b2 - b) / m);
        b = b2;
    }
    while (true) {
        if (a >= m) {
            ans += n * (n - 1) / 2 * (a / m);
            a %= m;
        }
        if (b >= m) {
            ans += n * (b / m);
            b %= m;
        }
        Integer ymax = a * n + b;
        if (ymax < m) break;
        n = ymax / m;
        b = mod_floor(ymax, m);
        std::swap(m, a);
    }
    return ans;
}

namespace {

// integer solutions of A.x = b: x = x0 + N.y with N a kernel basis,
// via a column Hermite reduction A.U with U unimodular
struct EqParam {
    bool solvable = true;
    std::vector<Integer> x0;               // particular solution
    std::vector<std::vector<Integer>> N;   // kernel basis, one inner vector per free parameter
};

EqParam solve_equalities(const std::vector<Equality>& eqs, size_t n) {
    const size_t r = eqs.size();
    std::vector<std::vector<Integer>> H(r, std::vector<Integer>(n, 0));
    for (size_t i = 0; i < r; ++i) H[i] = eqs[i].coeffs;
    std::vector<std::vector<Integer>> U(n, std::vector<Integer>(n, 0));
    for (size_t i = 0; i < n; ++i) U[i][i] = 1;

    auto col_axpy = [&](size_t dst, size_t src, const Integer& f) { // col_dst -= f*col_src
        for (size_t i = 0; i < r; ++i) H[i][dst] -= f * H[i][src];
        for (size_t i = 0; i < n; ++i) U[i][dst] -= f * U[i][src];
    };
    auto col_swap = [&](size_t a, size_t b) {
        for (size_t i = 0; i < r; ++i) std::swap(H[i][a], H[i][b]);
        for (size_t i = 0; i < n; ++i) std::swap(U[i][a], U[i][b]);
    };

    size_t pc = 0;
    std::vector<size_t> pivot_col_of_row;
    for (size_t pr = 0; pr < r && pc < n; ++pr) {
        while (true) {
            size_t best = n;
            for (size_t c = pc; c < n; ++c)
                if (H[pr][c] != 0 && (best == n || abs(H[pr][c]) < abs(H[pr][best]))) best = c;
            if (best == n) break; // row has no pivot among the remaining columns
            col_swap(pc, best);
            bool clean = true;
            for (size_t c = pc + 1; c < n; ++c) {
                if (H[pr][c] == 0) continue;
                Integer f = floor_div(H[pr][c], H[pr][pc]);
                col_axpy(c, pc, f);
                if (H[pr][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (H[pr][pc] != 0) {
            pivot_col_of_row.push_back(pc);
            ++pc;
        } else {
            pivot_col_of_row.push_back(n); // zero row from here on
        }
    }
    for (size_t pr = pivot_col_of_row.size(); pr < r; ++pr) pivot_col_of_row.push_back(n);

    // forward substitution in the triangular system H.y = b
    EqParam out;
    std::vector<Integer> y(n, 0);
    for (size_t pr = 0; pr < r; ++pr) {
        Integer rest = eqs[pr].constant;
        for (size_t c = 0; c < std::min(pc, n); ++c) rest -= H[pr][c] * y[c];
        const size_t col = pivot_col_of_row[pr];
        if (col == n) {
            if (rest != 0) {
                out.solvable = false;
                return out;
            }
            continue;
        }
        if (rest % H[pr][col] != 0) {
            out.solvable = false;
            return out;
        }
        y[col] = rest / H[pr][col];
    }
    out.x0.assign(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t c = 0; c < n; ++c) out.x0[i] += U[i][c] * y[c];
    for (size_t c = pc; c < n; ++c) {
        std::vector<Integer> col(n);
        for (size_t i = 0; i < n; ++i) col[i] = U[i][c];
        out.N.push_back(std::move(col));
    }
    return out;
}

// c.x0plusNy for transformed constraints
struct AffineRow {
    std::vector<Integer> c; // in the free parameters
    Integer c0;
    Integer m = 1;
};

// 2x2 lattice coset state: y = w + B.z, z ranging over Z^2
struct Lattice2 {
    Integer w[2] = {0, 0};
    Integer B[2][2] = {{1, 0}, {0, 1}};

    // intersect with {y : c.y ≡ rhs (mod m)}; false when empty
    bool absorb(const Integer& c1, const Integer& c2, const Integer& rhs, const Integer& m) {
        Integer d1 = c1 * B[0][0] + c2 * B[1][0];
        Integer d2 = c1 * B[0][1] + c2 * B[1][1];
        Integer r = mod_floor(rhs - c1 * w[0] - c2 * w[1], m);
        if (d1 == 0 && d2 == 0) return r == 0;
        Integer g1, u, v;
        mpz_gcdext(g1.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), d1.get_mpz_t(), d2.get_mpz_t());
        Integer gg = gcd(g1, m);
        if (r % gg != 0) return false;
        Integer m2 = m / gg;
        Integer q0 = 0;
        if (m2 > 1) {
            Integer inv;
            Integer base = mod_floor(g1 / gg, m2);
            if (mpz_invert(inv.get_mpz_t(), base.get_mpz_t(), m2.get_mpz_t()) == 0)
                throw DomainError("internal lattice inverse failed"); // unreachable
            q0 = mod_floor(inv * (r / gg), m2);
        }
        const Integer t0[2] = {u * q0, v * q0};
        const Integer K[2][2] = {{d2 / g1, u * m2}, {-d1 / g1, v * m2}};
        Integer nw[2], nB[2][2];
        for (int i = 0; i < 2; ++i) {
            nw[i] = w[i] + B[i][0] * t0[0] + B[i][1] * t0[1];
            for (int j = 0; j < 2; ++j) nB[i][j] = B[i][0] * K[0][j] + B[i][1] * K[1][j];
        }
        for (int i = 0; i < 2; ++i) {
            w[i] = nw[i];
            for (int j = 0; j < 2; ++j) B[i][j] = nB[i][j];
        }
        return true;
    }
};

// constraints a*z1 + b*z2 + c0 >= 0 with b != 0 bound z2 by (-c0 - a*z1)/b
struct Oblique {
    Integer a, b, c0;
    Rational at(const Rational& z1) const {
        return (Rational(-c0) - Rational(a) * z1) / Rational(b);
    }
};

Integer count_polygon(const std::vector<AffineRow>& ineqs) {
    // fold into z1-interval plus oblique constraints
    std::optional<Integer> lo1, hi1;
    std::vector<Oblique> lower, upper;
    for (const AffineRow& r : ineqs) {
        const Integer &a = r.c[0], &b = r.c[1];
        if (a == 0 && b == 0) {
            if (r.c0 < 0) return 0;
            continue;
        }
        if (b == 0) {
            const Integer v = -r.c0;
            if (a > 0) {
                Integer w = ceil_div(v, a);
                if (!lo1 || w > *lo1) lo1 = w;
            } else {
                Integer w = floor_div(v, a);
                if (!hi1 || w < *hi1) hi1 = w;
            }
            continue;
        }
        if (b > 0) lower.push_back({a, b, r.c0});
        else upper.push_back({a, b, r.c0});
    }
    // z1 range once the oblique pairs are combined; infeasibility wins over
    // any unboundedness verdict
    {
        std::vector<IRow> rows;
        for (const AffineRow& r : ineqs) rows.push_back({{r.c[0], r.c[1]}, r.c0});
        FmBound b1 = fm_bound_var(rows, 2, 0);
        if (b1.infeasible) return 0;
        if (!b1.lo || !b1.hi || lower.empty() || upper.empty())
            throw Unbounded("solution set is unbounded");
        if (!lo1 || *b1.lo > *lo1) lo1 = *b1.lo;
        if (!hi1 || *b1.hi < *hi1) hi1 = *b1.hi;
    }
    if (*lo1 > *hi1) return 0;

    // breakpoints: z1 coordinates where two constraint lines meet
    std::vector<Oblique> all = lower;
    all.insert(all.end(), upper.begin(), upper.end());
    std::set<Rational> cuts;
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j) {
            const Integer den = all[i].a * all[j].b - all[j].a * all[i].b;
            if (den == 0) continue;
            const Integer num = all[j].c0 * all[i].b - all[i].c0 * all[j].b;
            const Rational root = make_rational(num, den);
            if (root > Rational(*lo1) && root < Rational(*hi1)) cuts.insert(root);
        }
    std::vector<Integer> bounds_list;
    for (const Rational& c : cuts) bounds_list.push_back(floor_rat(c));
    bounds_list.push_back(*hi1);
    std::sort(bounds_list.begin(), bounds_list.end());
    bounds_list.erase(std::unique(bounds_list.begin(), bounds_list.end()), bounds_list.end());

    Integer total = 0;
    Integer s = *lo1;
    for (const Integer& e_raw : bounds_list) {
        const Integer e = std::min(e_raw, *hi1);
        if (s > e) continue;
        const Rational rep = make_rational(Integer(s + e), Integer(2));
        const Oblique* L = &lower[0];
        for (const Oblique& r : lower)
            if (r.at(rep) > L->at(rep)) L = &r;
        const Oblique* Uc = &upper[0];
        for (const Oblique& r : upper)
            if (r.at(rep) < Uc->at(rep)) Uc = &r;
        if (L->at(rep) <= Uc->at(rep)) {
            const Integer n = e - s + 1;
            // sum of floor(U) - ceil(L) + 1 over z1 in [s, e]
            total += floor_sum(n, -Uc->b, Uc->a, Uc->a * s + Uc->c0);
            total += floor_sum(n, L->b, L->a, L->a * s + L->c0);
            total += n;
        }
        s = e + 1;
    }
    return total;
}

Integer count_interval_with_residue(const std::vector<AffineRow>& ineqs,
                                    const std::vector<AffineRow>& congs) {
    std::optional<Integer> lo, hi;
    for (const AffineRow& r : ineqs) {
        const Integer& a = r.c[0];
        if (a == 0) {
            if (r.c0 < 0) return 0;
            continue;
        }
        const Integer v = -r.c0;
        if (a > 0) {
            Integer w = ceil_div(v, a);
            if (!lo || w > *lo) lo = w;
        } else {
            Integer w = floor_div(v, a);
            if (!hi || w < *hi) hi = w;
        }
    }
    ResidueClass rc;
    for (const AffineRow& r : congs) {
        auto sol = solve_unary_congruence(r.c[0], -r.c0, r.m);
        if (!sol || !merge_residue(rc, sol->off, sol->step)) return 0;
    }
    if (!lo || !hi) throw Unbounded("solution set is unbounded");
    if (*lo > *hi) return 0;
    const Integer first = *lo + mod_floor(rc.off - *lo, rc.step);
    if (first > *hi) return 0;
    return (*hi - first) / rc.step + 1;
}

} // namespace

Integer count_solutions(const IntegerLinearSystem& s, const CountOptions& opts) {
    s.check_shapes();
    const size_t n = s.arity();
    EqParam par = solve_equalities(s.equalities, n);
    if (!par.solvable) return 0;
    const size_t d = par.N.size();

    // rewrite everything in the free parameters y: x = x0 + N.y
    auto transform = [&](const std::vector<Integer>& c, const Integer& c0, const Integer& m) {
        AffineRow out;
        out.c0 = c0;
        out.m = m;
        for (size_t i = 0; i < n; ++i) out.c0 += c[i] * par.x0[i];
        out.c.assign(d, 0);
        for (size_t f = 0; f < d; ++f)
            for (size_t i = 0; i < n; ++i) out.c[f] += c[i] * par.N[f][i];
        return out;
    };
    std::vector<AffineRow> ineqs, congs;
    for (const ConstraintRow& r : s.rows) {
        AffineRow a = transform(r.coeffs, r.constant, r.modulus);
        ineqs.push_back(a);
        if (r.modulus > 1) congs.push_back(a); // c0 + c.y ≡ 0 (mod m)
    }
    for (const Congruence& c : s.congruences)
        congs.push_back(transform(c.coeffs, -c.residue, c.modulus));

    if (d == 0) {
        for (const AffineRow& r : ineqs)
            if (r.c0 < 0) return 0;
        for (const AffineRow& r : congs)
            if (mod_floor(r.c0, r.m) != 0) return 0;
        return 1;
    }
    if (d == 1) return count_interval_with_residue(ineqs, congs);
    if (d == 2) {
        Lattice2 lat;
        for (const AffineRow& r : congs)
            if (!lat.absorb(r.c[0], r.c[1], -r.c0, r.m)) return 0;
        // substitute y = w + B.z into the inequality parts
        std::vector<AffineRow> zrows;
        for (const AffineRow& r : ineqs) {
            AffineRow z;
            z.c0 = r.c0 + r.c[0] * lat.w[0] + r.c[1] * lat.w[1];
            z.c = {r.c[0] * lat.B[0][0] + r.c[1] * lat.B[1][0],
                   r.c[0] * lat.B[0][1] + r.c[1] * lat.B[1][1]};
            zrows.push_back(std::move(z));
        }
        return count_polygon(zrows);
    }
    EnumerateOptions eopts;
    eopts.limit = opts.enumerate_limit;
    return Integer(enumerate_solutions(s, eopts).size());
}

} // namespace gring
