#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gring/errors.hpp"
#include "gring/rational.hpp"

namespace gring {

// value = constant + coeffs.x must be >= 0 and divisible by modulus
struct ConstraintRow {
    std::vector<Integer> coeffs;
    Integer constant = 0;
    Integer modulus = 1;
    std::string label;
};

// coeffs.x = constant
struct Equality {
    std::vector<Integer> coeffs;
    Integer constant = 0;
    std::string label;
};

// coeffs.x ≡ residue (mod modulus)
struct Congruence {
    std::vector<Integer> coeffs;
    Integer residue = 0;
    Integer modulus = 1;
    std::string label;
};

struct IntegerLinearSystem {
    std::string name;
    std::vector<std::string> variables;
    std::vector<Equality> equalities;
    std::vector<ConstraintRow> rows;
    std::vector<Congruence> congruences;

    size_t arity() const { return variables.size(); }
    void check_shapes() const; // throws SchemaError on length mismatches
};

IntegerLinearSystem parse_system(const nlohmann::json& doc);
IntegerLinearSystem parse_system_file(const std::string& path);
nlohmann::json serialize(const IntegerLinearSystem& s);

// inclusive interval, lo > hi encodes the empty set
struct VarBounds {
    Integer lo = 0;
    Integer hi = -1;
    bool empty() const { return lo > hi; }
};

struct BoundsResult {
    bool feasible = true; // false when even the real relaxation is empty
    std::vector<VarBounds> vars;
};

// Per-variable bounds of the real relaxation (congruences ignored), via
// Fourier-Motzkin elimination with equalities folded in as opposite pairs.
// Throws Unbounded if some variable has no finite bound in a feasible system,
// LimitExceeded if intermediate rows blow past an internal cap.
BoundsResult derive_bounds(const IntegerLinearSystem& s);

struct SolveStats {
    long long nodes = 0;                 // assignments visited during search
    std::vector<long long> row_kills;    // per row: subtrees pruned by its bound or residue test
    std::vector<long long> eq_kills;     // per equality
    std::vector<long long> cong_kills;   // per congruence
};

struct EnumerateOptions {
    long long limit = 2'000'000;         // solution cap before LimitExceeded
    std::optional<Integer> clamp_abs;    // optional extra box |x_i| <= clamp_abs
};

// All integer solutions in deterministic lexicographic order.
std::vector<std::vector<Integer>> enumerate_solutions(const IntegerLinearSystem& s,
                                                      const EnumerateOptions& opts = {},
                                                      SolveStats* stats = nullptr);

struct CountOptions {
    long long enumerate_limit = 2'000'000; // cap for the >2 free variable fallback
};

// Exact solution count. Equalities are eliminated by an integer (Hermite form)
// parametrization; 0, 1 and 2 free variables are counted in closed form, more
// fall back to enumeration. Throws Unbounded when the count is infinite.
Integer count_solutions(const IntegerLinearSystem& s, const CountOptions& opts = {});

bool verify_solution(const IntegerLinearSystem& s, const std::vector<Integer>& x,
                     std::string* why = nullptr);

// Sum over i in [0, n) of floor((a*i + b) / m), m > 0, any sign of a and b.
Integer floor_sum(const Integer& n, const Integer& m, Integer a, Integer b);

} // namespace gring
