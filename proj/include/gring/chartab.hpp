// Character-table data model and its JSON document format.
//
// A table lists conjugacy classes ("1a" first), ordinary character rows over
// all classes, and optional per-prime Brauer blocks whose rows cover exactly
// the p-regular classes. Values are exact cyclotomic numbers; the value on a
// class of order m lies in Q(zeta_m).
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gring/cyclotomic.hpp"

namespace gring {

struct ClassInfo {
    std::string name;
    long order = 1;
    std::optional<Integer> size;
    std::map<long, std::string> power_maps; // prime -> class of g^p
};

struct CharacterRow {
    std::string id;
    std::vector<Cyc> values; // aligned with the owning class list
};

struct BrauerBlock {
    long p = 0;
    std::vector<std::string> classes; // p-regular classes, table order
    std::vector<CharacterRow> rows;   // values aligned with `classes`
};

struct CharacterTable {
    std::string group;
    std::vector<std::pair<long, int>> order_factored; // (prime, exponent)
    long exponent = 1;
    std::vector<ClassInfo> classes;
    std::vector<CharacterRow> ordinary;
    std::map<long, BrauerBlock> brauer;

    Integer group_order() const;
    // Index into `classes`, or nullopt.
    std::optional<size_t> class_index(const std::string& name) const;
    const ClassInfo& cls(const std::string& name) const; // DanglingClassRef if absent
    // Degree of a row = its value at 1a (an integer by construction).
    Integer degree(const CharacterRow& row) const;
};

// Document parsing. Throws SchemaError / DanglingClassRef / BadDegree /
// PowerMapOrderError on malformed input.
CharacterTable parse_table(const nlohmann::json& doc);
CharacterTable parse_table_file(const std::string& path);
nlohmann::json serialize(const CharacterTable& table);

// Class of g^d for g in class `name`; d >= 0. Composes prime power maps
// after reducing d modulo the class order.
std::string class_power(const CharacterTable& table, const std::string& name, long d);

// Sorted distinct class orders (1 included).
std::vector<long> element_orders(const CharacterTable& table);

// Names of classes != 1a whose order divides k, in table order.
std::vector<std::string> classes_of_order_dividing(const CharacterTable& table, long k);

struct ValidationIssue {
    std::string kind; // stable machine tag, e.g. "exponent-mismatch"
    std::string message;
};

struct ValidateOptions {
    bool orthogonality = true; // first orthogonality; needs all class sizes
};

// Re-checks table invariants; empty result means clean.
std::vector<ValidationIssue> validate(const CharacterTable& table, const ValidateOptions& opts = {});

} // namespace gring
