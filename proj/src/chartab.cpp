#include "gring/chartab.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace gring {

using nlohmann::json;

Integer CharacterTable::group_order() const {
    Integer n = 1;
    for (const auto& [p, e] : order_factored)
        for (int i = 0; i < e; ++i) n *= p;
    return n;
}

std::optional<size_t> CharacterTable::class_index(const std::string& name) const {
    for (size_t i = 0; i < classes.size(); ++i)
        if (classes[i].name == name) return i;
    return std::nullopt;
}

const ClassInfo& CharacterTable::cls(const std::string& name) const {
    auto idx = class_index(name);
    if (!idx) throw DanglingClassRef("unknown class '" + name + "'");
    return classes[*idx];
}

Integer CharacterTable::degree(const CharacterRow& row) const {
    return as_integer(row.values.at(0).rational_value());
}

namespace {

long get_long(const json& j, const char* what) {
    if (!j.is_number_integer()) throw SchemaError(std::string(what) + ": integer expected");
    return j.get<long>();
}

Cyc parse_value(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Cyc::from_rational(Rational(j.get<long>()));
    if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
        throw SchemaError(where + ": value must be an integer or {n, terms}");
    const long n = get_long(j.at("n"), (where + ".n").c_str());
    if (n < 1) throw SchemaError(where + ": conductor must be positive");
    const json& terms = j.at("terms");
    if (!terms.is_array()) throw SchemaError(where + ": terms must be an array");
    Cyc x = Cyc::from_rational(0);
    for (const json& t : terms) {
        if (!t.is_array() || t.size() != 3)
            throw SchemaError(where + ": each term must be [exponent, numerator, denominator]");
        const long e = get_long(t[0], (where + " exponent").c_str());
        const long num = get_long(t[1], (where + " numerator").c_str());
        const long den = get_long(t[2], (where + " denominator").c_str());
        if (den == 0) throw SchemaError(where + ": zero denominator");
        x = x + Cyc::root_of_unity(n, e) * Cyc::from_rational(make_rational(num, den));
    }
    // keep the document's conductor even for elements of smaller fields
    return x.lifted(lcm_long(x.conductor(), n));
}

std::vector<CharacterRow> parse_rows(const json& arr, const std::vector<std::string>& class_names,
                                     const std::string& where) {
    if (!arr.is_array()) throw SchemaError(where + ": array of rows expected");
    std::vector<CharacterRow> rows;
    for (const json& r : arr) {
        if (!r.is_object() || !r.contains("id") || !r.contains("values"))
            throw SchemaError(where + ": row must have id and values");
        CharacterRow row;
        row.id = r.at("id").get<std::string>();
        const json& vals = r.at("values");
        if (!vals.is_object()) throw SchemaError(where + "/" + row.id + ": values must be an object");
        for (auto it = vals.begin(); it != vals.end(); ++it) {
            if (std::find(class_names.begin(), class_names.end(), it.key()) == class_names.end())
                throw DanglingClassRef(where + "/" + row.id + ": value for unknown class '" + it.key() + "'");
        }
        for (const std::string& cname : class_names) {
            if (!vals.contains(cname))
                throw SchemaError(where + "/" + row.id + ": missing value for class '" + cname + "'");
            row.values.push_back(parse_value(vals.at(cname), where + "/" + row.id + "/" + cname));
        }
        const Cyc& at1 = row.values.front();
        if (!at1.is_rational() || !is_integral(at1.rational_value()) || at1.rational_value() <= 0)
            throw BadDegree(where + "/" + row.id + ": value at 1a must be a positive integer");
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

CharacterTable parse_table(const json& doc) {
    if (!doc.is_object()) throw SchemaError("table document must be a JSON object");
    for (const char* key : {"group", "order", "exponent", "classes", "ordinary"})
        if (!doc.contains(key)) throw SchemaError(std::string("missing key '") + key + "'");

    CharacterTable t;
    t.group = doc.at("group").get<std::string>();
    if (!doc.at("order").is_array()) throw SchemaError("order: array of [prime, exponent] expected");
    for (const json& pe : doc.at("order")) {
        if (!pe.is_array() || pe.size() != 2) throw SchemaError("order: array of [prime, exponent] expected");
        const long p = get_long(pe[0], "order prime");
        const long e = get_long(pe[1], "order exponent");
        if (p < 2 || e < 1) throw SchemaError("order: primes must be >= 2 with positive exponents");
        t.order_factored.emplace_back(p, static_cast<int>(e));
    }
    t.exponent = get_long(doc.at("exponent"), "exponent");
    if (t.exponent < 1) throw SchemaError("exponent must be positive");

    if (!doc.at("classes").is_array() || doc.at("classes").empty())
        throw SchemaError("classes: nonempty array expected");
    std::set<std::string> seen;
    for (const json& c : doc.at("classes")) {
        if (!c.is_object() || !c.contains("name") || !c.contains("order") || !c.contains("power_maps"))
            throw SchemaError("class entries need name, order and power_maps");
        ClassInfo info;
        info.name = c.at("name").get<std::string>();
        info.order = get_long(c.at("order"), "class order");
        if (info.order < 1) throw SchemaError("class '" + info.name + "': order must be positive");
        if (!seen.insert(info.name).second) throw SchemaError("duplicate class '" + info.name + "'");
        if (c.contains("size")) {
            if (c.at("size").is_number_integer())
                info.size = Integer(c.at("size").get<long>());
            else if (c.at("size").is_string())
                info.size = Integer(c.at("size").get<std::string>());
            else
                throw SchemaError("class '" + info.name + "': size must be an integer");
        }
        if (!c.at("power_maps").is_object()) throw SchemaError("power_maps must be an object");
        for (auto it = c.at("power_maps").begin(); it != c.at("power_maps").end(); ++it) {
            long p = 0;
            try {
                p = std::stol(it.key());
            } catch (...) {
                throw SchemaError("class '" + info.name + "': power map key '" + it.key() + "' is not a prime");
            }
            if (p < 2) throw SchemaError("class '" + info.name + "': power map key must be a prime >= 2");
            info.power_maps[p] = it.value().get<std::string>();
        }
        t.classes.push_back(std::move(info));
    }
    if (t.classes.front().name != "1a" || t.classes.front().order != 1)
        throw SchemaError("first class must be 1a of order 1");

    // power map targets must exist and have the expected order
    for (const ClassInfo& c : t.classes) {
        for (const auto& [p, target] : c.power_maps) {
            const ClassInfo& img = t.cls(target); // DanglingClassRef if absent
            const long expect = (c.order % p == 0) ? c.order / p : c.order;
            if (img.order != expect)
                throw PowerMapOrderError("class '" + c.name + "': " + std::to_string(p) +
                                         "-power map target '" + target + "' has order " +
                                         std::to_string(img.order) + ", expected " + std::to_string(expect));
        }
    }

    std::vector<std::string> all_names;
    for (const ClassInfo& c : t.classes) all_names.push_back(c.name);
    t.ordinary = parse_rows(doc.at("ordinary"), all_names, "ordinary");

    if (doc.contains("brauer")) {
        if (!doc.at("brauer").is_object()) throw SchemaError("brauer: object keyed by primes expected");
        for (auto it = doc.at("brauer").begin(); it != doc.at("brauer").end(); ++it) {
            long p = 0;
            try {
                p = std::stol(it.key());
            } catch (...) {
                throw SchemaError("brauer key '" + it.key() + "' is not a prime");
            }
            if (p < 2) throw SchemaError("brauer key must be a prime >= 2");
            const json& blk = it.value();
            if (!blk.is_object() || !blk.contains("classes") || !blk.contains("rows"))
                throw SchemaError("brauer block needs classes and rows");
            BrauerBlock block;
            block.p = p;
            for (const json& nm : blk.at("classes")) block.classes.push_back(nm.get<std::string>());
            // must be exactly the p-regular classes, in table order
            std::vector<std::string> expect;
            for (const ClassInfo& c : t.classes)
                if (c.order % p != 0) expect.push_back(c.name);
            for (const std::string& nm : block.classes)
                if (!t.class_index(nm)) throw DanglingClassRef("brauer " + it.key() + ": unknown class '" + nm + "'");
            if (block.classes != expect)
                throw SchemaError("brauer " + it.key() + ": classes must be exactly the p-regular classes in table order");
            block.rows = parse_rows(blk.at("rows"), block.classes, "brauer " + it.key());
            t.brauer.emplace(p, std::move(block));
        }
    }
    return t;
}

CharacterTable parse_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open table file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw SchemaError("invalid JSON in '" + path + "': " + e.what());
    }
    return parse_table(doc);
}

namespace {

json value_to_json(const Cyc& x) {
    if (x.is_rational() && is_integral(x.rational_value()) &&
        x.rational_value().get_num().fits_slong_p())
        return json(x.rational_value().get_num().get_si());
    json terms = json::array();
    const auto& c = x.coeffs();
    for (size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        if (!c[j].get_num().fits_slong_p() || !c[j].get_den().fits_slong_p())
            throw DomainError("character value coefficient too large to serialize");
        terms.push_back({static_cast<long>(j), c[j].get_num().get_si(), c[j].get_den().get_si()});
    }
    return json{{"n", x.conductor()}, {"terms", terms}};
}

json rows_to_json(const std::vector<CharacterRow>& rows, const std::vector<std::string>& class_names) {
    json arr = json::array();
    for (const CharacterRow& r : rows) {
        json vals = json::object();
        for (size_t i = 0; i < class_names.size(); ++i) vals[class_names[i]] = value_to_json(r.values[i]);
        arr.push_back({{"id", r.id}, {"values", vals}});
    }
    return arr;
}

} // namespace

json serialize(const CharacterTable& t) {
    json order = json::array();
    for (const auto& [p, e] : t.order_factored) order.push_back({p, e});
    json classes = json::array();
    for (const ClassInfo& c : t.classes) {
        json pm = json::object();
        for (const auto& [p, target] : c.power_maps) pm[std::to_string(p)] = target;
        json entry{{"name", c.name}, {"order", c.order}, {"power_maps", pm}};
        if (c.size) entry["size"] = c.size->fits_slong_p() ? json(c.size->get_si()) : json(c.size->get_str());
        classes.push_back(entry);
    }
    std::vector<std::string> all_names;
    for (const ClassInfo& c : t.classes) all_names.push_back(c.name);
    json doc{{"group", t.group},   {"order", order},
             {"exponent", t.exponent}, {"classes", classes},
             {"ordinary", rows_to_json(t.ordinary, all_names)}};
    json brauer = json::object();
    for (const auto& [p, blk] : t.brauer)
        brauer[std::to_string(p)] = json{{"classes", blk.classes}, {"rows", rows_to_json(blk.rows, blk.classes)}};
    doc["brauer"] = brauer;
    return doc;
}

std::string class_power(const CharacterTable& table, const std::string& name, long d) {
    if (d < 0) throw DomainError("class_power: exponent must be non-negative");
    const ClassInfo* cur = &table.cls(name);
    long e = d % cur->order;
    if (e == 0) return "1a";
    for (const auto& [p, mult] : factorize(e)) {
        for (int i = 0; i < mult; ++i) {
            auto it = cur->power_maps.find(p);
            if (it == cur->power_maps.end())
                throw MissingPowerMap("class '" + cur->name + "' has no " + std::to_string(p) + "-power map");
            cur = &table.cls(it->second);
        }
    }
    return cur->name;
}

std::vector<long> element_orders(const CharacterTable& table) {
    std::set<long> orders;
    for (const ClassInfo& c : table.classes) orders.insert(c.order);
    return {orders.begin(), orders.end()};
}

std::vector<std::string> classes_of_order_dividing(const CharacterTable& table, long k) {
    if (k < 1) throw DomainError("classes_of_order_dividing: k must be positive");
    std::vector<std::string> out;
    for (const ClassInfo& c : table.classes)
        if (c.order > 1 && k % c.order == 0) out.push_back(c.name);
    return out;
}

std::vector<ValidationIssue> validate(const CharacterTable& t, const ValidateOptions& opts) {
    std::vector<ValidationIssue> issues;
    auto flag = [&](const std::string& kind, const std::string& msg) {
        issues.push_back({kind, msg});
    };

    long lcm = 1;
    for (const ClassInfo& c : t.classes) lcm = lcm_long(lcm, c.order);
    if (lcm != t.exponent)
        flag("exponent-mismatch", "exponent " + std::to_string(t.exponent) +
                                      " != lcm of class orders " + std::to_string(lcm));
    const Integer order = t.group_order();
    if (order % t.exponent != 0)
        flag("exponent-order", "exponent does not divide the group order");
    for (const ClassInfo& c : t.classes)
        if (order % c.order != 0)
            flag("class-order", "order of class '" + c.name + "' does not divide the group order");

    // every prime dividing the exponent must have a power map on every class
    for (const auto& [p, e] : factorize(t.exponent)) {
        (void)e;
        for (const ClassInfo& c : t.classes)
            if (!c.power_maps.count(p))
                flag("missing-power-map", "class '" + c.name + "' lacks the " + std::to_string(p) + "-power map");
    }

    // values on a class of order m lie in Q(zeta_m)
    auto check_rows = [&](const std::vector<CharacterRow>& rows, const std::vector<std::string>& names,
                          const std::string& where) {
        for (const CharacterRow& r : rows) {
            for (size_t i = 0; i < names.size(); ++i) {
                const long m = t.cls(names[i]).order;
                if (!r.values[i].lies_in(m))
                    flag("value-conductor", where + "/" + r.id + ": value at '" + names[i] +
                                                "' does not lie in Q(zeta_" + std::to_string(m) + ")");
            }
        }
    };
    std::vector<std::string> all_names;
    for (const ClassInfo& c : t.classes) all_names.push_back(c.name);
    check_rows(t.ordinary, all_names, "ordinary");
    for (const auto& [p, blk] : t.brauer) {
        std::vector<std::string> expect;
        for (const ClassInfo& c : t.classes)
            if (c.order % p != 0) expect.push_back(c.name);
        if (blk.classes != expect)
            flag("brauer-classes", "brauer " + std::to_string(p) + ": class list is not the p-regular sublist");
        else
            check_rows(blk.rows, blk.classes, "brauer " + std::to_string(p));
    }

    const bool have_sizes =
        std::all_of(t.classes.begin(), t.classes.end(), [](const ClassInfo& c) { return c.size.has_value(); });
    if (have_sizes) {
        Integer sum = 0;
        for (const ClassInfo& c : t.classes) sum += *c.size;
        if (sum != order)
            flag("size-sum", "class sizes sum to " + sum.get_str() + ", group order is " + order.get_str());
    }
    if (opts.orthogonality && have_sizes) {
        for (const CharacterRow& r : t.ordinary) {
            Cyc acc;
            for (size_t i = 0; i < r.values.size(); ++i) {
                Cyc conj = r.values[i].galois_apply(-1);
                Cyc prod = r.values[i] * conj;
                Cyc scaled = prod * Cyc::from_rational(Rational(*t.classes[i].size));
                acc = acc + scaled;
            }
            if (!acc.is_rational() || acc.rational_value() != Rational(order))
                flag("orthogonality", "row '" + r.id + "': sum of |value|^2 weighted by class sizes is " +
                                          acc.str() + ", expected " + order.get_str());
        }
    }
    return issues;
}

} // namespace gring
