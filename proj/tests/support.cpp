#include "support.hpp"

#include <map>

namespace gring::testsupport {

namespace {

// zeta_n^e stored at its minimal conductor.
Cyc root(long n, long e) {
    e %= n;
    if (e < 0) e += n;
    if (e == 0) return Cyc::from_rational(1);
    const long g = gcd_long(e, n);
    return Cyc::root_of_unity(n / g, e / g);
}

Cyc period19(std::initializer_list<long> exps) {
    Cyc s;
    for (long e : exps) s = s + Cyc::root_of_unity(19, e);
    return s;
}

CharacterRow row(std::string id, std::vector<Cyc> values) {
    return CharacterRow{std::move(id), std::move(values)};
}

Cyc C(long v) { return Cyc::from_rational(v); }

} // namespace

CharacterTable make_cyclic(long n) {
    CharacterTable t;
    t.group = "C" + std::to_string(n);
    t.order_factored = factorize(n);
    t.exponent = n;

    // class of g^a, named by element order with letters in exponent order
    std::vector<std::string> name_of(n);
    std::map<long, char> next_letter;
    for (long a = 0; a < n; ++a) {
        const long ord = n / gcd_long(a, n);
        char& letter = next_letter.try_emplace(ord, 'a').first->second;
        name_of[a] = std::to_string(ord) + letter;
        ++letter;
    }
    // maps for every prime up to 2n, as a real table would carry
    std::vector<long> primes;
    for (long p = 2; p <= 2 * n; ++p)
        if (factorize(p).size() == 1 && factorize(p)[0].second == 1) primes.push_back(p);
    for (long a = 0; a < n; ++a) {
        ClassInfo c;
        c.name = name_of[a];
        c.order = n / gcd_long(a, n);
        c.size = Integer(1);
        for (long p : primes) c.power_maps[p] = name_of[(a * p) % n];
        t.classes.push_back(std::move(c));
    }
    for (long j = 0; j < n; ++j) {
        std::vector<Cyc> vals;
        for (long a = 0; a < n; ++a) vals.push_back(root(n, j * a));
        t.ordinary.push_back(row("chi" + std::to_string(j + 1), std::move(vals)));
    }
    return t;
}

CharacterTable make_s3() {
    CharacterTable t;
    t.group = "S3";
    t.order_factored = {{2, 1}, {3, 1}};
    t.exponent = 6;
    t.classes = {
        {"1a", 1, Integer(1), {{2, "1a"}, {3, "1a"}}},
        {"2a", 2, Integer(3), {{2, "1a"}, {3, "2a"}}},
        {"3a", 3, Integer(2), {{2, "3a"}, {3, "1a"}}},
    };
    t.ordinary = {
        row("chi1", {C(1), C(1), C(1)}),
        row("chi2", {C(1), C(-1), C(1)}),
        row("chi3", {C(2), C(0), C(-1)}),
    };
    return t;
}

CharacterTable make_d8() {
    CharacterTable t;
    t.group = "D8";
    t.order_factored = {{2, 3}};
    t.exponent = 4;
    t.classes = {
        {"1a", 1, Integer(1), {{2, "1a"}}},
        {"2a", 2, Integer(1), {{2, "1a"}}},
        {"2b", 2, Integer(2), {{2, "1a"}}},
        {"2c", 2, Integer(2), {{2, "1a"}}},
        {"4a", 4, Integer(2), {{2, "2a"}}},
    };
    t.ordinary = {
        row("chi1", {C(1), C(1), C(1), C(1), C(1)}),
        row("chi2", {C(1), C(1), C(1), C(-1), C(-1)}),
        row("chi3", {C(1), C(1), C(-1), C(1), C(-1)}),
        row("chi4", {C(1), C(1), C(-1), C(-1), C(1)}),
        row("chi5", {C(2), C(-2), C(0), C(0), C(0)}),
    };
    return t;
}

CharacterTable make_a4() {
    CharacterTable t;
    t.group = "A4";
    t.order_factored = {{2, 2}, {3, 1}};
    t.exponent = 6;
    t.classes = {
        {"1a", 1, Integer(1), {{2, "1a"}, {3, "1a"}}},
        {"2a", 2, Integer(3), {{2, "1a"}, {3, "2a"}}},
        {"3a", 3, Integer(4), {{2, "3b"}, {3, "1a"}}},
        {"3b", 3, Integer(4), {{2, "3a"}, {3, "1a"}}},
    };
    const Cyc w = Cyc::root_of_unity(3, 1);
    const Cyc w2 = Cyc::root_of_unity(3, 2);
    t.ordinary = {
        row("chi1", {C(1), C(1), C(1), C(1)}),
        row("chi2", {C(1), C(1), w, w2}),
        row("chi3", {C(1), C(1), w2, w}),
        row("chi4", {C(3), C(-1), C(0), C(0)}),
    };
    return t;
}

CharacterTable make_slice5() {
    CharacterTable t;
    t.group = "sl5";
    t.order_factored = {{5, 1}, {11, 1}};
    t.exponent = 5;
    t.classes = {
        {"1a", 1, std::nullopt, {{5, "1a"}}},
        {"5a", 5, std::nullopt, {{5, "1a"}}},
        {"5b", 5, std::nullopt, {{5, "1a"}}},
    };
    t.ordinary = {row("triv", {C(1), C(1), C(1)})};
    const Cyc b5 = Cyc::root_of_unity(5, 1) + Cyc::root_of_unity(5, 4);
    const Cyc b5s = Cyc::root_of_unity(5, 2) + Cyc::root_of_unity(5, 3);
    BrauerBlock blk;
    blk.p = 11;
    blk.classes = {"1a", "5a", "5b"};
    blk.rows = {
        row("phi2", {C(7), b5, b5s}),
        row("phi3", {C(14), C(1) - b5, C(1) - b5s}),
        row("phi12", {C(106), C(-1) + b5, C(-1) + b5s}),
    };
    t.brauer.emplace(11, std::move(blk));
    return t;
}

CharacterTable make_slice19() {
    CharacterTable t;
    t.group = "sl19";
    t.order_factored = {{19, 1}, {11, 1}};
    t.exponent = 19;
    t.classes = {
        {"1a", 1, std::nullopt, {{19, "1a"}}},
        {"19a", 19, std::nullopt, {{19, "1a"}}},
        {"19b", 19, std::nullopt, {{19, "1a"}}},
        {"19c", 19, std::nullopt, {{19, "1a"}}},
    };
    t.ordinary = {row("triv", {C(1), C(1), C(1), C(1)})};
    // 6-term Gaussian periods for the index-3 subgroup of (Z/19)^*
    const Cyc e0 = period19({1, 7, 8, 11, 12, 18});
    const Cyc e1 = period19({2, 3, 5, 14, 16, 17});
    const Cyc e2 = period19({4, 6, 9, 10, 13, 15});
    BrauerBlock blk;
    blk.p = 11;
    blk.classes = {"1a", "19a", "19b", "19c"};
    blk.rows = {
        row("phi2", {C(7), C(1) + e2, C(1) + e0, C(1) + e1}),
        row("phi8", {C(69), C(-1) - e2, C(-1) - e0, C(-1) - e1}),
        row("phi13", {C(119), C(-1) + e0, C(-1) + e1, C(-1) + e2}),
    };
    t.brauer.emplace(11, std::move(blk));
    return t;
}

std::vector<std::pair<std::string, CharacterTable>> fixture_tables() {
    std::vector<std::pair<std::string, CharacterTable>> out;
    for (long n = 2; n <= 6; ++n) out.emplace_back("c" + std::to_string(n), make_cyclic(n));
    out.emplace_back("s3", make_s3());
    out.emplace_back("d8", make_d8());
    out.emplace_back("a4", make_a4());
    return out;
}

std::string fixture_path(const std::string& name) {
    return std::string(GRING_FIXTURE_DIR) + "/" + name;
}

} // namespace gring::testsupport
