// Hand-built character tables and shared helpers for the test suites.
#pragma once

#include <string>
#include <vector>

#include "gring/chartab.hpp"

namespace gring::testsupport {

// Cyclic group of order n (2 <= n <= 12): one class per element, classes
// named by element order with letters in exponent order.
CharacterTable make_cyclic(long n);

CharacterTable make_s3();
CharacterTable make_d8();
CharacterTable make_a4();

// Synthetic three-class table (1a, 5a, 5b) carrying mod-11 rows of degrees
// 7, 14 and 106 whose order-5 constraints have a known four-tuple solution set.
CharacterTable make_slice5();

// Synthetic four-class table (1a, 19a, 19b, 19c) carrying mod-11 rows of
// degrees 7, 69 and 119 built from the three 6-term Gaussian periods.
CharacterTable make_slice19();

// All small-group fixtures, paired with their fixture file stem.
std::vector<std::pair<std::string, CharacterTable>> fixture_tables();

std::string fixture_path(const std::string& name);

} // namespace gring::testsupport
