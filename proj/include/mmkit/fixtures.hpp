// fixtures.hpp -- built-in study markets. Each fixture is the instance text
// exactly as the parser takes it, so the corpus doubles as format examples.
#pragma once

#include <string>
#include <vector>

#include "mmkit/market.hpp"

namespace mmkit {

struct Fixture {
    std::string name;
    std::string description;        // one line, shown in listings
    std::string instance_text;
    std::string decomposition_text; // empty when the fixture ships none
    std::string note;               // what the market demonstrates
};

const std::vector<Fixture>& fixtures();

// nullptr when no fixture has that name.
const Fixture* find_fixture(const std::string& name);

// Parses and validates; throws std::invalid_argument for unknown names
// (and std::logic_error if a shipped fixture ever fails to validate).
MarketInstance fixture_instance(const std::string& name);

} // namespace mmkit
