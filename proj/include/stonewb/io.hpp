#pragma once

// JSON input with a mandatory "kind" field, JSON and text output, DOT
// export.

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "stonewb/cposet.hpp"
#include "stonewb/lattices.hpp"
#include "stonewb/space.hpp"

namespace stonewb {

struct StrictMapInput {
    CPoset source;
    CPoset target;
    PositionMap map;
};

struct SpectralMapInput {
    SpaceWithBase source;
    SpaceWithBase target;
    PositionMap map;
};

using Input = std::variant<CPoset, SpaceWithBase, FinitePoset, Lattice, Semilattice, StrictMapInput, SpectralMapInput>;

std::string kind_of(const Input& in);

/// Throws InputError; JSON syntax errors carry line and column.
Input parse_input_text(const std::string& text);
Input parse_input_file(const std::string& path);
Input parse_input_json(const nlohmann::json& j);

FinitePoset poset_from_json(const nlohmann::json& j);
CPoset cposet_from_json(const nlohmann::json& j);
SpaceWithBase space_from_json(const nlohmann::json& j);
Lattice lattice_from_json(const nlohmann::json& j);
Semilattice semilattice_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FinitePoset& p);
nlohmann::json to_json(const CPoset& p);
nlohmann::json to_json(const SpaceWithBase& s);
nlohmann::json to_json(const Lattice& l);
nlohmann::json to_json(const Semilattice& s);
nlohmann::json to_json(const ValidationReport& r);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const IncPredicate& inc);

/// Hasse diagram of a poset.
std::string dot_hasse(const FinitePoset& p, const std::string& name = "poset");
/// Specialization order of a space.
std::string dot_specialization(const SpaceWithBase& s);
/// Hasse diagram of the distinct base sets under inclusion.
std::string dot_base_inclusion(const SpaceWithBase& s);

}  // namespace stonewb
