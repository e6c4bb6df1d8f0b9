#pragma once

#include <map>
#include <optional>
#include <string>

#include "effsq/cube.hpp"
#include "effsq/morphism_class.hpp"
#include "effsq/square.hpp"

namespace effsq {

// Named-reference diagram document: groups, homs over them, squares and
// cubes over the homs, plus an optional morphism-class tag. Every
// reference must resolve and every square/cube must commute on load.
struct DiagramDoc {
    std::string version = "effsq-diagram/1";
    std::map<std::string, FpAbGroup> groups;
    std::map<std::string, Hom> homs;
    std::map<std::string, Square> squares;
    std::map<std::string, Cube> cubes;
    std::optional<MorphismClass> cls;

    bool operator==(const DiagramDoc& o) const;
};

// Parse errors carry the byte offset (malformed JSON) or the offending
// path (schema violations, unresolved references, non-commuting data).
DiagramDoc parse_diagram(const std::string& text);

// Canonical serialization: names sorted lexicographically, no
// insignificant whitespace; round-trips byte-exactly. Matrix entries are
// bounded to 64-bit in files; larger values are a serialization error.
std::string serialize_diagram(const DiagramDoc& doc);

// Bare matrix files for the snf subcommand: either [[..],[..]] or
// {"matrix": [[..]]}.
IntMatrix parse_matrix_doc(const std::string& text);

} // namespace effsq
