#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hfree/graph.hpp"

namespace hfree {

struct NamedGraph {
    std::string id;
    SmallGraph graph;
    std::string source;
};

// Named entries as stored, in file order. Complements are not stored;
// lookup("co-X") derives them.
const std::vector<NamedGraph>& catalogue();

// Accepts stored ids and "co-" prefixed complements. Throws std::out_of_range.
NamedGraph lookup(std::string_view id);
bool has_id(std::string_view id);

// Catalogue letter of a stored id ('H', 'A', 'B', 'D', 'S'), or 0 for the
// auxiliary entries (small graphs, S35T).
char series_of(std::string_view id);

// Id of a catalogue graph or complement isomorphic to g. Stored ids win over
// complements; W-series ids win over auxiliary ones.
std::optional<std::string> identify(const SmallGraph& g);

struct FamilyId {
    int family = 0;
    int t = 0;
    bool operator==(const FamilyId&) const = default;
};

int family_min_t(int family);
// Vertex count of family member with parameter t.
int family_order(int family, int t);
// Throws std::invalid_argument below the family constraint.
SmallGraph generate_family(FamilyId fid);
std::optional<FamilyId> recognize_family(const SmallGraph& g);
std::string family_name(FamilyId fid);

enum class Variant { Editing, Deletion };

struct WReason {
    std::string constituent;  // "H", "A", "B", "D", "S" or "F"
    std::string id;           // catalogue id, or "F<i>" for a family
    bool complement = false;  // g is the complement of the named member
    std::optional<FamilyId> family;

    std::string describe() const;
};

// Membership in the union of the catalogue series, the ten families and all
// their complements. The set is the same for both variants.
std::optional<WReason> membership_W(const SmallGraph& g, Variant variant = Variant::Editing);

// The finite refinement: H, co-H, A, co-A, B and D.
bool in_W_prime(const WReason& r);

// Catalogue id, family name or "co-" family name; empty when g is unnamed.
std::string name_of(const SmallGraph& g);

}  // namespace hfree
