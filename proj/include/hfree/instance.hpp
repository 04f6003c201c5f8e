#pragma once

#include <array>
#include <string>
#include <vector>

#include "hfree/graph.hpp"

namespace hfree {

enum class Mode { Edit, Delete, Complete };

std::string to_string(Mode m);
Mode mode_from_string(const std::string& s);  // edit|del|delete|comp|complete
Mode complement_mode(Mode m);

// Symmetric set of vertex pairs on at most 64 vertices.
class PairSet {
public:
    void insert(int u, int v);
    void erase(int u, int v);
    bool contains(int u, int v) const { return (rows_[u] >> v) & 1; }
    Mask row(int u) const { return rows_[u]; }
    int size() const;
    bool empty() const { return size() == 0; }
    std::vector<Pair> list() const;
    bool operator==(const PairSet&) const = default;

private:
    std::array<Mask, kMaxVertices> rows_{};
};

PairSet pair_set(const std::vector<Pair>& ps);

struct EditInstance {
    SmallGraph g;
    int k = 0;
    Mode mode = Mode::Edit;
    PairSet forbidden;
};

// Checks forbidden pairs are edges (delete) or nonedges (complete) and k >= 0.
void validate(const EditInstance& inst);

// Whether the pair may be changed under the instance's mode and restrictions.
bool permissible(const EditInstance& inst, const SmallGraph& current, int u, int v);

}  // namespace hfree
