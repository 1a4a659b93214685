#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace chordal {

using Vertex = int;

// Canonically sorted, duplicate-free set of vertex ids. The lexicographic
// order on the sorted member vector gives a total order used for
// deterministic iteration everywhere.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs) : members_(vs) { canonicalize(); }
    explicit VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) { canonicalize(); }

    bool contains(Vertex v) const {
        return std::binary_search(members_.begin(), members_.end(), v);
    }
    bool empty() const { return members_.empty(); }
    std::size_t size() const { return members_.size(); }

    void insert(Vertex v) {
        auto it = std::lower_bound(members_.begin(), members_.end(), v);
        if (it == members_.end() || *it != v) members_.insert(it, v);
    }
    void erase(Vertex v) {
        auto it = std::lower_bound(members_.begin(), members_.end(), v);
        if (it != members_.end() && *it == v) members_.erase(it);
    }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }
    const std::vector<Vertex>& members() const { return members_; }
    Vertex front() const { return members_.front(); }

    bool operator==(const VertexSet&) const = default;
    auto operator<=>(const VertexSet&) const = default;

    std::string to_string() const;

private:
    void canonicalize() {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    std::vector<Vertex> members_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);
bool is_proper_subset(const VertexSet& a, const VertexSet& b);

}  // namespace chordal
