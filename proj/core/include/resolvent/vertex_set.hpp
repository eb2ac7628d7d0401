#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace resolvent {

using Vertex = std::uint32_t;

class Bitset;

/// Strictly increasing list of vertex indices. Construction sorts and
/// removes duplicates, so any input list is accepted.
class VertexSet {
public:
    using const_iterator = std::vector<Vertex>::const_iterator;

    VertexSet() = default;
    explicit VertexSet(std::vector<Vertex> members);
    VertexSet(std::initializer_list<Vertex> members);

    static VertexSet from_bits(const Bitset& bits);

    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
    [[nodiscard]] bool contains(Vertex v) const noexcept;
    [[nodiscard]] const std::vector<Vertex>& members() const noexcept { return members_; }
    [[nodiscard]] Vertex operator[](std::size_t i) const noexcept { return members_[i]; }

    [[nodiscard]] const_iterator begin() const noexcept { return members_.begin(); }
    [[nodiscard]] const_iterator end() const noexcept { return members_.end(); }

    [[nodiscard]] Bitset to_bits(std::size_t universe) const;

    /// Throws IndexOutOfRange when some member is not below `order`.
    void check_within(std::size_t order) const;

    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

}  // namespace resolvent
