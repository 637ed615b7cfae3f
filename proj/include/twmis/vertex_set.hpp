#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace twmis {

using Vertex = std::int32_t;

/// Sorted, duplicate-free set of vertex identifiers.
///
/// Every subset the algorithms shuffle around (bags, levels, blocks, solutions)
/// is a VertexSet. It is a value type; set operations return new sets.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}
  explicit VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  /// Adopts an already sorted, duplicate-free vector without re-sorting.
  static VertexSet from_sorted(std::vector<Vertex> ids) {
    VertexSet s;
    s.ids_ = std::move(ids);
    return s;
  }

  /// {0, 1, ..., n-1}
  static VertexSet range(Vertex n) {
    std::vector<Vertex> ids(static_cast<std::size_t>(std::max<Vertex>(n, 0)));
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<Vertex>(i);
    return from_sorted(std::move(ids));
  }

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  const_iterator begin() const noexcept { return ids_.begin(); }
  const_iterator end() const noexcept { return ids_.end(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }
  Vertex front() const { return ids_.front(); }
  Vertex back() const { return ids_.back(); }
  const std::vector<Vertex>& ids() const& noexcept { return ids_; }
  std::vector<Vertex> ids() && noexcept { return std::move(ids_); }
  std::span<const Vertex> view() const noexcept { return ids_; }

  bool contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

  bool is_subset_of(const VertexSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
  }

  VertexSet unite(const VertexSet& other) const {
    std::vector<Vertex> out;
    out.reserve(ids_.size() + other.ids_.size());
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                   std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  VertexSet intersect(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                          std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  VertexSet minus(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  std::size_t intersection_size(const VertexSet& other) const {
    std::size_t count = 0;
    auto a = ids_.begin();
    auto b = other.ids_.begin();
    while (a != ids_.end() && b != other.ids_.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++count;
        ++a;
        ++b;
      }
    }
    return count;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> ids_;
};

}  // namespace twmis
