#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace cwpoly {

/// A fixed-length list read with cyclic indices: c[i] == c[i + size()].
template <class T>
class Cyclic {
 public:
  Cyclic() = default;
  explicit Cyclic(std::vector<T> items) : items_(std::move(items)) {}
  Cyclic(std::initializer_list<T> items) : items_(items) {}

  const T& operator[](std::ptrdiff_t i) const { return items_[wrap(i)]; }
  T& operator[](std::ptrdiff_t i) { return items_[wrap(i)]; }

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  auto begin() { return items_.begin(); }
  auto end() { return items_.end(); }

  const std::vector<T>& items() const noexcept { return items_; }

  /// Result r with r[i] == (*this)[i + shift].
  Cyclic rotated(std::ptrdiff_t shift) const {
    std::vector<T> out;
    out.reserve(items_.size());
    for (std::size_t i = 0; i < items_.size(); ++i) {
      out.push_back((*this)[static_cast<std::ptrdiff_t>(i) + shift]);
    }
    return Cyclic(std::move(out));
  }

  friend bool operator==(const Cyclic& a, const Cyclic& b) { return a.items_ == b.items_; }

 private:
  std::size_t wrap(std::ptrdiff_t i) const {
    auto m = static_cast<std::ptrdiff_t>(items_.size());
    return static_cast<std::size_t>(((i % m) + m) % m);
  }

  std::vector<T> items_;
};

/// Values attached to edges: slot i holds the quantity of the edge from
/// vertex i to vertex i + 1.
template <class T>
using EdgeIndexed = Cyclic<T>;

}  // namespace cwpoly
