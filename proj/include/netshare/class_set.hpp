#pragma once

#include <bitset>
#include <initializer_list>
#include <vector>

#include <Eigen/Core>

#include "netshare/element_class.hpp"

namespace netshare {

/// A subset of element classes. Used for constraint class-sets and for the
/// shared/not-shared matrix of a sharing configuration.
class ClassSet {
 public:
  ClassSet() = default;
  ClassSet(std::initializer_list<ElementClass> classes) {
    for (auto c : classes) insert(c);
  }

  void insert(ElementClass c) { bits_.set(static_cast<std::size_t>(index_of(c))); }
  void erase(ElementClass c) { bits_.reset(static_cast<std::size_t>(index_of(c))); }
  bool contains(ElementClass c) const { return bits_.test(static_cast<std::size_t>(index_of(c))); }
  bool empty() const { return bits_.none(); }
  std::size_t size() const { return bits_.count(); }

  bool is_subset_of(const ClassSet& other) const { return (bits_ & ~other.bits_).none(); }

  ClassSet operator|(const ClassSet& o) const { return ClassSet(bits_ | o.bits_); }
  ClassSet operator&(const ClassSet& o) const { return ClassSet(bits_ & o.bits_); }
  bool operator==(const ClassSet&) const = default;

  std::vector<ElementClass> members() const {
    std::vector<ElementClass> out;
    for (auto c : kAllClasses)
      if (contains(c)) out.push_back(c);
    return out;
  }

  /// 0/1 indicator column, for masked sums over per-class arrays.
  template <class Scalar = double>
  Eigen::Array<Scalar, kClassCount, 1> indicator() const {
    Eigen::Array<Scalar, kClassCount, 1> v;
    for (int i = 0; i < kClassCount; ++i) v(i) = bits_.test(static_cast<std::size_t>(i)) ? Scalar(1) : Scalar(0);
    return v;
  }

 private:
  explicit ClassSet(std::bitset<kClassCount> bits) : bits_(bits) {}
  std::bitset<kClassCount> bits_;
};

}  // namespace netshare
