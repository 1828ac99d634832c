#pragma once

#include <string>
#include <vector>

#include "tambara/util.hpp"

namespace tambara {

// A subgroup is a sorted element set plus its key in the parent group's
// canonical subgroup list (ordered by size, then lexicographically).
struct Subgroup {
  elem_set elements;
  int id = -1;

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int x) const { return set_contains(elements, x); }
};

// Multiplication-table group. Element indices are 0..order-1 and the
// identity sits at index 0; the table is validated on construction.
class FiniteGroup {
 public:
  FiniteGroup(int order, std::vector<int> mul, std::string name);

  int order() const { return order_; }
  const std::string& name() const { return name_; }
  int mul(int a, int b) const { return mul_[a * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  static constexpr int identity = 0;

  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  const Subgroup& subgroup(int id) const { return subgroups_.at(id); }
  int num_subgroups() const { return static_cast<int>(subgroups_.size()); }
  int trivial_subgroup_id() const { return 0; }
  int full_subgroup_id() const { return static_cast<int>(subgroups_.size()) - 1; }

  // Resolves a closed element set to its id in the canonical list.
  int subgroup_id_of(const elem_set& elements) const;
  bool subgroup_leq(int k, int h) const;  // K <= H as sets
  int subgroup_intersection(int a, int b) const;

  // Left-coset representatives of K in H (minimal element per coset).
  std::vector<int> left_transversal(int h, int k) const;

 private:
  int order_;
  std::vector<int> mul_;
  std::vector<int> inverse_;
  std::string name_;
  std::vector<Subgroup> subgroups_;

  void validate() const;
  void build_inverses();
  void build_subgroups();
};

struct DoubleCosetDecomposition {
  int left = -1;   // L
  int mid = -1;    // K (ambient)
  int right = -1;  // H
  std::vector<int> representatives;      // minimal element per class of L\K/H
  std::vector<elem_set> classes;         // matching order; partition of K
};

// All subgroups in canonical order. (Also cached on the group itself.)
std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g);

// Id of x H x^-1.
int conjugate_subgroup(const FiniteGroup& g, int h, int x);

// Decomposition of K into (L, H) double cosets; L and H must lie in K.
DoubleCosetDecomposition double_cosets(const FiniteGroup& g, int l, int k, int h);

// Built-ins: "1"/"trivial", "C2", "C3", "C4", "K4", "S3".
FiniteGroup builtin_group(const std::string& name);
std::vector<std::string> builtin_group_names();

}  // namespace tambara
