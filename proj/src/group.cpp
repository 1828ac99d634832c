#include "tambara/group.hpp"

#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace tambara {

FiniteGroup::FiniteGroup(int order, std::vector<int> mul, std::string name)
    : order_(order), mul_(std::move(mul)), name_(std::move(name)) {
  if (order_ <= 0) throw error("group '" + name_ + "': order must be positive");
  if (mul_.size() != static_cast<size_t>(order_) * order_)
    throw error("group '" + name_ + "': multiplication table has wrong size");
  validate();
  build_inverses();
  build_subgroups();
}

void FiniteGroup::validate() const {
  for (int v : mul_)
    if (v < 0 || v >= order_) throw error("group '" + name_ + "': table entry out of range");
  for (int a = 0; a < order_; ++a) {
    if (mul(identity, a) != a || mul(a, identity) != a) {
      std::ostringstream os;
      os << "group '" << name_ << "': element 0 is not an identity (witness " << a << ")";
      throw error(os.str());
    }
  }
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      for (int c = 0; c < order_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          std::ostringstream os;
          os << "group '" << name_ << "': not associative at (" << a << "," << b << "," << c << ")";
          throw error(os.str());
        }
}

void FiniteGroup::build_inverses() {
  inverse_.assign(order_, -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b)
      if (mul(a, b) == identity && mul(b, a) == identity) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] < 0)
      throw error("group '" + name_ + "': element " + std::to_string(a) + " has no inverse");
  }
}

namespace {

elem_set closure(const FiniteGroup& g, elem_set seed) {
  set_insert(seed, FiniteGroup::identity);
  bool grew = true;
  while (grew) {
    grew = false;
    elem_set cur = seed;
    for (int a : cur)
      for (int b : cur) {
        int c = g.mul(a, b);
        if (!set_contains(seed, c)) {
          set_insert(seed, c);
          grew = true;
        }
      }
  }
  return seed;
}

}  // namespace

void FiniteGroup::build_subgroups() {
  std::set<elem_set> found;
  found.insert(closure(*this, {}));
  bool grew = true;
  while (grew) {
    grew = false;
    auto snapshot = found;
    for (const auto& h : snapshot) {
      for (int x = 0; x < order_; ++x) {
        if (set_contains(h, x)) continue;
        elem_set ext = h;
        set_insert(ext, x);
        if (found.insert(closure(*this, ext)).second) grew = true;
      }
    }
  }
  std::vector<elem_set> list(found.begin(), found.end());
  std::sort(list.begin(), list.end(), [](const elem_set& a, const elem_set& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  subgroups_.clear();
  for (size_t i = 0; i < list.size(); ++i)
    subgroups_.push_back(Subgroup{list[i], static_cast<int>(i)});
}

int FiniteGroup::subgroup_id_of(const elem_set& elements) const {
  for (const auto& s : subgroups_)
    if (s.elements == elements) return s.id;
  throw error("group '" + name_ + "': element set is not a subgroup of the canonical list");
}

bool FiniteGroup::subgroup_leq(int k, int h) const {
  return set_subset(subgroup(k).elements, subgroup(h).elements);
}

int FiniteGroup::subgroup_intersection(int a, int b) const {
  return subgroup_id_of(set_intersect(subgroup(a).elements, subgroup(b).elements));
}

std::vector<int> FiniteGroup::left_transversal(int h, int k) const {
  if (!subgroup_leq(k, h)) throw error("left_transversal: K is not a subgroup of H");
  const auto& hs = subgroup(h).elements;
  const auto& ks = subgroup(k).elements;
  std::vector<int> reps;
  elem_set covered;
  for (int x : hs) {
    if (set_contains(covered, x)) continue;
    reps.push_back(x);
    for (int y : ks) set_insert(covered, mul(x, y));
  }
  return reps;
}

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g) { return g.subgroups(); }

int conjugate_subgroup(const FiniteGroup& g, int h, int x) {
  elem_set conj;
  int xi = g.inv(x);
  for (int e : g.subgroup(h).elements) set_insert(conj, g.mul(g.mul(x, e), xi));
  return g.subgroup_id_of(conj);
}

DoubleCosetDecomposition double_cosets(const FiniteGroup& g, int l, int k, int h) {
  if (!g.subgroup_leq(l, k) || !g.subgroup_leq(h, k))
    throw error("double_cosets: L and H must be subgroups of K");
  DoubleCosetDecomposition dc;
  dc.left = l;
  dc.mid = k;
  dc.right = h;
  const auto& ls = g.subgroup(l).elements;
  const auto& hs = g.subgroup(h).elements;
  elem_set covered;
  for (int x : g.subgroup(k).elements) {
    if (set_contains(covered, x)) continue;
    elem_set cls;
    for (int a : ls)
      for (int b : hs) set_insert(cls, g.mul(g.mul(a, x), b));
    dc.representatives.push_back(x);  // ascending sweep: x is minimal in its class
    dc.classes.push_back(cls);
    for (int y : cls) set_insert(covered, y);
  }
  return dc;
}

namespace {

FiniteGroup make_cyclic(int n, const std::string& name) {
  std::vector<int> mul(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a * n + b] = (a + b) % n;
  return FiniteGroup(n, std::move(mul), name);
}

FiniteGroup make_klein4() {
  std::vector<int> mul(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) mul[a * 4 + b] = a ^ b;
  return FiniteGroup(4, std::move(mul), "K4");
}

// S3 as permutations of {0,1,2}; one-line notations enumerated in
// lexicographic order so the identity lands at index 0.
FiniteGroup make_s3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p = {0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::array<int, 3>& q) {
    for (size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == q) return static_cast<int>(i);
    return -1;
  };
  int n = static_cast<int>(perms.size());
  std::vector<int> mul(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      mul[a * n + b] = index_of(c);
    }
  return FiniteGroup(n, std::move(mul), "S3");
}

}  // namespace

FiniteGroup builtin_group(const std::string& name) {
  if (name == "1" || name == "trivial") return make_cyclic(1, "1");
  if (name == "C2") return make_cyclic(2, "C2");
  if (name == "C3") return make_cyclic(3, "C3");
  if (name == "C4") return make_cyclic(4, "C4");
  if (name == "K4") return make_klein4();
  if (name == "S3") return make_s3();
  throw error("unknown built-in group '" + name + "'");
}

std::vector<std::string> builtin_group_names() { return {"1", "C2", "C3", "C4", "K4", "S3"}; }

}  // namespace tambara
