#pragma once

#include <map>
#include <string>
#include <vector>

#include "tambara/frame.hpp"
#include "tambara/util.hpp"

namespace tambara {

// Table-presented finite commutative ring. Zero sits at index 0 and one at
// index 1 (for the zero ring one == zero == 0). The full set of ring axioms
// is checked over all element tuples at construction.
class FiniteCommRing {
 public:
  FiniteCommRing(int size, std::vector<int> add, std::vector<int> mul, std::string name);

  int size() const { return size_; }
  const std::string& name() const { return name_; }
  int add(int a, int b) const { return add_[a * size_ + b]; }
  int mul(int a, int b) const { return mul_[a * size_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int zero() const { return 0; }
  int one() const { return size_ > 1 ? 1 : 0; }
  int pow(int a, int k) const;

  // Named automorphism tables ("frobenius" on the Galois-field fixtures).
  const std::map<std::string, std::vector<int>>& automorphisms() const { return autos_; }
  void expose_automorphism(const std::string& name, std::vector<int> table);

  bool same_tables(const FiniteCommRing& other) const {
    return size_ == other.size_ && add_ == other.add_ && mul_ == other.mul_;
  }

 private:
  int size_;
  std::vector<int> add_, mul_, neg_;
  std::string name_;
  std::map<std::string, std::vector<int>> autos_;

  void validate() const;
};

struct RingIdeal {
  const FiniteCommRing* ring = nullptr;
  elem_set members;

  bool contains(int x) const { return set_contains(members, x); }
  bool is_whole() const { return static_cast<int>(members.size()) == ring->size(); }
};

struct RingHom {
  const FiniteCommRing* source = nullptr;
  const FiniteCommRing* target = nullptr;
  std::vector<int> map;

  int operator()(int x) const { return map[x]; }
};

// Fails with a witness message when the table is not a unital ring hom.
void validate_ring_hom(const RingHom& h);

FiniteCommRing construct_zmod(int n);          // 1 <= n <= 64
FiniteCommRing construct_gf(int q);            // q in {2,3,4,5,7,8,9}
// Base ring extended by t with t^2 = c1*t + c0; elements a + b*t indexed a + size*b.
FiniteCommRing construct_poly_quot(const FiniteCommRing& base, int c1, int c0);

struct RingProduct {
  FiniteCommRing ring;
  std::vector<int> proj1, proj2;          // element maps onto the factors
  std::vector<std::vector<int>> pair_index;  // (a,b) -> product element
};
RingProduct ring_product(const FiniteCommRing& r, const FiniteCommRing& s);

struct QuotientRing {
  FiniteCommRing ring;
  std::vector<int> projection;  // parent element -> class index
};
QuotientRing quotient_ring(const FiniteCommRing& r, const RingIdeal& i);

RingIdeal principal_ring_ideal(const FiniteCommRing& r, int x);
RingIdeal ring_ideal_from_generators(const FiniteCommRing& r, const elem_set& gens);
RingIdeal zero_ring_ideal(const FiniteCommRing& r);
RingIdeal whole_ring_ideal(const FiniteCommRing& r);
bool is_ring_ideal(const FiniteCommRing& r, const elem_set& members, std::string* why = nullptr);

// All ideals: closure of the principal ideals under pairwise ideal sum,
// canonically ordered by (size, member list).
std::vector<RingIdeal> enumerate_ring_ideals(const FiniteCommRing& r);
std::vector<RingIdeal> enumerate_radical_ring_ideals(const FiniteCommRing& r);

RingIdeal ring_radical(const RingIdeal& i);
RingIdeal ring_ideal_product(const RingIdeal& i, const RingIdeal& j);
RingIdeal ring_ideal_sum(const RingIdeal& i, const RingIdeal& j);
RingIdeal ring_ideal_intersect(const RingIdeal& i, const RingIdeal& j);

// Proper ideals P with xy in P => x in P or y in P, by exhaustive pair check.
std::vector<RingIdeal> ring_primes(const FiniteCommRing& r);

RingIdeal hom_preimage(const RingHom& h, const RingIdeal& j);

// Frame of radical ideals ordered by inclusion: meet is intersection, join
// the radical of the sum. The returned labels are the member sets.
struct RingZariskiFrame {
  std::vector<RingIdeal> ideals;
  FiniteFrame frame;
};
RingZariskiFrame ring_zariski_frame(const FiniteCommRing& r);

std::string ideal_label(const elem_set& members);

}  // namespace tambara
