#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tambara/util.hpp"

namespace tambara {

// Finite lattice given by its order relation. Meet/join tables are computed
// and memoized at construction; they are the hot operations everywhere else.
class FiniteFrame {
 public:
  FiniteFrame(std::vector<std::string> labels, std::vector<uint8_t> leq);

  int size() const { return size_; }
  bool le(int a, int b) const { return leq_[a * size_ + b] != 0; }
  int meet(int a, int b) const { return meet_[a * size_ + b]; }
  int join(int a, int b) const { return join_[a * size_ + b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Join of a subset; the empty join is bottom.
  int join_of(const std::vector<int>& xs) const;
  int meet_of(const std::vector<int>& xs) const;

 private:
  int size_;
  std::vector<std::string> labels_;
  std::vector<uint8_t> leq_;
  std::vector<int> meet_, join_;
  int bottom_ = -1, top_ = -1;
};

struct DistributivityReport {
  bool ok = false;
  std::vector<std::array<int, 3>> violations;  // (a, b, c) with a^(bvc) != (a^b)v(a^c)
};

// Binary distributivity; in a finite lattice this settles the full frame law
// since every join is finite.
DistributivityReport is_frame(const FiniteFrame& l);

// A point packaged with its defining meet-prime element: p(a)=0 iff a <= q.
struct FramePoint {
  int meet_prime_index = -1;
  std::vector<uint8_t> two_valued;  // p(a) per element
};

std::vector<FramePoint> meet_primes(const FiniteFrame& l);

struct FiniteTopSpace {
  std::vector<std::string> points;
  std::vector<elem_set> opens;  // canonically sorted (size, then lex)

  bool is_topology(std::string* why = nullptr) const;
  bool is_open(const elem_set& s) const;
  elem_set closure_of(const elem_set& s) const;
  std::vector<elem_set> closed_sets() const;
};

// Space on the meet-primes with opens U(a) = {p | p(a)=1}.
FiniteTopSpace point_space(const FiniteFrame& l);

// U(a) as a set of indices into meet_primes(l).
elem_set frame_open(const FiniteFrame& l, const std::vector<FramePoint>& pts, int a);

struct SpatialReport {
  bool ok = false;
  std::vector<std::pair<int, int>> non_separated;  // (m, n) with m !<= n, no point splits them
};

SpatialReport check_spatial(const FiniteFrame& l);

// Verified by scanning join-covers; in a finite frame every element passes.
std::vector<int> compact_elements(const FiniteFrame& l);

struct CoherenceReport {
  bool ok = false;
  bool top_designated = false;
  bool meets_closed = false;
  bool generates = false;
  bool all_compact = false;
  std::string detail;
};

CoherenceReport check_coherent(const FiniteFrame& l, const std::vector<int>& designated);

struct SpectralSpaceReport {
  bool t0 = false;
  bool quasi_compact = false;
  bool basis_closed_under_intersection = false;
  bool sober = false;
  std::string detail;

  bool ok() const { return t0 && quasi_compact && basis_closed_under_intersection && sober; }
};

SpectralSpaceReport check_spectral_space(const FiniteTopSpace& s);

// Test helpers for hand-built lattices.
FiniteFrame chain_frame(int n);
FiniteFrame powerset_frame(int n_atoms);
FiniteFrame diamond_m3();

}  // namespace tambara
