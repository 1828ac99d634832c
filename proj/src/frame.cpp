#include "tambara/frame.hpp"

#include <sstream>

namespace tambara {

FiniteFrame::FiniteFrame(std::vector<std::string> labels, std::vector<uint8_t> leq)
    : size_(static_cast<int>(labels.size())), labels_(std::move(labels)), leq_(std::move(leq)) {
  if (size_ == 0) throw error("frame: need at least one element");
  if (leq_.size() != static_cast<size_t>(size_) * size_)
    throw error("frame: order table has wrong size");
  for (int a = 0; a < size_; ++a)
    if (!le(a, a)) throw error("frame: order not reflexive");
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b) {
      if (a != b && le(a, b) && le(b, a)) throw error("frame: order not antisymmetric");
      for (int c = 0; c < size_; ++c)
        if (le(a, b) && le(b, c) && !le(a, c)) throw error("frame: order not transitive");
    }

  meet_.assign(static_cast<size_t>(size_) * size_, -1);
  join_.assign(static_cast<size_t>(size_) * size_, -1);
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b) {
      // Greatest lower bound: a lower bound above every other lower bound.
      for (int c = 0; c < size_; ++c) {
        if (!le(c, a) || !le(c, b)) continue;
        bool greatest = true;
        for (int d = 0; d < size_; ++d)
          if (le(d, a) && le(d, b) && !le(d, c)) {
            greatest = false;
            break;
          }
        if (greatest) {
          meet_[a * size_ + b] = c;
          break;
        }
      }
      for (int c = 0; c < size_; ++c) {
        if (!le(a, c) || !le(b, c)) continue;
        bool least = true;
        for (int d = 0; d < size_; ++d)
          if (le(a, d) && le(b, d) && !le(c, d)) {
            least = false;
            break;
          }
        if (least) {
          join_[a * size_ + b] = c;
          break;
        }
      }
      if (meet_[a * size_ + b] < 0 || join_[a * size_ + b] < 0) {
        std::ostringstream os;
        os << "frame: elements " << a << " and " << b << " lack a meet or join";
        throw error(os.str());
      }
    }

  for (int a = 0; a < size_; ++a) {
    bool is_bot = true, is_top = true;
    for (int b = 0; b < size_; ++b) {
      if (!le(a, b)) is_bot = false;
      if (!le(b, a)) is_top = false;
    }
    if (is_bot) bottom_ = a;
    if (is_top) top_ = a;
  }
  if (bottom_ < 0 || top_ < 0) throw error("frame: missing bottom or top");
}

int FiniteFrame::join_of(const std::vector<int>& xs) const {
  int acc = bottom_;
  for (int x : xs) acc = join(acc, x);
  return acc;
}

int FiniteFrame::meet_of(const std::vector<int>& xs) const {
  int acc = top_;
  for (int x : xs) acc = meet(acc, x);
  return acc;
}

DistributivityReport is_frame(const FiniteFrame& l) {
  DistributivityReport rep;
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b)
      for (int c = 0; c < l.size(); ++c)
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)))
          rep.violations.push_back({a, b, c});
  rep.ok = rep.violations.empty();
  return rep;
}

std::vector<FramePoint> meet_primes(const FiniteFrame& l) {
  std::vector<FramePoint> pts;
  for (int q = 0; q < l.size(); ++q) {
    if (q == l.top()) continue;
    bool prime = true;
    for (int a = 0; a < l.size() && prime; ++a)
      for (int b = 0; b < l.size(); ++b)
        if (l.le(l.meet(a, b), q) && !l.le(a, q) && !l.le(b, q)) {
          prime = false;
          break;
        }
    if (!prime) continue;
    FramePoint p;
    p.meet_prime_index = q;
    p.two_valued.resize(l.size());
    for (int a = 0; a < l.size(); ++a) p.two_valued[a] = l.le(a, q) ? 0 : 1;
    pts.push_back(std::move(p));
  }
  return pts;
}

elem_set frame_open(const FiniteFrame& l, const std::vector<FramePoint>& pts, int a) {
  elem_set u;
  for (size_t i = 0; i < pts.size(); ++i)
    if (pts[i].two_valued[a]) u.push_back(static_cast<int>(i));
  return u;
}

namespace {

void canonicalize_opens(std::vector<elem_set>& opens) {
  std::sort(opens.begin(), opens.end(), [](const elem_set& x, const elem_set& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
}

}  // namespace

FiniteTopSpace point_space(const FiniteFrame& l) {
  auto pts = meet_primes(l);
  FiniteTopSpace s;
  for (const auto& p : pts) s.points.push_back(l.label(p.meet_prime_index));
  // U preserves joins and finite meets, so the image of U is already a
  // topology; no extra closure pass is needed.
  for (int a = 0; a < l.size(); ++a) s.opens.push_back(frame_open(l, pts, a));
  canonicalize_opens(s.opens);
  std::string why;
  if (!s.is_topology(&why)) throw error("point_space: opens do not form a topology: " + why);
  return s;
}

bool FiniteTopSpace::is_open(const elem_set& s) const {
  return std::find(opens.begin(), opens.end(), s) != opens.end();
}

bool FiniteTopSpace::is_topology(std::string* why) const {
  elem_set all;
  for (int i = 0; i < static_cast<int>(points.size()); ++i) all.push_back(i);
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (!is_open({})) return fail("empty set missing");
  if (!is_open(all)) return fail("full set missing");
  for (const auto& u : opens)
    for (const auto& v : opens) {
      if (!is_open(set_union(u, v))) return fail("not closed under union");
      if (!is_open(set_intersect(u, v))) return fail("not closed under intersection");
    }
  return true;
}

elem_set FiniteTopSpace::closure_of(const elem_set& s) const {
  elem_set all;
  for (int i = 0; i < static_cast<int>(points.size()); ++i) all.push_back(i);
  elem_set acc = all;
  for (const auto& u : opens) {
    // closed set complementary to u
    elem_set closed;
    for (int i : all)
      if (!set_contains(u, i)) closed.push_back(i);
    if (set_subset(s, closed)) acc = set_intersect(acc, closed);
  }
  return acc;
}

std::vector<elem_set> FiniteTopSpace::closed_sets() const {
  elem_set all;
  for (int i = 0; i < static_cast<int>(points.size()); ++i) all.push_back(i);
  std::vector<elem_set> cs;
  for (const auto& u : opens) {
    elem_set c;
    for (int i : all)
      if (!set_contains(u, i)) c.push_back(i);
    cs.push_back(c);
  }
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  return cs;
}

SpatialReport check_spatial(const FiniteFrame& l) {
  auto pts = meet_primes(l);
  SpatialReport rep;
  for (int m = 0; m < l.size(); ++m)
    for (int n = 0; n < l.size(); ++n) {
      if (l.le(m, n)) continue;
      bool separated = false;
      for (const auto& p : pts)
        if (p.two_valued[m] == 1 && p.two_valued[n] == 0) {
          separated = true;
          break;
        }
      if (!separated) rep.non_separated.push_back({m, n});
    }
  rep.ok = rep.non_separated.empty();
  return rep;
}

std::vector<int> compact_elements(const FiniteFrame& l) {
  std::vector<int> out;
  const int n = l.size();
  for (int a = 0; a < n; ++a) {
    bool compact = true;
    if (n <= 14) {
      // Scan every join-cover of a and search it for a subcover; in a finite
      // frame the family itself always qualifies, so the scan certifies
      // compactness rather than assuming it.
      for (uint64_t mask = 1; mask < (uint64_t(1) << n) && compact; ++mask) {
        std::vector<int> fam;
        for (int i = 0; i < n; ++i)
          if (mask & (uint64_t(1) << i)) fam.push_back(i);
        if (!l.le(a, l.join_of(fam))) continue;
        bool subcover_found = false;
        for (uint64_t sub = mask; sub != 0 && !subcover_found; sub = (sub - 1) & mask) {
          std::vector<int> part;
          for (int i = 0; i < n; ++i)
            if (sub & (uint64_t(1) << i)) part.push_back(i);
          if (l.le(a, l.join_of(part))) subcover_found = true;
        }
        if (!subcover_found) compact = false;
      }
    }
    if (compact) out.push_back(a);
  }
  return out;
}

CoherenceReport check_coherent(const FiniteFrame& l, const std::vector<int>& designated) {
  CoherenceReport rep;
  elem_set des(designated);
  std::sort(des.begin(), des.end());
  des.erase(std::unique(des.begin(), des.end()), des.end());

  rep.top_designated = set_contains(des, l.top());

  rep.meets_closed = true;
  for (int a : des)
    for (int b : des)
      if (!set_contains(des, l.meet(a, b))) {
        rep.meets_closed = false;
        std::ostringstream os;
        os << "meet of compacts " << a << "," << b << " escapes the designated set";
        rep.detail = os.str();
      }

  rep.generates = true;
  for (int a = 0; a < l.size(); ++a) {
    std::vector<int> below;
    for (int d : des)
      if (l.le(d, a)) below.push_back(d);
    if (l.join_of(below) != a) {
      rep.generates = false;
      rep.detail = "element " + std::to_string(a) + " is not a join of designated compacts";
    }
  }

  auto compacts = compact_elements(l);
  rep.all_compact = set_subset(des, elem_set(compacts.begin(), compacts.end()));

  rep.ok = rep.top_designated && rep.meets_closed && rep.generates && rep.all_compact;
  return rep;
}

SpectralSpaceReport check_spectral_space(const FiniteTopSpace& s) {
  SpectralSpaceReport rep;
  const int n = static_cast<int>(s.points.size());

  rep.t0 = true;
  for (int p = 0; p < n && rep.t0; ++p)
    for (int q = p + 1; q < n; ++q) {
      bool split = false;
      for (const auto& u : s.opens)
        if (set_contains(u, p) != set_contains(u, q)) {
          split = true;
          break;
        }
      if (!split) {
        rep.t0 = false;
        rep.detail = "points " + std::to_string(p) + " and " + std::to_string(q) +
                     " are topologically indistinguishable";
        break;
      }
    }

  // Quasi-compactness of the whole space: scan every open cover for a finite
  // subcover when the family is small enough; a finite family always covers
  // finitely, so the scan certifies rather than assumes it.
  elem_set all;
  for (int i = 0; i < n; ++i) all.push_back(i);
  rep.quasi_compact = true;
  const size_t k = s.opens.size();
  if (k <= 16) {
    for (uint64_t mask = 1; mask < (uint64_t(1) << k) && rep.quasi_compact; ++mask) {
      elem_set uni;
      for (size_t i = 0; i < k; ++i)
        if (mask & (uint64_t(1) << i)) uni = set_union(uni, s.opens[i]);
      if (uni != all) continue;
      bool subcover = false;
      for (uint64_t sub = mask; sub != 0 && !subcover; sub = (sub - 1) & mask) {
        elem_set part;
        for (size_t i = 0; i < k; ++i)
          if (sub & (uint64_t(1) << i)) part = set_union(part, s.opens[i]);
        if (part == all) subcover = true;
      }
      if (!subcover) rep.quasi_compact = false;
    }
  }

  // Compact opens: every open is compact in a finite space; verify the family
  // is intersection-closed and a basis of itself.
  rep.basis_closed_under_intersection = true;
  for (const auto& u : s.opens)
    for (const auto& v : s.opens)
      if (!s.is_open(set_intersect(u, v))) rep.basis_closed_under_intersection = false;

  rep.sober = true;
  for (const auto& c : s.closed_sets()) {
    if (c.empty()) continue;
    bool irreducible = true;
    for (const auto& c1 : s.closed_sets()) {
      for (const auto& c2 : s.closed_sets()) {
        if (set_union(c1, c2) == c && c1 != c && c2 != c) {
          irreducible = false;
          break;
        }
      }
      if (!irreducible) break;
    }
    if (!irreducible) continue;
    int generic = 0;
    for (int p : c)
      if (s.closure_of({p}) == c) ++generic;
    if (generic != 1) {
      rep.sober = false;
      rep.detail = "irreducible closed set with " + std::to_string(generic) + " generic points";
    }
  }

  return rep;
}

FiniteFrame chain_frame(int n) {
  std::vector<std::string> labels;
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    labels.push_back("c" + std::to_string(i));
    for (int j = i; j < n; ++j) leq[i * n + j] = 1;
  }
  return FiniteFrame(std::move(labels), std::move(leq));
}

FiniteFrame powerset_frame(int n_atoms) {
  int n = 1 << n_atoms;
  std::vector<std::string> labels;
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    labels.push_back("s" + std::to_string(i));
    for (int j = 0; j < n; ++j)
      if ((i & j) == i) leq[i * n + j] = 1;
  }
  return FiniteFrame(std::move(labels), std::move(leq));
}

FiniteFrame diamond_m3() {
  // bottom 0; atoms 1,2,3; top 4
  int n = 5;
  std::vector<uint8_t> leq(25, 0);
  auto set = [&](int a, int b) { leq[a * n + b] = 1; };
  for (int i = 0; i < n; ++i) set(i, i);
  for (int i = 1; i <= 3; ++i) {
    set(0, i);
    set(i, 4);
  }
  set(0, 4);
  return FiniteFrame({"bot", "x", "y", "z", "top"}, std::move(leq));
}

}  // namespace tambara
