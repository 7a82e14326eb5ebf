#include "lahkit/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "lahkit/riordan.hpp"

namespace lahkit {

std::vector<int> AsteriskList::word() const {
  std::vector<int> w = before;
  w.insert(w.end(), after.begin(), after.end());
  return w;
}

AsteriskList asterisk_product(const AsteriskList& a, const AsteriskList& b) {
  AsteriskList p;
  p.before = a.before;
  p.before.insert(p.before.end(), b.before.begin(), b.before.end());
  p.after = b.after;
  p.after.insert(p.after.end(), a.after.begin(), a.after.end());
  return p;
}

std::string PartitionPair::repr() const {
  std::string s = "(";
  for (size_t i = 0; i < specials.size(); ++i) {
    if (i) s += ", ";
    for (int v : specials[i].before) s += std::to_string(v) + " ";
    s += "*";
    for (int v : specials[i].after) s += " " + std::to_string(v);
  }
  s += ")||";
  if (lists.empty()) {
    s += "-";
  } else {
    for (size_t i = 0; i < lists.size(); ++i) {
      if (i) s += "|";
      for (size_t j = 0; j < lists[i].size(); ++j) {
        if (j) s += " ";
        s += std::to_string(lists[i][j]);
      }
    }
  }
  return s;
}

namespace {

// Splits w into whole lists of the partition, reading greedily; labels are
// globally distinct so the decomposition is forced. Returns the number of
// pieces and the boundary offsets, or piece count -1 on failure.
long segment_word(const std::vector<int>& w, const std::map<int, const oracle::ListBlock*>& by_head,
                  std::vector<long>* boundaries) {
  long pieces = 0;
  size_t p = 0;
  if (boundaries) boundaries->push_back(0);
  while (p < w.size()) {
    auto it = by_head.find(w[p]);
    if (it == by_head.end()) return -1;
    const oracle::ListBlock& block = *it->second;
    if (p + block.size() > w.size()) return -1;
    for (size_t i = 0; i < block.size(); ++i)
      if (w[p + i] != block[i]) return -1;
    p += block.size();
    ++pieces;
    if (boundaries) boundaries->push_back(static_cast<long>(p));
  }
  return pieces;
}

std::map<int, const oracle::ListBlock*> heads(const oracle::ListPartition& a) {
  std::map<int, const oracle::ListBlock*> m;
  for (const auto& block : a) m[block.front()] = &block;
  return m;
}

}  // namespace

bool merge_leq(const oracle::ListPartition& a, const oracle::ListPartition& b, const SizeSet& S) {
  size_t total_a = 0, total_b = 0;
  for (const auto& l : a) total_a += l.size();
  for (const auto& l : b) total_b += l.size();
  if (total_a != total_b) return false;

  auto by_head = heads(a);
  size_t used = 0;
  for (const auto& w : b) {
    long pieces = segment_word(w, by_head, nullptr);
    if (pieces < 0 || !S.contains(pieces)) return false;
    used += static_cast<size_t>(pieces);
  }
  return used == a.size();  // exactly used up
}

bool constructed_from(const std::vector<AsteriskList>& tuple, const oracle::ListPartition& blocks,
                      const SizeSet& S) {
  // each list must fall entirely inside one component's label set
  std::map<int, size_t> component_of;
  size_t label_total = 0;
  for (size_t i = 0; i < tuple.size(); ++i)
    for (int v : tuple[i].word()) {
      component_of[v] = i;
      ++label_total;
    }

  std::vector<oracle::ListPartition> groups(tuple.size());
  size_t covered = 0;
  for (const auto& block : blocks) {
    auto it = component_of.find(block.front());
    if (it == component_of.end()) return false;
    for (int v : block)
      if (!component_of.count(v) || component_of[v] != it->second) return false;
    groups[it->second].push_back(block);
    covered += block.size();
  }
  if (covered != label_total) return false;

  for (size_t i = 0; i < tuple.size(); ++i) {
    if (!S.contains(static_cast<long>(groups[i].size()) + 1)) return false;  // |a_i| in S-1
    std::vector<long> boundaries;
    long pieces = segment_word(tuple[i].word(), heads(groups[i]), &boundaries);
    if (pieces != static_cast<long>(groups[i].size())) return false;
    long star = static_cast<long>(tuple[i].before.size());
    if (std::find(boundaries.begin(), boundaries.end(), star) == boundaries.end()) return false;
  }
  return true;
}

bool pair_leq(const PartitionPair& a, const PartitionPair& b, const SizeSet& S) {
  if (a.specials.size() != b.specials.size()) return false;

  // peel a.specials off b.specials; the leftover tuple is unique if it exists
  std::vector<AsteriskList> leftover(a.specials.size());
  for (size_t i = 0; i < a.specials.size(); ++i) {
    const auto& lo = a.specials[i];
    const auto& hi = b.specials[i];
    if (lo.before.size() > hi.before.size() || lo.after.size() > hi.after.size()) return false;
    if (!std::equal(lo.before.begin(), lo.before.end(), hi.before.begin())) return false;
    if (!std::equal(lo.after.rbegin(), lo.after.rend(), hi.after.rbegin())) return false;
    leftover[i].before.assign(hi.before.begin() + lo.before.size(), hi.before.end());
    leftover[i].after.assign(hi.after.begin(), hi.after.end() - lo.after.size());
  }

  std::map<int, char> absorbed;
  for (const auto& t : leftover)
    for (int v : t.word()) absorbed[v] = 1;

  oracle::ListPartition sub, rest;
  for (const auto& block : a.lists) {
    bool in = absorbed.count(block.front()) > 0;
    for (int v : block)
      if ((absorbed.count(v) > 0) != in) return false;  // straddles the cut
    (in ? sub : rest).push_back(block);
  }

  return constructed_from(leftover, sub, S) && merge_leq(rest, b.lists, S);
}

std::vector<Int> Poset::level_counts() const {
  std::vector<Int> c(n + 1, 0);
  for (const auto& e : elements) c[e.level()] += 1;
  return c;
}

std::vector<Int> Poset::mobius_cardinals() const {
  std::vector<Int> c(n + 1, 0);
  for (size_t i = 0; i < elements.size(); ++i) c[elements[i].level()] += mobius[i];
  return c;
}

std::vector<std::pair<long, long>> Poset::cover_edges() const {
  long m = static_cast<long>(elements.size());
  std::vector<std::pair<long, long>> edges;
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j) {
      if (i == j || !leq[i][j]) continue;
      bool cover = true;
      for (long t = 0; t < m && cover; ++t)
        if (t != i && t != j && leq[i][t] && leq[t][j]) cover = false;
      if (cover) edges.emplace_back(i, j);
    }
  return edges;
}

namespace {

// all asterisk lists over the given label set
std::vector<AsteriskList> asterisk_lists(std::vector<int> labels) {
  std::vector<AsteriskList> out;
  std::sort(labels.begin(), labels.end());
  do {
    for (size_t cut = 0; cut <= labels.size(); ++cut) {
      AsteriskList l;
      l.before.assign(labels.begin(), labels.begin() + cut);
      l.after.assign(labels.begin() + cut, labels.end());
      out.push_back(std::move(l));
    }
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

}  // namespace

Poset build_poset(long n, const SizeSet& S, long r, long element_budget) {
  if (n < 1 || r < 0) throw std::invalid_argument("build_poset: need n >= 1, r >= 0");
  if (!S.is_plus_one_monoid(n))
    throw std::domain_error("build_poset: S-1 is not an additive monoid up to " +
                            std::to_string(n));
  Int predicted = l_total(n, S, r);
  if (predicted > element_budget)
    throw std::domain_error("build_poset: predicted " + predicted.str() +
                            " elements exceeds budget " + std::to_string(element_budget));

  Poset P;
  P.n = n;
  P.r = r;
  P.set_desc = S.description();

  // choose the labels of each special component (size in S-1), then the
  // asterisk lists on them, then partition the remainder
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);

  std::vector<AsteriskList> chosen(r);
  auto fill_components = [&](auto&& self, size_t comp, std::vector<int> rem) -> void {
    if (comp == static_cast<size_t>(r)) {
      for (const auto& part : oracle::list_partitions(rem, S)) {
        PartitionPair e;
        e.specials = chosen;
        e.lists = part;
        P.elements.push_back(std::move(e));
      }
      return;
    }
    long m = static_cast<long>(rem.size());
    for (long sz = 0; sz <= m; ++sz) {
      if (!S.contains(sz + 1)) continue;  // component size must sit in S-1
      std::vector<int> idx(sz);
      for (long i = 0; i < sz; ++i) idx[i] = static_cast<int>(i);
      bool more = sz >= 0;
      while (more) {
        std::vector<int> mine, rest;
        size_t t = 0;
        for (long i = 0; i < m; ++i) {
          if (t < idx.size() && idx[t] == i) {
            mine.push_back(rem[i]);
            ++t;
          } else {
            rest.push_back(rem[i]);
          }
        }
        for (const auto& al : asterisk_lists(mine)) {
          chosen[comp] = al;
          self(self, comp + 1, rest);
        }
        // next sz-subset of [0, m)
        long p = sz - 1;
        while (p >= 0 && idx[p] == m - sz + p) --p;
        if (p < 0) {
          more = false;
        } else {
          ++idx[p];
          for (long q = p + 1; q < sz; ++q) idx[q] = idx[q - 1] + 1;
        }
      }
    }
  };
  fill_components(fill_components, 0, all);

  if (Int(static_cast<long>(P.elements.size())) != predicted)
    throw std::logic_error("build_poset: generated " + std::to_string(P.elements.size()) +
                           " elements, surface formula predicts " + predicted.str());

  long m = static_cast<long>(P.elements.size());
  P.leq.assign(m, std::vector<bool>(m, false));
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j) P.leq[i][j] = pair_leq(P.elements[i], P.elements[j], S);

  // locate 0-hat = ((*,...,*), singletons) and check it is a global minimum
  PartitionPair zero;
  zero.specials.assign(r, AsteriskList{});
  for (int v : all) zero.lists.push_back({v});
  for (long i = 0; i < m; ++i)
    if (P.elements[i] == zero) {
      P.zero_index = i;
      break;
    }
  if (P.zero_index < 0) throw std::logic_error("build_poset: 0-hat is missing");
  for (long j = 0; j < m; ++j)
    if (!P.leq[P.zero_index][j])
      throw std::logic_error("build_poset: 0-hat is not below element " +
                             P.elements[j].repr());

  // mu(0hat, x) by down-set size order
  std::vector<long> dsize(m, 0), order(m);
  for (long j = 0; j < m; ++j)
    for (long i = 0; i < m; ++i)
      if (P.leq[i][j]) ++dsize[j];
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](long x, long y) { return dsize[x] < dsize[y]; });
  P.mobius.assign(m, 0);
  for (long x : order) {
    if (x == P.zero_index) {
      P.mobius[x] = 1;
      continue;
    }
    Int acc = 0;
    for (long y = 0; y < m; ++y)
      if (y != x && P.leq[y][x]) acc += P.mobius[y];
    P.mobius[x] = -acc;
  }
  return P;
}

IdentityReport verify_poset(const SizeSet& S, long r, long n_max, long element_budget) {
  IdentityReport rep{"poset", "set=" + S.description() + " r=" + std::to_string(r) +
                                  ", 1 <= n <= " + std::to_string(n_max),
                     {}, true};
  for (long n = 1; n <= n_max; ++n) {
    Poset P = build_poset(n, S, r, element_budget);
    std::string base = "set=" + S.description() + " r=" + std::to_string(r) +
                       " n=" + std::to_string(n);
    long m = static_cast<long>(P.elements.size());

    long reflexive_misses = 0, antisym_misses = 0, transitive_misses = 0;
    for (long i = 0; i < m; ++i)
      if (!P.leq[i][i]) ++reflexive_misses;
    for (long i = 0; i < m; ++i)
      for (long j = i + 1; j < m; ++j)
        if (P.leq[i][j] && P.leq[j][i]) ++antisym_misses;
    for (long i = 0; i < m; ++i)
      for (long j = 0; j < m; ++j) {
        if (!P.leq[i][j]) continue;
        for (long t = 0; t < m; ++t)
          if (P.leq[j][t] && !P.leq[i][t]) ++transitive_misses;
      }
    rep.add("reflexivity " + base, Int(reflexive_misses), 0);
    rep.add("antisymmetry " + base, Int(antisym_misses), 0);
    rep.add("transitivity " + base, Int(transitive_misses), 0);

    Triangle t = lah_triangle(S, r, n);
    std::vector<Int> levels = P.level_counts();
    for (long k = 0; k <= n; ++k)
      rep.add("level-count " + base + " k=" + std::to_string(k), levels[k], t.at(n, k));

    Matrix F = lah_inverse_matrix(S, r, n);
    std::vector<Int> cards = P.mobius_cardinals();
    for (long k = 0; k <= n; ++k)
      rep.add("mobius-cardinal " + base + " k=" + std::to_string(k), cards[k], F[n][k]);
  }
  return rep;
}

}  // namespace lahkit
