#ifndef INVSEM_TESTS_SUPPORT_HPP
#define INVSEM_TESTS_SUPPORT_HPP

#include <vector>

#include "invsem/algebra.hpp"
#include "invsem/corpus.hpp"
#include "invsem/semimodule.hpp"

namespace invsem::test {

inline AlgebraPtr b2() { return corpus_algebra("B2"); }
inline AlgebraPtr a3() { return corpus_algebra("A3"); }
inline AlgebraPtr c4() { return corpus_algebra("C4"); }
inline AlgebraPtr l3() { return corpus_algebra("L3"); }
inline AlgebraPtr b2xb2() { return corpus_algebra("B2xB2"); }

// Diamond M3: bottom 0, atoms 1,2,3, top 4. Pure semilattice fixture;
// mult = join with unit at the bottom keeps validate() happy.
inline AlgebraPtr m3() {
  auto a = std::make_shared<AlgebraTable>();
  a->name = "M3";
  a->size = 5;
  a->display = {"0", "p", "q", "r", "1"};
  a->join.assign(25, 0);
  const auto set = [&](Idx x, Idx y, Idx v) { a->join[x * 5 + y] = v; };
  for (Idx x = 0; x < 5; ++x)
    for (Idx y = 0; y < 5; ++y) {
      if (x == y)
        set(x, y, x);
      else if (x == 0)
        set(x, y, y);
      else if (y == 0)
        set(x, y, x);
      else if (x == 4 || y == 4)
        set(x, y, 4);
      else
        set(x, y, 4);  // two distinct atoms join to the top
    }
  a->mult = a->join;
  a->one = 0;
  a->zero = 0;
  return a;
}

// Odd Sugihara 3-chain a < e < b: every element idempotent, a*b = a, unit
// and pointed zero both at the middle element e. Involutive, but 0 is not
// the bottom, so nothing 1-bounded applies.
inline AlgebraPtr s3() {
  auto a = std::make_shared<AlgebraTable>();
  a->name = "S3";
  a->size = 3;
  a->display = {"a", "e", "b"};
  a->join = {0, 1, 2, 1, 1, 2, 2, 2, 2};
  a->mult = {0, 0, 0, 0, 1, 2, 0, 2, 2};
  a->one = 1;
  a->zero = 1;
  a->lneg = UnaryTable{2, 1, 0};
  a->rneg = UnaryTable{2, 1, 0};
  return a;
}

// Exhaustive reference: all maps dom -> cod preserving v and 0.
inline std::vector<std::vector<Idx>> brute_semilattice_maps(const SemimoduleTable& dom,
                                                            const SemimoduleTable& cod) {
  std::vector<std::vector<Idx>> out;
  std::vector<Idx> map(dom.size, 0);
  while (true) {
    bool ok = map[dom.zero] == cod.zero;
    for (Idx x = 0; x < dom.size && ok; ++x)
      for (Idx y = 0; y < dom.size && ok; ++y)
        ok = map[dom.join_of(x, y)] == cod.join_of(map[x], map[y]);
    if (ok) out.push_back(map);
    int i = 0;
    for (; i < dom.size; ++i) {
      if (++map[i] < cod.size) break;
      map[i] = 0;
    }
    if (i == dom.size) break;
  }
  return out;
}

// Exhaustive reference: all A-semimodule homs dom -> cod.
inline std::vector<std::vector<Idx>> brute_module_maps(const SemimoduleTable& dom,
                                                       const SemimoduleTable& cod) {
  std::vector<std::vector<Idx>> out;
  std::vector<Idx> map(dom.size, 0);
  while (true) {
    bool ok = map[dom.zero] == cod.zero;
    for (Idx x = 0; x < dom.size && ok; ++x)
      for (Idx y = 0; y < dom.size && ok; ++y)
        ok = map[dom.join_of(x, y)] == cod.join_of(map[x], map[y]);
    for (Idx s = 0; s < dom.over->size && ok; ++s)
      for (Idx x = 0; x < dom.size && ok; ++x)
        ok = map[dom.act(s, x)] == cod.act(s, map[x]);
    if (ok) out.push_back(map);
    int i = 0;
    for (; i < dom.size; ++i) {
      if (++map[i] < cod.size) break;
      map[i] = 0;
    }
    if (i == dom.size) break;
  }
  return out;
}

}  // namespace invsem::test

#endif
