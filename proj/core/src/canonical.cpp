#include "odot/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace odot {

namespace {

constexpr long kLeafCap = 20000;

// Replace colours by the ranks of their refined signatures until stable.
void refine(const OgPoset& P, std::vector<int>& col) {
  const int n = P.size();
  int classes = -1;
  std::vector<std::vector<int>> sig(n);
  std::vector<int> order(n);
  while (true) {
    for (int x = 0; x < n; ++x) {
      auto& s = sig[x];
      s.clear();
      s.push_back(col[x]);
      auto push = [&](const std::vector<int>& ys) {
        const std::size_t mark = s.size();
        s.push_back(static_cast<int>(ys.size()));
        for (int y : ys) s.push_back(col[y]);
        std::sort(s.begin() + static_cast<long>(mark) + 1, s.end());
      };
      push(P.faces(x, Sign::Minus));
      push(P.faces(x, Sign::Plus));
      push(P.cofaces(x, Sign::Minus));
      push(P.cofaces(x, Sign::Plus));
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    int rank = 0;
    std::vector<int> next(n);
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
      next[order[i]] = rank;
    }
    const int now = n == 0 ? 0 : rank + 1;
    col.swap(next);
    if (now == classes) break;
    classes = now;
  }
}

std::vector<int> certificate(const OgPoset& P, const std::vector<int>& perm,
                             const std::vector<int>& init) {
  const int n = P.size();
  std::vector<int> inv(n);
  for (int x = 0; x < n; ++x) inv[perm[x]] = x;
  std::vector<int> code{n};
  std::vector<int> tmp;
  for (int i = 0; i < n; ++i) {
    const int x = inv[i];
    code.push_back(init[x]);
    code.push_back(P.dim(x));
    for (Sign a : {Sign::Minus, Sign::Plus}) {
      tmp.clear();
      for (int y : P.faces(x, a)) tmp.push_back(perm[y]);
      std::sort(tmp.begin(), tmp.end());
      code.push_back(static_cast<int>(tmp.size()));
      code.insert(code.end(), tmp.begin(), tmp.end());
    }
  }
  return code;
}

struct Search {
  const OgPoset& P;
  const std::vector<int>& init;
  long leaves = 0;
  bool have = false;
  CanonicalForm best;

  void run(std::vector<int> col) {
    refine(P, col);
    const int n = P.size();
    std::vector<int> size(n + 1, 0);
    for (int c : col) ++size[c];
    int target = -1;
    for (int c = 0; c < n; ++c)
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
    if (target < 0) {
      ++leaves;
      auto code = certificate(P, col, init);
      if (!have || code < best.code) {
        best.code = std::move(code);
        best.labelling = col;
        best.automorphisms = 1;
        have = true;
      } else if (code == best.code) {
        ++best.automorphisms;
      }
      return;
    }
    for (int x = 0; x < n; ++x) {
      if (col[x] != target) continue;
      if (leaves >= kLeafCap) {
        best.exhaustive = false;
        return;
      }
      std::vector<int> c2(n);
      for (int y = 0; y < n; ++y) c2[y] = 2 * col[y] + (y == x ? 0 : 1);
      run(std::move(c2));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const OgPoset& P, const std::vector<int>* colours) {
  std::vector<int> init(P.size(), 0);
  if (colours) init = *colours;
  std::vector<int> start(P.size());
  // Seed with (colour, dim) ranks.
  std::vector<std::pair<int, int>> key(P.size());
  for (int x = 0; x < P.size(); ++x) key[x] = {init[x], P.dim(x)};
  auto sorted = key;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int x = 0; x < P.size(); ++x)
    start[x] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), key[x]) - sorted.begin());
  Search s{P, init, 0, false, {}};
  s.run(std::move(start));
  if (!s.have) s.best.code = {0};
  return s.best;
}

std::optional<PosetMap> are_isomorphic(PosetRef P, PosetRef Q, const std::vector<int>& cp,
                                       const std::vector<int>& cq) {
  if (P->size() != Q->size()) return std::nullopt;
  auto a = canonical_form(*P, &cp);
  auto b = canonical_form(*Q, &cq);
  if (a.code != b.code) return std::nullopt;
  std::vector<int> binv(Q->size());
  for (int y = 0; y < Q->size(); ++y) binv[b.labelling[y]] = y;
  std::vector<int> f(P->size());
  for (int x = 0; x < P->size(); ++x) f[x] = binv[a.labelling[x]];
  return PosetMap{P, Q, std::move(f), MapKind::Inclusion};
}

std::optional<PosetMap> are_isomorphic(PosetRef P, PosetRef Q) {
  return are_isomorphic(P, Q, std::vector<int>(P->size(), 0), std::vector<int>(Q->size(), 0));
}

}  // namespace odot
