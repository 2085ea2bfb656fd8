#include "odot/corpus.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace odot {

namespace {

using Code = std::vector<int>;

Code boundary_code(const Molecule& U, int k, Sign a) {
  return canonical_form(boundary_of(U, k, a).mol.poset()).code;
}

class Pool {
 public:
  explicit Pool(const CorpusBounds& b) : b_(b) {}

  bool add(const Molecule& m) {
    if (!m.valid() || m.dim() > b_.max_dim || m.size() > b_.max_size) return false;
    if (!seen_.insert(m.canonical().code).second) return false;
    items_.push_back(m);
    return true;
  }

  const std::vector<Molecule>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }

 private:
  const CorpusBounds& b_;
  std::set<Code> seen_;
  std::vector<Molecule> items_;
};

}  // namespace

std::vector<Molecule> corpus(const CorpusBounds& b) {
  Pool pool(b);
  for (int n = 0; n <= b.max_dim; ++n) {
    pool.add(globe(n));
    pool.add(simplex(n));
    if (n <= 4) pool.add(cube(n));
  }
  std::mt19937_64 rng(b.seed);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  for (int t = 0; t < b.attempts && static_cast<int>(pool.size()) < b.target; ++t) {
    const auto& items = pool.items();
    const Molecule U = items[pick(items.size())];
    try {
      switch (rng() % 6) {
        case 0:
        case 1: {
          // Paste with a partner whose k-input boundary matches.
          if (U.dim() < 1) break;
          const int k = static_cast<int>(rng() % static_cast<unsigned>(U.dim()));
          const Code want = boundary_code(U, k, Sign::Plus);
          std::vector<Molecule> cands;
          for (const auto& V : items)
            if (V.dim() > k && boundary_code(V, k, Sign::Minus) == want) cands.push_back(V);
          if (cands.empty()) break;
          pool.add(paste(U, cands[pick(cands.size())], k));
          break;
        }
        case 2: {
          // An atom between two parallel round molecules.
          if (!U.is_round() || U.dim() >= b.max_dim) break;
          std::vector<Molecule> cands;
          if (U.dim() == 0) {
            cands.push_back(U);
          } else {
            const Code lo = boundary_code(U, U.dim() - 1, Sign::Minus);
            const Code hi = boundary_code(U, U.dim() - 1, Sign::Plus);
            for (const auto& V : items)
              if (V.dim() == U.dim() && V.is_round() &&
                  boundary_code(V, V.dim() - 1, Sign::Minus) == lo &&
                  boundary_code(V, V.dim() - 1, Sign::Plus) == hi)
                cands.push_back(V);
          }
          if (cands.empty()) break;
          const Molecule& W = cands[pick(cands.size())];
          pool.add(rng() % 2 ? atom(U, W) : atom(W, U));
          break;
        }
        case 3:
          if (U.is_round() && U.dim() >= 1) pool.add(merger(U));
          break;
        case 4: {
          const Molecule& V = items[pick(items.size())];
          if (U.dim() + V.dim() <= b.max_dim && U.size() * V.size() <= b.max_size) pool.add(gray(U, V));
          break;
        }
        case 5: {
          if (U.dim() < 1) break;
          std::vector<int> dims;
          for (int d = 1; d <= U.dim(); ++d)
            if (rng() % 2) dims.push_back(d);
          pool.add(dual(U, dims));
          break;
        }
      }
    } catch (const Error&) {
      // Boundaries matched by code but not as a compatible pair.
    }
  }

  std::vector<Molecule> out = pool.items();
  std::stable_sort(out.begin(), out.end(), [](const Molecule& x, const Molecule& y) {
    if (x.dim() != y.dim()) return x.dim() < y.dim();
    if (x.size() != y.size()) return x.size() < y.size();
    return x.canonical().code < y.canonical().code;
  });
  return out;
}

std::vector<Molecule> atoms_of(const std::vector<Molecule>& c) {
  std::vector<Molecule> r;
  for (const auto& m : c)
    if (m.is_atom()) r.push_back(m);
  return r;
}

std::vector<Molecule> rounds_of(const std::vector<Molecule>& c) {
  std::vector<Molecule> r;
  for (const auto& m : c)
    if (m.is_round()) r.push_back(m);
  return r;
}

}  // namespace odot
