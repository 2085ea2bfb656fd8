#include "odot/ogposet.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

namespace odot {

std::string_view error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::CycleError: return "CycleError";
    case ErrorKind::GradingError: return "GradingError";
    case ErrorKind::EmptyFaceSet: return "EmptyFaceSet";
    case ErrorKind::FaceOverlap: return "FaceOverlap";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::NotCartesian: return "NotCartesian";
    case ErrorKind::NotInclusion: return "NotInclusion";
    case ErrorKind::NotRound: return "NotRound";
    case ErrorKind::NotParallel: return "NotParallel";
    case ErrorKind::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorKind::NotSubmolecule: return "NotSubmolecule";
    case ErrorKind::NotAtom: return "NotAtom";
    case ErrorKind::KNotInBoundary: return "KNotInBoundary";
    case ErrorKind::NotDegenerate: return "NotDegenerate";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::MissingWitness: return "MissingWitness";
    case ErrorKind::NotMarkingPreserving: return "NotMarkingPreserving";
    case ErrorKind::InvalidDiagram: return "InvalidDiagram";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

void sort_unique(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

OgPoset OgPoset::build(const std::vector<RawElement>& raw) {
  std::map<std::int64_t, int> dense;
  for (const auto& e : raw) {
    if (!dense.emplace(e.id, 0).second)
      throw Error(ErrorKind::DuplicateId, "id " + std::to_string(e.id) + " appears twice");
  }
  int next = 0;
  for (auto& [id, d] : dense) d = next++;

  const int n = static_cast<int>(raw.size());
  std::vector<int> dims(n);
  std::vector<std::vector<int>> in(n), out(n);
  for (const auto& e : raw) {
    const int x = dense.at(e.id);
    dims[x] = e.dim;
    auto conv = [&](const std::vector<std::int64_t>& src, std::vector<int>& dst) {
      for (auto f : src) {
        auto it = dense.find(f);
        if (it == dense.end())
          throw Error(ErrorKind::UnknownId,
                      "element " + std::to_string(e.id) + " has unknown face " + std::to_string(f));
        dst.push_back(it->second);
      }
    };
    conv(e.input, in[x]);
    conv(e.output, out[x]);
  }

  // Cycles first: a self-face would otherwise surface as a grading error.
  std::vector<int> state(n, 0);
  for (int s = 0; s < n; ++s) {
    if (state[s]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
    state[s] = 1;
    while (!stack.empty()) {
      auto& [x, i] = stack.back();
      const std::size_t total = in[x].size() + out[x].size();
      if (i == total) {
        state[x] = 2;
        stack.pop_back();
        continue;
      }
      const int y = i < in[x].size() ? in[x][i] : out[x][i - in[x].size()];
      ++i;
      if (state[y] == 1) throw Error(ErrorKind::CycleError, "face relation has a cycle");
      if (state[y] == 0) {
        state[y] = 1;
        stack.push_back({y, 0});
      }
    }
  }
  return from_faces(std::move(dims), std::move(in), std::move(out));
}

OgPoset OgPoset::from_faces(std::vector<int> dims, std::vector<std::vector<int>> in,
                            std::vector<std::vector<int>> out) {
  const int n = static_cast<int>(dims.size());
  if (static_cast<int>(in.size()) != n || static_cast<int>(out.size()) != n)
    throw Error(ErrorKind::GradingError, "face table size mismatch");
  for (int x = 0; x < n; ++x) {
    if (dims[x] < 0) throw Error(ErrorKind::GradingError, "negative dimension");
    sort_unique(in[x]);
    sort_unique(out[x]);
    for (const auto* side : {&in[x], &out[x]}) {
      for (int y : *side) {
        if (y < 0 || y >= n) throw Error(ErrorKind::UnknownId, "face id out of range");
        if (dims[y] != dims[x] - 1)
          throw Error(ErrorKind::GradingError, "element " + std::to_string(x) + " of dim " +
                                                   std::to_string(dims[x]) + " has face " +
                                                   std::to_string(y) + " of dim " +
                                                   std::to_string(dims[y]));
      }
    }
    if (dims[x] >= 1 && (in[x].empty() || out[x].empty()))
      throw Error(ErrorKind::EmptyFaceSet, "element " + std::to_string(x) + " has an empty face set");
    std::vector<int> both;
    std::set_intersection(in[x].begin(), in[x].end(), out[x].begin(), out[x].end(),
                          std::back_inserter(both));
    if (!both.empty())
      throw Error(ErrorKind::FaceOverlap, "element " + std::to_string(x) +
                                              " has a face on both sides");
  }
  OgPoset p;
  p.dim_ = std::move(dims);
  p.in_ = std::move(in);
  p.out_ = std::move(out);
  p.index();
  return p;
}

void OgPoset::index() {
  const int n = size();
  coin_.assign(n, {});
  coout_.assign(n, {});
  top_dim_ = -1;
  for (int x = 0; x < n; ++x) {
    top_dim_ = std::max(top_dim_, dim_[x]);
    for (int y : in_[x]) coin_[y].push_back(x);
    for (int y : out_[x]) coout_[y].push_back(x);
  }
}

std::vector<int> OgPoset::all_faces(int x) const { return set_union(in_[x], out_[x]); }

std::vector<int> OgPoset::grade(int k) const {
  std::vector<int> r;
  for (int x = 0; x < size(); ++x)
    if (dim_[x] == k) r.push_back(x);
  return r;
}

std::vector<int> OgPoset::maximal() const {
  std::vector<int> r;
  for (int x = 0; x < size(); ++x)
    if (coin_[x].empty() && coout_[x].empty()) r.push_back(x);
  return r;
}

bool OgPoset::has_greatest() const { return greatest().has_value(); }

std::optional<int> OgPoset::greatest() const {
  auto m = maximal();
  if (m.size() != 1) return std::nullopt;
  return m.front();
}

std::vector<RawElement> OgPoset::to_raw() const {
  std::vector<RawElement> r(size());
  for (int x = 0; x < size(); ++x) {
    r[x].id = x;
    r[x].dim = dim_[x];
    r[x].input.assign(in_[x].begin(), in_[x].end());
    r[x].output.assign(out_[x].begin(), out_[x].end());
  }
  return r;
}

// --- subsets -------------------------------------------------------------

Subset all_of(const OgPoset& P) {
  Subset s(P.size());
  for (int i = 0; i < P.size(); ++i) s[i] = i;
  return s;
}

std::vector<char> mask_of(const OgPoset& P, const Subset& s) {
  std::vector<char> m(P.size(), 0);
  for (int x : s) m[x] = 1;
  return m;
}

Subset closure(const OgPoset& P, const Subset& s) {
  std::vector<char> seen(P.size(), 0);
  std::vector<int> stack;
  for (int x : s) {
    if (x < 0 || x >= P.size()) throw Error(ErrorKind::UnknownId, "id " + std::to_string(x));
    if (!seen[x]) {
      seen[x] = 1;
      stack.push_back(x);
    }
  }
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (Sign a : {Sign::Minus, Sign::Plus})
      for (int y : P.faces(x, a))
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
  }
  Subset r;
  for (int x = 0; x < P.size(); ++x)
    if (seen[x]) r.push_back(x);
  return r;
}

Subset closure_of(const OgPoset& P, int x) { return closure(P, Subset{x}); }

bool is_closed(const OgPoset& P, const Subset& s) {
  auto m = mask_of(P, s);
  for (int x : s)
    for (Sign a : {Sign::Minus, Sign::Plus})
      for (int y : P.faces(x, a))
        if (!m[y]) return false;
  return true;
}

int subset_dim(const OgPoset& P, const Subset& s) {
  int d = -1;
  for (int x : s) d = std::max(d, P.dim(x));
  return d;
}

Subset subset_maximal(const OgPoset& P, const Subset& s) {
  auto m = mask_of(P, s);
  Subset r;
  for (int x : s) {
    bool top = true;
    for (Sign a : {Sign::Minus, Sign::Plus})
      for (int y : P.cofaces(x, a))
        if (m[y]) top = false;
    if (top) r.push_back(x);
  }
  return r;
}

Subset subset_grade(const OgPoset& P, const Subset& s, int k) {
  Subset r;
  for (int x : s)
    if (P.dim(x) == k) r.push_back(x);
  return r;
}

Subset set_union(const Subset& a, const Subset& b) {
  Subset r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

Subset set_intersection(const Subset& a, const Subset& b) {
  Subset r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

Subset set_difference(const Subset& a, const Subset& b) {
  Subset r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

bool is_subset(const Subset& a, const Subset& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Subset boundary(const OgPoset& P, const Subset& U, int k, Side side) {
  if (k < 0) return {};
  const int d = subset_dim(P, U);
  if (k >= d) return U;
  if (side == Side::Both)
    return set_union(boundary(P, U, k, Side::Minus), boundary(P, U, k, Side::Plus));
  const Sign a = side == Side::Minus ? Sign::Minus : Sign::Plus;
  auto m = mask_of(P, U);
  Subset gens;
  for (int x : U) {
    if (P.dim(x) == k) {
      bool keep = true;
      for (int y : P.cofaces(x, flip(a)))
        if (m[y]) keep = false;
      if (keep) gens.push_back(x);
    } else if (P.dim(x) < k) {
      bool top = true;
      for (Sign b : {Sign::Minus, Sign::Plus})
        for (int y : P.cofaces(x, b))
          if (m[y]) top = false;
      if (top) gens.push_back(x);
    }
  }
  return closure(P, gens);
}

Subset boundary(const OgPoset& P, const Subset& U, Side side) {
  return boundary(P, U, subset_dim(P, U) - 1, side);
}

Subset boundary(const OgPoset& P, int k, Side side) { return boundary(P, all_of(P), k, side); }

Subset boundary(const OgPoset& P, Side side) { return boundary(P, all_of(P), side); }

bool is_round(const OgPoset& P, const Subset& U) {
  const int d = subset_dim(P, U);
  for (int k = 0; k < d; ++k) {
    auto meet = set_intersection(boundary(P, U, k, Side::Minus), boundary(P, U, k, Side::Plus));
    if (meet != boundary(P, U, k - 1, Side::Both)) return false;
  }
  return true;
}

bool is_round(const OgPoset& P) { return is_round(P, all_of(P)); }

Restriction restrict_to(const OgPoset& P, const Subset& closed) {
  if (!is_closed(P, closed)) throw Error(ErrorKind::NotClosed, "restriction to a non-closed subset");
  std::vector<int> newid(P.size(), -1);
  for (std::size_t i = 0; i < closed.size(); ++i) newid[closed[i]] = static_cast<int>(i);
  const int n = static_cast<int>(closed.size());
  std::vector<int> dims(n);
  std::vector<std::vector<int>> in(n), out(n);
  for (int i = 0; i < n; ++i) {
    const int x = closed[i];
    dims[i] = P.dim(x);
    for (int y : P.faces(x, Sign::Minus)) in[i].push_back(newid[y]);
    for (int y : P.faces(x, Sign::Plus)) out[i].push_back(newid[y]);
  }
  return {OgPoset::from_faces(std::move(dims), std::move(in), std::move(out)), closed};
}

OgPoset dual(const OgPoset& P, const std::vector<int>& dims) {
  const int n = P.size();
  std::vector<int> d(n);
  std::vector<std::vector<int>> in(n), out(n);
  for (int x = 0; x < n; ++x) {
    d[x] = P.dim(x);
    const bool swap = std::find(dims.begin(), dims.end(), d[x]) != dims.end();
    in[x] = P.faces(x, swap ? Sign::Plus : Sign::Minus);
    out[x] = P.faces(x, swap ? Sign::Minus : Sign::Plus);
  }
  return OgPoset::from_faces(std::move(d), std::move(in), std::move(out));
}

OgPoset relabel(const OgPoset& P, const std::vector<int>& perm) {
  const int n = P.size();
  std::vector<int> d(n);
  std::vector<std::vector<int>> in(n), out(n);
  for (int x = 0; x < n; ++x) {
    const int nx = perm[x];
    d[nx] = P.dim(x);
    for (int y : P.faces(x, Sign::Minus)) in[nx].push_back(perm[y]);
    for (int y : P.faces(x, Sign::Plus)) out[nx].push_back(perm[y]);
  }
  return OgPoset::from_faces(std::move(d), std::move(in), std::move(out));
}

OgPoset gray_product(const OgPoset& P, const OgPoset& Q) {
  const int m = Q.size();
  const int n = P.size() * m;
  std::vector<int> dims(n);
  std::vector<std::vector<int>> in(n), out(n);
  for (int x = 0; x < P.size(); ++x)
    for (int y = 0; y < m; ++y) {
      const int id = x * m + y;
      dims[id] = P.dim(x) + Q.dim(y);
      for (Sign a : {Sign::Minus, Sign::Plus}) {
        auto& dst = a == Sign::Minus ? in[id] : out[id];
        for (int x2 : P.faces(x, a)) dst.push_back(x2 * m + y);
        for (int y2 : Q.faces(y, twist(a, P.dim(x)))) dst.push_back(x * m + y2);
      }
    }
  return OgPoset::from_faces(std::move(dims), std::move(in), std::move(out));
}

OgPoset disjoint_union(const OgPoset& P, const OgPoset& Q) {
  const int n = P.size() + Q.size();
  std::vector<int> d(n);
  std::vector<std::vector<int>> in(n), out(n);
  for (int x = 0; x < P.size(); ++x) {
    d[x] = P.dim(x);
    in[x] = P.faces(x, Sign::Minus);
    out[x] = P.faces(x, Sign::Plus);
  }
  const int s = P.size();
  for (int x = 0; x < Q.size(); ++x) {
    d[s + x] = Q.dim(x);
    for (int y : Q.faces(x, Sign::Minus)) in[s + x].push_back(s + y);
    for (int y : Q.faces(x, Sign::Plus)) out[s + x].push_back(s + y);
  }
  return OgPoset::from_faces(std::move(d), std::move(in), std::move(out));
}

}  // namespace odot
