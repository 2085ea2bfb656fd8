#include "odot/cylinder.hpp"

#include <algorithm>

namespace odot {

int CylinderResult::at(Copy c, int base) const {
  if (c == Copy::Collapsed) return index[3 * base];
  return index[3 * base + static_cast<int>(c)];
}

CylinderResult cylinder(const Molecule& U, const Subset& K, CylVariant v) {
  const OgPoset& P = U.poset();
  if (!is_closed(P, K)) throw Error(ErrorKind::NotClosed, "cylinder relative to a non-closed subset");
  if (v == CylVariant::Left && !is_subset(K, boundary(P, Side::Plus)))
    throw Error(ErrorKind::KNotInBoundary, "left-inverted cylinder needs K inside the output boundary");
  if (v == CylVariant::Right && !is_subset(K, boundary(P, Side::Minus)))
    throw Error(ErrorKind::KNotInBoundary, "right-inverted cylinder needs K inside the input boundary");
  if (v != CylVariant::Plain && U.dim() == 0)
    throw Error(ErrorKind::EmptyFaceSet, "inverted cylinder on a point: the 1-cell would have no output faces");

  const int m = P.size();
  const int n = U.dim();
  auto inK = mask_of(P, K);
  std::vector<int> index(3 * m, -1);
  std::vector<CylTag> tags;
  // Order matches gray(arrow, U) when K is empty: 0-, then 0+, then 1.
  for (Copy c : {Copy::Minus, Copy::Plus, Copy::Mid})
    for (int x = 0; x < m; ++x) {
      if (inK[x]) {
        if (c == Copy::Minus) {
          const int id = static_cast<int>(tags.size());
          for (int j = 0; j < 3; ++j) index[3 * x + j] = id;
          tags.push_back({Copy::Collapsed, x});
        }
        continue;
      }
      index[3 * x + static_cast<int>(c)] = static_cast<int>(tags.size());
      tags.push_back({c, x});
    }

  const int N = static_cast<int>(tags.size());
  std::vector<int> dims(N);
  std::vector<std::vector<int>> in(N), out(N);
  auto copy_of = [](Sign a) { return a == Sign::Minus ? Copy::Minus : Copy::Plus; };
  auto lower = [&](Copy c, int y) {
    return inK[y] ? index[3 * y] : index[3 * y + static_cast<int>(c)];
  };
  for (int id = 0; id < N; ++id) {
    const auto [c, x] = tags[id];
    dims[id] = P.dim(x) + (c == Copy::Mid ? 1 : 0);
    for (Sign a : {Sign::Minus, Sign::Plus}) {
      auto& dst = a == Sign::Minus ? in[id] : out[id];
      const bool top = P.dim(x) == n;
      if (c == Copy::Collapsed) {
        for (int y : P.faces(x, a)) dst.push_back(index[3 * y]);
      } else if (c == Copy::Mid) {
        const bool pair_side = (v == CylVariant::Left && a == Sign::Minus) ||
                               (v == CylVariant::Right && a == Sign::Plus);
        if (top && v != CylVariant::Plain) {
          if (pair_side) {
            dst.push_back(index[3 * x + static_cast<int>(Copy::Minus)]);
            dst.push_back(index[3 * x + static_cast<int>(Copy::Plus)]);
            for (int y : P.faces(x, flip(a)))
              if (!inK[y]) dst.push_back(index[3 * y + static_cast<int>(Copy::Mid)]);
          } else {
            for (int y : P.faces(x, flip(a)))
              if (!inK[y]) dst.push_back(index[3 * y + static_cast<int>(Copy::Mid)]);
          }
        } else {
          dst.push_back(index[3 * x + static_cast<int>(copy_of(a))]);
          for (int y : P.faces(x, flip(a)))
            if (!inK[y]) dst.push_back(index[3 * y + static_cast<int>(Copy::Mid)]);
        }
      } else {
        const bool reversed = top && ((v == CylVariant::Left && c == Copy::Plus) ||
                                      (v == CylVariant::Right && c == Copy::Minus));
        for (int y : P.faces(x, reversed ? flip(a) : a)) dst.push_back(lower(c, y));
      }
    }
  }
  auto poset = share(OgPoset::from_faces(std::move(dims), std::move(in), std::move(out)));
  std::vector<int> proj(N);
  for (int id = 0; id < N; ++id) proj[id] = tags[id].base;

  static const char* names[] = {"pgcyl", "invl", "invr"};
  auto cert = std::make_shared<Cert>();
  cert->kind = CertKind::Import;
  cert->children = {U.cert_ref()};
  cert->ints = K;
  cert->name = names[static_cast<int>(v)];
  Molecule shape = Molecule::certified(poset, cert);
  return {shape, trusted_map(poset, U.poset_ref(), std::move(proj)), K, std::move(tags), std::move(index)};
}

CylinderResult partial_gray_cylinder(const Molecule& U, const Subset& K) {
  return cylinder(U, K, CylVariant::Plain);
}

CylinderResult inverted_left(const Molecule& U, const Subset& K) {
  return cylinder(U, K, CylVariant::Left);
}

CylinderResult inverted_right(const Molecule& U, const Subset& K) {
  return cylinder(U, K, CylVariant::Right);
}

CylinderResult invertor_shape(const Molecule& U, const std::string& s) {
  if (!U.is_round()) throw Error(ErrorKind::NotRound, "invertor shapes need a round molecule");
  CylinderResult cur{U, identity_map(U.poset_ref()), {}, {}, {}};
  for (int i = static_cast<int>(s.size()) - 1; i >= 0; --i) {
    const Molecule& base = cur.shape;
    CylinderResult next;
    if (s[i] == 'L') next = inverted_left(base, boundary(base.poset(), Side::Plus));
    else if (s[i] == 'R') next = inverted_right(base, boundary(base.poset(), Side::Minus));
    else throw Error(ErrorKind::ParseError, "invertor string must be over {L,R}");
    next.projection = compose(cur.projection, next.projection);
    cur = std::move(next);
  }
  return cur;
}

CylinderResult unit_shape(const Molecule& U) {
  return partial_gray_cylinder(U, boundary(U.poset(), Side::Both));
}

}  // namespace odot
