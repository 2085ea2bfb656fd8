#include "odot/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "odot/corpus.hpp"

namespace odot {

json VerifyReport::to_json() const {
  json f = json::array();
  for (const auto& c : failures) f.push_back({{"case", c.label}, {"message", c.message}, {"counterexample", c.data}});
  return {{"suite", suite}, {"seed", seed}, {"cases", cases}, {"failures", f}, {"seconds", seconds}};
}

std::vector<Counterexample> run_cases(const std::vector<VerifyCase>& cases, int threads,
                                      const std::vector<std::string>& labels) {
  std::vector<std::optional<Counterexample>> out(cases.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cases.size();) {
      try {
        out[i] = cases[i]();
      } catch (const std::exception& e) {
        out[i] = Counterexample{"", std::string("exception: ") + e.what(), nullptr};
      }
      if (out[i] && out[i]->label.empty() && i < labels.size()) out[i]->label = labels[i];
    }
  };
  int n = threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  n = std::min<int>(n, static_cast<int>(std::max<std::size_t>(cases.size(), 1)));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::vector<Counterexample> r;
  for (auto& o : out)
    if (o) r.push_back(std::move(*o));
  return r;
}

bool is_rigid(const OgPoset& P) {
  // Refine on dimension and the colours of faces and cofaces per side.
  const int n = P.size();
  std::vector<int> col(n);
  for (int x = 0; x < n; ++x) col[x] = P.dim(x);
  for (int round = 0; round < n + 1; ++round) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> sig(n);
    for (int x = 0; x < n; ++x) {
      sig[x] = {col[x]};
      for (Sign a : {Sign::Minus, Sign::Plus}) {
        for (const auto* list : {&P.faces(x, a), &P.cofaces(x, a)}) {
          std::vector<int> cs;
          for (int y : *list) cs.push_back(col[y]);
          std::sort(cs.begin(), cs.end());
          sig[x].push_back(-1);
          sig[x].insert(sig[x].end(), cs.begin(), cs.end());
        }
      }
    }
    for (int x = 0; x < n; ++x) ids.emplace(sig[x], 0);
    int k = 0;
    for (auto& [s, id] : ids) id = k++;
    std::vector<int> next(n);
    for (int x = 0; x < n; ++x) next[x] = ids[sig[x]];
    const bool stable = static_cast<int>(ids.size()) == static_cast<int>(std::set<int>(col.begin(), col.end()).size());
    col = std::move(next);
    if (stable) break;
  }
  std::map<int, std::vector<int>> classes;
  for (int x = 0; x < n; ++x) classes[col[x]].push_back(x);
  auto self = share(P);
  for (const auto& [c, xs] : classes) {
    if (xs.size() < 2) continue;
    std::vector<int> cx = col;
    cx[xs[0]] = n + 1;
    for (std::size_t i = 1; i < xs.size(); ++i) {
      std::vector<int> cy = col;
      cy[xs[i]] = n + 1;
      if (are_isomorphic(self, self, cx, cy)) return false;
    }
  }
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Suite {
  std::vector<std::string> labels;
  std::vector<VerifyCase> cases;
  void add(std::string label, VerifyCase c) {
    labels.push_back(std::move(label));
    cases.push_back(std::move(c));
  }
};

Counterexample fail(std::string message, json data = nullptr) { return {"", std::move(message), std::move(data)}; }

std::vector<Molecule> corpus_for(const VerifyOptions& o) {
  return corpus({o.seed, o.max_dim, o.max_size, 48, 600});
}

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Subset random_closed(const OgPoset& P, std::mt19937_64& rng) {
  Subset s;
  for (int x = 0; x < P.size(); ++x)
    if (rng() % 4 == 0) s.push_back(x);
  return closure(P, s);
}

// --- shape counts -----------------------------------------------------------

Suite shape_counts(const VerifyOptions& o) {
  Suite s;
  for (int n = 0; n <= 4; ++n) {
    s.add("cube(" + std::to_string(n) + ")", [n]() -> std::optional<Counterexample> {
      long expect = 1;
      for (int i = 0; i < n; ++i) expect *= 3;
      auto c = cube(n);
      if (c.size() != expect) return fail("size " + std::to_string(c.size()), molecule_to_json(c));
      return std::nullopt;
    });
    s.add("simplex(" + std::to_string(n) + ")", [n]() -> std::optional<Counterexample> {
      auto c = simplex(n);
      for (int k = 0; k <= n; ++k)
        if (static_cast<long>(c.poset().grade(k).size()) != binom(n + 1, k + 1))
          return fail("wrong count in dim " + std::to_string(k), molecule_to_json(c));
      return std::nullopt;
    });
  }
  for (int n = 0; n <= 6; ++n)
    s.add("globe(" + std::to_string(n) + ")", [n]() -> std::optional<Counterexample> {
      auto g = globe(n);
      if (g.size() != 2 * n + 1) return fail("size " + std::to_string(g.size()), molecule_to_json(g));
      return std::nullopt;
    });
  std::mt19937_64 rng(o.seed);
  auto c = corpus_for(o);
  int pairs = 0;
  for (int round = 0; !c.empty() && (pairs < 50 || round < 2); ++round)
    for (std::size_t i = 0; i < c.size(); ++i) {
      auto K = random_closed(c[i].poset(), rng);
      const Molecule U = c[i];
      s.add("cylinder U" + std::to_string(i) + " |K|=" + std::to_string(K.size()),
            [U, K]() -> std::optional<Counterexample> {
              auto r = partial_gray_cylinder(U, K);
              const int expect = 3 * U.size() - 2 * static_cast<int>(K.size());
              if (r.shape.size() != expect)
                return fail("size " + std::to_string(r.shape.size()) + " != " + std::to_string(expect),
                            {{"shape", molecule_to_json(U)}, {"K", K}});
              return std::nullopt;
            });
      ++pairs;
    }
  return s;
}

// --- strict omega equations --------------------------------------------------

std::optional<Molecule> try_paste(const Molecule& U, const Molecule& V, int k) {
  try {
    return paste(U, V, k);
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Pairwise pastes of the corpus, shared by all cases.
struct OmegaContext {
  std::vector<Molecule> c;
  std::vector<std::vector<std::vector<std::optional<Molecule>>>> pasted;  // [k][i][j]

  std::optional<std::string> same(const Molecule& a, const Molecule& b) {
    const auto& ca = a.canonical();
    const auto& cb = b.canonical();
    const bool iso = ca.exhaustive && cb.exhaustive ? ca.code == cb.code
                                                    : static_cast<bool>(are_isomorphic(a.poset_ref(), b.poset_ref()));
    if (!iso) return "sides are not isomorphic";
    // Counted by the canonical search; cross-checked against is_rigid in the
    // unit tests.
    const bool rigid = ca.exhaustive ? ca.automorphisms == 1 : is_rigid(a.poset());
    if (!rigid) return "isomorphism is not unique";
    return std::nullopt;
  }
};

Suite strict_omega(const VerifyOptions& o) {
  Suite s;
  auto ctx = std::make_shared<OmegaContext>();
  ctx->c = corpus_for(o);
  const auto& c = ctx->c;
  const int N = static_cast<int>(c.size());
  const int D = o.max_dim;
  // code[i][k][side]
  std::vector<std::vector<std::array<std::vector<int>, 2>>> code(N);
  for (int i = 0; i < N; ++i) {
    code[i].resize(D + 1);
    for (int k = 0; k <= D; ++k)
      for (int a = 0; a < 2; ++a)
        code[i][k][a] = boundary_of(c[i], k, a ? Sign::Plus : Sign::Minus).mol.canonical().code;
  }
  auto composable = [&](int i, int j, int k) {
    return k < std::max(c[i].dim(), c[j].dim()) && code[i][k][1] == code[j][k][0];
  };
  ctx->pasted.assign(D, std::vector<std::vector<std::optional<Molecule>>>(N, std::vector<std::optional<Molecule>>(N)));
  for (int k = 0; k < D; ++k)
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        if (composable(i, j, k)) ctx->pasted[k][i][j] = try_paste(c[i], c[j], k);

  auto js = [ctx](std::initializer_list<int> ids, json extra) {
    json d = std::move(extra);
    json shapes = json::array();
    for (int i : ids) shapes.push_back(molecule_to_json(ctx->c[i]));
    d["shapes"] = shapes;
    return d;
  };
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < c[i].dim(); ++k)
      s.add("unit U" + std::to_string(i) + " k=" + std::to_string(k), [ctx, i, k, js]() -> std::optional<Counterexample> {
        const Molecule& U = ctx->c[i];
        auto lo = boundary_of(U, k, Sign::Minus).mol, hi = boundary_of(U, k, Sign::Plus).mol;
        for (const auto& r : {paste(lo, U, k), paste(U, hi, k)})
          if (auto f = ctx->same(r, U)) return fail(*f, js({i}, {{"k", k}}));
        return std::nullopt;
      });
  for (int k = 0; k < D; ++k)
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        if (!composable(i, j, k)) continue;
        for (int l = 0; l < N; ++l) {
          if (!composable(j, l, k)) continue;
          s.add("assoc " + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(l) + " k=" +
                    std::to_string(k),
                [ctx, i, j, l, k, js]() -> std::optional<Counterexample> {
                  const auto& uv = ctx->pasted[k][i][j];
                  const auto& vw = ctx->pasted[k][j][l];
                  if (!uv || !vw) return fail("boundaries match but pasting failed", js({i, j, l}, {{"k", k}}));
                  auto lhs = try_paste(*uv, ctx->c[l], k), rhs = try_paste(ctx->c[i], *vw, k);
                  if (!lhs || !rhs) return fail("composites are not composable", js({i, j, l}, {{"k", k}}));
                  if (auto f = ctx->same(*lhs, *rhs)) return fail(*f, js({i, j, l}, {{"k", k}}));
                  return std::nullopt;
                });
        }
      }
  // Interchange: (U #j V) #k (U' #j V') = (U #k U') #j (V #k V') for k < j.
  for (int j = 1; j < D; ++j) {
    std::vector<std::pair<int, int>> pj;
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        if (c[a].dim() > j && c[b].dim() > j && composable(a, b, j)) pj.emplace_back(a, b);
    for (int k = 0; k < j; ++k)
      for (auto [a, b] : pj)
        for (auto [a2, b2] : pj) {
          if (!composable(a, a2, k) || !composable(b, b2, k)) continue;
          s.add("interchange " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(a2) + "," +
                    std::to_string(b2) + " j=" + std::to_string(j) + " k=" + std::to_string(k),
                [ctx, a, b, a2, b2, j, k, js]() -> std::optional<Counterexample> {
                  const auto& P = ctx->pasted;
                  auto data = [&] { return js({a, b, a2, b2}, {{"j", j}, {"k", k}}); };
                  const auto &l1 = P[j][a][b], &l2 = P[j][a2][b2], &r1 = P[k][a][a2], &r2 = P[k][b][b2];
                  if (!l1 || !l2 || !r1 || !r2) return fail("a side is not composable", data());
                  auto lhs = try_paste(*l1, *l2, k), rhs = try_paste(*r1, *r2, j);
                  if (!lhs || !rhs) return fail("composites are not composable", data());
                  if (auto f = ctx->same(*lhs, *rhs)) return fail(*f, data());
                  return std::nullopt;
                });
        }
  }
  return s;
}

// --- inverted cylinders ---------------------------------------------------

// `lower` holds cartesian maps p: U -> V with dim V < dim U, along which the
// inverted projections are checked.
std::optional<Counterexample> check_cylinder(const Molecule& U, const Subset& K, CylVariant v,
                                             const std::vector<PosetMap>& lower) {
  auto data = [&] { return json{{"shape", molecule_to_json(U)}, {"K", K}, {"variant", static_cast<int>(v)}}; };
  auto r = cylinder(U, K, v);
  if (U.is_atom() && !r.shape.is_atom()) return fail("cylinder on an atom is not an atom", data());
  if (U.is_round() && !r.shape.is_round()) return fail("cylinder on a round molecule is not round", data());
  if (!replays_exactly(r.shape)) return fail("certificate does not replay", data());
  try {
    if (v == CylVariant::Plain) classify_map(r.shape.poset_ref(), U.poset_ref(), r.projection.f);
    for (const auto& p : lower) {
      auto pt = compose(p, r.projection);
      classify_map(pt.source, pt.target, pt.f);
    }
  } catch (const Error& e) {
    return fail(std::string("projection is not cartesian: ") + e.what(), data());
  }
  return std::nullopt;
}

Suite inverted_cylinders(const VerifyOptions& o) {
  Suite s;
  auto c = corpus_for(o);
  // The corpus, with the map to the point as p, then plain cylinders on
  // lower-dimensional corpus shapes with their own projection as p.
  std::vector<std::pair<Molecule, std::vector<PosetMap>>> inputs;
  for (const auto& U : c) {
    std::vector<PosetMap> lower;
    if (U.dim() > 0)
      lower.push_back(classify_map(U.poset_ref(), point().poset_ref(), std::vector<int>(U.size(), 0)));
    inputs.emplace_back(U, std::move(lower));
  }
  for (const auto& B : c) {
    if (B.dim() >= o.max_dim || (!B.is_atom() && !B.is_round())) continue;
    auto cyl = partial_gray_cylinder(B, {});
    if (cyl.shape.size() > 3 * o.max_size) continue;
    inputs.emplace_back(cyl.shape, std::vector<PosetMap>{cyl.projection});
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto& [U, lower] = inputs[i];
    if (!U.is_atom() && !U.is_round()) continue;
    const auto& P = U.poset();
    const Subset lo = boundary(P, Side::Minus), hi = boundary(P, Side::Plus);
    const std::vector<std::pair<CylVariant, Subset>> variants{{CylVariant::Plain, {}}, {CylVariant::Plain, lo},
                                                              {CylVariant::Plain, hi}, {CylVariant::Left, {}},
                                                              {CylVariant::Left, hi},  {CylVariant::Right, {}},
                                                              {CylVariant::Right, lo}};
    for (const auto& [v, K] : variants) {
      if (v != CylVariant::Plain && U.dim() == 0) continue;
      static const char* vn[] = {"plain", "left", "right"};
      s.add(std::string(vn[static_cast<int>(v)]) + " U" + std::to_string(i) + " |K|=" + std::to_string(K.size()),
            [U = U, lower = lower, v = v, K = K]() { return check_cylinder(U, K, v, lower); });
    }
  }
  return s;
}

// --- horns from pushout-products ------------------------------------------

Suite boundary_horns(const VerifyOptions& o) {
  Suite s;
  auto shapes = default_shapes(o.max_dim, o.seed, o.max_size);
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const Molecule U = shapes[i];
    if (!U.is_atom()) continue;
    for (CylInclusion b : {CylInclusion::IotaMinus, CylInclusion::IotaPlus})
      for (bool full : {false, true})
        s.add(std::string(cyl_inclusion_name(b)) + (full ? " full" : " min") + " U" + std::to_string(i),
              [U, b, full]() -> std::optional<Counterexample> {
                auto m = boundary_mono(U.poset_ref(), full);
                auto r = pushout_product(b, m);
                json data = mono_to_json(r);
                const int top = *U.poset().greatest();
                const int a0 = b == CylInclusion::IotaMinus ? kArrowPlus : kArrowMinus;
                const int x = a0 * U.size() + top;
                auto h = atomic_horn(r.target.poset, x);
                if (r.map.image() != h.horn) return fail("image is not the atomic horn at (0^-a, top)", data);
                auto v = is_marked_horn(r);
                if (!v.ok) return fail("not a marked horn: " + v.reason, data);
                return std::nullopt;
              });
  }
  return s;
}

Suite marked_horn_closure(const VerifyOptions& o) {
  Suite s;
  AnodyneFamily fam{AnodyneTag::Horn, 0, o.max_dim, 0, default_shapes(o.max_dim, o.seed, o.max_size)};
  AnodyneStream st(fam);
  while (auto it = st.next()) {
    auto h = std::get<MarkedMono>(it->mono);
    s.add(it->label, [h]() -> std::optional<Counterexample> {
      auto r = pushout_product(CylInclusion::Both, h);
      auto v = is_marked_horn(r);
      if (!v.ok) return fail(v.reason, {{"horn", mono_to_json(h)}, {"product", mono_to_json(r)}});
      return std::nullopt;
    });
  }
  return s;
}

Suite entire_identity(const VerifyOptions& o) {
  Suite s;
  auto c = corpus_for(o);
  std::mt19937_64 rng(o.seed);
  const int count = o.samples > 0 ? o.samples : 20;
  for (int t = 0; t < count; ++t) {
    const std::size_t i = rng() % c.size();
    auto sp = presentation_of(c[i]);
    Subset A, B, all;
    for (int g = 0; g < sp.pres->size(); ++g) {
      all.push_back(g);
      if (sp.pres->gen(g).dim() == 0) continue;
      const auto r = rng() % 3;
      if (r >= 1) B.push_back(g);
      if (r == 2) A.push_back(g);
    }
    PresMono m{{sp.pres, B}, all, A};
    const Molecule U = c[i];
    Subset EA, EB;  // the same markings on elements of U
    for (int x = 0; x < U.size(); ++x) {
      const int g = sp.gen_of[x];
      if (std::binary_search(A.begin(), A.end(), g)) EA.push_back(x);
      if (std::binary_search(B.begin(), B.end(), g)) EB.push_back(x);
    }
    s.add("U" + std::to_string(i) + " A=" + std::to_string(A.size()) + " B=" + std::to_string(B.size()),
          [m, U, A = EA, B = EB]() -> std::optional<Counterexample> {
            json data = {{"presentation", presentation_to_json(*m.target.pres, m.target.marked)},
                         {"domain_marked", m.domain_marked}};
            if (!pres_pushout_product(2, m).identity()) return fail("presentation box is not an identity", data);
            // The same statement on the shape.
            auto P = U.poset_ref();
            auto mm = make_marked_mono({P, A}, {P, B}, identity_map(P));
            auto r = pushout_product(CylInclusion::Both, mm);
            if (r.kind != MonoKind::Entire || r.source.marked != r.target.marked)
              return fail("shape box is not an identity", mono_to_json(r));
            return std::nullopt;
          });
  }
  return s;
}

Suite localisation(const VerifyOptions& o) {
  Suite s;
  const int expect[] = {1, 5, 13, 29};
  for (int d = 0; d <= 3; ++d)
    s.add("walking equivalence d=" + std::to_string(d), [d, e = expect[d]]() -> std::optional<Counterexample> {
      auto loc = walking_equivalence(arrow(), d);
      const int got = loc.pres->count_dim_at_least(1);
      if (got != e) return fail(std::to_string(got) + " positive generators, expected " + std::to_string(e));
      return std::nullopt;
    });
  auto c = corpus_for(o);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Molecule U = c[i];
    s.add("minimal U" + std::to_string(i), [U]() -> std::optional<Counterexample> {
      auto sp = presentation_of(U);
      for (int d = 0; d <= 3; ++d)
        if (!(*localize({sp.pres, {}}, d).pres == *sp.pres))
          return fail("localisation at depth " + std::to_string(d) + " adds generators", molecule_to_json(U));
      return std::nullopt;
    });
  }
  return s;
}

// --- witnesses ------------------------------------------------------------

bool rejected(const Presentation& X, const EquivWitness& w, const Subset& A) {
  try {
    return !check_equiv_witness(X, w, A).ok;
  } catch (const Error& e) {
    return e.kind() == ErrorKind::TypeMismatch;
  }
}

// Breaks one boundary at every Recurse node in turn. Returns the label of
// the first mutation that slips through.
std::optional<std::string> mutation_escapes(const Presentation& X, const WitnessRef& w, const Subset& A,
                                            const std::string& path) {
  if (w->leaf != LeafKind::Recurse) return std::nullopt;
  std::vector<std::pair<std::string, EquivWitness>> muts;
  EquivWitness m = *w;
  std::swap(m.z, m.h);
  muts.emplace_back("swap invertors", m);
  m = *w;
  m.left_inv = w->subject;
  muts.emplace_back("left inverse := subject", m);
  m = *w;
  m.right_inv = unit(X, restrict_boundary(X, w->subject, Sign::Minus));
  muts.emplace_back("right inverse := unit", m);
  m = *w;
  m.z = degenerate_leaf(unit(X, w->subject));
  muts.emplace_back("z := unit of subject", m);
  for (const auto& [name, mw] : muts)
    if (!rejected(X, mw, A)) return path + ": " + name;
  if (auto r = mutation_escapes(X, w->z, A, path + ".z")) return r;
  return mutation_escapes(X, w->h, A, path + ".h");
}

Suite witness_soundness(const VerifyOptions& o) {
  Suite s;
  auto c = corpus_for(o);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Molecule U = c[i];
    if (!U.is_round()) continue;
    s.add("degenerate U" + std::to_string(i), [U]() -> std::optional<Counterexample> {
      auto sp = presentation_of(U);
      const auto& X = *sp.pres;
      std::vector<Diagram> ds;
      const Diagram& u = sp.tautological;
      ds.push_back(unit(X, u));
      ds.push_back(unit(X, ds.back()));
      ds.push_back(reverse(X, ds.front()));
      auto cyl = partial_gray_cylinder(U, {});
      ds.push_back(degenerate_pullback(X, u, cyl.shape, cyl.projection));
      for (int g = 0; g < X.size(); ++g) ds.push_back(unit(X, gen_cell(X, g)));
      for (const auto& d : ds) {
        if (!d.shape.is_round()) continue;
        auto v = check_equiv_witness(X, *degenerate_leaf(d), {});
        if (!v.ok) return fail("degenerate round diagram rejected: " + v.reason, diagram_to_json(d));
      }
      return std::nullopt;
    });
  }
  // Witnesses in walking equivalences, pushed along inclusions of faces and
  // along the collapse to a point.
  auto P0 = presentation_of(point());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Molecule W = c[i];
    if (!W.is_atom() || W.dim() < 1) continue;
    s.add("push W" + std::to_string(i), [W, P0]() -> std::optional<Counterexample> {
      const int depth = 2;
      auto SW = presentation_of(W);
      const int topW = SW.gen_of[*W.poset().greatest()];
      auto LW = localize({SW.pres, {topW}}, depth);
      auto LP = localize({P0.pres, {}}, depth);
      auto w = localisation_witness(LW, topW, depth);
      const Subset& A = LW.stage_marked[depth];
      auto v = check_equiv_witness(*LW.pres, *w, A);
      if (!v.ok) return fail("localisation witness rejected at " + v.path, molecule_to_json(W));
      if (auto esc = mutation_escapes(*LW.pres, w, A, "root"))
        return fail("mutation accepted: " + *esc, molecule_to_json(W));
      // collapse
      auto p = morphism_of_map(SW, P0, classify_map(W.poset_ref(), point().poset_ref(), std::vector<int>(W.size(), 0)));
      auto lp = loc_pushforward(p, {topW}, {}, depth, &LW, &LP);
      auto pw = push_witness(lp, *w);
      auto pv = check_equiv_witness(*LP.pres, *pw, pushed_assumptions(lp, A));
      if (!pv.ok) return fail("pushed witness rejected at " + pv.path + ": " + pv.reason, molecule_to_json(W));
      // faces
      for (int x = 0; x < W.size(); ++x) {
        if (W.poset().dim(x) == 0 || x == *W.poset().greatest()) continue;
        auto sub = atom_closure(W, x);
        auto SU = presentation_of(sub.mol);
        const int topU = SU.gen_of[*sub.mol.poset().greatest()];
        auto f = morphism_of_map(SU, SW, sub.incl);
        const Subset B{SW.gen_of[x]};
        auto LU = localize({SU.pres, {topU}}, depth);
        auto LB = localize({SW.pres, B}, depth);
        auto lf = loc_pushforward(f, {topU}, B, depth, &LU, &LB);
        auto wu = localisation_witness(LU, topU, depth);
        const Subset& AU = LU.stage_marked[depth];
        if (!check_equiv_witness(*LU.pres, *wu, AU).ok) return fail("face witness rejected", molecule_to_json(sub.mol));
        auto pu = push_witness(lf, *wu);
        auto r = check_equiv_witness(*LB.pres, *pu, pushed_assumptions(lf, AU));
        if (!r.ok)
          return fail("witness pushed along a face inclusion rejected at " + r.path + ": " + r.reason,
                      {{"W", molecule_to_json(W)}, {"x", x}});
        // degenerate leaves stay degenerate
        auto du = degenerate_leaf(unit(*LU.pres, gen_cell(*LU.pres, topU)));
        if (!check_equiv_witness(*LB.pres, *push_witness(lf, *du), {}).ok)
          return fail("pushed unit rejected", {{"W", molecule_to_json(W)}, {"x", x}});
      }
      return std::nullopt;
    });
    if (W.dim() + 1 > o.max_dim) continue;
    // Along the cylinder projection: the top of the cylinder goes to a unit.
    s.add("push cyl W" + std::to_string(i), [W]() -> std::optional<Counterexample> {
      const int depth = 2;
      auto cyl = partial_gray_cylinder(W, {});
      auto SC = presentation_of(cyl.shape);
      auto SW = presentation_of(W);
      const int topC = SC.gen_of[*cyl.shape.poset().greatest()];
      const Subset B{SW.gen_of[*W.poset().greatest()]};
      auto f = morphism_of_map(SC, SW, cyl.projection);
      auto LC = localize({SC.pres, {topC}}, depth);
      auto LB = localize({SW.pres, B}, depth);
      auto lf = loc_pushforward(f, {topC}, B, depth, &LC, &LB);
      auto w = localisation_witness(LC, topC, depth);
      const Subset& A = LC.stage_marked[depth];
      if (!check_equiv_witness(*LC.pres, *w, A).ok) return fail("cylinder witness rejected", molecule_to_json(W));
      auto r = check_equiv_witness(*LB.pres, *push_witness(lf, *w), pushed_assumptions(lf, A));
      if (!r.ok)
        return fail("witness pushed along a cylinder projection rejected at " + r.path + ": " + r.reason,
                    molecule_to_json(W));
      return std::nullopt;
    });
  }
  return s;
}

// --- factorisation --------------------------------------------------------

PosetMap random_map(const std::vector<Molecule>& c, std::mt19937_64& rng) {
  const Molecule& W = c[rng() % c.size()];
  const auto& P = W.poset();
  // Sub-shape S of W and its inclusion.
  SubMolecule S{W, identity_map(W.poset_ref())};
  switch (rng() % 4) {
    case 0: S = atom_closure(W, static_cast<int>(rng() % P.size())); break;
    case 1:
      if (W.dim() > 0) S = boundary_of(W, static_cast<int>(rng() % W.dim()), rng() % 2 ? Sign::Plus : Sign::Minus);
      break;
    case 2: {
      const auto pts = P.grade(0);
      S = atom_closure(W, pts[rng() % pts.size()]);
      break;
    }
    default: break;
  }
  PosetMap f = S.incl;
  // Precompose with a collapse onto S.
  switch (rng() % 3) {
    case 0: {
      auto K = random_closed(S.mol.poset(), rng);
      auto cyl = partial_gray_cylinder(S.mol, K);
      f = compose(f, cyl.projection);
      if (rng() % 2 && cyl.shape.size() > 1) {
        auto sub = atom_closure(cyl.shape, static_cast<int>(rng() % cyl.shape.size()));
        f = compose(f, sub.incl);
      }
      break;
    }
    case 1: {
      if (S.mol.size() == 1) {
        const Molecule& V = c[rng() % c.size()];
        f = compose(f, classify_map(V.poset_ref(), S.mol.poset_ref(), std::vector<int>(V.size(), 0)));
      }
      break;
    }
    default: break;
  }
  return classify_map(f.source, f.target, f.f);
}

Suite factorisation(const VerifyOptions& o) {
  Suite s;
  auto c = corpus_for(o);
  std::mt19937_64 rng(o.seed ^ 0x9e3779b97f4a7c15ull);
  const int count = o.samples > 0 ? o.samples : 100;
  for (int t = 0; t < count; ++t) {
    PosetMap f = random_map(c, rng);
    s.add("map " + std::to_string(t), [f]() -> std::optional<Counterexample> {
      json data = {{"source", poset_to_json(*f.source)}, {"target", poset_to_json(*f.target)}, {"assignment", f.f}};
      auto fac = factorize(f);
      if (compose(fac.inclusion, fac.collapse).f != f.f) return fail("factors do not recompose", data);
      if (!fac.collapse.surjective()) return fail("first factor is not surjective", data);
      if (!fac.inclusion.injective()) return fail("second factor is not injective", data);
      for (int x = 0; x < f.source->size(); ++x)
        if (fac.collapse.target->dim(fac.collapse(x)) > f.source->dim(x)) return fail("collapse raises dimension", data);
      for (int y = 0; y < fac.inclusion.source->size(); ++y)
        if (fac.inclusion.target->dim(fac.inclusion(y)) != fac.inclusion.source->dim(y))
          return fail("inclusion changes dimension", data);
      // Uniqueness: the middle object is forced to be the image, and the
      // collapse is then forced by injectivity.
      if (fac.inclusion.image() != f.image()) return fail("middle object is not the image", data);
      try {
        classify_map(fac.collapse.source, fac.collapse.target, fac.collapse.f);
        classify_map(fac.inclusion.source, fac.inclusion.target, fac.inclusion.f);
      } catch (const Error& e) {
        return fail(std::string("a factor is not a map: ") + e.what(), data);
      }
      return std::nullopt;
    });
  }
  return s;
}

using SuiteFn = Suite (*)(const VerifyOptions&);
const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"shape-counts", shape_counts},
      {"strict-omega", strict_omega},
      {"inverted-cylinders", inverted_cylinders},
      {"boundary-horns", boundary_horns},
      {"marked-horn-closure", marked_horn_closure},
      {"entire-identity", entire_identity},
      {"localisation", localisation},
      {"witness-soundness", witness_soundness},
      {"factorisation", factorisation},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, f] : registry()) n.push_back(k);
    return n;
  }();
  return names;
}

VerifyReport run_suite(const std::string& name, const VerifyOptions& opt) {
  for (const auto& [k, fn] : registry()) {
    if (k != name) continue;
    const auto t0 = Clock::now();
    Suite s = fn(opt);
    VerifyReport r;
    r.suite = name;
    r.seed = opt.seed;
    r.cases = s.cases.size();
    r.failures = run_cases(s.cases, opt.threads, s.labels);
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
  }
  throw Error(ErrorKind::ParseError, "unknown suite '" + name + "'");
}

}  // namespace odot
