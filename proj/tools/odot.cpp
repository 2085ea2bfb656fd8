#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "odot/corpus.hpp"
#include "odot/verify.hpp"
#include "shape_expr.hpp"

using namespace odot;
using odot::cli::load_shape;

namespace {

struct Globals {
  std::uint64_t seed = 0;
  int max_dim = 3;
  int max_size = 15;
  int threads = 0;
  std::string out;
  std::string out_dir;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::filesystem::path p = g.out;
  if (!g.out_dir.empty() && p.is_relative()) p = std::filesystem::path(g.out_dir) / p;
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream f(p);
  if (!f) throw Error(ErrorKind::ParseError, "cannot write '" + p.string() + "'");
  f << text << '\n';
}

void emit(const Globals& g, const json& j) { emit(g, j.dump(2)); }

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorKind::ParseError, "'" + path + "' is not valid JSON");
  return j;
}

Subset parse_ids(const std::string& s) {
  Subset r;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      r.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "'" + tok + "' is not an id");
    }
  }
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

json shape_summary(const Molecule& U) {
  return {{"size", U.size()}, {"dim", U.dim()}, {"atom", U.is_atom()}, {"round", U.is_round()},
          {"shape", molecule_to_json(U)}};
}

// --- verbs ----------------------------------------------------------------

struct ShapeArgs {
  std::string expr, file, format = "json";
};

void run_shape(const Globals& g, const ShapeArgs& a) {
  if (a.expr.empty() == a.file.empty()) throw CLI::ValidationError("shape", "give exactly one of --expr and --file");
  const Molecule U = load_shape(a.expr.empty() ? a.file : a.expr);
  if (a.format == "dot") return emit(g, poset_to_dot(U.poset()));
  if (a.format == "canonical") {
    const auto& c = U.canonical();
    return emit(g, json{{"code", c.code}, {"labelling", c.labelling}, {"exhaustive", c.exhaustive}});
  }
  emit(g, shape_summary(U));
}

struct HornArgs {
  std::string shape;
  int x = -1;
  bool marked = false, molecular = false;
};

void run_horn(const Globals& g, const HornArgs& a) {
  const Molecule U = load_shape(a.shape);
  std::vector<HornData> hs = a.molecular ? molecular_horns(U) : atomic_horns(U);
  json out = json::array();
  for (const auto& h : hs) {
    if (a.x >= 0 && h.x != a.x) continue;
    json e = {{"x", h.x}, {"side", std::string(1, sign_char(h.side))}, {"V", h.V}, {"horn", h.horn}};
    if (a.marked && h.x >= 0) {
      json reqs = json::array();
      for (const auto& d : horn_requirements(U.poset(), h.x)) {
        auto Ap = horn_target_marking(U.poset(), h.x, d.required);
        auto v = is_marked_horn(horn_mono(h, d.required, Ap));
        reqs.push_back({{"required", d.required}, {"target_marking", Ap}, {"marked_horn", v.ok}});
      }
      e["markings"] = reqs;
    }
    out.push_back(std::move(e));
  }
  if (a.x >= 0 && out.empty()) throw Error(ErrorKind::UnknownId, "no horn at x = " + std::to_string(a.x));
  emit(g, json{{"shape", molecule_to_json(U)}, {"horns", out}});
}

struct CylArgs {
  std::string shape, variant = "plain", K = "none", invertor, format = "json";
};

void run_cylinder(const Globals& g, const CylArgs& a) {
  const Molecule U = load_shape(a.shape);
  CylinderResult r;
  if (!a.invertor.empty()) {
    r = invertor_shape(U, a.invertor);
  } else {
    const auto& P = U.poset();
    Subset K;
    if (a.K == "in") K = boundary(P, Side::Minus);
    else if (a.K == "out") K = boundary(P, Side::Plus);
    else if (a.K == "all") K = boundary(P, Side::Both);
    else if (a.K != "none") K = closure(P, parse_ids(a.K));
    const CylVariant v = a.variant == "left" ? CylVariant::Left : a.variant == "right" ? CylVariant::Right
                                                                                     : CylVariant::Plain;
    r = cylinder(U, K, v);
  }
  if (a.format == "dot") return emit(g, poset_to_dot(r.shape.poset()));
  json j = cylinder_to_json(r);
  j["size"] = r.shape.size();
  j["atom"] = r.shape.is_atom();
  j["round"] = r.shape.is_round();
  emit(g, j);
}

struct AnodyneArgs {
  std::string family, shape;
  int n = 0, depth = 1;
  long limit = -1;
  bool summary = false;
};

void run_anodyne(const Globals& g, const AnodyneArgs& a) {
  auto tag = parse_anodyne_tag(a.family);
  if (!tag) throw CLI::ValidationError("--family", "unknown family '" + a.family + "'");
  AnodyneFamily fam{*tag, a.n, g.max_dim, a.depth, {}};
  fam.shapes = a.shape.empty() ? default_shapes(g.max_dim, g.seed, g.max_size) : std::vector{load_shape(a.shape)};
  AnodyneStream st(fam);
  json items = json::array();
  long count = 0;
  while (auto it = st.next()) {
    if (a.limit >= 0 && count >= a.limit) break;
    ++count;
    if (!a.summary) items.push_back(anodyne_item_to_json(*it));
  }
  json j = {{"family", anodyne_tag_name(*tag)}, {"max_dim", g.max_dim}, {"count", count}};
  if (!a.summary) j["items"] = items;
  emit(g, j);
}

struct LocArgs {
  std::string shape, marked = "full";
  int depth = 1;
  bool summary = false;
};

void run_loc(const Globals& g, const LocArgs& a) {
  const Molecule U = load_shape(a.shape);
  if (a.depth < 0) throw CLI::ValidationError("--depth", "must be non-negative");
  auto sp = presentation_of(U);
  Subset A;
  if (a.marked == "full") {
    if (!U.is_atom()) throw Error(ErrorKind::NotAtom, "--marked full marks the greatest element");
    if (U.dim() > 0) A = {sp.gen_of[*U.poset().greatest()]};
  } else if (a.marked == "all") {
    for (int x = 0; x < U.size(); ++x)
      if (U.poset().dim(x) > 0) A.push_back(sp.gen_of[x]);
    std::sort(A.begin(), A.end());
  } else if (a.marked != "none") {
    A = parse_ids(a.marked);
  }
  auto loc = localize({sp.pres, A}, a.depth);
  // Stage of an entry: |s| for h^s a, |s|+1 for its inverses.
  std::vector<int> stages(a.depth + 1, 0);
  stages[0] = static_cast<int>(A.size());
  for (const auto& e : loc.entries) {
    const int st = static_cast<int>(e.word.size()) + (e.kind == 'h' ? 0 : 1);
    if (st >= 1 && st <= a.depth) ++stages[st];
  }
  json j = {{"depth", a.depth},
            {"base_generators", sp.pres->size()},
            {"marked", A},
            {"stages", stages},
            {"added", loc.pres->size() - sp.pres->size()},
            {"positive_generators", loc.pres->count_dim_at_least(1)}};
  if (!a.summary) j["presentation"] = presentation_to_json(*loc.pres, loc.stage_marked.back());
  emit(g, j);
}

struct WitnessArgs {
  std::string pres, witness, assume, shape;
  int depth = 2, levels = -1;
  bool assume_marked = false;
};

json verdict_json(const WitnessVerdict& v) {
  return {{"ok", v.ok}, {"path", v.path}, {"reason", v.reason}, {"depth", v.depth}};
}

bool run_witness(const Globals& g, const WitnessArgs& a) {
  if (!a.shape.empty()) {
    // Generate: the walking equivalence on the shape and the witness for its top cell.
    const Molecule U = load_shape(a.shape);
    if (!U.is_atom() || U.dim() == 0) throw Error(ErrorKind::NotAtom, "need an atom of positive dimension");
    auto loc = walking_equivalence(U, a.depth);
    auto sp = presentation_of(U);
    const int top = sp.gen_of[*U.poset().greatest()];
    auto w = localisation_witness(loc, top, a.levels < 0 ? a.depth : a.levels);
    const Subset& A = loc.stage_marked.back();
    auto v = check_equiv_witness(*loc.pres, *w, A);
    emit(g, json{{"presentation", presentation_to_json(*loc.pres, A)},
                 {"witness", witness_to_json(*w)},
                 {"assumptions", A},
                 {"verdict", verdict_json(v)}});
    return v.ok;
  }
  if (a.pres.empty() || a.witness.empty())
    throw CLI::ValidationError("witness", "give --shape, or both --pres and --witness");
  auto pj = read_json(a.pres);
  if (pj.contains("presentation")) pj = pj["presentation"];
  auto mp = presentation_from_json(pj);
  auto wj = read_json(a.witness);
  if (wj.contains("witness")) wj = wj["witness"];
  auto w = witness_from_json(*mp.pres, wj);
  Subset A = a.assume_marked ? mp.marked : parse_ids(a.assume);
  WitnessVerdict v;
  try {
    v = check_equiv_witness(*mp.pres, *w, A);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TypeMismatch) throw;
    v.ok = false;
    v.reason = e.what();
  }
  emit(g, json{{"verdict", verdict_json(v)}, {"assumptions", A}});
  return v.ok;
}

struct VerifyArgs {
  std::string suite = "all";
  int samples = 0;
};

bool run_verify(const Globals& g, const VerifyArgs& a) {
  VerifyOptions o{g.seed, g.max_dim, g.max_size, g.threads, a.samples};
  std::vector<std::string> names;
  if (a.suite == "all") names = verify_suites();
  else names = {a.suite};
  json reports = json::array();
  bool ok = true;
  for (const auto& n : names) {
    auto r = run_suite(n, o);
    ok = ok && r.ok();
    reports.push_back(r.to_json());
  }
  emit(g, names.size() == 1 ? reports[0] : json{{"reports", reports}});
  return ok;
}

struct ExportArgs {
  std::string shape, format = "json";
  bool corpus = false;
};

void run_export(const Globals& g, const ExportArgs& a) {
  if (a.corpus) {
    json arr = json::array();
    for (const auto& U : corpus({g.seed, g.max_dim, g.max_size, 48, 600})) arr.push_back(molecule_to_json(U));
    return emit(g, json{{"seed", g.seed}, {"max_dim", g.max_dim}, {"max_size", g.max_size}, {"shapes", arr}});
  }
  if (a.shape.empty()) throw CLI::ValidationError("export", "give --shape or --corpus");
  const Molecule U = load_shape(a.shape);
  if (a.format == "dot") return emit(g, poset_to_dot(U.poset()));
  emit(g, molecule_to_json(U));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oriented graded posets, molecules, diagrammatic sets and their anodyne maps."};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file with default options; flags override it");
  Globals g;
  app.add_option("--seed", g.seed, "seed for corpora and sampling")->envname("ODOT_SEED");
  app.add_option("--max-dim", g.max_dim, "dimension bound")->check(CLI::Range(0, 6));
  app.add_option("--max-size", g.max_size, "element bound for corpus shapes")->check(CLI::PositiveNumber);
  app.add_option("--threads", g.threads, "worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);
  app.add_option("--out", g.out, "write the report here instead of stdout");
  app.add_option("--out-dir", g.out_dir, "directory for relative --out paths");

  const std::vector<std::string> shape_formats{"json", "dot", "canonical"};

  ShapeArgs sa;
  auto* shape = app.add_subcommand("shape", "build a shape and print it");
  shape->add_option("--expr", sa.expr, "shape expression, e.g. \"paste(atom(arrow,arrow), arrow, 0)\"");
  shape->add_option("--file", sa.file, "exported shape JSON");
  shape->add_option("--export", sa.format, "json, dot or canonical")->check(CLI::IsMember(shape_formats));

  HornArgs ha;
  auto* horn = app.add_subcommand("horn", "list the horns of an atom");
  horn->add_option("--shape", ha.shape, "expression or JSON file")->required();
  horn->add_option("--x", ha.x, "only the horn at this face");
  horn->add_flag("--marked", ha.marked, "add the minimal markings and their target markings");
  horn->add_flag("--molecular", ha.molecular, "horns of rewritable submolecules instead of faces");

  CylArgs ca;
  auto* cyl = app.add_subcommand("cylinder", "partial, inverted and higher invertor cylinders");
  cyl->add_option("--shape", ca.shape, "expression or JSON file")->required();
  cyl->add_option("--variant", ca.variant, "plain, left or right")
      ->check(CLI::IsMember({"plain", "left", "right"}));
  cyl->add_option("--K", ca.K, "none, in, out, all or a comma-separated id list (closed up)");
  cyl->add_option("--invertor", ca.invertor, "word over {L,R}; overrides --variant and --K");
  cyl->add_option("--export", ca.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  AnodyneArgs aa;
  auto* an = app.add_subcommand("anodyne", "enumerate a generating family of anodyne maps");
  an->add_option("--family", aa.family, "Jhorn, Jn, Jinv, Jloc, Jcomp, Jn-unmarked, Jat or M")->required();
  an->add_option("--n", aa.n, "n for the Jn families")->check(CLI::NonNegativeNumber);
  an->add_option("--depth", aa.depth, "truncation depth for localisations")->check(CLI::NonNegativeNumber);
  an->add_option("--shape", aa.shape, "restrict to one shape");
  an->add_option("--limit", aa.limit, "stop after this many items");
  an->add_flag("--summary", aa.summary, "counts only");

  LocArgs la;
  auto* loc = app.add_subcommand("loc", "localise a shape's presentation");
  loc->add_option("--shape", la.shape, "expression or JSON file")->required();
  loc->add_option("--depth", la.depth, "number of stages")->check(CLI::NonNegativeNumber);
  loc->add_option("--marked", la.marked, "full (the greatest element), all, none, or generator ids");
  loc->add_flag("--summary", la.summary, "omit the presentation");

  WitnessArgs wa;
  auto* wit = app.add_subcommand("witness", "check an equivalence witness, or generate one");
  wit->add_option("--pres", wa.pres, "presentation JSON");
  wit->add_option("--witness", wa.witness, "witness JSON");
  wit->add_option("--assume", wa.assume, "generator ids accepted as assumed leaves");
  wit->add_flag("--assume-marked", wa.assume_marked, "assume the presentation's marked generators");
  wit->add_option("--shape", wa.shape, "generate the witness for the walking equivalence on this atom");
  wit->add_option("--depth", wa.depth, "localisation depth when generating")->check(CLI::NonNegativeNumber);
  wit->add_option("--levels", wa.levels, "unfolding depth of the generated witness");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> suites = verify_suites();
  suites.push_back("all");
  ver->add_option("--suite", va.suite, "suite name or all")->check(CLI::IsMember(suites));
  ver->add_option("--samples", va.samples, "sample count for sampled suites")->check(CLI::NonNegativeNumber);

  ExportArgs ea;
  auto* ex = app.add_subcommand("export", "export a shape or the corpus");
  ex->add_option("--shape", ea.shape, "expression or JSON file");
  ex->add_option("--format", ea.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  ex->add_flag("--corpus", ea.corpus, "the corpus for --seed, --max-dim and --max-size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    bool ok = true;
    if (*shape) run_shape(g, sa);
    else if (*horn) run_horn(g, ha);
    else if (*cyl) run_cylinder(g, ca);
    else if (*an) run_anodyne(g, aa);
    else if (*loc) run_loc(g, la);
    else if (*wit) ok = run_witness(g, wa);
    else if (*ver) ok = run_verify(g, va);
    else if (*ex) run_export(g, ea);
    return ok ? 0 : 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << json{{"error", {{"kind", error_kind_name(e.kind())}, {"message", e.what()}}}}.dump() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", {{"kind", "Internal"}, {"message", e.what()}}}}.dump() << '\n';
    return 1;
  }
}
