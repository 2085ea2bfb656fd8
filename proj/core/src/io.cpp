#include "odot/io.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace odot {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get_as(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    parse_error(std::string(what) + ": " + e.what());
  }
}

Subset subset_from(const json& j, const char* what) {
  auto s = get_as<std::vector<int>>(j, what);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::optional<CertKind> cert_kind_from(const std::string& s) {
  for (auto k : {CertKind::Point, CertKind::Atom, CertKind::Paste, CertKind::PasteSub, CertKind::PasteSubCo,
                 CertKind::GrayProd, CertKind::Dual, CertKind::Import})
    if (s == cert_kind_name(k)) return k;
  return std::nullopt;
}

json labels_to_json(const std::vector<Label>& ls) {
  json a = json::array();
  for (const auto& l : ls) a.push_back({{"gen", l.gen}, {"f", l.f}});
  return a;
}

std::vector<Label> labels_from_json(const json& j) {
  if (!j.is_array()) parse_error("labels must be an array");
  std::vector<Label> r;
  for (const auto& e : j) r.push_back({get_as<int>(field(e, "gen"), "gen"), get_as<std::vector<int>>(field(e, "f"), "f")});
  return r;
}

}  // namespace

json poset_to_json(const OgPoset& P) {
  json els = json::array();
  for (int x = 0; x < P.size(); ++x)
    els.push_back({{"id", x}, {"dim", P.dim(x)}, {"input", P.faces(x, Sign::Minus)}, {"output", P.faces(x, Sign::Plus)}});
  return {{"elements", els}};
}

OgPoset poset_from_json(const json& j) {
  const json& els = field(j, "elements");
  if (!els.is_array()) parse_error("'elements' must be an array");
  std::vector<RawElement> raw;
  for (const auto& e : els) {
    RawElement r;
    r.id = get_as<std::int64_t>(field(e, "id"), "id");
    r.dim = get_as<int>(field(e, "dim"), "dim");
    r.input = get_as<std::vector<std::int64_t>>(field(e, "input"), "input");
    r.output = get_as<std::vector<std::int64_t>>(field(e, "output"), "output");
    raw.push_back(std::move(r));
  }
  return OgPoset::build(raw);
}

json cert_to_json(const Cert& root) {
  json nodes = json::array();
  std::map<const Cert*, int> index;
  // Post-order so children always precede their parent.
  std::function<int(const Cert&)> visit = [&](const Cert& c) -> int {
    if (auto it = index.find(&c); it != index.end()) return it->second;
    std::vector<int> kids;
    for (const auto& ch : c.children) kids.push_back(visit(*ch));
    json n = {{"tag", cert_kind_name(c.kind)}};
    if (!kids.empty()) n["children"] = kids;
    if (c.k != 0) n["k"] = c.k;
    if (!c.ints.empty()) n["ints"] = c.ints;
    if (!c.name.empty()) n["name"] = c.name;
    nodes.push_back(std::move(n));
    return index[&c] = static_cast<int>(nodes.size()) - 1;
  };
  const int r = visit(root);
  return {{"nodes", nodes}, {"root", r}};
}

CertRef cert_from_json(const json& j) {
  const json& nodes = field(j, "nodes");
  if (!nodes.is_array()) parse_error("certificate nodes must be an array");
  std::vector<CertRef> built;
  for (const auto& n : nodes) {
    auto c = std::make_shared<Cert>();
    auto kind = cert_kind_from(get_as<std::string>(field(n, "tag"), "tag"));
    if (!kind) parse_error("unknown certificate tag");
    c->kind = *kind;
    c->k = n.value("k", 0);
    if (n.contains("ints")) c->ints = get_as<std::vector<int>>(n["ints"], "ints");
    c->name = n.value("name", std::string());
    if (n.contains("children"))
      for (int i : get_as<std::vector<int>>(n["children"], "children")) {
        if (i < 0 || i >= static_cast<int>(built.size())) parse_error("certificate child index out of order");
        c->children.push_back(built[i]);
      }
    built.push_back(std::move(c));
  }
  const int r = get_as<int>(field(j, "root"), "root");
  if (r < 0 || r >= static_cast<int>(built.size())) parse_error("certificate root out of range");
  return built[r];
}

json molecule_to_json(const Molecule& U) {
  json j = poset_to_json(U.poset());
  j["cert"] = cert_to_json(U.cert());
  return j;
}

Molecule molecule_from_json(const json& j) {
  auto P = share(poset_from_json(j));
  if (!j.contains("cert")) parse_error("a molecule needs its construction certificate");
  CertRef cert = cert_from_json(j["cert"]);
  Molecule r = replay(*cert);
  if (r.poset() == *P) return Molecule::certified(r.poset_ref(), cert);
  if (!are_isomorphic(r.poset_ref(), P)) parse_error("certificate does not describe the given elements");
  return Molecule::certified(P, cert);
}

json marked_to_json(const MarkedPoset& X) {
  json j = poset_to_json(*X.poset);
  j["marked"] = X.marked;
  return j;
}

MarkedPoset marked_from_json(const json& j) {
  MarkedPoset X{share(poset_from_json(j)), j.contains("marked") ? subset_from(j["marked"], "marked") : Subset{}};
  check_marking(X);
  return X;
}

json mono_to_json(const MarkedMono& m) {
  return {{"source", marked_to_json(m.source)},
          {"target", marked_to_json(m.target)},
          {"assignment", m.map.f},
          {"kind", mono_kind_name(m.kind)}};
}

MarkedMono mono_from_json(const json& j) {
  auto src = marked_from_json(field(j, "source"));
  auto tgt = marked_from_json(field(j, "target"));
  auto f = get_as<std::vector<int>>(field(j, "assignment"), "assignment");
  if (static_cast<int>(f.size()) != src.poset->size()) parse_error("assignment size mismatch");
  for (int y : f)
    if (y < 0 || y >= tgt.poset->size()) parse_error("assignment out of range");
  auto map = classify_map(src.poset, tgt.poset, std::move(f));
  auto m = make_marked_mono(std::move(src), std::move(tgt), std::move(map));
  if (j.contains("kind") && j["kind"] != mono_kind_name(m.kind)) parse_error("recorded kind disagrees with the data");
  return m;
}

json cylinder_to_json(const CylinderResult& c) {
  return {{"shape", molecule_to_json(c.shape)}, {"projection", c.projection.f}, {"collapsed", c.collapsed}};
}

json diagram_to_json(const Diagram& d) {
  return {{"shape", molecule_to_json(d.shape)}, {"labels", labels_to_json(d.labels)}};
}

Diagram diagram_from_json(const Presentation& X, const json& j) {
  Diagram d{molecule_from_json(field(j, "shape")), labels_from_json(field(j, "labels"))};
  for (const auto& l : d.labels)
    if (l.gen < 0 || l.gen >= X.size()) parse_error("label refers to an unknown generator");
  check_diagram(X, d);
  return d;
}

json presentation_to_json(const Presentation& X, const Subset& marked) {
  json gens = json::array();
  for (int g = 0; g < X.size(); ++g) {
    const auto& G = X.gen(g);
    gens.push_back({{"name", G.name},
                    {"dim", G.dim()},
                    {"shape", molecule_to_json(G.shape)},
                    {"labels", labels_to_json(G.labels)},
                    {"marked", std::binary_search(marked.begin(), marked.end(), g)}});
  }
  return {{"generators", gens}};
}

MarkedPres presentation_from_json(const json& j) {
  const json& gens = field(j, "generators");
  if (!gens.is_array()) parse_error("'generators' must be an array");
  auto X = std::make_shared<Presentation>();
  Subset marked;
  for (const auto& e : gens) {
    Generator G{get_as<std::string>(field(e, "name"), "name"), molecule_from_json(field(e, "shape")),
                labels_from_json(field(e, "labels"))};
    if (e.contains("dim") && e["dim"] != G.dim()) parse_error("generator " + G.name + " has the wrong dim");
    for (const auto& l : G.labels)
      if (l.gen < 0 || l.gen > X->size()) parse_error("label refers to a later generator");
    const int id = X->add_raw(std::move(G));
    if (e.value("marked", false)) marked.push_back(id);
  }
  return {X, marked};
}

json pres_mono_to_json(const PresMono& m) {
  return {{"target", presentation_to_json(*m.target.pres, m.target.marked)},
          {"domain", m.domain},
          {"domain_marked", m.domain_marked}};
}

json witness_to_json(const EquivWitness& w) {
  json j = {{"leaf", leaf_kind_name(w.leaf)}, {"subject", diagram_to_json(w.subject)}};
  if (w.leaf == LeafKind::Recurse) {
    j["left_inv"] = diagram_to_json(w.left_inv);
    j["right_inv"] = diagram_to_json(w.right_inv);
    if (w.z) j["z"] = witness_to_json(*w.z);
    if (w.h) j["h"] = witness_to_json(*w.h);
  }
  return j;
}

WitnessRef witness_from_json(const Presentation& X, const json& j) {
  const auto leaf = get_as<std::string>(field(j, "leaf"), "leaf");
  Diagram subject = diagram_from_json(X, field(j, "subject"));
  if (leaf == leaf_kind_name(LeafKind::Degenerate)) return degenerate_leaf(std::move(subject));
  if (leaf == leaf_kind_name(LeafKind::Assumed)) return assumed_leaf(std::move(subject));
  if (leaf != leaf_kind_name(LeafKind::Recurse)) parse_error("unknown leaf kind '" + leaf + "'");
  return recurse_node(std::move(subject), diagram_from_json(X, field(j, "left_inv")),
                      diagram_from_json(X, field(j, "right_inv")), witness_from_json(X, field(j, "z")),
                      witness_from_json(X, field(j, "h")));
}

json anodyne_item_to_json(const AnodyneItem& it) {
  json j = {{"family", anodyne_tag_name(it.tag)}, {"label", it.label}, {"truncated", it.truncated}};
  if (it.truncated) j["depth"] = it.depth;
  if (const auto* m = std::get_if<MarkedMono>(&it.mono))
    j["mono"] = mono_to_json(*m);
  else
    j["mono"] = pres_mono_to_json(std::get<PresMono>(it.mono));
  return j;
}

std::string poset_to_dot(const OgPoset& P, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (int x = 0; x < P.size(); ++x) os << "  n" << x << " [label=\"" << x << ':' << P.dim(x) << "\"];\n";
  for (int x = 0; x < P.size(); ++x)
    for (Sign a : {Sign::Minus, Sign::Plus})
      for (int y : P.faces(x, a)) os << "  n" << x << " -> n" << y << " [side=\"" << sign_char(a) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace odot
