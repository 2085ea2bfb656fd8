#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "odot/anodyne.hpp"
#include "odot/cylinder.hpp"
#include "odot/witness.hpp"

namespace odot {

using json = nlohmann::json;

// {"elements":[{"id","dim","input","output"}...]}, dense ids, sorted faces.
json poset_to_json(const OgPoset& P);
// Accepts arbitrary distinct ids and renumbers densely. ParseError on
// malformed input; structural errors as raised by OgPoset::build.
OgPoset poset_from_json(const json& j);

// Flat certificate: {"nodes":[{"tag",...,"children":[<index>...]}], "root"}.
// Shared subtrees are stored once.
json cert_to_json(const Cert& c);
CertRef cert_from_json(const json& j);

// Shape JSON plus "cert". Import replays the certificate and requires it to
// agree with the elements up to isomorphism.
json molecule_to_json(const Molecule& U);
Molecule molecule_from_json(const json& j);

json marked_to_json(const MarkedPoset& X);
MarkedPoset marked_from_json(const json& j);

json mono_to_json(const MarkedMono& m);
MarkedMono mono_from_json(const json& j);

json cylinder_to_json(const CylinderResult& c);

json diagram_to_json(const Diagram& d);
// Re-validated with check_diagram against X.
Diagram diagram_from_json(const Presentation& X, const json& j);

json presentation_to_json(const Presentation& X, const Subset& marked = {});
MarkedPres presentation_from_json(const json& j);

json pres_mono_to_json(const PresMono& m);

json witness_to_json(const EquivWitness& w);
WitnessRef witness_from_json(const Presentation& X, const json& j);

json anodyne_item_to_json(const AnodyneItem& it);

// One node per element labelled id:dim, an edge to each face with
// side="-" or side="+".
std::string poset_to_dot(const OgPoset& P, const std::string& name = "odot");

}  // namespace odot
