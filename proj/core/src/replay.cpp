#include <string>

#include "odot/cylinder.hpp"
#include "odot/molecule.hpp"

namespace odot {

Molecule replay(const Cert& c) {
  auto child = [&](std::size_t i) {
    if (i >= c.children.size()) throw Error(ErrorKind::ParseError, "certificate node is missing a child");
    return replay(*c.children[i]);
  };
  switch (c.kind) {
    case CertKind::Point: return point();
    case CertKind::Atom: return atom(child(0), child(1));
    case CertKind::Paste: return paste(child(0), child(1), c.k);
    case CertKind::PasteSub: return paste_sub(child(0), child(1), c.k, c.ints).result;
    case CertKind::PasteSubCo: return paste_sub_co(child(0), child(1), c.k, c.ints).result;
    case CertKind::GrayProd: return gray(child(0), child(1));
    case CertKind::Dual: return dual(child(0), c.ints);
    case CertKind::Import: break;
  }
  const std::string& n = c.name;
  if (n == "simplex" && c.ints.size() == 1) return simplex(c.ints[0]);
  if (n == "boundary" && c.ints.size() == 2)
    return boundary_of(child(0), c.ints[0], static_cast<Sign>(c.ints[1])).mol;
  if (n == "closure" && c.ints.size() == 1) return atom_closure(child(0), c.ints[0]).mol;
  if (n == "sub") return submolecule(child(0), c.ints).mol;
  if (n == "pgcyl") return partial_gray_cylinder(child(0), c.ints).shape;
  if (n == "invl") return inverted_left(child(0), c.ints).shape;
  if (n == "invr") return inverted_right(child(0), c.ints).shape;
  throw Error(ErrorKind::ParseError, "unknown certificate import '" + n + "'");
}

bool replays_exactly(const Molecule& U) {
  Molecule r = replay(U.cert());
  return r.poset() == U.poset() || same_shape(r, U);
}

}  // namespace odot
