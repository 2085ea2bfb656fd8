#pragma once

#include <string>

#include "odot/molecule.hpp"

namespace odot::cli {

// Shape expressions:
//   point | arrow | globe(n) | simplex(n) | cube(n)
//   atom(U,V) | merger(U) | paste(U,V[,k]) | gray(U,V) | dual(U,d...)
//   bd(U,k,+|-) | cyl(U) | lcyl(U) | rcyl(U) | invertor(U,word)
// `lcyl` and `rcyl` are relative to the output and input boundary. ParseError
// on bad syntax; construction errors pass through.
Molecule parse_shape(const std::string& expr);

// A path to an exported shape JSON if the file exists, else an expression.
Molecule load_shape(const std::string& arg);

}  // namespace odot::cli
