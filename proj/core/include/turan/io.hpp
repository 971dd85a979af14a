#pragma once

#include <iosfwd>
#include <string>

#include "turan/hypergraph.hpp"

namespace turan {

struct Coloring;  // defined in ramsey.hpp

// Text format, bit exact:
//   h3 <n> <m>
//   <a> <b> <c>        (m lines, 0-indexed ascending, ascending colex rank)
std::string write_h3(const Hypergraph3& h);
Hypergraph3 parse_h3(std::istream& in);
Hypergraph3 parse_h3(const std::string& text);
Hypergraph3 load_h3_file(const std::string& path);

// Coloring format:
//   col <n> <r>
//   <a> <b> <c> <color>   (C(n,3) lines in colex order)
std::string write_coloring(const Coloring& c);
Coloring parse_coloring(std::istream& in);
Coloring parse_coloring(const std::string& text);

}  // namespace turan
