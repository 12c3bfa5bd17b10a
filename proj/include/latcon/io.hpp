#pragma once

// JSON forms of lattices, congruences, homomorphisms and reports.
//
//   lattice      {"size", "covers": [[lower, upper], ...],
//                 "upper_order": [[...], ...], "lower_order": [[...], ...]}
//   rectangular  lattice fields + {"lc", "rc", "eyes"}
//   congruence   {"lattice": lattice, "blocks": [[...], ...]}
//   hom          {"source": lattice, "target": lattice, "map": [...]}
//   report       {"summary", "checks": [{"name", "passed", "witness"}]}
//
// The order lists are optional on input; without them the planar order is
// the order of "covers".

#include <string>

#include <json.hpp>

#include "latcon/birkhoff.hpp"
#include "latcon/congruence.hpp"
#include "latcon/construction.hpp"
#include "latcon/rectangular.hpp"
#include "latcon/verify.hpp"

namespace latcon {

  using json = nlohmann::ordered_json;

  json          to_json(FiniteLattice const& L);
  json          to_json(RectLattice const& R);
  json          to_json(FiniteLattice const& L, Congruence const& alpha);
  json          to_json(BoundedHom const& phi);
  json          to_json(VerificationReport const& r);
  json          to_json(ConstructionReport const& r);
  json          to_json(Cell const& c);
  json          con_to_json(FiniteLattice const& L, ConLattice const& con);

  // All parsers throw ParseError for malformed documents; lattice and hom
  // validation errors propagate with their own kinds.
  FiniteLattice lattice_from_json(json const& j);
  RectLattice   rect_from_json(json const& j);
  Congruence    congruence_from_json(json const& j, std::size_t size);
  // Source and target default to the given lattices when absent.
  BoundedHom    hom_from_json(json const&          j,
                              FiniteLattice const& source,
                              FiniteLattice const& target);

  json          read_json_file(std::string const& path);
  void          write_text_file(std::string const& path, std::string const& text);
  std::string   dump(json const& j);

}  // namespace latcon
