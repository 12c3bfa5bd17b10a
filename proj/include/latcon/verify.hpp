#pragma once

// Checks for the representation constructions and the lemma suite.
// Uses only public lattice and congruence queries.

#include <string>
#include <vector>

#include "latcon/birkhoff.hpp"
#include "latcon/catalog.hpp"
#include "latcon/congruence.hpp"

namespace latcon {

  struct Check {
    std::string name;
    bool        passed;
    std::string witness;  // empty when passed, or a note
  };

  struct VerificationReport {
    std::vector<Check> checks;

    [[nodiscard]] bool summary() const;
    void add(std::string name, bool passed, std::string witness = {});
  };

  // Text rendering, one line per check.
  std::string to_text(VerificationReport const& r);

  // f_in_l / g_in_l map F and G into L. phi runs from
  // congruence_lattice(F).lattice() to congruence_lattice(G).lattice().
  // Throws EmbeddingInvalid if an embedding is not an isomorphism onto a
  // convex sublattice.
  VerificationReport verify_filter_representation(FiniteLattice const&        L,
                                                  FiniteLattice const&        F,
                                                  std::vector<Element> const& f_in_l,
                                                  FiniteLattice const&        G,
                                                  std::vector<Element> const& g_in_l,
                                                  BoundedHom const&           phi);

  VerificationReport verify_ideal_representation(FiniteLattice const&        L,
                                                 FiniteLattice const&        F,
                                                 std::vector<Element> const& f_in_l,
                                                 FiniteLattice const&        G,
                                                 std::vector<Element> const& g_in_l,
                                                 BoundedHom const&           phi);

  struct LemmaSuiteOptions {
    std::size_t max_meet_ideal = 7;   // meet lemma: ideals up to this size
    std::size_t max_assembly   = 30;  // exhaustive congruence checks
  };

  // One check per lemma, universally quantified over the catalog. Entries
  // that are not rectangular are skipped for the lemmas that need it and
  // reported in the witness column.
  VerificationReport lemma_suite(std::vector<CatalogEntry> const& catalog,
                                 LemmaSuiteOptions                opts = {});

}  // namespace latcon
