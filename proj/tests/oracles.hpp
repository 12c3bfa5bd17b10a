#pragma once

// Brute-force references used only by the tests. They share no code with the
// library beyond lattice construction and meet/join lookup.

#include <functional>
#include <vector>

#include "latcon/core.hpp"

namespace oracle {

  using latcon::Element;
  using latcon::FiniteLattice;

  // All partitions of 0..n-1 compatible with meet and join, as canonical
  // label vectors (label = least member of the block). Restricted-growth
  // enumeration; a partial assignment is pruned as soon as two assigned
  // pairs violate compatibility.
  inline std::vector<std::vector<Element>> congruences(FiniteLattice const& L) {
    std::size_t const                 n = L.size();
    std::vector<std::vector<Element>> found;
    std::vector<Element>              block(n, 0);  // block numbers
    std::vector<Element>              least;        // least member per block

    auto compatible_upto = [&](std::size_t k) {
      // Check all quadruples whose elements are < k and whose meets/joins
      // are also < k.
      for (Element a = 0; a < k; ++a) {
        for (Element b = 0; b < k; ++b) {
          if (block[a] != block[b]) {
            continue;
          }
          for (Element c = 0; c < k; ++c) {
            Element m1 = L.meet(a, c), m2 = L.meet(b, c);
            Element j1 = L.join(a, c), j2 = L.join(b, c);
            if (m1 < k && m2 < k && block[m1] != block[m2]) {
              return false;
            }
            if (j1 < k && j2 < k && block[j1] != block[j2]) {
              return false;
            }
          }
        }
      }
      return true;
    };

    std::function<void(std::size_t, Element)> extend = [&](std::size_t i,
                                                           Element     nblocks) {
      if (i == n) {
        std::vector<Element> labels(n);
        for (std::size_t x = 0; x < n; ++x) {
          labels[x] = least[block[x]];
        }
        found.push_back(std::move(labels));
        return;
      }
      for (Element b = 0; b <= nblocks; ++b) {
        block[i] = b;
        if (b == nblocks) {
          least.push_back(static_cast<Element>(i));
        }
        if (compatible_upto(i + 1)) {
          extend(i + 1, b == nblocks ? nblocks + 1 : nblocks);
        }
        if (b == nblocks) {
          least.pop_back();
        }
      }
    };
    if (n > 0) {
      extend(0, 0);
    }
    return found;
  }

  // Maps D -> E preserving 0, 1, meet and join, by filtering all |E|^|D|
  // functions (pruned on partial assignments).
  inline std::vector<std::vector<Element>> bounded_homs(FiniteLattice const& D,
                                                        FiniteLattice const& E) {
    std::size_t const                 n = D.size();
    std::vector<std::vector<Element>> found;
    std::vector<Element>              f(n, 0);
    std::function<void(Element)>      extend = [&](Element i) {
      if (i == n) {
        found.push_back(f);
        return;
      }
      for (Element v = 0; v < E.size(); ++v) {
        if (i == D.bottom() && v != E.bottom()) {
          continue;
        }
        if (i == D.top() && v != E.top()) {
          continue;
        }
        f[i]    = v;
        bool ok = true;
        for (Element a = 0; a <= i && ok; ++a) {
          for (Element b = 0; b <= i && ok; ++b) {
            Element m = D.meet(a, b), j = D.join(a, b);
            if (m <= i && f[m] != E.meet(f[a], f[b])) {
              ok = false;
            }
            if (j <= i && f[j] != E.join(f[a], f[b])) {
              ok = false;
            }
          }
        }
        if (ok) {
          extend(i + 1);
        }
      }
    };
    extend(0);
    return found;
  }

  // Number of order-preserving maps P -> Q, by brute force over all maps.
  inline std::size_t isotone_count(latcon::Poset const& P, latcon::Poset const& Q) {
    std::size_t          count = 0;
    std::vector<Element> f(P.size(), 0);
    std::function<void(Element)> extend = [&](Element i) {
      if (i == P.size()) {
        for (Element a = 0; a < P.size(); ++a) {
          for (Element b = 0; b < P.size(); ++b) {
            if (P.leq(a, b) && !Q.leq(f[a], f[b])) {
              return;
            }
          }
        }
        ++count;
        return;
      }
      for (Element v = 0; v < Q.size(); ++v) {
        f[i] = v;
        extend(i + 1);
      }
    };
    extend(0);
    return count;
  }

}  // namespace oracle
