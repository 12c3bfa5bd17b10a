#include <algorithm>
#include <functional>
#include <map>

#include "latcon/core.hpp"

namespace latcon {

  namespace {
    struct Profile {
      std::size_t rank;
      std::size_t corank;
      std::size_t nup;
      std::size_t ndown;
      std::size_t below;
      std::size_t above;

      friend auto operator<=>(Profile const&, Profile const&) = default;
    };

    std::vector<Profile> profiles(FiniteLattice const& L) {
      std::size_t const        n = L.size();
      std::vector<std::size_t> rank(n, 0), corank(n, 0);
      auto const&              topo = L.poset().linear_extension();
      for (Element x : topo) {
        for (Element y : L.upper_covers(x)) {
          rank[y] = std::max(rank[y], rank[x] + 1);
        }
      }
      for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        for (Element y : L.lower_covers(*it)) {
          corank[y] = std::max(corank[y], corank[*it] + 1);
        }
      }
      std::vector<Profile> result(n);
      for (Element x = 0; x < n; ++x) {
        std::size_t below = 0, above = 0;
        for (Element y = 0; y < n; ++y) {
          below += L.leq(y, x);
          above += L.leq(x, y);
        }
        result[x] = {rank[x],
                     corank[x],
                     L.upper_covers(x).size(),
                     L.lower_covers(x).size(),
                     below,
                     above};
      }
      return result;
    }
  }  // namespace

  std::vector<std::uint64_t> invariant_signature(FiniteLattice const& L) {
    auto ps = profiles(L);
    std::sort(ps.begin(), ps.end());
    std::vector<std::uint64_t> sig{L.size(), L.poset().number_of_covers()};
    for (auto const& p : ps) {
      sig.insert(sig.end(), {p.rank, p.corank, p.nup, p.ndown, p.below, p.above});
    }
    return sig;
  }

  std::optional<std::vector<Element>> find_isomorphism(FiniteLattice const& A,
                                                       FiniteLattice const& B) {
    if (A.size() != B.size()
        || A.poset().number_of_covers() != B.poset().number_of_covers()) {
      return std::nullopt;
    }
    auto pa = profiles(A);
    auto pb = profiles(B);
    {
      auto sa = pa, sb = pb;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) {
        return std::nullopt;
      }
    }
    std::size_t const n = A.size();
    // Map A's elements in linear-extension order; an element's lower covers
    // are then already mapped, which constrains the candidates sharply.
    auto const&                         order = A.poset().linear_extension();
    std::vector<Element>                image(n, 0);
    std::vector<std::uint8_t>           used(n, 0), mapped(n, 0);
    std::map<Profile, std::vector<Element>> by_profile;
    for (Element b = 0; b < n; ++b) {
      by_profile[pb[b]].push_back(b);
    }

    auto consistent = [&](Element a, Element b) {
      // Lower covers of a must map exactly onto the lower covers of b.
      auto const& la = A.lower_covers(a);
      auto const& lb = B.lower_covers(b);
      if (la.size() != lb.size()) {
        return false;
      }
      for (Element x : la) {
        if (std::find(lb.begin(), lb.end(), image[x]) == lb.end()) {
          return false;
        }
      }
      // Order with every mapped element must agree.
      for (Element x = 0; x < n; ++x) {
        if (mapped[x]
            && (A.leq(x, a) != B.leq(image[x], b)
                || A.leq(a, x) != B.leq(b, image[x]))) {
          return false;
        }
      }
      return true;
    };

    std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
      if (i == n) {
        return true;
      }
      Element a = order[i];
      for (Element b : by_profile[pa[a]]) {
        if (used[b] || !consistent(a, b)) {
          continue;
        }
        image[a]  = b;
        used[b]   = 1;
        mapped[a] = 1;
        if (extend(i + 1)) {
          return true;
        }
        used[b]   = 0;
        mapped[a] = 0;
      }
      return false;
    };
    if (extend(0)) {
      return image;
    }
    return std::nullopt;
  }

}  // namespace latcon
