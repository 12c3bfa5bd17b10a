#include "latcon/core.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

namespace latcon {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::not_a_lattice: return "NotALattice";
      case ErrorKind::not_reduced: return "NotReduced";
      case ErrorKind::cyclic: return "Cyclic";
      case ErrorKind::element_out_of_range: return "ElementOutOfRange";
      case ErrorKind::zero_size: return "ZeroSize";
      case ErrorKind::empty_set: return "EmptySet";
      case ErrorKind::not_a_partition: return "NotAPartition";
      case ErrorKind::not_an_ideal: return "NotAnIdeal";
      case ErrorKind::not_a_filter: return "NotAFilter";
      case ErrorKind::not_convex_sublattice: return "NotConvexSublattice";
      case ErrorKind::not_isomorphic: return "NotIsomorphic";
      case ErrorKind::incompatible: return "Incompatible";
      case ErrorKind::not_distributive: return "NotDistributive";
      case ErrorKind::not_bounded: return "NotBounded";
      case ErrorKind::not_homomorphic: return "NotHomomorphic";
      case ErrorKind::not_isotone: return "NotIsotone";
      case ErrorKind::not_semimodular: return "NotSemimodular";
      case ErrorKind::no_corner: return "NoCorner";
      case ErrorKind::ambiguous_corner: return "AmbiguousCorner";
      case ErrorKind::corners_not_complementary:
        return "CornersNotComplementary";
      case ErrorKind::boundary_not_chain: return "BoundaryNotChain";
      case ErrorKind::not_a_cell: return "NotACell";
      case ErrorKind::size_too_small: return "SizeTooSmall";
      case ErrorKind::boundary_mismatch: return "BoundaryMismatch";
      case ErrorKind::index_out_of_range: return "IndexOutOfRange";
      case ErrorKind::flap_not_plain_grid: return "FlapNotPlainGrid";
      case ErrorKind::color_missing_on_lower_boundary:
        return "ColorMissingOnLowerBoundary";
      case ErrorKind::condition_i_fails: return "ConditionIFails";
      case ErrorKind::embedding_invalid: return "EmbeddingInvalid";
      case ErrorKind::postcondition_failed: return "PostconditionFailed";
      case ErrorKind::too_large: return "TooLarge";
      case ErrorKind::parse_error: return "ParseError";
    }
    return "Unknown";
  }

  ElementSet to_set(std::vector<Element> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Poset
  ////////////////////////////////////////////////////////////////////////////

  Poset::Poset(std::size_t size, std::vector<Cover> const& covers)
      : _upper(size), _lower(size) {
    for (auto const& c : covers) {
      if (c.lower >= size || c.upper >= size) {
        throw Error(ErrorKind::element_out_of_range,
                    "cover (" + std::to_string(c.lower) + ", "
                        + std::to_string(c.upper) + ") in a poset of size "
                        + std::to_string(size));
      }
      _upper[c.lower].push_back(c.upper);
      _lower[c.upper].push_back(c.lower);
    }
    init();
  }

  Poset::Poset(CoverLists upper, CoverLists lower)
      : _upper(std::move(upper)), _lower(std::move(lower)) {
    std::size_t const n = _upper.size();
    for (std::size_t x = 0; x < n; ++x) {
      for (Element y : _upper[x]) {
        if (y >= n) {
          throw Error(ErrorKind::element_out_of_range,
                      "upper cover " + std::to_string(y) + " of "
                          + std::to_string(x));
        }
      }
    }
    if (_lower.empty() && n != 0) {
      _lower.resize(n);
      for (std::size_t x = 0; x < n; ++x) {
        for (Element y : _upper[x]) {
          _lower[y].push_back(static_cast<Element>(x));
        }
      }
    } else {
      if (_lower.size() != n) {
        throw Error(ErrorKind::not_a_partition,
                    "lower cover lists do not match the element count");
      }
      CoverLists derived(n);
      for (std::size_t x = 0; x < n; ++x) {
        for (Element y : _upper[x]) {
          derived[y].push_back(static_cast<Element>(x));
        }
      }
      for (std::size_t y = 0; y < n; ++y) {
        auto a = derived[y];
        auto b = _lower[y];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
          throw Error(ErrorKind::not_reduced,
                      "lower cover list of " + std::to_string(y)
                          + " disagrees with the upper cover lists");
        }
      }
    }
    init();
  }

  void Poset::init() {
    std::size_t const n = size();
    _ncovers            = 0;
    for (std::size_t x = 0; x < n; ++x) {
      auto sorted = _upper[x];
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorKind::not_reduced,
                    "repeated cover above " + std::to_string(x));
      }
      if (std::binary_search(sorted.begin(), sorted.end(), Element(x))) {
        throw Error(ErrorKind::cyclic,
                    "element " + std::to_string(x) + " covers itself");
      }
      _ncovers += sorted.size();
    }

    // Kahn's algorithm, smallest id first.
    std::vector<std::size_t> indeg(n);
    for (std::size_t x = 0; x < n; ++x) {
      indeg[x] = _lower[x].size();
    }
    std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
    for (std::size_t x = 0; x < n; ++x) {
      if (indeg[x] == 0) {
        ready.push(static_cast<Element>(x));
      }
    }
    _topo.clear();
    _topo.reserve(n);
    while (!ready.empty()) {
      Element x = ready.top();
      ready.pop();
      _topo.push_back(x);
      for (Element y : _upper[x]) {
        if (--indeg[y] == 0) {
          ready.push(y);
        }
      }
    }
    if (_topo.size() != n) {
      throw Error(ErrorKind::cyclic, "the cover relation contains a cycle");
    }

    _leq.assign(n * n, 0);
    for (auto it = _topo.rbegin(); it != _topo.rend(); ++it) {
      Element x     = *it;
      _leq[x * n + x] = 1;
      for (Element y : _upper[x]) {
        for (std::size_t z = 0; z < n; ++z) {
          if (_leq[y * n + z]) {
            _leq[x * n + z] = 1;
          }
        }
      }
    }

    for (std::size_t x = 0; x < n; ++x) {
      for (Element y : _upper[x]) {
        for (Element z : _upper[x]) {
          if (z != y && leq(z, y)) {
            throw Error(ErrorKind::not_reduced,
                        "cover (" + std::to_string(x) + ", "
                            + std::to_string(y) + ") is implied via "
                            + std::to_string(z));
          }
        }
      }
    }
  }

  bool Poset::is_cover(Element x, Element y) const {
    auto const& up = _upper[x];
    return std::find(up.begin(), up.end(), y) != up.end();
  }

  std::vector<Cover> Poset::covers() const {
    std::vector<Cover> result;
    result.reserve(_ncovers);
    for (std::size_t x = 0; x < size(); ++x) {
      for (Element y : _upper[x]) {
        result.push_back({static_cast<Element>(x), y});
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////////
  // FiniteLattice
  ////////////////////////////////////////////////////////////////////////////

  FiniteLattice::FiniteLattice(Poset order) : _order(std::move(order)) {
    std::size_t const n = _order.size();
    if (n == 0) {
      throw Error(ErrorKind::not_a_lattice, "the empty poset is not a lattice");
    }
    auto const& topo = _order.linear_extension();
    _meet.assign(n * n, 0);
    _join.assign(n * n, 0);
    for (Element x = 0; x < n; ++x) {
      for (Element y = x; y < n; ++y) {
        // First upper bound in the linear extension is minimal; it is the
        // join iff it lies below every other upper bound.
        std::optional<Element> lub;
        for (Element z : topo) {
          if (_order.leq(x, z) && _order.leq(y, z)) {
            if (!lub) {
              lub = z;
            } else if (!_order.leq(*lub, z)) {
              throw Error(ErrorKind::not_a_lattice,
                          "elements " + std::to_string(x) + " and "
                              + std::to_string(y)
                              + " have no least upper bound");
            }
          }
        }
        std::optional<Element> glb;
        for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
          Element z = *it;
          if (_order.leq(z, x) && _order.leq(z, y)) {
            if (!glb) {
              glb = z;
            } else if (!_order.leq(z, *glb)) {
              throw Error(ErrorKind::not_a_lattice,
                          "elements " + std::to_string(x) + " and "
                              + std::to_string(y)
                              + " have no greatest lower bound");
            }
          }
        }
        if (!lub || !glb) {
          throw Error(ErrorKind::not_a_lattice,
                      "elements " + std::to_string(x) + " and "
                          + std::to_string(y) + " lack a common bound");
        }
        _join[x * n + y] = _join[y * n + x] = *lub;
        _meet[x * n + y] = _meet[y * n + x] = *glb;
      }
    }
    _bottom = topo.front();
    _top    = topo.back();
    for (Element x = 0; x < n; ++x) {
      _bottom = _meet[_bottom * n + x];
      _top    = _join[_top * n + x];
    }
  }

  void FiniteLattice::check(Element x) const {
    if (x >= size()) {
      throw Error(ErrorKind::element_out_of_range,
                  "element " + std::to_string(x) + " in a lattice of size "
                      + std::to_string(size()));
    }
  }

  IsotoneMap make_isotone_map(Poset                source,
                              Poset                target,
                              std::vector<Element> assignment) {
    if (assignment.size() != source.size()) {
      throw Error(ErrorKind::not_isotone,
                  "assignment has " + std::to_string(assignment.size())
                      + " entries for " + std::to_string(source.size())
                      + " source elements");
    }
    for (Element v : assignment) {
      if (v >= target.size()) {
        throw Error(ErrorKind::element_out_of_range,
                    "target element " + std::to_string(v));
      }
    }
    for (auto const& c : source.covers()) {
      if (!target.leq(assignment[c.lower], assignment[c.upper])) {
        throw Error(ErrorKind::not_isotone,
                    std::to_string(c.lower) + " < " + std::to_string(c.upper)
                        + " but the images are not ordered");
      }
    }
    return IsotoneMap{std::move(source), std::move(target), std::move(assignment)};
  }

  std::optional<std::size_t> JiPoset::position(Element x) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), x);
    if (it == elements.end() || *it != x) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - elements.begin());
  }

  ////////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////////

  FiniteLattice make_lattice(std::size_t size, std::vector<Cover> const& covers) {
    if (size == 0) {
      throw Error(ErrorKind::zero_size, "a lattice needs at least one element");
    }
    return FiniteLattice(Poset(size, covers));
  }

  std::pair<Element, Element> meet_join(FiniteLattice const& L,
                                        Element              x,
                                        Element              y) {
    L.check(x);
    L.check(y);
    return {L.meet(x, y), L.join(x, y)};
  }

  FiniteLattice chain(std::size_t n) {
    if (n == 0) {
      throw Error(ErrorKind::zero_size, "chain(0)");
    }
    std::vector<Cover> covers;
    for (Element i = 0; i + 1 < n; ++i) {
      covers.push_back({i, i + 1});
    }
    return FiniteLattice(Poset(n, covers));
  }

  FiniteLattice direct_product(FiniteLattice const& A, FiniteLattice const& B) {
    std::size_t const na = A.size(), nb = B.size();
    auto              id = [nb](Element a, Element b) {
      return static_cast<Element>(a * nb + b);
    };
    CoverLists upper(na * nb), lower(na * nb);
    for (Element a = 0; a < na; ++a) {
      for (Element b = 0; b < nb; ++b) {
        auto& up = upper[id(a, b)];
        for (Element a2 : A.upper_covers(a)) {
          up.push_back(id(a2, b));
        }
        for (Element b2 : B.upper_covers(b)) {
          up.push_back(id(a, b2));
        }
        auto& down = lower[id(a, b)];
        for (Element b2 : B.lower_covers(b)) {
          down.push_back(id(a, b2));
        }
        for (Element a2 : A.lower_covers(a)) {
          down.push_back(id(a2, b));
        }
      }
    }
    return FiniteLattice(Poset(std::move(upper), std::move(lower)));
  }

  FiniteLattice glued_sum(FiniteLattice const& A, FiniteLattice const& B) {
    std::size_t const    na = A.size();
    std::vector<Element> image(B.size());
    Element              next = static_cast<Element>(na);
    for (Element b = 0; b < B.size(); ++b) {
      image[b] = (b == B.bottom()) ? A.top() : next++;
    }
    CoverLists upper(na + B.size() - 1), lower(na + B.size() - 1);
    for (Element a = 0; a < na; ++a) {
      upper[a] = A.upper_covers(a);
      lower[a] = A.lower_covers(a);
    }
    for (Element b = 0; b < B.size(); ++b) {
      for (Element u : B.upper_covers(b)) {
        upper[image[b]].push_back(image[u]);
      }
      for (Element l : B.lower_covers(b)) {
        lower[image[b]].push_back(image[l]);
      }
    }
    return FiniteLattice(Poset(std::move(upper), std::move(lower)));
  }

  FiniteLattice dual(FiniteLattice const& L) {
    return FiniteLattice(
        Poset(L.poset().lower_cover_lists(), L.poset().upper_cover_lists()));
  }

  FiniteLattice sublattice(FiniteLattice const& L, ElementSet const& S) {
    if (S.empty()) {
      throw Error(ErrorKind::empty_set, "sublattice of the empty set");
    }
    std::vector<std::optional<Element>> pos(L.size());
    for (std::size_t i = 0; i < S.size(); ++i) {
      L.check(S[i]);
      pos[S[i]] = static_cast<Element>(i);
    }
    if (!is_sublattice(L, S)) {
      throw Error(ErrorKind::not_convex_sublattice,
                  "the subset is not closed under meet and join");
    }
    // Covers of the induced order: x < y in S with nothing of S strictly
    // between. The planar order follows the first L-cover on a path, which
    // for convex subsets is the cover itself.
    std::size_t const n = S.size();
    CoverLists        upper(n), lower(n);
    auto              induced_cover = [&](Element x, Element y) {
      if (!L.lt(x, y)) {
        return false;
      }
      for (Element z : S) {
        if (z != x && z != y && L.lt(x, z) && L.lt(z, y)) {
          return false;
        }
      }
      return true;
    };
    for (std::size_t i = 0; i < n; ++i) {
      Element x = S[i];
      for (Element y : L.upper_covers(x)) {
        if (pos[y]) {
          upper[i].push_back(*pos[y]);
        }
      }
      for (Element y : L.lower_covers(x)) {
        if (pos[y]) {
          lower[i].push_back(*pos[y]);
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (induced_cover(S[i], S[k]) && !L.is_cover(S[i], S[k])) {
          upper[i].push_back(static_cast<Element>(k));
          lower[k].push_back(static_cast<Element>(i));
        }
      }
    }
    return FiniteLattice(Poset(std::move(upper), std::move(lower)));
  }

  FiniteLattice m3() {
    // 0 < a, e, b < 1 with e the middle atom.
    return FiniteLattice(Poset(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}));
  }

  FiniteLattice n5() {
    // 0 < a < c < 1, 0 < b < 1
    return FiniteLattice(Poset(5, {{0, 1}, {0, 3}, {1, 2}, {2, 4}, {3, 4}}));
  }

  ////////////////////////////////////////////////////////////////////////////
  // Queries
  ////////////////////////////////////////////////////////////////////////////

  bool is_distributive(FiniteLattice const& L) {
    std::size_t const n = L.size();
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element z = 0; z < n; ++z) {
          if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  namespace {
    bool is_modular(FiniteLattice const& L) {
      std::size_t const n = L.size();
      for (Element x = 0; x < n; ++x) {
        for (Element z = 0; z < n; ++z) {
          if (!L.leq(x, z)) {
            continue;
          }
          for (Element y = 0; y < n; ++y) {
            if (L.join(x, L.meet(y, z)) != L.meet(L.join(x, y), z)) {
              return false;
            }
          }
        }
      }
      return true;
    }

    bool is_semimodular_impl(FiniteLattice const& L, bool upper) {
      std::size_t const n = L.size();
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          if (upper) {
            if (L.is_cover(L.meet(a, b), a) && !L.is_cover(b, L.join(a, b))
                && !L.leq(a, b)) {
              return false;
            }
          } else {
            if (L.is_cover(a, L.join(a, b)) && !L.is_cover(L.meet(a, b), b)
                && !L.leq(b, a)) {
              return false;
            }
          }
        }
      }
      return true;
    }
  }  // namespace

  bool is_semimodular(FiniteLattice const& L) {
    return is_semimodular_impl(L, true);
  }

  LatticeReport predicates(FiniteLattice const& L) {
    return LatticeReport{is_distributive(L),
                         is_modular(L),
                         is_semimodular_impl(L, true),
                         is_semimodular_impl(L, false)};
  }

  ElementSet down_set(FiniteLattice const& L, Element a) {
    L.check(a);
    ElementSet result;
    for (Element x = 0; x < L.size(); ++x) {
      if (L.leq(x, a)) {
        result.push_back(x);
      }
    }
    return result;
  }

  ElementSet up_set(FiniteLattice const& L, Element a) {
    L.check(a);
    ElementSet result;
    for (Element x = 0; x < L.size(); ++x) {
      if (L.leq(a, x)) {
        result.push_back(x);
      }
    }
    return result;
  }

  std::pair<ElementSet, ElementSet> ideal_filter(FiniteLattice const& L,
                                                 Element              a) {
    return {down_set(L, a), up_set(L, a)};
  }

  namespace {
    std::vector<std::uint8_t> membership(FiniteLattice const& L,
                                         ElementSet const&    S) {
      std::vector<std::uint8_t> in(L.size(), 0);
      for (Element x : S) {
        L.check(x);
        in[x] = 1;
      }
      return in;
    }
  }  // namespace

  bool is_sublattice(FiniteLattice const& L, ElementSet const& S) {
    auto in = membership(L, S);
    for (Element x : S) {
      for (Element y : S) {
        if (!in[L.meet(x, y)] || !in[L.join(x, y)]) {
          return false;
        }
      }
    }
    return !S.empty();
  }

  bool is_convex_sublattice(FiniteLattice const& L, ElementSet const& S) {
    if (S.empty()) {
      throw Error(ErrorKind::empty_set, "convexity of the empty set");
    }
    if (!is_sublattice(L, S)) {
      return false;
    }
    auto    in = membership(L, S);
    Element lo = S.front(), hi = S.front();
    for (Element x : S) {
      lo = L.meet(lo, x);
      hi = L.join(hi, x);
    }
    for (Element z = 0; z < L.size(); ++z) {
      if (!in[z] && L.leq(lo, z) && L.leq(z, hi)) {
        return false;
      }
    }
    return true;
  }

  bool is_ideal(FiniteLattice const& L, ElementSet const& S) {
    if (S.empty()) {
      return false;
    }
    auto in = membership(L, S);
    for (Element x : S) {
      for (Element y : L.lower_covers(x)) {
        if (!in[y]) {
          return false;
        }
      }
      for (Element y : S) {
        if (!in[L.join(x, y)]) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_filter(FiniteLattice const& L, ElementSet const& S) {
    if (S.empty()) {
      return false;
    }
    auto in = membership(L, S);
    for (Element x : S) {
      for (Element y : L.upper_covers(x)) {
        if (!in[y]) {
          return false;
        }
      }
      for (Element y : S) {
        if (!in[L.meet(x, y)]) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_join_irreducible(FiniteLattice const& L, Element x) {
    L.check(x);
    return L.lower_covers(x).size() == 1;
  }

  bool is_doubly_irreducible(FiniteLattice const& L, Element x) {
    L.check(x);
    return L.lower_covers(x).size() == 1 && L.upper_covers(x).size() == 1;
  }

  JiPoset join_irreducibles(FiniteLattice const& L) {
    JiPoset result;
    for (Element x = 0; x < L.size(); ++x) {
      if (L.lower_covers(x).size() == 1) {
        result.elements.push_back(x);
      }
    }
    auto const&        elts = result.elements;
    std::vector<Cover> covers;
    for (std::size_t i = 0; i < elts.size(); ++i) {
      for (std::size_t k = 0; k < elts.size(); ++k) {
        if (!L.lt(elts[i], elts[k])) {
          continue;
        }
        bool direct = true;
        for (std::size_t m = 0; m < elts.size() && direct; ++m) {
          direct = !(L.lt(elts[i], elts[m]) && L.lt(elts[m], elts[k]));
        }
        if (direct) {
          covers.push_back({static_cast<Element>(i), static_cast<Element>(k)});
        }
      }
    }
    result.order = Poset(elts.size(), covers);
    return result;
  }

  std::size_t height(FiniteLattice const& L) {
    std::vector<std::size_t> rank(L.size(), 0);
    for (Element x : L.poset().linear_extension()) {
      for (Element y : L.upper_covers(x)) {
        rank[y] = std::max(rank[y], rank[x] + 1);
      }
    }
    return rank[L.top()];
  }

  std::vector<ElementSet> down_sets(Poset const& P, std::size_t limit) {
    std::vector<ElementSet>   result;
    auto const&               order = P.linear_extension();
    std::vector<std::uint8_t> chosen(P.size(), 0);
    // Decide elements in linear-extension order; x may be added only when all
    // of its lower covers were added.
    std::function<void(std::size_t)> recurse = [&](std::size_t i) {
      if (i == order.size()) {
        if (result.size() >= limit) {
          throw Error(ErrorKind::too_large,
                      "more than " + std::to_string(limit) + " down-sets");
        }
        ElementSet s;
        for (Element x = 0; x < P.size(); ++x) {
          if (chosen[x]) {
            s.push_back(x);
          }
        }
        result.push_back(std::move(s));
        return;
      }
      Element x = order[i];
      recurse(i + 1);
      bool ok = std::all_of(P.lower_covers(x).begin(),
                            P.lower_covers(x).end(),
                            [&](Element y) { return chosen[y] != 0; });
      if (ok) {
        chosen[x] = 1;
        recurse(i + 1);
        chosen[x] = 0;
      }
    };
    recurse(0);
    std::stable_sort(result.begin(), result.end(), [](auto const& a, auto const& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return result;
  }

  DownsetLattice downset_lattice(Poset const& P) {
    DownsetLattice result;
    result.members = down_sets(P);
    auto const&        sets = result.members;
    std::vector<Cover> covers;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t k = 0; k < sets.size(); ++k) {
        if (sets[k].size() == sets[i].size() + 1
            && std::includes(
                sets[k].begin(), sets[k].end(), sets[i].begin(), sets[i].end())) {
          covers.push_back({static_cast<Element>(i), static_cast<Element>(k)});
        }
      }
    }
    result.lattice = FiniteLattice(Poset(sets.size(), covers));
    return result;
  }

}  // namespace latcon
