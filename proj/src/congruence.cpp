#include "latcon/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_set>

#include "union_find.hpp"

namespace latcon {

  std::string format_blocks(Congruence const& alpha) {
    std::string s;
    for (auto const& block : alpha.blocks()) {
      if (block.size() < 2) {
        continue;
      }
      s += "{";
      for (std::size_t i = 0; i < block.size(); ++i) {
        s += (i ? "," : "") + std::to_string(block[i]);
      }
      s += "}";
    }
    return s.empty() ? "identity" : s;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Congruence
  ////////////////////////////////////////////////////////////////////////////

  Congruence::Congruence(std::vector<Element> const& labels)
      : _labels(labels.size()) {
    std::unordered_map<Element, Element> least;
    for (std::size_t x = 0; x < labels.size(); ++x) {
      least.try_emplace(labels[x], static_cast<Element>(x));
    }
    for (std::size_t x = 0; x < labels.size(); ++x) {
      _labels[x] = least.at(labels[x]);
    }
  }

  Congruence Congruence::from_blocks(std::size_t                    n,
                                     std::vector<ElementSet> const& blocks) {
    std::vector<Element>      labels(n, 0);
    std::vector<std::uint8_t> seen(n, 0);
    Element                   id = 0;
    for (auto const& block : blocks) {
      if (block.empty()) {
        throw Error(ErrorKind::not_a_partition, "empty block");
      }
      for (Element x : block) {
        if (x >= n) {
          throw Error(ErrorKind::not_a_partition,
                      "element " + std::to_string(x) + " out of range");
        }
        if (seen[x]) {
          throw Error(ErrorKind::not_a_partition,
                      "element " + std::to_string(x) + " in two blocks");
        }
        seen[x]   = 1;
        labels[x] = id;
      }
      ++id;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (!seen[x]) {
        throw Error(ErrorKind::not_a_partition,
                    "element " + std::to_string(x) + " in no block");
      }
    }
    return Congruence(labels);
  }

  Congruence Congruence::identity(std::size_t n) {
    std::vector<Element> labels(n);
    std::iota(labels.begin(), labels.end(), Element(0));
    return Congruence(labels);
  }

  Congruence Congruence::all(std::size_t n) {
    return Congruence(std::vector<Element>(n, 0));
  }

  std::vector<ElementSet> Congruence::blocks() const {
    std::vector<ElementSet>          result;
    std::unordered_map<Element, std::size_t> where;
    for (std::size_t x = 0; x < _labels.size(); ++x) {
      auto [it, fresh] = where.try_emplace(_labels[x], result.size());
      if (fresh) {
        result.emplace_back();
      }
      result[it->second].push_back(static_cast<Element>(x));
    }
    return result;
  }

  std::size_t Congruence::number_of_blocks() const {
    std::size_t count = 0;
    for (std::size_t x = 0; x < _labels.size(); ++x) {
      count += (_labels[x] == x);
    }
    return count;
  }

  bool Congruence::is_identity() const {
    return number_of_blocks() == _labels.size();
  }

  bool Congruence::is_all() const {
    return number_of_blocks() <= 1;
  }

  bool Congruence::refines(Congruence const& other) const {
    for (std::size_t x = 0; x < _labels.size(); ++x) {
      if (!other.same_block(static_cast<Element>(x), _labels[x])) {
        return false;
      }
    }
    return true;
  }

  std::size_t CongruenceHash::operator()(Congruence const& c) const noexcept {
    std::size_t h = c.size();
    for (Element x : c.labels()) {
      h ^= std::hash<Element>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Substitution property
  ////////////////////////////////////////////////////////////////////////////

  namespace {
    void check_carrier(FiniteLattice const& L, Congruence const& alpha) {
      if (alpha.size() != L.size()) {
        throw Error(ErrorKind::not_a_partition,
                    "partition of " + std::to_string(alpha.size())
                        + " elements on a lattice of size "
                        + std::to_string(L.size()));
      }
    }

    // Comparing each element with its block's least member suffices: the
    // remaining pairs follow by transitivity.
    bool substitution(FiniteLattice const& L, Congruence const& alpha, bool joins) {
      check_carrier(L, alpha);
      std::size_t const n = L.size();
      for (Element x = 0; x < n; ++x) {
        Element r = alpha.label(x);
        if (r == x) {
          continue;
        }
        for (Element z = 0; z < n; ++z) {
          if (!alpha.same_block(L.meet(x, z), L.meet(r, z))) {
            return false;
          }
          if (joins && !alpha.same_block(L.join(x, z), L.join(r, z))) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  bool is_congruence(FiniteLattice const& L, Congruence const& alpha) {
    return substitution(L, alpha, true);
  }

  bool is_congruence(FiniteLattice const& L, std::vector<ElementSet> const& blocks) {
    return is_congruence(L, Congruence::from_blocks(L.size(), blocks));
  }

  bool is_meet_congruence(FiniteLattice const& L, Congruence const& alpha) {
    return substitution(L, alpha, false);
  }

  bool is_meet_congruence(FiniteLattice const&            L,
                          std::vector<ElementSet> const& blocks) {
    return is_meet_congruence(L, Congruence::from_blocks(L.size(), blocks));
  }

  ////////////////////////////////////////////////////////////////////////////
  // Generation
  ////////////////////////////////////////////////////////////////////////////

  Congruence generated_congruence(FiniteLattice const&                     L,
                                  std::vector<std::pair<Element, Element>> pairs) {
    std::size_t const n = L.size();
    detail::UnionFind uf(n);
    std::deque<std::pair<Element, Element>> work;
    for (auto const& [a, b] : pairs) {
      L.check(a);
      L.check(b);
      work.emplace_back(a, b);
    }
    // A pair already inside one class needs no processing: its translates
    // follow from the translates of the pairs that joined the class.
    while (!work.empty()) {
      auto [x, y] = work.front();
      work.pop_front();
      if (!uf.unite(x, y)) {
        continue;
      }
      for (Element z = 0; z < n; ++z) {
        work.emplace_back(L.meet(x, z), L.meet(y, z));
        work.emplace_back(L.join(x, z), L.join(y, z));
      }
    }
    return Congruence(uf.labels());
  }

  Congruence principal_congruence(FiniteLattice const& L, Element a, Element b) {
    return generated_congruence(L, {{a, b}});
  }

  Congruence congruence_join(Congruence const& a, Congruence const& b) {
    detail::UnionFind uf(a.size());
    for (Element x = 0; x < a.size(); ++x) {
      uf.unite(x, a.label(x));
      uf.unite(x, b.label(x));
    }
    return Congruence(uf.labels());
  }

  Congruence congruence_meet(Congruence const& a, Congruence const& b) {
    std::map<std::pair<Element, Element>, Element> ids;
    std::vector<Element>                           labels(a.size());
    for (Element x = 0; x < a.size(); ++x) {
      auto [it, _] = ids.try_emplace({a.label(x), b.label(x)}, x);
      labels[x]    = it->second;
    }
    return Congruence(labels);
  }

  ////////////////////////////////////////////////////////////////////////////
  // ConLattice
  ////////////////////////////////////////////////////////////////////////////

  ConLattice::ConLattice(FiniteLattice const& L) {
    std::vector<Congruence>                                  colors;
    std::unordered_map<Congruence, std::size_t, CongruenceHash> color_index;
    std::vector<std::pair<Cover, std::size_t>>               edge_to_color;
    for (auto const& edge : L.covers()) {
      auto alpha       = principal_congruence(L, edge.lower, edge.upper);
      auto [it, fresh] = color_index.try_emplace(alpha, colors.size());
      if (fresh) {
        colors.push_back(alpha);
      }
      edge_to_color.emplace_back(edge, it->second);
    }

    std::vector<Cover> color_order;
    for (std::size_t i = 0; i < colors.size(); ++i) {
      for (std::size_t k = 0; k < colors.size(); ++k) {
        if (i == k || !colors[i].refines(colors[k])) {
          continue;
        }
        bool direct = true;
        for (std::size_t m = 0; m < colors.size() && direct; ++m) {
          direct = m == i || m == k
                   || !(colors[i].refines(colors[m])
                        && colors[m].refines(colors[k]));
        }
        if (direct) {
          color_order.push_back({static_cast<Element>(i), static_cast<Element>(k)});
        }
      }
    }
    Poset color_poset(colors.size(), color_order);

    // Every congruence is the join of the colors it collapses, and those
    // colors form a down-set of the color poset.
    std::vector<Congruence> all;
    for (auto const& ds : down_sets(color_poset)) {
      Congruence alpha = Congruence::identity(L.size());
      for (Element c : ds) {
        alpha = congruence_join(alpha, colors[c]);
      }
      all.push_back(std::move(alpha));
    }
    std::sort(all.begin(), all.end(), [](Congruence const& a, Congruence const& b) {
      auto na = a.number_of_blocks(), nb = b.number_of_blocks();
      return na != nb ? na > nb : a.labels() < b.labels();
    });
    all.erase(std::unique(all.begin(), all.end()), all.end());
    _congruences = std::move(all);
    for (std::size_t i = 0; i < _congruences.size(); ++i) {
      _index.emplace(_congruences[i], i);
    }

    for (auto const& c : colors) {
      _ji.push_back(_index.at(c));
    }
    std::sort(_ji.begin(), _ji.end());
    std::vector<std::size_t> color_to_ji(colors.size());
    for (std::size_t c = 0; c < colors.size(); ++c) {
      color_to_ji[c] = static_cast<std::size_t>(
          std::lower_bound(_ji.begin(), _ji.end(), _index.at(colors[c]))
          - _ji.begin());
    }
    for (auto const& [edge, c] : edge_to_color) {
      _edge_color[{edge.lower, edge.upper}] = color_to_ji[c];
    }

    std::vector<Cover> ji_order;
    for (auto const& cv : color_order) {
      ji_order.push_back({static_cast<Element>(color_to_ji[cv.lower]),
                          static_cast<Element>(color_to_ji[cv.upper])});
    }
    std::sort(ji_order.begin(), ji_order.end());
    _ji_poset = Poset(_ji.size(), ji_order);

    std::size_t const N = _congruences.size();
    _down_sets.resize(N);
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t k = 0; k < _ji.size(); ++k) {
        if (_congruences[_ji[k]].refines(_congruences[i])) {
          _down_sets[i].push_back(static_cast<Element>(k));
        }
      }
    }

    // Refinement order; a cover is a proper refinement with nothing between.
    std::vector<std::uint8_t> le(N * N, 0);
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t k = 0; k < N; ++k) {
        le[i * N + k] = std::includes(_down_sets[k].begin(),
                                      _down_sets[k].end(),
                                      _down_sets[i].begin(),
                                      _down_sets[i].end());
      }
    }
    std::vector<Cover> covers;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t k = 0; k < N; ++k) {
        if (i == k || !le[i * N + k]) {
          continue;
        }
        bool direct = true;
        for (std::size_t m = 0; m < N && direct; ++m) {
          direct = m == i || m == k || !(le[i * N + m] && le[m * N + k]);
        }
        if (direct) {
          covers.push_back({static_cast<Element>(i), static_cast<Element>(k)});
        }
      }
    }
    _lattice = FiniteLattice(Poset(N, covers));
  }

  std::size_t ConLattice::edge_color(Cover edge) const {
    auto it = _edge_color.find({edge.lower, edge.upper});
    if (it == _edge_color.end()) {
      throw Error(ErrorKind::element_out_of_range,
                  "(" + std::to_string(edge.lower) + ", "
                      + std::to_string(edge.upper) + ") is not a cover");
    }
    return it->second;
  }

  std::optional<std::size_t> ConLattice::index_of(Congruence const& c) const {
    auto it = _index.find(c);
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::vector<std::size_t> ConLattice::atoms() const {
    std::vector<std::size_t> result;
    for (Element x : _lattice.upper_covers(static_cast<Element>(bottom_index()))) {
      result.push_back(x);
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  ConLattice congruence_lattice(FiniteLattice const& L) {
    return ConLattice(L);
  }

  bool is_simple(FiniteLattice const& L) {
    return congruence_lattice(L).size() == 2;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Restriction and extension
  ////////////////////////////////////////////////////////////////////////////

  Congruence restrict_along(Congruence const&           alpha,
                            std::vector<Element> const& embedding) {
    std::vector<Element> labels(embedding.size());
    for (std::size_t i = 0; i < embedding.size(); ++i) {
      labels[i] = alpha.label(embedding[i]);
    }
    return Congruence(labels);
  }

  Congruence restrict(FiniteLattice const& L,
                      Congruence const&    alpha,
                      ElementSet const&    S) {
    check_carrier(L, alpha);
    if (!is_convex_sublattice(L, S)) {
      throw Error(ErrorKind::not_convex_sublattice,
                  "restriction target is not a convex sublattice");
    }
    return restrict_along(alpha, S);
  }

  bool is_cp_extension(FiniteLattice const& L, ElementSet const& K) {
    if (!is_convex_sublattice(L, K)) {
      throw Error(ErrorKind::not_convex_sublattice,
                  "cp-extension test needs a convex sublattice");
    }
    auto conL = congruence_lattice(L);
    auto conK = congruence_lattice(sublattice(L, K));
    if (conL.size() != conK.size()) {
      return false;
    }
    std::unordered_set<Congruence, CongruenceHash> images;
    for (auto const& alpha : conL.congruences()) {
      if (!images.insert(restrict_along(alpha, K)).second) {
        return false;
      }
    }
    return true;
  }

  Congruence singleton_extension(FiniteLattice const& L,
                                 ElementSet const&    I,
                                 Congruence const&    alpha) {
    if (!is_ideal(L, I)) {
      throw Error(ErrorKind::not_an_ideal, "singleton extension needs an ideal");
    }
    if (alpha.size() != I.size()) {
      throw Error(ErrorKind::not_a_partition,
                  "partition of " + std::to_string(alpha.size())
                      + " elements on an ideal of size "
                      + std::to_string(I.size()));
    }
    std::vector<Element> labels(L.size());
    std::iota(labels.begin(), labels.end(), Element(0));
    for (std::size_t i = 0; i < I.size(); ++i) {
      labels[I[i]] = I[alpha.label(static_cast<Element>(i))];
    }
    return Congruence(labels);
  }

}  // namespace latcon
