#include "latcon/catalog.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <regex>

namespace latcon {

  RectLattice s7_eye() {
    auto s = s7();
    return insert_eye(s, cells(s).front());
  }

  RectLattice named_lattice(std::string const& name) {
    if (name == "s7") {
      return s7();
    }
    if (name == "m3") {
      return m3_rect();
    }
    if (name == "s7+eye") {
      return s7_eye();
    }
    std::smatch m;
    static std::regex const grid_name(R"(grid:(\d+)x(\d+))");
    if (std::regex_match(name, m, grid_name)) {
      return grid(std::stoul(m[1]), std::stoul(m[2]));
    }
    throw Error(ErrorKind::parse_error, "unknown lattice name '" + name + "'");
  }

  std::vector<CatalogEntry> default_catalog() {
    auto g33 = grid(3, 3);
    auto s   = s7();
    std::vector<CatalogEntry> result{
        {"grid:2x2", grid(2, 2).lattice},
        {"grid:2x3", grid(2, 3).lattice},
        {"grid:3x2", grid(3, 2).lattice},
        {"grid:3x3", g33.lattice},
        {"grid:2x4", grid(2, 4).lattice},
        {"m3", m3_rect().lattice},
        {"m3+eye", insert_eye(m3_rect(), cells(m3_rect()).front()).lattice},
        {"s7", s.lattice},
        {"s7+eye", s7_eye().lattice},
        {"s7+top-eye", insert_eye(s, cells(s).back()).lattice},
        {"grid:3x3+eye", insert_eye(g33, cells(g33).front()).lattice},
        {"grid:3x3+fork", add_fork(g33, cells(g33).back()).lattice},
        {"n5", n5()},
        {"chain:3", chain(3)},
    };
    return result;
  }

  SearchResult rectangular_search(std::size_t max_size, std::uint64_t seed) {
    SearchResult                                                  out;
    std::map<std::vector<std::uint64_t>, std::vector<std::size_t>> buckets;
    std::vector<RectLattice>                                      found;

    auto admit = [&](RectLattice R) {
      if (R.size() > max_size) {
        return false;
      }
      auto  sig    = invariant_signature(R.lattice);
      auto& bucket = buckets[sig];
      for (std::size_t i : bucket) {
        if (is_isomorphic(found[i].lattice, R.lattice)) {
          return false;
        }
      }
      bucket.push_back(found.size());
      found.push_back(std::move(R));
      return true;
    };

    for (std::size_t m = 2; m * 2 <= max_size; ++m) {
      for (std::size_t n = 2; m * n <= max_size; ++n) {
        admit(grid(m, n));
      }
    }
    std::mt19937_64 rng(seed);
    // Forks first, on eye-free lattices only; then eyes on everything.
    for (int phase = 0; phase < 2; ++phase) {
      std::vector<std::size_t> todo(found.size());
      for (std::size_t i = 0; i < todo.size(); ++i) {
        todo[i] = i;
      }
      while (!todo.empty()) {
        std::shuffle(todo.begin(), todo.end(), rng);
        std::vector<std::size_t> next;
        for (std::size_t i : todo) {
          RectLattice R = found[i];
          if (R.size() + (phase == 0 ? 3 : 1) > max_size) {
            continue;
          }
          if (phase == 0 && !R.eyes.empty()) {
            continue;
          }
          for (auto const& c : cells(R)) {
            if (phase == 0 && !c.middles.empty()) {
              continue;
            }
            try {
              if (admit(phase == 0 ? add_fork(R, c) : insert_eye(R, c))) {
                next.push_back(found.size() - 1);
              }
            } catch (Error const&) {
              ++out.rejected;
            }
          }
        }
        todo = std::move(next);
      }
    }

    // Canonical order: size, then signature, then covers.
    std::vector<std::size_t> order(found.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      order[i] = i;
    }
    std::vector<std::vector<std::uint64_t>> sigs;
    for (auto const& R : found) {
      sigs.push_back(invariant_signature(R.lattice));
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return sigs[a] != sigs[b] ? sigs[a] < sigs[b] : a < b;
    });
    for (std::size_t i : order) {
      out.lattices.push_back(found[i]);
    }
    return out;
  }

}  // namespace latcon
