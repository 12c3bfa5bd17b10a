#pragma once

#include <numeric>
#include <vector>

#include "latcon/core.hpp"

namespace latcon::detail {

  class UnionFind {
   public:
    explicit UnionFind(std::size_t n) : _parent(n) {
      std::iota(_parent.begin(), _parent.end(), Element(0));
    }

    Element find(Element x) {
      while (_parent[x] != x) {
        _parent[x] = _parent[_parent[x]];
        x          = _parent[x];
      }
      return x;
    }

    // Returns false if x and y were already joined.
    bool unite(Element x, Element y) {
      x = find(x);
      y = find(y);
      if (x == y) {
        return false;
      }
      if (y < x) {
        std::swap(x, y);
      }
      _parent[y] = x;
      return true;
    }

    std::vector<Element> labels() {
      std::vector<Element> result(_parent.size());
      for (std::size_t x = 0; x < _parent.size(); ++x) {
        result[x] = find(static_cast<Element>(x));
      }
      return result;
    }

   private:
    std::vector<Element> _parent;
  };

}  // namespace latcon::detail
