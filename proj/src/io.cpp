#include "latcon/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace latcon {

  namespace {
    json covers_json(std::vector<Cover> const& covers) {
      json a = json::array();
      for (auto const& c : covers) {
        a.push_back({c.lower, c.upper});
      }
      return a;
    }

    [[noreturn]] void bad(std::string const& what) {
      throw Error(ErrorKind::parse_error, what);
    }

    template <typename T>
    T get(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        bad(std::string("missing field '") + key + "'");
      }
      try {
        return j.at(key).get<T>();
      } catch (json::exception const& e) {
        bad(std::string("field '") + key + "': " + e.what());
      }
    }
  }  // namespace

  json to_json(FiniteLattice const& L) {
    json j;
    j["size"]        = L.size();
    j["covers"]      = covers_json(L.covers());
    j["upper_order"] = L.poset().upper_cover_lists();
    j["lower_order"] = L.poset().lower_cover_lists();
    return j;
  }

  json to_json(RectLattice const& R) {
    json j    = to_json(R.lattice);
    j["lc"]   = R.lc;
    j["rc"]   = R.rc;
    j["eyes"] = R.eyes;
    return j;
  }

  json to_json(FiniteLattice const& L, Congruence const& alpha) {
    return {{"lattice", to_json(L)}, {"blocks", alpha.blocks()}};
  }

  json to_json(BoundedHom const& phi) {
    return {{"source", to_json(phi.source())},
            {"target", to_json(phi.target())},
            {"map", phi.map()}};
  }

  json to_json(VerificationReport const& r) {
    json checks = json::array();
    for (auto const& c : r.checks) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
    }
    return {{"summary", r.summary()}, {"checks", checks}};
  }

  json to_json(Cell const& c) {
    return {{"bottom", c.bottom},
            {"top", c.top},
            {"left", c.left},
            {"right", c.right},
            {"middles", c.middles}};
  }

  json to_json(ConstructionReport const& r) {
    json eyes = json::array();
    for (auto const& e : r.eye_log) {
      eyes.push_back({{"flap", e.flap},
                      {"cell", to_json(e.cell)},
                      {"color_x", e.color_x},
                      {"color_y", e.color_y}});
    }
    json colors = json::array();
    for (auto const& row : r.color_table) {
      colors.push_back({{"congruence", row.congruence},
                        {"lower_left", covers_json(row.lower_left)},
                        {"lower_right", covers_json(row.lower_right)},
                        {"upper_left", covers_json(row.upper_left)},
                        {"upper_right", covers_json(row.upper_right)}});
    }
    json stages = json::array();
    for (auto const& [name, R] : r.stages) {
      stages.push_back({{"name", name}, {"lattice", to_json(R)}});
    }
    return {{"output", to_json(r.output)},
            {"embedded_F", r.embedded_F},
            {"embedded_G", r.embedded_G},
            {"eye_log", eyes},
            {"color_table", colors},
            {"stages", stages}};
  }

  json con_to_json(FiniteLattice const& L, ConLattice const& con) {
    json congruences = json::array();
    for (auto const& c : con.congruences()) {
      congruences.push_back(c.blocks());
    }
    json edges = json::array();
    for (auto const& e : L.covers()) {
      edges.push_back({{"edge", {e.lower, e.upper}}, {"color", con.edge_congruence(e)}});
    }
    json ji_order = json::array();
    for (auto const& c : con.ji_poset().covers()) {
      ji_order.push_back({con.ji()[c.lower], con.ji()[c.upper]});
    }
    return {{"lattice", to_json(L)},
            {"congruences", congruences},
            {"order", covers_json(con.lattice().covers())},
            {"ji", con.ji()},
            {"ji_order", ji_order},
            {"edge_colors", edges}};
  }

  FiniteLattice lattice_from_json(json const& j) {
    auto size   = get<std::size_t>(j, "size");
    auto covers = get<std::vector<std::pair<Element, Element>>>(j, "covers");
    if (size == 0) {
      throw Error(ErrorKind::zero_size, "a lattice needs at least one element");
    }
    std::vector<Cover> cs;
    for (auto [a, b] : covers) {
      if (a >= size || b >= size) {
        throw Error(ErrorKind::element_out_of_range,
                    "cover (" + std::to_string(a) + ", " + std::to_string(b) + ")");
      }
      cs.push_back({a, b});
    }
    if (!j.contains("upper_order") && !j.contains("lower_order")) {
      return make_lattice(size, cs);
    }
    auto upper = get<CoverLists>(j, "upper_order");
    auto lower = get<CoverLists>(j, "lower_order");
    if (upper.size() != size || lower.size() != size) {
      bad("order lists do not have one entry per element");
    }
    // The order lists must describe exactly the listed covers.
    auto sorted = [](std::vector<Cover> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    std::vector<Cover> from_upper, from_lower;
    for (Element x = 0; x < size; ++x) {
      for (Element y : upper[x]) {
        from_upper.push_back({x, y});
      }
      for (Element y : lower[x]) {
        from_lower.push_back({y, x});
      }
    }
    if (sorted(from_upper) != sorted(cs) || sorted(from_lower) != sorted(cs)) {
      bad("order lists disagree with covers");
    }
    return FiniteLattice(Poset(std::move(upper), std::move(lower)));
  }

  RectLattice rect_from_json(json const& j) {
    auto R = make_rectangular(lattice_from_json(j));
    if (j.contains("lc") && get<Element>(j, "lc") != R.lc) {
      bad("lc is " + std::to_string(R.lc));
    }
    if (j.contains("rc") && get<Element>(j, "rc") != R.rc) {
      bad("rc is " + std::to_string(R.rc));
    }
    if (j.contains("eyes") && to_set(get<std::vector<Element>>(j, "eyes")) != R.eyes) {
      bad("eyes differ from the computed ones");
    }
    return R;
  }

  Congruence congruence_from_json(json const& j, std::size_t size) {
    return Congruence::from_blocks(size, get<std::vector<ElementSet>>(j, "blocks"));
  }

  BoundedHom hom_from_json(json const&          j,
                           FiniteLattice const& source,
                           FiniteLattice const& target) {
    auto s = j.contains("source") ? lattice_from_json(j.at("source")) : source;
    auto t = j.contains("target") ? lattice_from_json(j.at("target")) : target;
    return make_bounded_hom(std::move(s), std::move(t), get<std::vector<Element>>(j, "map"));
  }

  json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      bad("cannot open " + path);
    }
    try {
      return json::parse(in);
    } catch (json::parse_error const& e) {
      bad(path + ": " + e.what());
    }
  }

  void write_text_file(std::string const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      bad("cannot write " + path);
    }
    out << text;
  }

  std::string dump(json const& j) {
    return j.dump(2) + "\n";
  }

}  // namespace latcon
