// latcon: command-line front end.
//
// Exit codes: 0 success, 1 verification failed, 2 invalid input,
// 3 construction error, 4 condition (i) fails for the given G.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latcon/birkhoff.hpp"
#include "latcon/catalog.hpp"
#include "latcon/congruence.hpp"
#include "latcon/construction.hpp"
#include "latcon/error.hpp"
#include "latcon/io.hpp"
#include "latcon/render.hpp"
#include "latcon/verify.hpp"

namespace fs = std::filesystem;
using namespace latcon;

namespace {

  enum Exit { ok = 0, verification_failed = 1, bad_input = 2, construction_failed = 3, condition_fails = 4 };

  // Raised for anything wrong with the command line inputs.
  struct InputError {
    std::string message;
  };

  template <class F>
  auto input(std::string const& what, F&& f) {
    try {
      return f();
    } catch (Error const& e) {
      throw InputError{what + ": " + e.what()};
    } catch (std::exception const& e) {
      throw InputError{what + ": " + e.what()};
    }
  }

  std::optional<fs::path> locate(std::string const& arg) {
    if (fs::is_regular_file(arg)) {
      return fs::path(arg);
    }
    if (char const* dir = std::getenv("LATCON_CATALOG")) {
      for (auto const& name : {arg, arg + ".json"}) {
        fs::path p = fs::path(dir) / name;
        if (fs::is_regular_file(p)) {
          return p;
        }
      }
    }
    return std::nullopt;
  }

  RectLattice load_rect(std::string const& arg) {
    return input(arg, [&] {
      if (auto p = locate(arg)) {
        return rect_from_json(read_json_file(p->string()));
      }
      return named_lattice(arg);
    });
  }

  // Any lattice: a file, a built-in rectangular name, a catalog entry,
  // chain:N, or con:X for the congruence lattice of X.
  FiniteLattice load_lattice(std::string const& arg) {
    if (arg.rfind("con:", 0) == 0) {
      auto base = load_lattice(arg.substr(4));
      return congruence_lattice(base).lattice();
    }
    return input(arg, [&] {
      if (auto p = locate(arg)) {
        return lattice_from_json(read_json_file(p->string()));
      }
      if (arg.rfind("chain:", 0) == 0) {
        return chain(std::stoul(arg.substr(6)));
      }
      for (auto const& e : default_catalog()) {
        if (e.name == arg) {
          return e.lattice;
        }
      }
      return named_lattice(arg).lattice;
    });
  }

  // A lattice that might be rectangular; render uses the grid layout then.
  Layout layout_of(FiniteLattice const& L) {
    try {
      return layout(make_rectangular(L));
    } catch (Error const&) {
      return layout(L);
    }
  }

  BoundedHom load_hom(std::optional<std::string> const& arg,
                      std::optional<std::size_t>        index,
                      FiniteLattice const&              D,
                      FiniteLattice const&              E) {
    return input("phi", [&] {
      if (arg && *arg != "identity") {
        auto j = read_json_file(locate(*arg).value_or(*arg).string());
        auto h = hom_from_json(j, D, E);
        if (!(h.source() == D) || !(h.target() == E)) {
          throw Error(ErrorKind::parse_error,
                      "source/target differ from the congruence lattices of F and G");
        }
        return h;
      }
      if (arg) {
        if (!(D == E)) {
          throw Error(ErrorKind::parse_error, "identity needs Con F = Con G");
        }
        std::vector<Element> id(D.size());
        for (Element x = 0; x < D.size(); ++x) {
          id[x] = x;
        }
        return make_bounded_hom(D, E, id);
      }
      auto homs = bounded_homs(D, E);
      std::size_t k = index.value_or(0);
      if (k >= homs.size()) {
        throw Error(ErrorKind::index_out_of_range,
                    "hom index " + std::to_string(k) + " of " + std::to_string(homs.size()));
      }
      return homs[k];
    });
  }

  void emit(std::string const& out, std::string const& text) {
    if (out.empty() || out == "-") {
      std::cout << text;
    } else {
      write_text_file(out, text);
    }
  }

  int finish(VerificationReport const& r, std::string const& report_path) {
    if (report_path.empty()) {
      std::cerr << to_text(r);
    } else {
      write_text_file(report_path, dump(to_json(r)));
    }
    return r.summary() ? ok : verification_failed;
  }

  // The homomorphism of the demo: on join-irreducibles, the four-block color
  // goes to itself and the two others both go to the second color.
  BoundedHom demo_hom(RectLattice const& s7) {
    auto con = congruence_lattice(s7.lattice).lattice();
    auto        ji  = join_irreducibles(con);
    return hom_of_isotone(make_isotone_map(ji.order, ji.order, {0, 1, 1}), con, con);
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Congruence lattices of rectangular lattices: representation constructions and checks"};
  app.require_subcommand(1);

  std::string out, report_path, construction_path, format = "json";
  std::optional<std::size_t> hom_index;
  std::uint64_t seed = 0;
  std::size_t max_size = 12;

  auto add_out = [&](CLI::App* c) {
    c->add_option("-o,--out", out, "output path (default: stdout)");
  };

  std::string f_arg, g_arg, l_arg;
  std::optional<std::string> phi_arg;

  auto* build_filter = app.add_subcommand("build-filter", "G as a filter: construct L and verify");
  auto* build_ideal = app.add_subcommand("build-ideal", "G as an ideal: construct L and verify");
  for (auto* c : {build_filter, build_ideal}) {
    c->add_option("F", f_arg, "lattice F")->required();
    c->add_option("G", g_arg, "lattice G")->required();
    c->add_option("phi", phi_arg, "hom Con F -> Con G (file or 'identity'); default: --hom-index");
    c->add_option("--hom-index", hom_index, "index into the enumerated homs");
    c->add_option("--report", report_path, "write the verification report as JSON");
    c->add_option("--construction", construction_path, "write eyes, embeddings and stages as JSON");
    add_out(c);
  }

  auto* embed_simple = app.add_subcommand("embed-simple", "embed G as an ideal of a simple lattice");
  embed_simple->add_option("G", g_arg)->required();
  embed_simple->add_option("--report", report_path);
  embed_simple->add_option("--construction", construction_path);
  add_out(embed_simple);

  auto* check_ideal = app.add_subcommand("check-ideal", "test whether every congruence of G collapses an upper edge");
  check_ideal->add_option("G", g_arg)->required();

  auto* con = app.add_subcommand("con", "congruence lattice");
  con->add_option("L", l_arg)->required();
  con->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  add_out(con);

  std::string d_arg, e_arg;
  auto* brt = app.add_subcommand("brt", "enumerate bounded homs D -> E via isotone maps");
  brt->add_option("D", d_arg)->required();
  brt->add_option("E", e_arg)->required();
  brt->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  add_out(brt);

  auto* render = app.add_subcommand("render", "diagram as SVG or DOT");
  render->add_option("L", l_arg)->required();
  render->add_option("--format", format)->check(CLI::IsMember({"svg", "dot"}));
  add_out(render);

  std::string demo_name, demo_dir = "demo-s7";
  auto* demo = app.add_subcommand("demo", "run the S7 example end to end");
  demo->add_option("name", demo_name)->required()->check(CLI::IsMember({"s7"}));
  demo->add_option("-o,--out", demo_dir, "output directory");

  auto* catalog = app.add_subcommand("catalog", "search small rectangular lattices");
  catalog->add_option("--max-size", max_size);
  catalog->add_option("--seed", seed);
  catalog->add_option("-o,--out", out, "directory for one JSON file per lattice");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build_filter->parsed() || build_ideal->parsed()) {
      bool filter = build_filter->parsed();
      auto F = load_rect(f_arg);
      auto G = load_rect(g_arg);
      auto D = congruence_lattice(F.lattice).lattice();
      auto E = congruence_lattice(G.lattice).lattice();
      auto phi = load_hom(phi_arg, hom_index, D, E);
      auto rep = filter ? filter_representation(F, G, phi) : ideal_representation(F, G, phi);
      emit(out, dump(to_json(rep.output)));
      if (!construction_path.empty()) {
        write_text_file(construction_path, dump(to_json(rep)));
      }
      auto const& L = rep.output.lattice;
      auto v = filter ? verify_filter_representation(L, F.lattice, rep.embedded_F, G.lattice, rep.embedded_G, phi)
                      : verify_ideal_representation(L, F.lattice, rep.embedded_F, G.lattice, rep.embedded_G, phi);
      return finish(v, report_path);
    }
    if (embed_simple->parsed()) {
      auto G = load_rect(g_arg);
      auto rep = simple_ideal_embedding(G);
      emit(out, dump(to_json(rep.output)));
      if (!construction_path.empty()) {
        write_text_file(construction_path, dump(to_json(rep)));
      }
      VerificationReport v;
      v.add("L is simple", is_simple(rep.output.lattice));
      v.add("G is an ideal of L", is_ideal(rep.output.lattice, to_set(rep.embedded_G)));
      return finish(v, report_path);
    }
    if (check_ideal->parsed()) {
      auto G = load_rect(g_arg);
      auto c = upper_chain_collapse_check(G);
      if (c.holds) {
        std::cout << "holds\n";
        return ok;
      }
      std::cout << "fails\n";
      for (auto const& w : c.witnesses) {
        std::cout << "witness " << format_blocks(w) << "\n";
      }
      return condition_fails;
    }
    if (con->parsed()) {
      auto L = load_lattice(l_arg);
      auto C = congruence_lattice(L);
      if (format == "text") {
        std::string s = "congruences " + std::to_string(C.size()) + "\n";
        for (std::size_t i = 0; i < C.size(); ++i) {
          s += std::to_string(i) + " " + format_blocks(C.congruence(i)) + "\n";
        }
        s += "join-irreducible";
        for (auto i : C.ji()) {
          s += " " + std::to_string(i);
        }
        emit(out, s + "\n");
      } else {
        emit(out, dump(con_to_json(L, C)));
      }
      return ok;
    }
    if (brt->parsed()) {
      auto D = load_lattice(d_arg);
      auto E = load_lattice(e_arg);
      if (!is_distributive(D) || !is_distributive(E)) {
        throw InputError{"D and E must be distributive"};
      }
      auto homs = bounded_homs(D, E);
      auto isotone = isotone_maps(join_irreducibles(E).order, join_irreducibles(D).order);
      bool all_ok = homs.size() == isotone.size();
      json list = json::array();
      std::string text;
      for (std::size_t k = 0; k < homs.size(); ++k) {
        auto r = brt_report(homs[k]);
        all_ok = all_ok && r.ok();
        list.push_back({{"map", homs[k].map()},
                        {"ok", r.ok()},
                        {"injective", r.injective},
                        {"surjective", r.surjective},
                        {"ji_onto", r.ji_onto},
                        {"ji_embedding", r.ji_embedding},
                        {"witness", r.witness}});
        text += std::to_string(k) + (r.ok() ? " ok" : " FAIL") + " injective=" + std::to_string(r.injective)
                + " surjective=" + std::to_string(r.surjective) + " ji_onto=" + std::to_string(r.ji_onto)
                + " ji_embedding=" + std::to_string(r.ji_embedding) + "\n";
      }
      if (format == "text") {
        emit(out, text + "homs " + std::to_string(homs.size()) + " isotone " + std::to_string(isotone.size()) + "\n");
      } else {
        emit(out, dump({{"homs", homs.size()}, {"isotone_maps", isotone.size()}, {"reports", list}}));
      }
      return all_ok ? ok : verification_failed;
    }
    if (render->parsed()) {
      auto L = load_lattice(l_arg);
      auto lay = layout_of(L);
      emit(out, format == "dot" ? render_dot(L, lay) : render_svg(L, lay));
      return ok;
    }
    if (demo->parsed()) {
      fs::create_directories(demo_dir);
      auto at = [&](std::string const& name) { return (fs::path(demo_dir) / name).string(); };
      auto S = named_lattice("s7");
      auto phi = demo_hom(S);
      auto rep = filter_representation(S, S, phi);
      auto const& L = rep.output;
      auto v = verify_filter_representation(L.lattice, S.lattice, rep.embedded_F, S.lattice, rep.embedded_G, phi);
      write_text_file(at("F.json"), dump(to_json(S)));
      write_text_file(at("G.json"), dump(to_json(S)));
      write_text_file(at("phi.json"), dump(to_json(phi)));
      for (auto const& [stage, R] : rep.stages) {
        write_text_file(at(stage + ".json"), dump(to_json(R)));
      }
      write_text_file(at("L.json"), dump(to_json(L)));
      write_text_file(at("L.svg"), render_svg(L.lattice, layout(L)));
      write_text_file(at("construction.json"), dump(to_json(rep)));
      write_text_file(at("report.json"), dump(to_json(v)));
      std::cout << "L has " << L.size() << " elements, " << rep.eye_log.size() << " eyes\n" << to_text(v);
      return v.summary() ? ok : verification_failed;
    }
    if (catalog->parsed()) {
      auto res = rectangular_search(max_size, seed);
      std::size_t failing = 0;
      if (!out.empty()) {
        fs::create_directories(out);
      }
      for (std::size_t i = 0; i < res.lattices.size(); ++i) {
        auto const& R = res.lattices[i];
        auto c = upper_chain_collapse_check(R);
        failing += c.holds ? 0 : 1;
        if (!out.empty()) {
          write_text_file((fs::path(out) / ("rect" + std::to_string(i) + ".json")).string(), dump(to_json(R)));
        }
      }
      std::cout << "lattices " << res.lattices.size() << "\nrejected " << res.rejected
                << "\ncondition (i) fails " << failing << "\n";
      return ok;
    }
  } catch (InputError const& e) {
    std::cerr << "error: " << e.message << "\n";
    return bad_input;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::condition_i_fails ? condition_fails : construction_failed;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return construction_failed;
  }
  return ok;
}
