#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>
#include <sstream>

#include "morphdet/determined.hpp"
#include "morphdet/error.hpp"
#include "morphdet/io.hpp"
#include "morphdet/oracle.hpp"
#include "morphdet/poset.hpp"

namespace morphdet::cli {

namespace {

struct Common {
  std::string algebra;
  bool json = false;
  std::uint64_t seed = 0;
  std::string max_dim;
  std::string out;
};

std::string dims_string(const Representation& m) {
  std::ostringstream os;
  os << '(';
  for (std::size_t v = 0; v < m.vertex_count(); ++v) os << (v ? "," : "") << m.dim(v);
  os << ')';
  return os.str();
}

std::string summands_string(const std::vector<Representation>& parts) {
  if (parts.empty()) return "none";
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : " ") + dims_string(p);
  return s;
}

AlgebraPtr load_algebra(const Common& c) {
  if (c.algebra.empty()) throw InputError("--algebra is required");
  return algebra_from_json(load_json_file(c.algebra));
}

Representation load_module(const std::string& path, const AlgebraPtr& alg, const char* flag) {
  if (path.empty()) throw InputError(std::string(flag) + " is required");
  return representation_from_json(load_json_file(path), alg);
}

RepMorphism load_morphism(const std::string& path, const AlgebraPtr& alg) {
  if (path.empty()) throw InputError("--morphism is required");
  return morphism_from_json(load_json_file(path), alg);
}

std::vector<std::size_t> parse_max_dim(const std::string& text, const BoundQuiverAlgebra& alg) {
  if (text.empty()) return std::vector<std::size_t>(alg.vertex_count(), 1);
  std::vector<std::size_t> bounds(alg.vertex_count(), 0);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.rfind(':');
    if (colon == std::string::npos) throw InputError("--max-dim entries must look like vertex:bound");
    const auto label = item.substr(0, colon);
    const auto value = item.substr(colon + 1);
    if (value.empty() || !std::all_of(value.begin(), value.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw InputError("--max-dim bound must be a non-negative integer");
    bounds[alg.quiver().vertex_index(label)] = std::stoul(value);
  }
  return bounds;
}

std::size_t span_dim(const HomSpace& hom, const std::vector<RepMorphism>& gens) {
  const auto& field = hom.source().field();
  Matrix m(field, hom.dim(), 0);
  for (const auto& g : gens) m = hstack(m, Matrix::column_vector(field, hom.coordinates(g)));
  return rank(m);
}

void emit(const Common& c, std::ostream& out, const Json& j, const std::string& human) {
  if (!c.out.empty()) save_json_file(c.out, j);
  if (c.json)
    out << j.dump(2) << '\n';
  else
    out << human;
}

void add_common(CLI::App* cmd, Common& c, bool with_algebra = true) {
  // -h is left free for --h (the generators of H)
  cmd->set_help_flag("--help", "print this help message and exit");
  if (with_algebra) cmd->add_option("--algebra", c.algebra, "algebra JSON file");
  cmd->add_flag("--json", c.json, "machine-readable output");
  cmd->add_option("--seed", c.seed, "seed for randomised steps");
  cmd->add_option("--max-dim", c.max_dim, "dimension bounds, e.g. 1:2,2:2");
  cmd->add_option("--out", c.out, "write the JSON result to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Morphisms determined by objects over bound quiver algebras", "morphdet"};
  app.require_subcommand(1);
  Common common;
  std::string c_path, y_path, h_path, morphism_path, z_path, poset_path, px, py, pc, pd;
  bool dot = false;

  auto* construct = app.add_subcommand("construct", "right minimal right C-determined morphism with image H");
  add_common(construct, common);
  construct->add_option("--c", c_path, "module C");
  construct->add_option("--y", y_path, "module Y");
  construct->add_option("--h", h_path, "generators of H (default: H = 0)");

  auto* check = app.add_subcommand("check", "decide whether a morphism is right C-determined");
  add_common(check, common);
  check->add_option("--morphism", morphism_path, "morphism file");
  check->add_option("--c", c_path, "module C");

  auto* mindet = app.add_subcommand("mindet", "minimal determinator of a morphism");
  add_common(mindet, common);
  mindet->add_option("--morphism", morphism_path, "morphism file");

  auto* ar = app.add_subcommand("ar", "minimal right almost split morphism ending at Z");
  add_common(ar, common);
  ar->add_option("--z", z_path, "indecomposable module Z");
  ar->add_flag("--dot", dot, "print the almost split sequence as a DOT digraph");

  auto* poset = app.add_subcommand("poset", "determination in a finite poset");
  add_common(poset, common, false);
  poset->add_option("--poset", poset_path, "poset file")->required();
  poset->add_option("--x", px, "source of the morphism")->required();
  poset->add_option("--y", py, "target of the morphism")->required();
  poset->add_option("--c", pc, "determining object");
  poset->add_option("--d", pd, "comma-separated class of objects");

  auto* oracle = app.add_subcommand("oracle", "search for a counterexample among small modules");
  add_common(oracle, common);
  oracle->add_option("--morphism", morphism_path, "morphism file");
  oracle->add_option("--c", c_path, "module C");

  auto* claim = app.add_subcommand("claim", "compare Auslander's determinator with the minimal one");
  add_common(claim, common);
  claim->add_option("--morphism", morphism_path, "morphism file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (construct->parsed()) {
      auto alg = load_algebra(common);
      auto c = load_module(c_path, alg, "--c");
      auto y = load_module(y_path, alg, "--y");
      std::vector<RepMorphism> gens;
      if (!h_path.empty()) gens = generators_from_json(load_json_file(h_path), c, y);
      auto h = gamma_closure(c, y, gens);
      if (h.dim() != span_dim(h.hom(), gens))
        err << "note: generators were not closed under End(C); using their closure (dim " << h.dim() << ")\n";
      ConstructOptions options;
      options.seed = common.seed;
      auto alpha = construct_determined(h, options);
      const bool image_ok = image_hom(c, alpha) == h;
      const bool minimal = is_right_minimal(alpha);
      Json j = to_json(alpha);
      std::ostringstream human;
      human << "X dims " << dims_string(alpha.source()) << "\n"
            << "image equals H: " << (image_ok ? "yes" : "no") << "\n"
            << "right minimal: " << (minimal ? "yes" : "no") << "\n";
      if (!common.out.empty()) save_json_file(common.out, j);
      if (common.json) {
        Json r;
        r["sourceDims"] = alpha.source().dims();
        r["imageEqualsH"] = image_ok;
        r["rightMinimal"] = minimal;
        r["morphism"] = j;
        out << r.dump(2) << '\n';
      } else {
        out << human.str();
      }
      return 0;
    }
    if (check->parsed()) {
      auto alg = load_algebra(common);
      auto a = load_morphism(morphism_path, alg);
      auto c = load_module(c_path, alg, "--c");
      auto r = check_determination(a, c);
      std::ostringstream human;
      human << "right C-determined: " << (r.verdict ? "yes" : "no") << "\n";
      if (!r.verdict && r.witness) human << "counterexample from " << dims_string(r.witness->source()) << "\n";
      emit(common, out, to_json(r), human.str());
      return 0;
    }
    if (mindet->parsed()) {
      auto alg = load_algebra(common);
      auto a = load_morphism(morphism_path, alg);
      DeterminationReport r;
      r.minimal_summands = minimal_determinator(a);
      r.verdict = is_right_determined(a, direct_sum_module(r.minimal_summands, alg));
      emit(common, out, to_json(r), "minimal determinator: " + summands_string(r.minimal_summands) + "\n");
      return 0;
    }
    if (ar->parsed()) {
      auto alg = load_algebra(common);
      auto z = load_module(z_path, alg, "--z");
      auto s = almost_split_ending_at(z);
      const auto middle = indecomposable_decomposition(s.morphism.source());
      Json j;
      j["morphism"] = to_json(s.morphism);
      j["middleSummands"] = Json::array();
      for (const auto& m : middle) j["middleSummands"].push_back(to_json(m));
      j["tau"] = s.kernel ? to_json(s.kernel->object) : Json(nullptr);
      std::ostringstream human;
      if (dot) {
        const auto left = s.kernel ? dims_string(s.kernel->object) : std::string("0");
        human << "digraph ar {\n  rankdir=LR;\n"
              << "  tau [label=\"" << left << "\"];\n"
              << "  middle [label=\"" << summands_string(middle) << "\"];\n"
              << "  z [label=\"" << dims_string(z) << "\"];\n"
              << "  tau -> middle;\n  middle -> z;\n}\n";
      } else {
        human << "middle term: " << summands_string(middle) << "\n";
        if (s.kernel)
          human << "tau Z: " << dims_string(s.kernel->object) << "\n";
        else
          human << "Z is projective\n";
      }
      if (!common.out.empty()) save_json_file(common.out, j);
      if (common.json && !dot)
        out << j.dump(2) << '\n';
      else
        out << human.str();
      return 0;
    }
    if (poset->parsed()) {
      auto p = poset_from_json(load_json_file(poset_path));
      const auto x = p.index(px), y = p.index(py);
      Json j;
      j["candidates"] = Json::array();
      for (auto c : determinator_candidates(p, x, y)) j["candidates"].push_back(p.label(c));
      bool verdict = false;
      if (!pd.empty()) {
        std::vector<std::size_t> d;
        std::stringstream ss(pd);
        std::string item;
        while (std::getline(ss, item, ',')) d.push_back(p.index(item));
        verdict = class_determined(p, x, y, d);
      } else {
        if (pc.empty()) throw InputError("poset needs --c or --d");
        verdict = object_determines(p, x, y, p.index(pc));
      }
      j["verdict"] = verdict;
      emit(common, out, j, std::string("determined: ") + (verdict ? "yes" : "no") + "\n");
      return 0;
    }
    if (oracle->parsed()) {
      auto alg = load_algebra(common);
      auto a = load_morphism(morphism_path, alg);
      auto c = load_module(c_path, alg, "--c");
      auto family = enumerate_test_modules(alg, parse_max_dim(common.max_dim, *alg));
      auto ce = refute_determination(a, c, family);
      Json j;
      j["familySize"] = family.size();
      j["counterexample"] = ce ? to_json(*ce) : Json(nullptr);
      std::ostringstream human;
      human << "searched " << family.size() << " modules: "
            << (ce ? "counterexample from " + dims_string(ce->source()) : std::string("no counterexample")) << "\n";
      emit(common, out, j, human.str());
      return 0;
    }
    if (claim->parsed()) {
      auto alg = load_algebra(common);
      auto a = load_morphism(morphism_path, alg);
      auto r = check_auslander_claim(a);
      std::ostringstream human;
      human << "claimed determinator: " << summands_string(r.claim_summands) << "\n"
            << "minimal determinator: " << summands_string(r.minimal_summands) << "\n"
            << "claim sufficient: " << (*r.auslander_claim_agrees ? "yes" : "no") << "\n"
            << "claim has unneeded summands: " << (*r.claim_excess ? "yes" : "no") << "\n";
      emit(common, out, to_json(r), human.str());
      return 0;
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return 1;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 1;
}

}  // namespace morphdet::cli
