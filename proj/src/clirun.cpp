#include "simpcat/clirun.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <ostream>

#include "CLI11.hpp"
#include "simpcat/corpus.hpp"
#include "simpcat/io.hpp"

namespace simpcat {

namespace {

struct Workspace {
  int cap = 3;
  int delta_max = 2;
  std::string out_dir;
  std::string format = "text";
};

bool looks_like_path(const std::string& name) {
  return name.find('/') != std::string::npos ||
         name.size() > 5 && name.substr(name.size() - 5) == ".json";
}

DiagramSCat resolve_diagram(const Corpus& fixtures, const std::string& name) {
  if (looks_like_path(name)) return diagram_scat_from_json(read_file(name));
  return fixtures.diagram(name);
}

MonSCat resolve_monoidal(const Corpus& fixtures, const std::string& name) {
  if (looks_like_path(name)) return monoidal_from_json(read_file(name));
  return fixtures.monoidal(name);
}

void emit(const Workspace& ws, Certificate& cert, const std::string& stem,
          std::ostream& out) {
  if (!ws.out_dir.empty()) {
    std::filesystem::create_directories(ws.out_dir);
    write_file(ws.out_dir + "/" + stem + ".cert.json",
               render_structured(cert));
  }
  out << (ws.format == "structured" ? render_structured(cert)
                                    : render_text(cert));
  if (ws.format == "structured") out << "\n";
}

void write_artifact(const Workspace& ws, const std::string& name,
                    const std::string& content) {
  if (ws.out_dir.empty()) return;
  std::filesystem::create_directories(ws.out_dir);
  write_file(ws.out_dir + "/" + name, content);
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  Workspace ws;
  std::string base_name, scat_name, diagram_name, monoidal_name, sset_path,
      nerve_of, fixture_name, mode = "inner";
  int nmax = 2, level = 1, horn_dim = 2;

  CLI::App app{"truncated simplicial sets, enriched nerves and their "
               "comparison certificates"};
  app.require_subcommand(1);
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--cap", ws.cap, "dimension cap");
    cmd->add_option("--delta-max", ws.delta_max, "simplex-category bound");
    cmd->add_option("--out", ws.out_dir, "output directory");
    cmd->add_option("--format", ws.format, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
  };

  CLI::App* nerve = app.add_subcommand("nerve", "ordinary nerve of a base");
  nerve->add_option("--base", base_name)->required();
  add_common(nerve);

  CLI::App* coherent =
      app.add_subcommand("coherent-nerve", "homotopy-coherent nerve");
  coherent->add_option("--scat", scat_name)->required();
  add_common(coherent);

  CLI::App* relative =
      app.add_subcommand("relative-nerve", "relative nerve of a diagram");
  relative->add_option("--base", base_name)->required();
  relative->add_option("--diagram", diagram_name)->required();
  add_common(relative);

  CLI::App* gr = app.add_subcommand("grothendieck",
                                    "total category of a diagram");
  gr->add_option("--diagram", diagram_name)->required();
  add_common(gr);

  CLI::App* oper = app.add_subcommand("operadic-nerve",
                                      "nerve of the category of operators");
  oper->add_option("--monoidal", monoidal_name)->required();
  add_common(oper);

  CLI::App* check = app.add_subcommand("check", "verification certificates");
  check->require_subcommand(1);

  CLI::App* c_gr = check->add_subcommand(
      "gr-relnerve", "total-category nerve against the relative nerve");
  c_gr->add_option("--diagram", diagram_name)->required();
  c_gr->add_option("--nmax", nmax);
  add_common(c_gr);

  CLI::App* c_ct = check->add_subcommand(
      "cotimes-gr", "category of operators against the power construction");
  c_ct->add_option("--monoidal", monoidal_name)->required();
  add_common(c_ct);

  CLI::App* c_fib = check->add_subcommand("fibers", "monoidal fiber condition");
  c_fib->add_option("--monoidal", monoidal_name)->required();
  c_fib->add_option("--level", level);
  add_common(c_fib);

  CLI::App* c_op = check->add_subcommand("opposites",
                                         "strict opposite comparisons");
  c_op->add_option("--monoidal", monoidal_name)->required();
  add_common(c_op);

  CLI::App* c_opf = check->add_subcommand("opfibration",
                                          "coCartesian lift search");
  c_opf->add_option("--diagram", diagram_name);
  c_opf->add_option("--fixture", fixture_name,
                    "named counterexample, e.g. no-lift");
  add_common(c_opf);

  CLI::App* c_qc = check->add_subcommand("quasicat", "horn filler search");
  c_qc->add_option("--sset", sset_path, "path to a simplicial set document");
  c_qc->add_option("--nerve-of", nerve_of, "corpus base category");
  c_qc->add_option("--mode", mode)->check(CLI::IsMember({"inner", "all"}));
  c_qc->add_option("--d", horn_dim);
  add_common(c_qc);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  auto start = std::chrono::steady_clock::now();
  try {
    Corpus fixtures = corpus(ws.cap);

    if (*nerve) {
      FinCatPtr D = fixtures.fincat(base_name);
      OrdinaryNerve N = ordinary_nerve(D, ws.cap);
      Certificate cert;
      cert.command = "nerve";
      cert.inputs[base_name] = content_hash(fincat_to_json(*D));
      Report rep = validate_sset(*N.sset);
      cert.check("output passes validation", rep.ok(), rep.summary());
      cert.counts["cells"] = cell_counts(*N.sset);
      write_artifact(ws, "nerve.json", sset_to_json(*N.sset));
      write_artifact(ws, "nerve.sidecar.json", ordinary_nerve_sidecar(N));
      cert.wall_ms = ms_since(start);
      emit(ws, cert, "nerve", out);
      return cert.pass() ? 0 : 1;
    }
    if (*coherent) {
      SCatPtr K = fixtures.scat(scat_name);
      CoherentNerve N = coherent_nerve(K, ws.cap);
      Certificate cert;
      cert.command = "coherent-nerve";
      cert.inputs[scat_name] = content_hash(scat_to_json(*K));
      Report rep = validate_sset(*N.sset);
      cert.check("output passes validation", rep.ok(), rep.summary());
      cert.counts["cells"] = cell_counts(*N.sset);
      write_artifact(ws, "coherent-nerve.json", sset_to_json(*N.sset));
      write_artifact(ws, "coherent-nerve.sidecar.json",
                     coherent_nerve_sidecar(N));
      cert.wall_ms = ms_since(start);
      emit(ws, cert, "coherent-nerve", out);
      return cert.pass() ? 0 : 1;
    }
    if (*relative) {
      FinCatPtr D = fixtures.fincat(base_name);
      DiagramSSet f;
      std::string diagram_hash;
      if (diagram_name == "constant-point") {
        f = constant_point_diagram(D, ws.cap);
        diagram_hash = content_hash("constant-point");
      } else {
        // the nerve of a diagram of enriched categories
        DiagramSCat F = resolve_diagram(fixtures, diagram_name);
        diagram_hash = content_hash(diagram_scat_to_json(F));
        NervedDiagram ND = nerve_diagram(F, ws.cap);
        f = ND.diagram;
      }
      RelativeNerve R = relative_nerve(D, f, ws.cap);
      Certificate cert;
      cert.command = "relative-nerve";
      cert.inputs[base_name] = content_hash(fincat_to_json(*D));
      cert.inputs[diagram_name] = diagram_hash;
      Report rep = validate_sset(*R.sset);
      cert.check("output passes validation", rep.ok(), rep.summary());
      Report proj = validate_ssetmap(R.projection);
      cert.check("projection is simplicial", proj.ok(), proj.summary());
      cert.counts["cells"] = cell_counts(*R.sset);
      write_artifact(ws, "relative-nerve.json", sset_to_json(*R.sset));
      write_artifact(ws, "relative-nerve.sidecar.json",
                     relative_nerve_sidecar(R));
      cert.wall_ms = ms_since(start);
      emit(ws, cert, "relative-nerve", out);
      return cert.pass() ? 0 : 1;
    }
    if (*gr) {
      DiagramSCat F = resolve_diagram(fixtures, diagram_name);
      GrCat E = grothendieck(F);
      Certificate cert;
      cert.command = "grothendieck";
      cert.inputs[diagram_name] = content_hash(diagram_scat_to_json(F));
      Report rep = validate_scat(*E.total);
      cert.check("total category passes validation", rep.ok(), rep.summary());
      Report prj = validate_sfunctor(E.projection);
      cert.check("projection is a strict functor", prj.ok(), prj.summary());
      write_artifact(ws, "grothendieck.json", scat_to_json(*E.total));
      cert.wall_ms = ms_since(start);
      emit(ws, cert, "grothendieck", out);
      return cert.pass() ? 0 : 1;
    }
    if (*oper) {
      MonSCat C = resolve_monoidal(fixtures, monoidal_name);
      OperadicNerve X = operadic_nerve(C, ws.delta_max, ws.cap);
      Certificate cert;
      cert.command = "operadic-nerve";
      cert.inputs[monoidal_name] = content_hash(monoidal_to_json(C));
      Report rep = validate_sset(*X.nerve.sset);
      cert.check("output passes validation", rep.ok(), rep.summary());
      Report proj = validate_ssetmap(X.projection);
      cert.check("projection is simplicial", proj.ok(), proj.summary());
      cert.counts["cells"] = cell_counts(*X.nerve.sset);
      write_artifact(ws, "operadic-nerve.json", sset_to_json(*X.nerve.sset));
      write_artifact(ws, "operadic-nerve.sidecar.json",
                     coherent_nerve_sidecar(X.nerve));
      cert.wall_ms = ms_since(start);
      emit(ws, cert, "operadic-nerve", out);
      return cert.pass() ? 0 : 1;
    }
    if (*c_gr) {
      DiagramSCat F = resolve_diagram(fixtures, diagram_name);
      Certificate cert = check_gr_relnerve_iso(F, nmax);
      cert.inputs[diagram_name] = content_hash(diagram_scat_to_json(F));
      emit(ws, cert, "gr-relnerve", out);
      return cert.pass() ? 0 : 1;
    }
    if (*c_ct) {
      MonSCat C = resolve_monoidal(fixtures, monoidal_name);
      Certificate cert = check_cotimes_gr_iso(C, ws.delta_max);
      cert.inputs[monoidal_name] = content_hash(monoidal_to_json(C));
      emit(ws, cert, "cotimes-gr", out);
      return cert.pass() ? 0 : 1;
    }
    if (*c_fib) {
      MonSCat C = resolve_monoidal(fixtures, monoidal_name);
      int cap = std::min(ws.cap, C.cat->cap);
      OperadicNerve X = operadic_nerve(C, ws.delta_max, cap);
      Certificate cert = check_monoidal_fibers(C, X, level);
      cert.inputs[monoidal_name] = content_hash(monoidal_to_json(C));
      emit(ws, cert, "fibers", out);
      return cert.pass() ? 0 : 1;
    }
    if (*c_op) {
      MonSCat C = resolve_monoidal(fixtures, monoidal_name);
      Certificate cert =
          check_op_theorems(C, ws.delta_max, std::min(ws.cap, C.cat->cap));
      cert.inputs[monoidal_name] = content_hash(monoidal_to_json(C));
      emit(ws, cert, "opposites", out);
      return cert.pass() ? 0 : 1;
    }
    if (*c_opf) {
      Certificate cert;
      cert.command = "check opfibration";
      if (!fixture_name.empty()) {
        if (fixture_name != "no-lift")
          throw InputError("unknown fixture: " + fixture_name);
        NoLiftFixture fx = no_lift_fixture(ws.cap);
        cert.inputs[fixture_name] = content_hash(scat_to_json(*fx.total));
        Report rep = is_opfibration(fx.projection, std::min(2, ws.cap));
        cert.check("every base arrow admits a coCartesian lift", rep.ok(),
                   rep.summary());
      } else if (!diagram_name.empty()) {
        DiagramSCat F = resolve_diagram(fixtures, diagram_name);
        GrCat E = grothendieck(F);
        cert.inputs[diagram_name] = content_hash(diagram_scat_to_json(F));
        Report rep = is_opfibration(E.projection, std::min(2, ws.cap));
        cert.check("every base arrow admits a coCartesian lift", rep.ok(),
                   rep.summary());
      } else {
        throw InputError("check opfibration needs --diagram or --fixture");
      }
      cert.wall_ms = ms_since(start);
      emit(ws, cert, "opfibration", out);
      return cert.pass() ? 0 : 1;
    }
    if (*c_qc) {
      TruncatedSSet X;
      std::string input_name;
      if (!sset_path.empty()) {
        X = sset_from_json(read_file(sset_path));
        input_name = sset_path;
      } else if (!nerve_of.empty()) {
        X = *ordinary_nerve(fixtures.fincat(nerve_of), ws.cap).sset;
        input_name = "nerve of " + nerve_of;
      } else {
        throw InputError("check quasicat needs --sset or --nerve-of");
      }
      Certificate cert;
      cert.command = "check quasicat";
      cert.inputs[input_name] = content_hash(sset_to_json(X));
      HornReport rep =
          horn_check(X, mode == "all" ? HornMode::All : HornMode::Inner,
                     std::min(horn_dim, X.cap));
      std::string detail;
      if (!rep.ok()) {
        const auto& u = rep.unfilled.front();
        detail = "unfilled horn (" + std::to_string(u.n) + "," +
                 std::to_string(u.k) + ")";
      }
      cert.check("all requested horns fill (results apply up to the cap)",
                 rep.ok(), detail);
      cert.counts["horns"] = {rep.horns_checked, rep.horns_filled};
      cert.wall_ms = ms_since(start);
      emit(ws, cert, "quasicat", out);
      return cert.pass() ? 0 : 1;
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand selected\n";
  return 2;
}

}  // namespace simpcat
