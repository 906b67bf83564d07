#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <json.hpp>

#include "gcx/io.hpp"

using namespace gcx;
using nlohmann::json;

namespace {

struct Args {
  std::string group, base, action = "trivial", algebra, instance, out;
  std::vector<std::string> cocycles;
  double tol = kDefaultTol;
  unsigned long long seed = 0;
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x + 0.0); // normalize -0
  return buf;
}

std::string fmt(cplx z) {
  if (std::abs(z.imag()) < 5e-13) return fmt(z.real());
  return fmt(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt(std::abs(z.imag())) + "i";
}

json jc(cplx z) { return json::array({z.real(), z.imag()}); }

void write_out(const std::string& path, const json& j) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) fail(errc::BadInput, "cannot open " + path + " for writing");
  f << j.dump(2) << "\n";
}

GAction make_action(const Args& a) {
  FiniteGroup G = io::load_group(a.group);
  FrobeniusBase B = io::load_base(a.base, a.seed);
  return io::load_action(a.action, B, G);
}

int cmd_construct(const Args& a) {
  GAction action = make_action(a);
  if (a.cocycles.size() != 1) fail(errc::BadInput, "construct needs exactly one --cocycle");
  Cochain phi = io::load_cochain(a.cocycles[0], action);
  CrossedAlgebra A = construct_extension(action, phi, a.tol);
  std::printf("constructed A^phi: |G| = %d, base dim = %d, algebra dim = %d\n",
              A.group.order, A.base.dim(), A.dim());
  if (!a.out.empty()) io::save_algebra(a.out, A);
  return 0;
}

int cmd_verify(const Args& a) {
  CrossedAlgebra A = io::load_algebra(a.algebra);
  AxiomReport R = verify_crossed_axioms(A, a.tol);
  json checks = json::array();
  for (const auto& c : R.checks) {
    std::printf("%-24s %s  residual %s%s%s\n", c.name.c_str(),
                c.pass ? "pass" : "FAIL", fmt(c.residual).c_str(),
                c.witness.empty() ? "" : "  at ", c.witness.c_str());
    checks.push_back(json{{"name", c.name},
                          {"pass", c.pass},
                          {"residual", c.residual},
                          {"witness", c.witness}});
  }
  write_out(a.out, json{{"all_pass", R.all_pass()}, {"checks", checks}});
  if (!R.all_pass()) {
    std::fprintf(stderr, "AxiomsFail: axiom verification failed\n");
    return 1;
  }
  std::printf("all axioms pass\n");
  return 0;
}

int cmd_verlinde(const Args& a) {
  CrossedAlgebra A = io::load_algebra(a.algebra);
  io::Instance I = io::load_instance(a.instance, A);
  cplx formula = I.pairs.empty() ? verlinde_genus0(A, I.elems)
                                 : verlinde_any_genus(A, I.pairs, I.elems);
  std::vector<AlgebraElement> prod;
  for (const auto& [g, h] : I.pairs) prod.push_back(omega(A, g, h));
  for (const auto& [m, x] : I.elems) prod.push_back(x);
  cplx oracle = brute_force_lambda(A, prod);
  double diff = std::abs(formula - oracle);
  std::printf("formula = %s\noracle  = %s\ndiff    = %s\n", fmt(formula).c_str(),
              fmt(oracle).c_str(), fmt(diff).c_str());
  write_out(a.out, json{{"formula", jc(formula)}, {"oracle", jc(oracle)}, {"diff", diff}});
  return diff <= std::max(a.tol, 1e-9) * 10 ? 0 : 1;
}

int cmd_fuse(const Args& a) {
  CrossedAlgebra A = io::load_algebra(a.algebra);
  std::vector<AlgebraElement> basis;
  std::vector<std::string> names;
  if (!a.instance.empty()) {
    io::Instance I = io::load_instance(a.instance, A);
    for (auto& [m, x] : I.elems) {
      basis.push_back(std::move(x));
      names.push_back("b" + std::to_string(names.size()));
    }
  } else {
    for (const auto& [g, chi] : A.basis) {
      basis.push_back(basis_element(A, g, chi));
      names.push_back("E[" + std::to_string(g) + "," + std::to_string(chi) + "]");
    }
  }
  FusionResult F = fusion_coefficients(A, basis, a.tol);
  json N = json::array();
  for (size_t i = 0; i < basis.size(); ++i) {
    json Ni = json::array();
    for (size_t j = 0; j < basis.size(); ++j) {
      json Nij = json::array();
      for (size_t k = 0; k < basis.size(); ++k) {
        cplx v = F.N[i][j][k];
        Nij.push_back(jc(v));
        if (std::abs(v) > 1e-10)
          std::printf("N[%s][%s][%s] = %s\n", names[i].c_str(), names[j].c_str(),
                      names[k].c_str(), fmt(v).c_str());
      }
      Ni.push_back(Nij);
    }
    N.push_back(Ni);
  }
  std::printf("nonnegative-integral: %s (residual %s)\n",
              F.nonneg_integral ? "yes" : "no", fmt(F.integrality_residual).c_str());
  write_out(a.out, json{{"labels", names},
                        {"N", N},
                        {"nonneg_integral", F.nonneg_integral},
                        {"integrality_residual", F.integrality_residual}});
  return 0;
}

int cmd_cohomology(const Args& a) {
  GAction action = make_action(a);
  if (a.cocycles.size() != 1)
    fail(errc::BadInput, "cohomology needs exactly one --cocycle");
  Cochain phi = io::load_cochain(a.cocycles[0], action);
  validate_cochain(action, phi, a.tol);
  CocycleWitness w;
  bool coc = is_cocycle(action, phi, a.tol, &w);
  std::printf("degree %d cochain on |G| = %d, n = %d\n", phi.degree,
              action.group.order, action.base.dim());
  std::printf("cocycle: %s\n", coc ? "yes" : "no");
  json j{{"degree", phi.degree}, {"is_cocycle", coc}};
  if (!coc) {
    std::printf("witness: (g,h,k,chi) = (%d,%d,%d,%d), residual %s\n", w.g, w.h, w.k,
                w.chi, fmt(w.residual).c_str());
    j["witness"] = json{{"g", w.g}, {"h", w.h}, {"k", w.k}, {"chi", w.chi},
                        {"residual", w.residual}};
    write_out(a.out, j);
    return 1;
  }
  if (phi.degree == 2) {
    Cochain ref = Cochain::ones(2, phi.N, phi.n);
    CohomologousResult R = cohomologous(action, phi, ref, 0, a.tol);
    const char* rel = R.rel == class_rel::yes   ? "trivial"
                      : R.rel == class_rel::no ? "nontrivial"
                                               : "unknown";
    std::printf("class: %s%s%s\n", rel, R.witness.empty() ? "" : "; witness ",
                R.witness.c_str());
    j["class"] = rel;
    if (!R.witness.empty()) j["witness"] = R.witness;
  }
  write_out(a.out, j);
  return 0;
}

int cmd_classify(const Args& a) {
  GAction action = make_action(a);
  Cochain phi1, phi2;
  if (a.cocycles.size() == 2) {
    phi1 = io::load_cochain(a.cocycles[0], action);
    phi2 = io::load_cochain(a.cocycles[1], action);
  } else if (a.cocycles.size() == 1 && !a.algebra.empty()) {
    phi1 = io::load_cochain(a.cocycles[0], action);
    phi2 = io::load_algebra(a.algebra).phi;
  } else {
    fail(errc::BadInput, "classify needs two --cocycle flags, or one plus --algebra");
  }
  CohomologousResult R = cohomologous(action, phi1, phi2, 0, a.tol);
  const char* rel = R.rel == class_rel::yes   ? "cohomologous"
                    : R.rel == class_rel::no ? "not cohomologous"
                                             : "unknown";
  std::printf("%s%s%s\n", rel, R.witness.empty() ? "" : "; witness ", R.witness.c_str());
  json j{{"relation", R.rel == class_rel::yes   ? "yes"
                      : R.rel == class_rel::no ? "no"
                                               : "unknown"}};
  if (!R.witness.empty()) j["witness"] = R.witness;
  write_out(a.out, j);
  return 0;
}

int cmd_smatrix(const Args& a) {
  CrossedAlgebra A = io::load_algebra(a.algebra);
  if (a.instance.empty()) fail(errc::BadInput, "smatrix needs --instance");
  json req = [&] {
    std::ifstream f(a.instance);
    if (!f) fail(errc::BadInput, "cannot open " + a.instance);
    json j;
    try { f >> j; } catch (const std::exception& e) {
      fail(errc::BadInput, a.instance + ": " + e.what());
    }
    return j;
  }();
  if (req.contains("sectors")) {
    // categorical Verlinde from previously written S-matrix files
    std::map<int, CrossedSMatrixData> S;
    for (const auto& p : req.at("sectors")) {
      CrossedSMatrixData d = io::load_smatrix(p.get<std::string>());
      S[d.sector] = std::move(d);
    }
    std::optional<Cochain> phi1;
    if (req.contains("phi1"))
      phi1 = io::load_cochain(req.at("phi1").get<std::string>(), A.action);
    std::vector<std::pair<int, int>> pairs, objects;
    for (const auto& p : req.value("pairs", json::array()))
      pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    for (const auto& o : req.value("objects", json::array()))
      objects.emplace_back(o.at(0).get<int>(), o.at(1).get<int>());
    CatVerlindeResult R = categorical_verlinde(S, A.action, phi1 ? &*phi1 : nullptr,
                                               pairs, objects, a.tol);
    std::printf("dim Hom = %s\nnonnegative integer: %s (residual %s)\n",
                fmt(R.value).c_str(), R.nonneg_integral ? "yes" : "no",
                fmt(R.residual).c_str());
    write_out(a.out, json{{"value", jc(R.value)},
                          {"nonneg_integral", R.nonneg_integral},
                          {"residual", R.residual}});
    return R.nonneg_integral ? 0 : 1;
  }
  int g = req.at("sector").get<int>();
  std::vector<std::string> labels = req.value("labels", std::vector<std::string>{});
  std::vector<AlgebraElement> rows;
  for (const auto& r : req.at("rows")) {
    AlgebraElement x;
    x.owner = &A;
    for (const auto& t : r.at("coeffs")) {
      cplx z = t.at(2).is_array() ? cplx(t.at(2)[0].get<double>(), t.at(2)[1].get<double>())
                                  : cplx(t.at(2).get<double>(), 0.0);
      x.coeffs[{t.at(0).get<int>(), t.at(1).get<int>()}] += z;
    }
    rows.push_back(std::move(x));
  }
  auto dims = req.at("dims").get<std::vector<double>>();
  auto char_dims = req.at("char_dims").get<std::vector<double>>();
  double dimB = req.value("dimB", -1.0);
  CrossedSMatrixData S =
      crossed_s_matrix(A, g, labels, rows, dims, char_dims, dimB, nullptr, a.tol);
  for (size_t i = 0; i < S.matrix.size(); ++i) {
    std::string line = S.labels[i] + ":";
    for (cplx v : S.matrix[i]) line += "  " + fmt(v);
    std::printf("%s\n", line.c_str());
  }
  UnitarityReport U = s_unitarity_check(S, a.tol);
  std::printf("unitarity (dimB = %s): %s, residual %s%s%s\n", fmt(S.dimB).c_str(),
              U.pass ? "pass" : "FAIL", fmt(U.residual).c_str(),
              U.witness.empty() ? "" : " at ", U.witness.c_str());
  if (!a.out.empty()) io::save_smatrix(a.out, S);
  return U.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"G-crossed Frobenius *-algebra toolkit"};
  app.require_subcommand(1);
  Args a;
  std::string verb;
  for (const char* name : {"verify", "construct", "verlinde", "fuse", "cohomology",
                           "classify", "smatrix"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--group", a.group);
    sub->add_option("--base", a.base);
    sub->add_option("--action", a.action);
    sub->add_option("--cocycle", a.cocycles);
    sub->add_option("--algebra", a.algebra);
    sub->add_option("--instance", a.instance);
    sub->add_option("--out", a.out);
    sub->add_option("--tol", a.tol);
    sub->add_option("--seed", a.seed);
    sub->callback([&verb, name] { verb = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    if (verb == "construct") return cmd_construct(a);
    if (verb == "verify") return cmd_verify(a);
    if (verb == "verlinde") return cmd_verlinde(a);
    if (verb == "fuse") return cmd_fuse(a);
    if (verb == "cohomology") return cmd_cohomology(a);
    if (verb == "classify") return cmd_classify(a);
    if (verb == "smatrix") return cmd_smatrix(a);
  } catch (const error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return e.code() == errc::BadInput ? 2 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
