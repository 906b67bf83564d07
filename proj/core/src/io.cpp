#include "gcx/io.hpp"

#include <cctype>
#include <fstream>
#include <json.hpp>

namespace gcx::io {
namespace {

using nlohmann::json;

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::BadInput, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(errc::BadInput, path + ": " + e.what());
  }
  return j;
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) fail(errc::BadInput, "cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

bool is_file(const std::string& s) { return std::ifstream(s).good(); }

cplx parse_cplx(const json& j) {
  try {
    if (j.is_number()) return cplx(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2)
      return cplx(j[0].get<double>(), j[1].get<double>());
  } catch (const std::exception&) {
  }
  fail(errc::BadInput, "expected a complex value as [re, im]");
}

json dump_cplx(cplx z) { return json::array({z.real(), z.imag()}); }

json dump_group(const FiniteGroup& G) {
  return json{{"order", G.order}, {"table", G.table}};
}

FiniteGroup parse_group(const json& j, std::string* warning) {
  try {
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    int order = j.value("order", (int)table.size());
    if (order != (int)table.size())
      fail(errc::BadInput, "group order does not match table size");
    return gcx::load_group(table, warning);
  } catch (const json::exception& e) {
    fail(errc::BadInput, std::string("group file: ") + e.what());
  }
}

json dump_base(const FrobeniusBase& B) {
  json j{{"characters", B.characters}, {"codegrees", B.codegrees}};
  if (B.fusion) {
    json N = json::array();
    for (const auto& pi : B.fusion->N) {
      json ji = json::array();
      for (const auto& pij : pi) {
        json jij = json::array();
        for (cplx v : pij) jij.push_back(dump_cplx(v));
        ji.push_back(jij);
      }
      N.push_back(ji);
    }
    j["fusion"] = json{{"basis", B.fusion->basis},
                       {"N", N},
                       {"duality", B.fusion->duality}};
  }
  return j;
}

FrobeniusBase parse_base(const json& j, unsigned long long seed) {
  try {
    if (j.contains("fusion")) {
      const json& f = j.at("fusion");
      std::vector<std::vector<std::vector<cplx>>> N;
      for (const auto& pi : f.at("N")) {
        std::vector<std::vector<cplx>> vi;
        for (const auto& pij : pi) {
          std::vector<cplx> vij;
          for (const auto& e : pij) vij.push_back(parse_cplx(e));
          vi.push_back(std::move(vij));
        }
        N.push_back(std::move(vi));
      }
      auto duality = f.at("duality").get<std::vector<int>>();
      auto labels = f.value("basis", std::vector<std::string>{});
      FrobeniusBase B = diagonalize_fusion_ring(N, duality, labels, kDefaultTol, seed);
      if (j.contains("codegrees")) {
        auto want = j.at("codegrees").get<std::vector<double>>();
        if (want.size() != B.codegrees.size())
          fail(errc::BadInput, "codegree count does not match fusion ring");
        for (size_t i = 0; i < want.size(); ++i)
          if (std::abs(want[i] - B.codegrees[i]) > 1e-6)
            fail(errc::BadInput, "declared codegrees disagree with the fusion ring");
      }
      if (j.contains("characters")) {
        auto names = j.at("characters").get<std::vector<std::string>>();
        if (names.size() == B.characters.size()) B.characters = names;
      }
      return B;
    }
    auto codegrees = j.at("codegrees").get<std::vector<double>>();
    auto labels = j.value("characters", std::vector<std::string>{});
    return build_base(codegrees, labels);
  } catch (const json::exception& e) {
    fail(errc::BadInput, std::string("base file: ") + e.what());
  }
}

json dump_cochain(const Cochain& c) {
  json v = json::array();
  if (c.degree == 1) {
    for (int g = 0; g < c.N; ++g) {
      json row = json::array();
      for (int chi = 0; chi < c.n; ++chi) row.push_back(dump_cplx(c.at(g, chi)));
      v.push_back(row);
    }
  } else if (c.degree == 2) {
    for (int g = 0; g < c.N; ++g) {
      json rg = json::array();
      for (int h = 0; h < c.N; ++h) {
        json row = json::array();
        for (int chi = 0; chi < c.n; ++chi) row.push_back(dump_cplx(c.at(g, h, chi)));
        rg.push_back(row);
      }
      v.push_back(rg);
    }
  } else {
    for (int g = 0; g < c.N; ++g) {
      json rg = json::array();
      for (int h = 0; h < c.N; ++h) {
        json rh = json::array();
        for (int k = 0; k < c.N; ++k) {
          json row = json::array();
          for (int chi = 0; chi < c.n; ++chi)
            row.push_back(dump_cplx(c.at(g, h, k, chi)));
          rh.push_back(row);
        }
        rg.push_back(rh);
      }
      v.push_back(rg);
    }
  }
  return json{{"degree", c.degree}, {"values", v}};
}

// values indexed [g][h]([k])[chi]; a scalar-per-group-tuple layout (no chi
// axis) is also accepted and broadcast across characters.
Cochain parse_cochain(const json& j, int N, int n) {
  try {
    int degree = j.at("degree").get<int>();
    if (degree < 1 || degree > 3)
      fail(errc::UnsupportedDegree, "cochain degree must be 1, 2 or 3");
    Cochain c = Cochain::ones(degree, N, n);
    const json& v = j.at("values");
    // leaves: [[re,im],...] per character, or a single [re,im] / number
    // broadcast across characters
    auto fill = [&](cplx* dst, const json& cell) {
      if (cell.is_array() && !cell.empty() && cell[0].is_array()) {
        if ((int)cell.size() != n)
          fail(errc::BadInput, "cochain values: wrong character count");
        for (int chi = 0; chi < n; ++chi) dst[chi] = parse_cplx(cell[chi]);
      } else {
        cplx z = parse_cplx(cell);
        for (int chi = 0; chi < n; ++chi) dst[chi] = z;
      }
    };
    if ((int)v.size() != N) fail(errc::BadInput, "cochain values: wrong group size");
    for (int g = 0; g < N; ++g) {
      if (degree == 1) {
        fill(&c.values[c.idx1(g, 0)], v[g]);
        continue;
      }
      if ((int)v[g].size() != N) fail(errc::BadInput, "cochain values: wrong group size");
      for (int h = 0; h < N; ++h) {
        if (degree == 2) {
          fill(&c.values[c.idx2(g, h, 0)], v[g][h]);
          continue;
        }
        if ((int)v[g][h].size() != N)
          fail(errc::BadInput, "cochain values: wrong group size");
        for (int k = 0; k < N; ++k) fill(&c.values[c.idx3(g, h, k, 0)], v[g][h][k]);
      }
    }
    refresh_normalized(c);
    return c;
  } catch (const json::exception& e) {
    fail(errc::BadInput, std::string("cochain file: ") + e.what());
  }
}

FusionData group_ring_fusion(const FiniteGroup& G, std::vector<std::string> labels) {
  FusionData F;
  F.basis = std::move(labels);
  F.N.assign(G.order, std::vector<std::vector<cplx>>(
                          G.order, std::vector<cplx>(G.order, cplx(0))));
  for (int i = 0; i < G.order; ++i)
    for (int j = 0; j < G.order; ++j) F.N[i][j][G.mul(i, j)] = 1.0;
  F.duality = G.inverse;
  return F;
}

} // namespace

FiniteGroup load_group(const std::string& spec, std::string* warning) {
  if (is_file(spec)) return parse_group(read_json(spec), warning);
  if (spec == "klein4") return klein_four();
  if (spec == "s3") return symmetric3();
  if (spec == "d4") return dihedral4();
  if (spec.size() >= 2 && (spec[0] == 'c' || spec[0] == 'z')) {
    int m = 0;
    for (size_t i = 1; i < spec.size(); ++i) {
      if (!isdigit((unsigned char)spec[i])) { m = -1; break; }
      m = m * 10 + (spec[i] - '0');
    }
    if (m >= 1 && m <= 12) return cyclic_group(m);
  }
  fail(errc::BadInput, "unknown group '" + spec + "'");
}

void save_group(const std::string& path, const FiniteGroup& G) {
  write_json(path, dump_group(G));
}

FrobeniusBase load_base(const std::string& spec, unsigned long long seed) {
  if (is_file(spec)) return parse_base(read_json(spec), seed);
  if (spec == "c1" || spec == "trivial") return build_base({1.0}, {"1"});
  if (spec == "z2") {
    FiniteGroup Z2 = cyclic_group(2);
    auto F = group_ring_fusion(Z2, {"1", "psi"});
    return diagonalize_fusion_ring(F.N, F.duality, F.basis, kDefaultTol, seed);
  }
  if (spec == "toric") {
    FiniteGroup K = klein_four();
    auto F = group_ring_fusion(K, {"1", "e", "m", "f"});
    return diagonalize_fusion_ring(F.N, F.duality, F.basis, kDefaultTol, seed);
  }
  if (spec == "fib") {
    std::vector<std::vector<std::vector<cplx>>> N(
        2, std::vector<std::vector<cplx>>(2, std::vector<cplx>(2, cplx(0))));
    N[0][0][0] = N[0][1][1] = N[1][0][1] = 1.0; // unit
    N[1][1][0] = N[1][1][1] = 1.0;              // tau^2 = 1 + tau
    return diagonalize_fusion_ring(N, {0, 1}, {"1", "tau"}, kDefaultTol, seed);
  }
  fail(errc::BadInput, "unknown base '" + spec + "'");
}

void save_base(const std::string& path, const FrobeniusBase& B) {
  write_json(path, dump_base(B));
}

GAction load_action(const std::string& spec, const FrobeniusBase& base,
                    const FiniteGroup& group) {
  if (is_file(spec)) {
    json j = read_json(spec);
    try {
      return install_action(base, group, j.at("perm").get<std::vector<std::vector<int>>>());
    } catch (const json::exception& e) {
      fail(errc::BadInput, std::string("action file: ") + e.what());
    }
  }
  if (spec == "trivial") return trivial_action(base, group);
  if (spec == "swap") {
    // character permutation induced by exchanging two fusion basis elements
    // with equal rows (the e <-> m swap): chi -> chi' with X[s(i)][chi'] = X[i][chi]
    if (!base.fusion || base.fusion->basis.size() != 4)
      fail(errc::BadInput, "'swap' needs a 4-element fusion basis");
    std::vector<int> sigma{0, 2, 1, 3};
    const auto& X = base.fusion->X;
    const int n = base.dim();
    std::vector<int> pi(n, -1);
    for (int chi = 0; chi < n; ++chi)
      for (int c2 = 0; c2 < n; ++c2) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
          ok = std::abs(X[sigma[i]][c2] - X[i][chi]) < 1e-6;
        if (ok) { pi[chi] = c2; break; }
      }
    for (int chi = 0; chi < n; ++chi)
      if (pi[chi] < 0) fail(errc::BadInput, "'swap' does not act on this base");
    if (group.order != 2) fail(errc::BadInput, "'swap' expects the group c2");
    std::vector<int> id(n);
    for (int chi = 0; chi < n; ++chi) id[chi] = chi;
    return install_action(base, group, {id, pi});
  }
  fail(errc::BadInput, "unknown action '" + spec + "'");
}

void save_action(const std::string& path, const GAction& A) {
  write_json(path, json{{"perm", A.perm}});
}

Cochain load_cochain(const std::string& spec, const GAction& action) {
  const int N = action.group.order, n = action.base.dim();
  if (is_file(spec)) return parse_cochain(read_json(spec), N, n);
  if (spec == "trivial") return Cochain::ones(2, N, n);
  if (spec == "twist") {
    if (N != 4) fail(errc::BadInput, "'twist' is the klein4 cocycle");
    // phi(g,h) = (-1)^{g2 h1} with bits 1=(1,0), 2=(0,1), 3=(1,1)
    auto bit = [](int g, int k) { return k == 0 ? (g == 1 || g == 3) : (g == 2 || g == 3); };
    Cochain c = Cochain::ones(2, N, n);
    for (int g = 0; g < N; ++g)
      for (int h = 0; h < N; ++h)
        if (bit(g, 1) && bit(h, 0))
          for (int chi = 0; chi < n; ++chi) c.at(g, h, chi) = -1.0;
    refresh_normalized(c);
    return c;
  }
  fail(errc::BadInput, "unknown cocycle '" + spec + "'");
}

void save_cochain(const std::string& path, const Cochain& c) {
  write_json(path, dump_cochain(c));
}

CrossedAlgebra load_algebra(const std::string& path) {
  json j = read_json(path);
  try {
    std::string warn;
    FiniteGroup G = parse_group(j.at("group"), &warn);
    FrobeniusBase B = parse_base(j.at("base"), 0);
    GAction act = install_action(
        B, G, j.at("action").at("perm").get<std::vector<std::vector<int>>>());
    Cochain phi = parse_cochain(j.at("phi"), G.order, B.dim());
    Cochain theta = parse_cochain(j.at("theta"), G.order, B.dim());
    if (phi.degree != 2 || theta.degree != 1)
      fail(errc::BadInput, "algebra file: phi must be degree 2, theta degree 1");
    CrossedAlgebra A;
    A.base = B;
    A.group = G;
    A.action = act;
    A.phi = std::move(phi);
    A.theta = std::move(theta);
    const int N = G.order, n = B.dim();
    A.basis_index.assign(N, std::vector<int>(n, -1));
    for (int g = 0; g < N; ++g)
      for (int chi = 0; chi < n; ++chi)
        if (act.perm[g][chi] == chi) {
          A.basis_index[g][chi] = (int)A.basis.size();
          A.basis.emplace_back(g, chi);
        }
    return A;
  } catch (const json::exception& e) {
    fail(errc::BadInput, std::string("algebra file: ") + e.what());
  }
}

void save_algebra(const std::string& path, const CrossedAlgebra& A) {
  json j{{"group", dump_group(A.group)},
         {"base", dump_base(A.base)},
         {"action", json{{"perm", A.action.perm}}},
         {"phi", dump_cochain(A.phi)},
         {"theta", dump_cochain(A.theta)}};
  write_json(path, j);
}

namespace {
AlgebraElement parse_element(const json& j, const CrossedAlgebra& A) {
  AlgebraElement x;
  x.owner = &A;
  try {
    for (const auto& t : j.at("coeffs")) {
      int g = t.at(0).get<int>(), chi = t.at(1).get<int>();
      if (g < 0 || g >= A.group.order || chi < 0 || chi >= A.base.dim())
        fail(errc::BadInput, "element coefficient out of range");
      if (A.index_of(g, chi) < 0)
        fail(errc::BadInput, "element uses a pair (g,chi) with chi not fixed by g");
      x.coeffs[{g, chi}] += parse_cplx(t.at(2));
    }
  } catch (const json::exception& e) {
    fail(errc::BadInput, std::string("element: ") + e.what());
  }
  return x;
}
} // namespace

AlgebraElement load_element(const std::string& path, const CrossedAlgebra& A) {
  return parse_element(read_json(path), A);
}

Instance load_instance(const std::string& spec, const CrossedAlgebra& A) {
  Instance I;
  if (!is_file(spec)) {
    if (spec == "abab" && A.group.order == 4) {
      // E_a E_b E_a E_b over a one-character base
      for (int m : {1, 2, 1, 2}) I.elems.emplace_back(m, basis_element(A, m, 0));
      return I;
    }
    fail(errc::BadInput, "unknown instance '" + spec + "'");
  }
  json j = read_json(spec);
  try {
    for (const auto& p : j.value("pairs", json::array())) {
      int g = p.at(0).get<int>(), h = p.at(1).get<int>();
      if (g < 0 || g >= A.group.order || h < 0 || h >= A.group.order)
        fail(errc::BadInput, "instance pair out of range");
      I.pairs.emplace_back(g, h);
    }
    for (const auto& e : j.value("elems", json::array())) {
      int m = e.at(0).get<int>();
      if (m < 0 || m >= A.group.order)
        fail(errc::BadInput, "instance sector out of range");
      I.elems.emplace_back(m, parse_element(e.at(1), A));
    }
  } catch (const json::exception& e) {
    fail(errc::BadInput, std::string("instance file: ") + e.what());
  }
  return I;
}

CrossedSMatrixData load_smatrix(const std::string& path) {
  json j = read_json(path);
  CrossedSMatrixData S;
  try {
    S.sector = j.at("sector").get<int>();
    S.labels = j.at("labels").get<std::vector<std::string>>();
    S.dims = j.at("dims").get<std::vector<double>>();
    S.dimB = j.at("dimB").get<double>();
    S.chars = j.value("chars", std::vector<int>{});
    S.char_dims = j.value("char_dims", std::vector<double>{});
    for (const auto& row : j.at("matrix")) {
      std::vector<cplx> r;
      for (const auto& e : row) r.push_back(parse_cplx(e));
      S.matrix.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    fail(errc::BadInput, std::string("smatrix file: ") + e.what());
  }
  if (S.chars.empty())
    for (size_t c = 0; S.matrix.size() && c < S.matrix[0].size(); ++c)
      S.chars.push_back((int)c);
  if (S.char_dims.empty() && !S.matrix.empty()) {
    // unit-row convention: first row is the dims row of the trivial sector
    for (cplx v : S.matrix[0]) S.char_dims.push_back(v.real());
  }
  return S;
}

void save_smatrix(const std::string& path, const CrossedSMatrixData& S) {
  json m = json::array();
  for (const auto& row : S.matrix) {
    json r = json::array();
    for (cplx v : row) r.push_back(dump_cplx(v));
    m.push_back(r);
  }
  write_json(path, json{{"sector", S.sector},
                        {"labels", S.labels},
                        {"dims", S.dims},
                        {"chars", S.chars},
                        {"char_dims", S.char_dims},
                        {"matrix", m},
                        {"dimB", S.dimB}});
}

} // namespace gcx::io
