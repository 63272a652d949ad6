#include "supmech/algebra_checks.hpp"

#include <map>
#include <utility>

#include "supmech/error.hpp"
#include "supmech/ncpoly.hpp"
#include "supmech/parser.hpp"

namespace supmech {

namespace {

struct TableEntry {
  const char* a;
  const char* b;
  const char* expect;
};

// Hand-tabulated quantum Poisson brackets {a,b} = (i/hbar)[a,b] of the
// extended Galilei generators; pairs not listed bracket to zero.
const TableEntry kPbTable[] = {
    {"J1", "J2", "-J3"}, {"J1", "J3", "J2"},  {"J2", "J3", "-J1"},
    {"J1", "K2", "-K3"}, {"J1", "K3", "K2"},  {"J2", "K1", "K3"},
    {"J2", "K3", "-K1"}, {"J3", "K1", "-K2"}, {"J3", "K2", "K1"},
    {"J1", "P2", "-P3"}, {"J1", "P3", "P2"},  {"J2", "P1", "P3"},
    {"J2", "P3", "-P1"}, {"J3", "P1", "-P2"}, {"J3", "P2", "P1"},
    {"K1", "H", "-P1"},  {"K2", "H", "-P2"},  {"K3", "H", "-P3"},
    {"K1", "P1", "-M"},  {"K2", "P2", "-M"},  {"K3", "P3", "-M"},
};

// The same relations transcribed separately as commutators.
const TableEntry kCommTable[] = {
    {"J1", "J2", "i*hbar*J3"},  {"J1", "J3", "-i*hbar*J2"},
    {"J2", "J3", "i*hbar*J1"},  {"J1", "K2", "i*hbar*K3"},
    {"J1", "K3", "-i*hbar*K2"}, {"J2", "K1", "-i*hbar*K3"},
    {"J2", "K3", "i*hbar*K1"},  {"J3", "K1", "i*hbar*K2"},
    {"J3", "K2", "-i*hbar*K1"}, {"J1", "P2", "i*hbar*P3"},
    {"J1", "P3", "-i*hbar*P2"}, {"J2", "P1", "-i*hbar*P3"},
    {"J2", "P3", "i*hbar*P1"},  {"J3", "P1", "i*hbar*P2"},
    {"J3", "P2", "-i*hbar*P1"}, {"K1", "H", "i*hbar*P1"},
    {"K2", "H", "i*hbar*P2"},   {"K3", "H", "i*hbar*P3"},
    {"K1", "P1", "i*hbar*M"},   {"K2", "P2", "i*hbar*M"},
    {"K3", "P3", "i*hbar*M"},
};

int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  if ((i == 0 && j == 1) || (i == 1 && j == 2) || (i == 2 && j == 0)) return 1;
  return -1;
}

ExactCheck compare(std::string id, const NcPoly& got, const NcPoly& expect) {
  ExactCheck c;
  c.id = std::move(id);
  c.expected = expect.str();
  c.got = got.str();
  c.ok = (got == expect);
  return c;
}

template <size_t N>
std::vector<ExactCheck> run_pair_table(const PresPtr& pres,
                                       const TableEntry (&table)[N],
                                       bool poisson, const char* prefix) {
  const Presentation* p = pres.get();
  std::map<std::pair<int, int>, std::string> expect;
  for (const auto& e : table) {
    int a = p->gen_index(e.a), b = p->gen_index(e.b);
    require(a >= 0 && b >= 0 && a < b, "bad table entry");
    require(expect.emplace(std::make_pair(a, b), e.expect).second,
            "duplicate table entry");
  }
  std::vector<ExactCheck> out;
  for (int a = 0; a < p->ngens(); ++a) {
    for (int b = a + 1; b < p->ngens(); ++b) {
      NcPoly ga = NcPoly::generator(p, a), gb = NcPoly::generator(p, b);
      NcPoly got = poisson ? quantum_pb(ga, gb) : supercommutator(ga, gb);
      auto it = expect.find({a, b});
      NcPoly want = it == expect.end() ? NcPoly::zero(p)
                                       : parse_expr(p, it->second);
      std::string id = std::string(prefix) + "{" + p->gen_name(a) + "," +
                       p->gen_name(b) + "}";
      out.push_back(compare(std::move(id), got, want));
    }
  }
  return out;
}

}  // namespace

std::vector<ExactCheck> verify_galilei_pb_table(const PresPtr& pres) {
  return run_pair_table(pres, kPbTable, true, "pb:");
}

std::vector<ExactCheck> verify_galilei_comm_table(const PresPtr& pres) {
  return run_pair_table(pres, kCommTable, false, "comm:");
}

CasimirChecks verify_galilei_casimirs(const PresPtr& pres) {
  const Presentation* p = pres.get();
  NcPoly c1 = parse_expr(p, "2*M*H - (P1^2 + P2^2 + P3^2)");
  NcPoly b[3] = {
      parse_expr(p, "M*J1 - (K2*P3 - K3*P2)"),
      parse_expr(p, "M*J2 - (K3*P1 - K1*P3)"),
      parse_expr(p, "M*J3 - (K1*P2 - K2*P1)"),
  };
  NcPoly c2 = b[0] * b[0] + b[1] * b[1] + b[2] * b[2];

  CasimirChecks out;
  NcPoly zero = NcPoly::zero(p);
  for (int g = 0; g < p->ngens(); ++g) {
    NcPoly gg = NcPoly::generator(p, g);
    out.main.push_back(compare("casimir:{C1," + p->gen_name(g) + "}",
                               quantum_pb(c1, gg), zero));
    out.main.push_back(compare("casimir:{C2," + p->gen_name(g) + "}",
                               quantum_pb(c2, gg), zero));
  }
  // B transforms as a vector under rotations and commutes with boosts,
  // translations, and time evolution.
  for (int k = 0; k < 3; ++k) {
    for (int j = 0; j < 3; ++j) {
      NcPoly want(p);
      for (int l = 0; l < 3; ++l) {
        int e = levi_civita(j, k, l);
        if (e != 0) want -= b[l].scaled(GaussRat(e));
      }
      NcPoly jj = NcPoly::generator(p, p->gen_index("J" + std::to_string(j + 1)));
      out.intermediate.push_back(compare(
          "casimir:{J" + std::to_string(j + 1) + ",B" + std::to_string(k + 1) + "}",
          quantum_pb(jj, b[k]), want));
    }
    for (const char* stem : {"K", "P"}) {
      for (int j = 0; j < 3; ++j) {
        std::string gn = stem + std::to_string(j + 1);
        NcPoly gg = NcPoly::generator(p, p->gen_index(gn));
        out.intermediate.push_back(
            compare("casimir:{" + gn + ",B" + std::to_string(k + 1) + "}",
                    quantum_pb(gg, b[k]), zero));
      }
    }
    NcPoly h = NcPoly::generator(p, p->gen_index("H"));
    out.intermediate.push_back(
        compare("casimir:{H,B" + std::to_string(k + 1) + "}",
                quantum_pb(h, b[k]), zero));
  }
  return out;
}

std::vector<ExactCheck> verify_reduced_observables(const PresPtr& pres) {
  const Presentation* p = pres.get();
  NcPoly x[3] = {parse_expr(p, "K1/m"), parse_expr(p, "K2/m"),
                 parse_expr(p, "K3/m")};
  NcPoly s[3] = {
      parse_expr(p, "J1 - (K2*P3 - K3*P2)/m"),
      parse_expr(p, "J2 - (K3*P1 - K1*P3)/m"),
      parse_expr(p, "J3 - (K1*P2 - K2*P1)/m"),
  };
  NcPoly bred[3] = {
      parse_expr(p, "m*J1 - (K2*P3 - K3*P2)"),
      parse_expr(p, "m*J2 - (K3*P1 - K1*P3)"),
      parse_expr(p, "m*J3 - (K1*P2 - K2*P1)"),
  };
  NcPoly u = parse_expr(p, "H - (P1^2 + P2^2 + P3^2)/(2*m)");
  NcPoly unit = NcPoly::unit(p);
  NcPoly zero = NcPoly::zero(p);
  Laurent msq = Laurent::param_pow(p->nparams(), p->param_index("m"), 2);

  std::vector<ExactCheck> out;
  auto tag = [](const std::string& body) { return "derived:" + body; };

  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      NcPoly pj = NcPoly::generator(p, p->gen_index("P" + std::to_string(j + 1)));
      out.push_back(compare(
          tag("{P" + std::to_string(j + 1) + ",X" + std::to_string(k + 1) + "}"),
          quantum_pb(pj, x[k]), j == k ? unit : zero));
    }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      NcPoly want(p);
      for (int l = 0; l < 3; ++l) {
        int e = levi_civita(i, j, l);
        if (e != 0) want -= s[l].scaled(GaussRat(e));
      }
      out.push_back(compare(
          tag("{S" + std::to_string(i + 1) + ",S" + std::to_string(j + 1) + "}"),
          quantum_pb(s[i], s[j]), want));
    }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      out.push_back(compare(
          tag("{S" + std::to_string(i + 1) + ",X" + std::to_string(j + 1) + "}"),
          quantum_pb(s[i], x[j]), zero));
      NcPoly pj = NcPoly::generator(p, p->gen_index("P" + std::to_string(j + 1)));
      out.push_back(compare(
          tag("{S" + std::to_string(i + 1) + ",P" + std::to_string(j + 1) + "}"),
          quantum_pb(s[i], pj), zero));
    }
    NcPoly h = NcPoly::generator(p, p->gen_index("H"));
    out.push_back(compare(tag("{S" + std::to_string(i + 1) + ",H}"),
                          quantum_pb(s[i], h), zero));
  }
  for (int g = 0; g < p->ngens(); ++g)
    out.push_back(compare(tag("{U," + p->gen_name(g) + "}"),
                          quantum_pb(u, NcPoly::generator(p, g)), zero));
  for (int j = 0; j < 3; ++j) {
    Laurent mm = Laurent::param_pow(p->nparams(), p->param_index("m"), 1);
    out.push_back(compare(tag("m*S" + std::to_string(j + 1) + "=B" +
                              std::to_string(j + 1)),
                          s[j].scaled(mm), bred[j]));
  }
  NcPoly ssq = s[0] * s[0] + s[1] * s[1] + s[2] * s[2];
  NcPoly bsq = bred[0] * bred[0] + bred[1] * bred[1] + bred[2] * bred[2];
  out.push_back(compare(tag("m^2*S^2=B^2"), ssq.scaled(msq), bsq));
  return out;
}

}  // namespace supmech
