#include "supmech/presentations.hpp"

#include <fstream>
#include <memory>
#include <sstream>
#include <utility>
#include <vector>

#include "supmech/error.hpp"
#include "supmech/ncpoly.hpp"
#include "supmech/parser.hpp"

namespace supmech {

namespace {

int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // even permutations of (0,1,2)
  if ((i == 0 && j == 1) || (i == 1 && j == 2) || (i == 2 && j == 0)) return 1;
  return -1;
}

// Records the supercommutator of generators a and b (any order), converting to
// the lower-triangular slot with the Koszul sign [b,a] = -(-1)^{e_a e_b}[a,b].
void set_comm(Presentation& pr, int a, int b, TermMap value) {
  if (a >= b) {
    pr.set_supercomm(a, b, std::move(value));
    return;
  }
  bool both_odd = pr.odd(a) && pr.odd(b);
  if (!both_odd)
    for (auto& [w, c] : value) c = -c;
  pr.set_supercomm(b, a, std::move(value));
}

TermMap gen_term(int g, Laurent c) {
  TermMap t;
  t.emplace(Word{static_cast<std::uint8_t>(g)}, std::move(c));
  return t;
}

TermMap unit_term(Laurent c) {
  TermMap t;
  t.emplace(Word{}, std::move(c));
  return t;
}

PresPtr finish(Presentation pr) {
  auto sp = std::make_shared<Presentation>(std::move(pr));
  validate_presentation(*sp);
  return sp;
}

std::vector<GenInfo> vector_triples(std::initializer_list<const char*> stems) {
  std::vector<GenInfo> gens;
  for (const char* s : stems)
    for (int i = 1; i <= 3; ++i) gens.push_back({std::string(s) + std::to_string(i)});
  return gens;
}

// Shared rotation/boost/translation block of the two Galilei variants.
// Generator layout: J at offset 0, K at 3, P at 6, H at h_idx.
void galilei_common(Presentation& pr, int h_idx) {
  const int NP = pr.nparams();
  const int hb = pr.param_index("hbar");
  auto ihbar = [&](GaussRat c) { return Laurent::param_pow(NP, hb, 1, c * GaussRat::i()); };
  const int J = 0, K = 3, P = 6;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        int e = levi_civita(i, j, k);
        if (e == 0) continue;
        if (j < i) set_comm(pr, J + i, J + j, gen_term(J + k, ihbar(GaussRat(e))));
        set_comm(pr, J + i, K + j, gen_term(K + k, ihbar(GaussRat(e))));
        set_comm(pr, J + i, P + j, gen_term(P + k, ihbar(GaussRat(e))));
      }
    }
    set_comm(pr, K + i, h_idx, gen_term(P + i, ihbar(GaussRat(1))));
  }
}

}  // namespace

PresPtr galilei_extended() {
  auto gens = vector_triples({"J", "K", "P"});
  gens.push_back({"H"});
  gens.push_back({"M"});
  Presentation pr(gens, {"hbar"});
  galilei_common(pr, 9);
  const int K = 3, P = 6, M = 10;
  for (int i = 0; i < 3; ++i)
    set_comm(pr, K + i, P + i,
             gen_term(M, Laurent::param_pow(1, 0, 1, GaussRat::i())));
  return finish(std::move(pr));
}

PresPtr galilei_reduced() {
  auto gens = vector_triples({"J", "K", "P"});
  gens.push_back({"H"});
  Presentation pr(gens, {"hbar", "m"});
  galilei_common(pr, 9);
  const int K = 3, P = 6;
  // [K_i,P_i] = i hbar m I
  Laurent ihm = Laurent::monomial(2, {1, 1}, GaussRat::i());
  for (int i = 0; i < 3; ++i) set_comm(pr, K + i, P + i, unit_term(ihm));
  return finish(std::move(pr));
}

PresPtr ccr_spin() {
  auto gens = vector_triples({"X", "P", "S"});
  Presentation pr(gens, {"hbar", "m", "t", "s"});
  const int NP = 4, hb = 0;
  auto ihbar = [&](GaussRat c) { return Laurent::param_pow(NP, hb, 1, c * GaussRat::i()); };
  const int X = 0, P = 3, S = 6;
  for (int i = 0; i < 3; ++i) {
    set_comm(pr, X + i, P + i, unit_term(ihbar(GaussRat(1))));
    for (int j = 0; j < i; ++j)
      for (int k = 0; k < 3; ++k) {
        int e = levi_civita(i, j, k);
        if (e != 0) set_comm(pr, S + i, S + j, gen_term(S + k, ihbar(GaussRat(e))));
      }
  }
  return finish(std::move(pr));
}

PresPtr grassmann(int n) {
  require(n >= 1 && n <= 16, "grassmann generator count must be in 1..16");
  std::vector<GenInfo> gens;
  for (int i = 1; i <= n; ++i) gens.push_back({"th" + std::to_string(i), true});
  Presentation pr(gens, {});
  // all supercommutators vanish: th_a th_b = -th_b th_a, th_a^2 = 0
  return finish(std::move(pr));
}

PresPtr presentation_from_name(const std::string& name) {
  if (name == "galilei-extended") return galilei_extended();
  if (name == "galilei-reduced") return galilei_reduced();
  if (name == "ccr-spin") return ccr_spin();
  if (name.rfind("grassmann:", 0) == 0) {
    int n = 0;
    try {
      size_t used = 0;
      n = std::stoi(name.substr(10), &used);
      if (used != name.size() - 10) throw Error("trailing characters");
    } catch (const std::exception&) {
      throw Error("bad grassmann presentation name '" + name + "'");
    }
    return grassmann(n);
  }
  throw Error("unknown presentation '" + name + "'");
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace

PresPtr load_presentation_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> params;
  std::vector<GenInfo> gens;
  struct RawRel {
    std::string a, b, rhs;
    int lineno;
  };
  std::vector<RawRel> rels;
  int lineno = 0;
  bool saw_relation = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto words = split_ws(line);
    if (words.empty()) continue;
    const std::string& kw = words[0];
    auto here = [&] { return " (line " + std::to_string(lineno) + ")"; };
    if (kw == "params" || kw == "generator") {
      if (saw_relation)
        throw Error(kw + " after the first relation" + here());
      if (kw == "params") {
        params.insert(params.end(), words.begin() + 1, words.end());
      } else {
        if (words.size() < 2 || words.size() > 3)
          throw Error("generator line needs a name and optional 'odd'" + here());
        bool odd = false;
        if (words.size() == 3) {
          if (words[2] != "odd") throw Error("expected 'odd'" + here());
          odd = true;
        }
        gens.push_back({words[1], odd});
      }
    } else if (kw == "relation") {
      saw_relation = true;
      // shape: relation [A,B] = expr
      auto rest = line.substr(line.find("relation") + 8);
      auto lb = rest.find('[');
      auto comma = rest.find(',');
      auto rb = rest.find(']');
      auto eq = rest.find('=');
      if (lb == std::string::npos || comma == std::string::npos ||
          rb == std::string::npos || eq == std::string::npos ||
          !(lb < comma && comma < rb && rb < eq))
        throw Error("expected 'relation [A,B] = expr'" + here());
      auto strip = [](std::string s) {
        auto b = s.find_first_not_of(" \t");
        auto e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      rels.push_back({strip(rest.substr(lb + 1, comma - lb - 1)),
                      strip(rest.substr(comma + 1, rb - comma - 1)),
                      rest.substr(eq + 1), lineno});
    } else {
      throw Error("unknown directive '" + kw + "'" + here());
    }
  }
  if (gens.empty()) throw Error("presentation declares no generators");

  Presentation pr(gens, params);
  for (const auto& r : rels) {
    auto here = [&] { return " (line " + std::to_string(r.lineno) + ")"; };
    int a = pr.gen_index(r.a), b = pr.gen_index(r.b);
    if (a < 0) throw Error("unknown generator '" + r.a + "'" + here());
    if (b < 0) throw Error("unknown generator '" + r.b + "'" + here());
    NcPoly rhs;
    try {
      rhs = parse_expr(&pr, r.rhs);
    } catch (const Error& e) {
      throw Error(std::string(e.what()) + here());
    }
    if (rhs.degree() > 1)
      throw Error("relation value must have degree <= 1" + here());
    TermMap tm = rhs.terms();
    set_comm(pr, a, b, std::move(tm));
  }
  return finish(std::move(pr));
}

PresPtr load_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open presentation file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_presentation_text(buf.str());
}

}  // namespace supmech
