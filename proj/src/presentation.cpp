#include "supmech/presentation.hpp"

#include <algorithm>

namespace supmech {

const TermMap Presentation::empty_{};

Presentation::Presentation(std::vector<GenInfo> gens, std::vector<std::string> params)
    : gens_(std::move(gens)), params_(std::move(params)) {
  require(gens_.size() <= 200, "too many generators");
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      require(gens_[i].name != gens_[j].name, "duplicate generator name: " + gens_[i].name);
  for (std::size_t i = 0; i < params_.size(); ++i)
    for (std::size_t j = i + 1; j < params_.size(); ++j)
      require(params_[i] != params_[j], "duplicate parameter name: " + params_[i]);
  for (const auto& g : gens_)
    require(param_index(g.name) < 0, "name used as both generator and parameter: " + g.name);
  rel_.resize(gens_.size());
  for (std::size_t a = 0; a < gens_.size(); ++a) rel_[a].resize(a + 1);
}

int Presentation::gen_index(const std::string& name) const {
  for (int i = 0; i < ngens(); ++i)
    if (gens_[i].name == name) return i;
  return -1;
}

int Presentation::param_index(const std::string& name) const {
  for (int i = 0; i < nparams(); ++i)
    if (params_[i] == name) return i;
  return -1;
}

int Presentation::hbar_index() const {
  int k = param_index("hbar");
  require(k >= 0, "presentation does not declare the parameter 'hbar'");
  return k;
}

void Presentation::set_supercomm(int a, int b, TermMap value) {
  require(a >= 0 && a < ngens() && b >= 0 && b <= a, "bad generator pair");
  if (a == b) require(odd(a), "diagonal relation only for odd generators");
  for (const auto& [w, c] : value) {
    require(w.size() <= 1, "relation value must have word degree <= 1");
    require(c.nparams() == nparams(), "relation coefficient parameter mismatch");
    require(!c.is_zero(), "relation value stores a zero coefficient");
  }
  rel_[a][b] = std::move(value);
}

const TermMap& Presentation::supercomm_table(int a, int b) const {
  require(a >= 0 && a < ngens() && b >= 0 && b <= a, "bad generator pair");
  return rel_[a][b];
}

std::string Presentation::word_str(const Word& w) const {
  if (w.empty()) return "I";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += "*";
    s += gen_name(w[k]);
  }
  return s;
}

}  // namespace supmech
