#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "supmech/laurent.hpp"

namespace supmech {

// A word in the free *-algebra: sequence of generator indices.  The empty
// word is the unit I.
using Word = std::vector<std::uint8_t>;

// Degree-then-lexicographic order; the canonical term order everywhere
// (normal forms, printing, report entries).
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using TermMap = std::map<Word, Laurent, WordLess>;

struct GenInfo {
  std::string name;
  bool odd = false;  // Z2 grading; involution fixes every generator (hermitian)
};

// Finitely presented *-algebra with a total generator order and a
// supercommutation reordering table:
//
//   g_a g_b = (-1)^{par(a)par(b)} g_b g_a + [g_a, g_b]   for a > b
//   g_a g_a = [g_a, g_a] / 2                              for a odd
//
// Relation values [g_a, g_b] are stored normal-ordered with word degree <= 1,
// which keeps reordering confluent (diamond lemma for Lie-type tables; the
// builders additionally verify the super-Jacobi identity on all triples).
class Presentation {
 public:
  Presentation(std::vector<GenInfo> gens, std::vector<std::string> params);

  int ngens() const { return static_cast<int>(gens_.size()); }
  int nparams() const { return static_cast<int>(params_.size()); }
  const std::vector<std::string>& params() const { return params_; }
  const GenInfo& gen(int i) const { return gens_.at(i); }
  bool odd(int i) const { return gens_.at(i).odd; }
  const std::string& gen_name(int i) const { return gens_.at(i).name; }

  // Index lookups; -1 when absent.
  int gen_index(const std::string& name) const;
  int param_index(const std::string& name) const;
  // The reduced-Planck parameter; required by the quantum Poisson bracket.
  int hbar_index() const;

  // Declare [g_a, g_b] (a >= b; a == b only for odd generators).  `value`
  // must be normal-ordered with all words of degree <= 1.  Pairs not
  // declared supercommute ([g_a, g_b] = 0).
  void set_supercomm(int a, int b, TermMap value);
  const TermMap& supercomm_table(int a, int b) const;

  bool word_parity(const Word& w) const {
    bool p = false;
    for (auto g : w) p ^= odd(g);
    return p;
  }

  std::string word_str(const Word& w) const;

 private:
  std::vector<GenInfo> gens_;
  std::vector<std::string> params_;
  // rel_[a][b] for a >= b, lower-triangular (including diagonal for odd gens).
  std::vector<std::vector<TermMap>> rel_;
  static const TermMap empty_;
};

using PresPtr = std::shared_ptr<const Presentation>;

}  // namespace supmech
