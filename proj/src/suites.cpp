// The verification suites behind the CLI: each one mirrors a library test
// flow with externally tunable parameters, emits registry-anchored report
// entries, and writes data artifacts when an output directory is set.

#include "supmech/suites.hpp"

#include <Eigen/Dense>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <mutex>
#include <random>
#include <thread>

#include "supmech/algebra_checks.hpp"
#include "supmech/anchors.hpp"
#include "supmech/classical_limit.hpp"
#include "supmech/error.hpp"
#include "supmech/finite_algebra.hpp"
#include "supmech/gns.hpp"
#include "supmech/grassmann.hpp"
#include "supmech/localization.hpp"
#include "supmech/parser.hpp"
#include "supmech/phase_grid.hpp"
#include "supmech/presentations.hpp"
#include "supmech/schrodinger.hpp"
#include "supmech/star_product.hpp"
#include "supmech/symbolic_dynamics.hpp"
#include "supmech/wigner.hpp"

namespace supmech {

namespace {

using Cx = std::complex<double>;

// Parameters understood by every suite.
struct Common {
  std::string out_dir;
  int jobs = 1;
};

Common common_params(ParamReader& pr) {
  Common c;
  c.out_dir = pr.str("out_dir", "");
  c.jobs = static_cast<int>(pr.integer("jobs", 1));
  if (c.jobs < 1 || c.jobs > 256)
    throw ConfigError("jobs must be between 1 and 256");
  return c;
}

// Runs body(0..n-1) over a small thread pool.  Units must not share mutable
// state; results land in preallocated slots so the merge order never
// depends on scheduling.
void run_units(int jobs, int n, const std::function<void(int)>& body) {
  jobs = std::min(jobs, n);
  if (jobs <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mx;
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int w = 0; w < jobs; ++w)
    pool.emplace_back([&] {
      while (true) {
        const int i = next.fetch_add(1);
        if (i >= n) return;
        try {
          body(i);
        } catch (...) {
          const std::lock_guard<std::mutex> lock(error_mx);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::string mismatch_detail(const ExactCheck& c) {
  return "expected " + c.expected + ", got " + c.got;
}

// Accepts the CLI spellings mat:<n> and mat:<n>+<m> next to the library
// names; bad names are config errors.
FiniteAlgebra algebra_by_name(const std::string& name) {
  std::string resolved = name;
  if (name.rfind("mat:", 0) == 0) {
    std::string rest = name.substr(4);
    if (rest.find('+') == std::string::npos) {
      resolved = "matn:" + rest;
    } else {
      std::replace(rest.begin(), rest.end(), '+', ',');
      resolved = "sumn:" + rest;
    }
  }
  try {
    return FiniteAlgebra::from_name(resolved);
  } catch (const Error& e) {
    throw ConfigError("bad algebra '" + name + "': " + e.what());
  }
}

PhaseGrid make_grid(double box, long long n, double hbar) {
  if (n < 4 || n > (1 << 20)) throw ConfigError("grid size n out of range");
  try {
    return PhaseGrid(box, static_cast<int>(n), hbar);
  } catch (const Error& e) {
    throw ConfigError(std::string("bad grid parameters: ") + e.what());
  }
}

std::string csv_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double slope_of_loglog(const std::vector<double>& xs,
                       const std::vector<double>& ys) {
  require(xs.size() == ys.size() && xs.size() >= 2,
          "log-log fit needs at least two points");
  const int n = static_cast<int>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    const double lx = std::log(xs[i]), ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// P psi through its diagonal form on the momentum lattice.
WaveField apply_momentum(const PhaseGrid& g, const WaveField& psi) {
  WaveField spec = to_momentum(g, psi);
  for (int m = 0; m < g.N; ++m) spec(m) *= g.p(m);
  return to_position(g, spec);
}

// ---------------------------------------------------------------- suites

VerificationReport run_verify_algebra(const Scenario& sc) {
  ParamReader pr(sc);
  const std::string preset = pr.str("preset", "galilei");
  common_params(pr);
  pr.finish();

  VerificationReport r;
  r.suite = "verify-algebra";
  r.config["preset"] = preset;

  if (preset == "galilei") {
    PresPtr p = galilei_extended();
    for (const ExactCheck& c : verify_galilei_pb_table(p))
      r.add_exact(c.id, anchor::galilei_pair_bracket, c.ok,
                  c.ok ? "" : mismatch_detail(c));
    const CasimirChecks cas = verify_galilei_casimirs(p);
    for (const ExactCheck& c : cas.main)
      r.add_exact(c.id, anchor::galilei_casimir_bracket, c.ok,
                  c.ok ? "" : mismatch_detail(c));
  } else if (preset == "galilei-commutator") {
    PresPtr p = galilei_extended();
    for (const ExactCheck& c : verify_galilei_comm_table(p))
      r.add_exact(c.id, anchor::galilei_pair_commutator, c.ok,
                  c.ok ? "" : mismatch_detail(c));
  } else if (preset == "galilei-derived") {
    const CasimirChecks cas = verify_galilei_casimirs(galilei_extended());
    for (const ExactCheck& c : cas.intermediate)
      r.add_exact(c.id, anchor::galilei_boost_vector, c.ok,
                  c.ok ? "" : mismatch_detail(c));
    for (const ExactCheck& c : verify_reduced_observables(galilei_reduced()))
      r.add_exact(c.id, anchor::galilei_reduced_identity, c.ok,
                  c.ok ? "" : mismatch_detail(c));
  } else {
    throw ConfigError("unknown preset '" + preset +
                      "' (expected galilei, galilei-commutator, or "
                      "galilei-derived)");
  }
  return r;
}

VerificationReport run_noether(const Scenario& sc) {
  ParamReader pr(sc);
  const std::string preset = pr.str("preset", "free");
  common_params(pr);
  pr.finish();
  if (preset != "free")
    throw ConfigError("unknown preset '" + preset + "' (expected free)");

  VerificationReport r;
  r.suite = "noether";
  r.config["preset"] = preset;
  for (const ConservationCheck& c : free_particle_conservation(ccr_spin()))
    r.add_exact("invariant/" + c.name, anchor::noether_free_invariant,
                c.conserved,
                c.conserved ? "" : "total derivative " + c.residual);
  return r;
}

VerificationReport run_grassmann_cc(const Scenario& sc) {
  ParamReader pr(sc);
  const long long n = pr.integer("n", 3);
  common_params(pr);
  pr.finish();
  if (n < 1 || n > 6)
    throw ConfigError("generator count n must be between 1 and 6");

  VerificationReport r;
  r.suite = "grassmann-cc";
  r.config["n"] = std::to_string(n);

  GrassmannStateFamily fam = enumerate_states(static_cast<int>(n));
  const Presentation* p = fam.pres.get();
  r.add_exact("unique-state", anchor::grassmann_unique_state, fam.unique(),
              fam.unique() ? ""
                           : std::to_string(fam.free_parameters) +
                                 " free parameters remain");

  std::string top;
  for (long long k = n; k >= 1; --k) {
    top += "th" + std::to_string(k);
    if (k > 1) top += "*";
  }
  const bool density_ok =
      fam.density.has_value() && *fam.density == parse_expr(p, top);
  r.add_exact("density-form", anchor::grassmann_density_form, density_ok,
              density_ok ? "" : "density is not the top generator word");

  bool moments_ok = true;
  std::string first_bad;
  if (fam.density) {
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::string word;
      for (long long gidx = 0; gidx < n; ++gidx)
        if (mask & (1u << gidx)) {
          if (!word.empty()) word += "*";
          word += "th" + std::to_string(gidx + 1);
        }
      const GaussRat ev =
          berezin_expectation(parse_expr(p, word), *fam.density).as_scalar();
      if (!(ev == GaussRat(0))) {
        moments_ok = false;
        if (first_bad.empty()) first_bad = word;
      }
    }
  }
  r.add_exact("vanishing-moments", anchor::grassmann_moments,
              fam.density.has_value() && moments_ok,
              moments_ok ? "" : "nonzero expectation of " + first_bad);

  if (fam.density) {
    // Scalar observables with different values are always separated.
    const CcResult sep = cc_check(
        {NcPoly::unit(p), NcPoly::unit(p).scaled(GaussRat(2))}, {*fam.density});
    r.add_exact("cc-separation", anchor::grassmann_cc_separation, sep.pass,
                sep.pass ? "" : "distinct scalars were not separated");

    if (n >= 2) {
      // Distinct even hermitian observables the single state cannot tell
      // apart; the check must fail and hand back the offending pair.
      NcPoly f1 = parse_expr(p, "I + i*th1*th2");
      NcPoly f2 = parse_expr(p, "I + 2*i*th1*th2");
      const CcResult res = cc_check({f1, f2}, {*fam.density});
      const bool witness_ok = !res.pass && res.witness.has_value() &&
                              res.witness->observables_failed &&
                              res.witness->first == 0 &&
                              res.witness->second == 1;
      r.add_exact("cc-witness", anchor::grassmann_cc_witness, witness_ok,
                  witness_ok
                      ? "distinct even observables share all expectations"
                      : "expected an indistinguishable-observable witness");
    }
  }
  return r;
}

void gns_standard(VerificationReport& r, ParamReader& pr,
                  const FiniteAlgebra& A, const Common& common) {
  const std::string state = pr.str("state", "e11");
  const double recon_tol = pr.real("reconstruction_tol", 1e-12);
  const double rep_tol = pr.real("representation_tol", 1e-12);
  const double rank_tol = pr.real("purity_rank_tol", 1e-7);
  r.config["state"] = state;
  r.config["reconstruction_tol"] = format_double(recon_tol);

  const std::vector<int> blocks = block_dims_of(A);
  int defining_dim = 0;
  for (int b : blocks) defining_dim += b;

  if (state == "e11") {
    pr.finish();
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(defining_dim);
    psi(0) = 1;
    const Eigen::VectorXcd phi = vector_state(A, psi);
    const StateCheck chk = check_state(A, phi);
    const GnsRep rep = gns_representation(A, phi);
    r.add_exact("state-axioms", anchor::gns_state_axioms, chk.ok());
    r.add_exact("dimension", anchor::gns_dimension, rep.dim == blocks.front(),
                "expected " + std::to_string(blocks.front()) + ", got " +
                    std::to_string(rep.dim));
    r.add_exact("irreducible", anchor::gns_irreducible,
                rep.commutant_dim == 1,
                "commutant dimension " + std::to_string(rep.commutant_dim));
    r.add_residual("reconstruction", anchor::gns_reconstruction,
                   rep.reconstruction_error, recon_tol);
    r.add_residual("representation", anchor::gns_representation,
                   std::max(rep.rep_error, rep.star_error), rep_tol);
    return;
  }
  if (state != "random")
    throw ConfigError("unknown state '" + state +
                      "' (expected e11 or random)");

  const long long count = pr.integer("count", 20);
  if (count < 1 || count > 100000)
    throw ConfigError("count must be between 1 and 100000");
  const std::uint64_t seed = pr.seed();
  pr.finish();
  r.seeded = true;
  r.seed = seed;
  r.config["count"] = std::to_string(count);

  // Draw every state up front from one stream so the report is identical
  // for any jobs value.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> rank_dist(1, defining_dim);
  std::vector<Eigen::VectorXcd> states;
  states.reserve(count);
  for (long long k = 0; k < count; ++k)
    states.push_back(random_matrix_state(A, rng, rank_dist(rng)));

  std::vector<std::vector<CheckEntry>> slots(count);
  run_units(common.jobs, static_cast<int>(count), [&](int k) {
    VerificationReport local;
    const Eigen::VectorXcd& phi = states[k];
    const std::string tag = "state-" + std::to_string(k);
    const StateCheck chk = check_state(A, phi);
    local.add_exact(tag + "/axioms", anchor::gns_state_axioms, chk.ok());
    const GnsRep rep = gns_representation(A, phi);
    local.add_residual(tag + "/reconstruction", anchor::gns_reconstruction,
                       rep.reconstruction_error, recon_tol);
    local.add_residual(tag + "/representation", anchor::gns_representation,
                       std::max(rep.rep_error, rep.star_error), rep_tol);

    // Dual purity routes: spectral rank of the density matrix against the
    // commutant dimension of the cyclic representation.
    const Eigen::MatrixXcd d = density_of_state(A, phi);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(d);
    const Eigen::VectorXd ev = es.eigenvalues();
    const double second =
        ev.size() >= 2 ? std::abs(ev(ev.size() - 2)) : 0.0;
    const bool pure_by_rank = second <= rank_tol;
    const bool pure_by_commutant = rep.commutant_dim == 1;
    local.add_exact(
        tag + "/purity-commutant", anchor::gns_purity_commutant,
        pure_by_rank == pure_by_commutant,
        "second density eigenvalue " + format_double(second) +
            ", commutant dimension " + std::to_string(rep.commutant_dim));
    slots[k] = std::move(local.entries);
  });
  for (auto& s : slots)
    for (CheckEntry& e : s) r.entries.push_back(std::move(e));
}

void gns_compression(VerificationReport& r, ParamReader& pr,
                     const FiniteAlgebra& A, const Common& common) {
  const long long count = pr.integer("count", 20);
  if (count < 1 || count > 100000)
    throw ConfigError("count must be between 1 and 100000");
  const double tol = pr.real("intertwiner_tol", 1e-10);
  const std::uint64_t seed = pr.seed();
  pr.finish();
  r.seeded = true;
  r.seed = seed;
  r.config["count"] = std::to_string(count);
  r.config["intertwiner_tol"] = format_double(tol);

  const std::vector<int> blocks = block_dims_of(A);
  int defining_dim = 0;
  for (int b : blocks) defining_dim += b;
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(defining_dim);
  psi(0) = 1;
  const Eigen::VectorXcd phi = vector_state(A, psi);
  const GnsRep base = gns_representation(A, phi);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  std::vector<Eigen::VectorXcd> elements;
  elements.reserve(count);
  for (long long k = 0; k < count; ++k) {
    Eigen::VectorXcd b(A.dim());
    for (int i = 0; i < A.dim(); ++i) b(i) = Cx(nd(rng), nd(rng));
    elements.push_back(std::move(b));
  }

  std::vector<std::vector<CheckEntry>> slots(count);
  run_units(common.jobs, static_cast<int>(count), [&](int k) {
    VerificationReport local;
    const std::string tag = "element-" + std::to_string(k);
    try {
      const Eigen::VectorXcd phi_b = state_from_vector(A, phi, elements[k]);
      const StateCheck chk = check_state(A, phi_b);
      local.add_exact(tag + "/state", anchor::gns_compression_state, chk.ok());
      const GnsRep rep = gns_representation(A, phi_b);
      local.add_exact(tag + "/pure", anchor::gns_compression_pure,
                      rep.commutant_dim == 1,
                      "commutant dimension " +
                          std::to_string(rep.commutant_dim));
      const auto u = find_intertwiner(base.pi, rep.pi);
      double residual = 1.0;
      std::string detail = "no intertwiner found";
      if (u) {
        const int d = static_cast<int>(u->rows());
        residual = (*u * u->adjoint() -
                    Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
        for (std::size_t i = 0; i < base.pi.size(); ++i)
          residual = std::max(
              residual, (*u * base.pi[i] * u->adjoint() - rep.pi[i])
                            .cwiseAbs()
                            .maxCoeff());
        detail.clear();
      }
      local.add_residual(tag + "/intertwiner",
                         anchor::gns_compression_intertwiner, residual, tol,
                         detail);
    } catch (const Error& e) {
      local.add_exact(tag + "/state", anchor::gns_compression_state, false,
                      e.what());
    }
    slots[k] = std::move(local.entries);
  });
  for (auto& s : slots)
    for (CheckEntry& e : s) r.entries.push_back(std::move(e));
}

void gns_sectors(VerificationReport& r, ParamReader& pr,
                 const FiniteAlgebra& A) {
  const double center_tol = pr.real("center_tol", 1e-12);
  pr.finish();
  r.config["center_tol"] = format_double(center_tol);

  const std::vector<int> blocks = block_dims_of(A);
  int defining_dim = 0;
  for (int b : blocks) defining_dim += b;

  // One vector state per block; their direct sum separates the algebra.
  std::vector<Eigen::VectorXcd> states;
  int offset = 0;
  for (int b : blocks) {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(defining_dim);
    psi(offset) = 1;
    states.push_back(vector_state(A, psi));
    offset += b;
  }
  const DirectSumRep dsum = direct_sum_rep(A, states);
  const SuperselectionResult ssr = superselection_decompose(A, dsum.pi);

  r.add_exact("faithful", anchor::sector_faithful,
              dsum.faithful && ssr.faithful);
  r.add_exact("sector-count", anchor::sector_count,
              ssr.sectors.size() == blocks.size(),
              "expected " + std::to_string(blocks.size()) + ", got " +
                  std::to_string(ssr.sectors.size()));

  std::vector<int> got, want = blocks;
  for (const Sector& s : ssr.sectors) got.push_back(s.dim);
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  std::string dims_detail = "sector dimensions";
  for (int d : got) dims_detail += " " + std::to_string(d);
  r.add_exact("sector-dims", anchor::sector_dims, got == want, dims_detail);

  r.add_residual("center-commutes", anchor::sector_center_commutes,
                 ssr.commutation_residual, center_tol);

  if (!ssr.sectors.empty()) {
    const int d = static_cast<int>(ssr.sectors[0].projection.rows());
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
    for (const Sector& s : ssr.sectors) sum += s.projection;
    const double gap =
        (sum - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
    r.add_residual("projection-sum", anchor::sector_projection_sum, gap, 0.0,
                   "identity minus the others closes the family exactly");
  }
}

VerificationReport run_gns(const Scenario& sc) {
  ParamReader pr(sc);
  const std::string check = pr.str("check", "standard");
  std::string default_algebra = check == "sectors" ? "mat:2+3" : "mat:2";
  const std::string algebra = pr.str("algebra", default_algebra);
  const Common common = common_params(pr);

  VerificationReport r;
  r.suite = "gns";
  r.config["check"] = check;
  r.config["algebra"] = algebra;
  const FiniteAlgebra A = algebra_by_name(algebra);

  if (check == "standard") {
    gns_standard(r, pr, A, common);
  } else if (check == "compression") {
    gns_compression(r, pr, A, common);
  } else if (check == "sectors") {
    gns_sectors(r, pr, A);
  } else {
    throw ConfigError("unknown check '" + check +
                      "' (expected standard, compression, or sectors)");
  }
  return r;
}

VerificationReport run_evolve(const Scenario& sc) {
  ParamReader pr(sc);
  const std::string potential = pr.str("potential", "free");
  const double mass = pr.real("mass", 1.0);
  const double hbar = pr.real("hbar", 1.0);
  if (mass <= 0 || hbar <= 0)
    throw ConfigError("mass and hbar must be positive");

  VerificationReport r;
  r.suite = "evolve";
  r.config["potential"] = potential;
  r.config["mass"] = format_double(mass);
  r.config["hbar"] = format_double(hbar);

  PhaseGrid g = make_grid(1, 4, 1);  // replaced per branch below
  WaveField psi0, psi;
  double t = 0;

  if (potential == "free") {
    const long long n = pr.integer("n", 512);
    const double box = pr.real("box", 40.0);
    const double sigma = pr.real("sigma", 1.0);
    const double x0 = pr.real("x0", 0.0);
    const double p0 = pr.real("p0", 0.0);
    t = pr.real("time", 1.0);
    const long long steps = pr.integer("steps", 400);
    const double width_tol = pr.real("width_tol", 1e-6);
    const double drift_tol = pr.real("drift_tol", 1e-8);
    const Common common = common_params(pr);
    pr.finish();
    if (sigma <= 0) throw ConfigError("sigma must be positive");
    if (t < 0) throw ConfigError("time must be nonnegative");
    if (steps < 1 || steps > 2000000)
      throw ConfigError("steps must be between 1 and 2000000");
    r.config["n"] = std::to_string(n);
    r.config["time"] = format_double(t);

    g = make_grid(box, n, hbar);
    psi0 = gaussian_packet(g, x0, p0, sigma);
    psi = schrodinger_evolve(g, psi0, Eigen::VectorXd::Zero(g.N), mass, t,
                             static_cast<int>(steps));

    r.add_residual("norm", anchor::evolve_norm,
                   std::abs(field_norm(g, psi) - 1.0), 1e-10);
    const double expect = free_gaussian_width_sq(sigma, hbar, mass, t);
    r.add_residual("width-law", anchor::evolve_width_law,
                   std::abs(position_variance(g, psi) - expect) / expect,
                   width_tol,
                   "variance " + format_double(position_variance(g, psi)) +
                       " vs " + format_double(expect));
    r.add_residual("drift", anchor::evolve_drift,
                   std::abs(position_mean(g, psi) - (x0 + p0 / mass * t)),
                   drift_tol);
    r.add_residual("boundary-mass", anchor::evolve_boundary_mass,
                   boundary_mass(g, psi), 1e-8);
    if (!common.out_dir.empty()) {
      std::string csv = "x,re_psi,im_psi\n";
      for (int j = 0; j < g.N; ++j)
        csv += csv_num(g.x(j)) + "," + csv_num(psi(j).real()) + "," +
               csv_num(psi(j).imag()) + "\n";
      write_text_file(common.out_dir + "/wave.csv", csv);
    }
  } else if (potential == "harmonic") {
    const long long n = pr.integer("n", 512);
    const double box = pr.real("box", 30.0);
    const double omega = pr.real("omega", 1.0);
    const double x0 = pr.real("x0", 2.0);
    const double p0 = pr.real("p0", 0.0);
    const long long cycles = pr.integer("cycles", 1);
    const long long steps = pr.integer("steps", 4096);
    const double fidelity_tol = pr.real("fidelity_tol", 1e-8);
    const double energy_tol = pr.real("energy_tol", 1e-10);
    const Common common = common_params(pr);
    pr.finish();
    if (omega <= 0) throw ConfigError("omega must be positive");
    if (cycles < 1 || cycles > 64)
      throw ConfigError("cycles must be between 1 and 64");
    if (steps < 1 || steps > 2000000)
      throw ConfigError("steps must be between 1 and 2000000");
    r.config["n"] = std::to_string(n);
    r.config["cycles"] = std::to_string(cycles);

    g = make_grid(box, n, hbar);
    t = static_cast<double>(cycles) * 2.0 * PhaseGrid::pi() / omega;
    psi0 = coherent_state(g, mass, omega, x0, p0);
    const Eigen::VectorXd v = harmonic_potential(g, mass, omega);
    psi = schrodinger_evolve(g, psi0, v, mass, t, static_cast<int>(steps));

    r.add_residual("norm", anchor::evolve_norm,
                   std::abs(field_norm(g, psi) - 1.0), 1e-10);
    const double fidelity = std::abs(psi0.dot(psi) * g.dx());
    r.add_residual("return-fidelity", anchor::evolve_return_fidelity,
                   std::abs(1.0 - fidelity), fidelity_tol,
                   "fidelity " + format_double(fidelity) + " after " +
                       std::to_string(cycles) + " period(s)");
    const double e0 = energy(g, psi0, v, mass);
    const double e1 = energy(g, psi, v, mass);
    r.add_residual("energy-drift", anchor::evolve_energy_drift,
                   std::abs(e1 - e0) / std::max(std::abs(e0), 1e-12),
                   energy_tol);
    if (!common.out_dir.empty()) {
      std::string csv = "x,re_psi,im_psi\n";
      for (int j = 0; j < g.N; ++j)
        csv += csv_num(g.x(j)) + "," + csv_num(psi(j).real()) + "," +
               csv_num(psi(j).imag()) + "\n";
      write_text_file(common.out_dir + "/wave.csv", csv);
    }
  } else {
    throw ConfigError("unknown potential '" + potential +
                      "' (expected free or harmonic)");
  }
  return r;
}

VerificationReport run_localize(const Scenario& sc) {
  ParamReader pr(sc);
  const long long n = pr.integer("n", 4096);
  const double box = pr.real("box", 20.0);
  const double hbar = pr.real("hbar", 1.0);
  const double sigma = pr.real("sigma", 1.0);
  const double x0 = pr.real("x0", 0.3);
  const double p0 = pr.real("p0", 0.6);
  const double cut = pr.real("cut", 0.0);
  const long long shift_cells = pr.integer("shift_cells", 37);
  const double half_line_tol = pr.real("half_line_tol", 1e-6);
  common_params(pr);
  pr.finish();
  if (sigma <= 0 || hbar <= 0)
    throw ConfigError("sigma and hbar must be positive");

  VerificationReport r;
  r.suite = "localize";
  r.config["n"] = std::to_string(n);
  r.config["box"] = format_double(box);
  r.config["cut"] = format_double(cut);

  const PhaseGrid g = make_grid(box, n, hbar);
  const WaveField psi = gaussian_packet(g, x0, p0, sigma);

  CellSet left = CellSet::none(g.N);
  try {
    left = CellSet::interval(g, -box / 2, cut);
  } catch (const Error& e) {
    throw ConfigError(std::string("bad cut: ") + e.what());
  }
  const CellSet right = left.complement();
  const CellSet all = CellSet::all(g.N);

  // Projection identities are exact on the diagonal 0/1 operators.
  const PobvmGrid pobvm = localization_pobvm(g);
  const double proj_gap =
      (pobvm.projection(left) + pobvm.projection(right) -
       Eigen::VectorXd::Ones(g.N)).cwiseAbs().maxCoeff();
  r.add_residual("projection-completeness", anchor::localize_completeness,
                 proj_gap, 0.0, "partition projections sum to the identity");

  // Measure additivity in rational arithmetic, zero tolerance.
  const Rational pl = probability_exact(g, psi, left);
  const Rational pr_ = probability_exact(g, psi, right);
  const Rational pall = probability_exact(g, psi, all);
  r.add_exact("mass-additivity", anchor::localize_additivity,
              pl + pr_ == pall, "exact rational sums over the partition");

  const int cells = static_cast<int>(shift_cells);
  const WaveField shifted = translate(g, psi, cells);
  const bool covariant = probability_exact(g, shifted, left) ==
                         probability_exact(g, psi, left.translated(-cells));
  r.add_exact("translation-covariance", anchor::localize_covariance,
              covariant, "shifted field against the back-shifted cell set");

  const double expect =
      0.5 * (1.0 + std::erf((cut - x0) / (sigma * std::sqrt(2.0))));
  r.add_residual("half-line-erf", anchor::localize_half_line,
                 std::abs(probability(g, psi, left) - expect), half_line_tol,
                 "cell mass below the cut against the error function");
  return r;
}

VerificationReport run_weyl_check(const Scenario& sc) {
  ParamReader pr(sc);
  const long long n = pr.integer("n", 256);
  const double box = pr.real("box", 20.0);
  const double sigma = pr.real("sigma", 0.9);
  const double x0 = pr.real("x0", -1.0);
  const double p0 = pr.real("p0", 0.7);
  const long long a_cells = pr.integer("a_cells", 64);
  const double tol = pr.real("tol", 1e-10);
  const PhaseGrid g = make_grid(box, n, 1.0);
  const double boost_b = pr.real("boost", 2.0 * PhaseGrid::pi() / box * 32);
  common_params(pr);
  pr.finish();
  if (sigma <= 0) throw ConfigError("sigma must be positive");

  VerificationReport r;
  r.suite = "weyl-check";
  r.config["n"] = std::to_string(n);
  r.config["box"] = format_double(box);
  r.config["a_cells"] = std::to_string(a_cells);
  r.config["boost"] = format_double(boost_b);
  r.config["tol"] = format_double(tol);

  const WaveField psi = gaussian_packet(g, x0, p0, sigma);
  const WeylRelationsResult res = weyl_relations_check(
      g, static_cast<double>(a_cells) * g.dx(), boost_b, psi);
  r.add_residual("translation-group", anchor::weyl_translation_group,
                 res.u_group_residual, tol);
  r.add_residual("boost-group", anchor::weyl_boost_group,
                 res.v_group_residual, tol);
  r.add_residual("translation-inverse", anchor::weyl_inverse,
                 res.u_inverse_residual, tol);
  r.add_residual("commutation-phase", anchor::weyl_commutation_phase,
                 res.commutation_residual, tol);
  return r;
}

VerificationReport run_wigner(const Scenario& sc) {
  ParamReader pr(sc);
  const long long n = pr.integer("n", 256);
  const double box = pr.real("box", 16.0);
  const double hbar = pr.real("hbar", 1.0);
  const double sigma = pr.real("sigma", 0.5);
  const double x0 = pr.real("x0", 1.1);
  const double p0 = pr.real("p0", -0.6);
  const double mass = pr.real("mass", 1.0);
  const double omega = pr.real("omega", 1.0);
  const double mass_tol = pr.real("mass_tol", 1e-12);
  const double closed_tol = pr.real("closed_form_tol", 1e-9);
  const double marg_x_tol = pr.real("marginal_x_tol", 1e-12);
  const double marg_p_tol = pr.real("marginal_p_tol", 1e-9);
  const double purity_tol = pr.real("purity_tol", 1e-8);
  const double pairing_tol = pr.real("pairing_tol", 1e-8);
  const Common common = common_params(pr);
  pr.finish();
  if (sigma <= 0 || hbar <= 0 || mass <= 0 || omega <= 0)
    throw ConfigError("sigma, hbar, mass, and omega must be positive");

  VerificationReport r;
  r.suite = "wigner";
  r.config["n"] = std::to_string(n);
  r.config["box"] = format_double(box);
  r.config["hbar"] = format_double(hbar);
  r.config["sigma"] = format_double(sigma);

  const PhaseGrid g = make_grid(box, n, hbar);
  const WaveField psi = gaussian_packet(g, x0, p0, sigma);
  const WignerField wf = wigner(g, psi);

  r.add_residual("mass", anchor::wigner_mass,
                 std::abs(total_mass(g, wf) - 1.0), mass_tol);

  // The packet width must keep the half-box correlation negligible for the
  // whole-line closed form to hold on every node.
  double closed_gap = 0;
  for (int j = 0; j < g.N; ++j)
    for (int m = 0; m < g.N; ++m) {
      const double dxv = g.x(j) - x0, dpv = g.p(m) - p0;
      const double cf = std::exp(-dxv * dxv / (2 * sigma * sigma) -
                                 2 * sigma * sigma * dpv * dpv /
                                     (hbar * hbar)) /
                        (PhaseGrid::pi() * hbar);
      closed_gap = std::max(closed_gap, std::abs(wf.w(j, m) - cf));
    }
  r.add_residual("closed-form", anchor::wigner_closed_form, closed_gap,
                 closed_tol);

  const Eigen::VectorXd mx = x_marginal(g, wf);
  double mx_gap = 0;
  for (int j = 0; j < g.N; ++j)
    mx_gap = std::max(mx_gap, std::abs(mx(j) - std::norm(psi(j))));
  r.add_residual("marginal-x", anchor::wigner_marginal_x, mx_gap, marg_x_tol,
                 "row sums against the sampled position density");

  const Eigen::VectorXd mp = p_marginal(g, wf);
  double mp_gap = 0;
  for (int m = 0; m < g.N; ++m) {
    const double dpv = g.p(m) - p0;
    const double cf = std::sqrt(2.0 / PhaseGrid::pi()) * sigma / hbar *
                      std::exp(-2 * sigma * sigma * dpv * dpv / (hbar * hbar));
    mp_gap = std::max(mp_gap, std::abs(mp(m) - cf));
  }
  r.add_residual("marginal-p", anchor::wigner_marginal_p, mp_gap, marg_p_tol,
                 "column sums against the closed momentum density");

  r.add_residual("purity", anchor::wigner_purity,
                 std::abs(2 * PhaseGrid::pi() * hbar * phase_purity(g, wf) -
                          1.0),
                 purity_tol);

  // Expectations of wave-side operators against phase-space pairings.
  const Eigen::VectorXd xs = g.xs();
  Eigen::VectorXd vpot(g.N);
  for (int j = 0; j < g.N; ++j)
    vpot(j) = 0.5 * mass * omega * omega * xs(j) * xs(j);
  const WaveField ppsi = apply_momentum(g, psi);
  WaveField p2psi = apply_momentum(g, ppsi);

  struct Pairing {
    std::string name;
    Cx lhs;
    double rhs;
  };
  std::vector<Pairing> pairings;
  const double dxdp = g.dx() * g.dp();

  auto grid_sum = [&](const std::function<double(double, double)>& f) {
    double acc = 0;
    for (int j = 0; j < g.N; ++j)
      for (int m = 0; m < g.N; ++m) acc += f(xs(j), g.p(m)) * wf.w(j, m);
    return acc * dxdp;
  };
  pairings.push_back({"identity", psi.dot(psi) * g.dx(),
                      grid_sum([](double, double) { return 1.0; })});
  pairings.push_back({"position",
                      psi.dot(xs.cast<Cx>().cwiseProduct(psi)) * g.dx(),
                      grid_sum([](double x, double) { return x; })});
  pairings.push_back({"momentum", psi.dot(ppsi) * g.dx(),
                      grid_sum([](double, double p) { return p; })});
  const Cx kinetic = psi.dot(p2psi) * g.dx() / (2.0 * mass);
  const Cx pot = psi.dot(vpot.cast<Cx>().cwiseProduct(psi)) * g.dx();
  pairings.push_back(
      {"energy", kinetic + pot, grid_sum([&](double x, double p) {
         return p * p / (2.0 * mass) + 0.5 * mass * omega * omega * x * x;
       })});
  for (const Pairing& pair : pairings)
    r.add_residual("pairing-" + pair.name, anchor::wigner_born_pairing,
                   std::abs(pair.lhs - Cx(pair.rhs, 0)), pairing_tol,
                   "wave side " + format_double(pair.lhs.real()) +
                       ", phase side " + format_double(pair.rhs));

  if (!common.out_dir.empty()) {
    std::string csv = "x,p,w\n";
    for (int j = 0; j < g.N; ++j)
      for (int m = 0; m < g.N; ++m)
        csv += csv_num(xs(j)) + "," + csv_num(g.p(m)) + "," +
               csv_num(wf.w(j, m)) + "\n";
    write_text_file(common.out_dir + "/wigner.csv", csv);
  }
  return r;
}

VerificationReport run_star(const Scenario& sc) {
  ParamReader pr(sc);
  const std::string check = pr.str("check", "both");
  const long long n = pr.integer("n", 64);
  const double box = pr.real("box", 12.0);
  const double grid_hbar = pr.real("grid_hbar", 0.7);
  const double hbar = pr.real("hbar", 0.7);
  const long long order = pr.integer("order", 4);
  const long long nodes = pr.integer("nodes", 12);
  const double series_tol = pr.real("series_tol", 1e-8);
  const double quad_tol = pr.real("quadrature_tol", 1e-6);
  const double slope_tol = pr.real("slope_tol", 0.2);
  const std::vector<double> hbars =
      pr.real_list("hbars", "0.1,0.05,0.025,0.0125");
  const Common common = common_params(pr);
  pr.finish();
  if (check != "both" && check != "calibration" && check != "scaling")
    throw ConfigError("unknown check '" + check +
                      "' (expected calibration, scaling, or both)");
  if (hbar <= 0) throw ConfigError("hbar must be positive");
  if (order < 1 || order > 8)
    throw ConfigError("order must be between 1 and 8");
  if (nodes < 2 || nodes > 64)
    throw ConfigError("nodes must be between 2 and 64");
  for (double h : hbars)
    if (h <= 0) throw ConfigError("hbars must be positive");

  VerificationReport r;
  r.suite = "star";
  r.config["check"] = check;
  r.config["n"] = std::to_string(n);
  r.config["hbar"] = format_double(hbar);
  r.config["order"] = std::to_string(order);

  const PhaseGrid g = make_grid(box, n, grid_hbar);
  const AnalyticSymbol ax = [](Cx x, Cx) { return x; };
  const AnalyticSymbol ap = [](Cx, Cx p) { return p; };
  const SymbolField fx = sample_symbol(g, ax);
  const SymbolField fp = sample_symbol(g, ap);

  if (check != "scaling") {
    const SymbolField xp =
        star_product(g, fx, fp, hbar, StarMethod::series,
                     static_cast<int>(order));
    const SymbolField px =
        star_product(g, fp, fx, hbar, StarMethod::series,
                     static_cast<int>(order));
    double worst = 0;
    for (int j = 0; j < g.N; ++j)
      for (int m = 0; m < g.N; ++m) {
        const Cx want(g.x(j) * g.p(m), hbar / 2);
        worst = std::max(worst, std::abs(xp.samples(j, m) - want));
        worst = std::max(worst, std::abs(xp.samples(j, m) -
                                         px.samples(j, m) - Cx(0, hbar)));
      }
    r.add_residual("commutator-series", anchor::star_commutator_series,
                   worst / hbar, series_tol,
                   "canonical pair commutator against i hbar");

    if (n > 64)
      throw ConfigError("quadrature calibration requires n <= 64");
    const SymbolField qxp =
        star_product(g, fx, fp, hbar, StarMethod::quadrature,
                     static_cast<int>(order), static_cast<int>(nodes));
    const SymbolField qpx =
        star_product(g, fp, fx, hbar, StarMethod::quadrature,
                     static_cast<int>(order), static_cast<int>(nodes));
    double qworst = 0;
    for (int j = 0; j < g.N; ++j)
      for (int m = 0; m < g.N; ++m) {
        const Cx want(g.x(j) * g.p(m), hbar / 2);
        qworst = std::max(qworst, std::abs(qxp.samples(j, m) - want));
        qworst = std::max(qworst, std::abs(qxp.samples(j, m) -
                                           qpx.samples(j, m) - Cx(0, hbar)));
      }
    r.add_residual("commutator-quadrature",
                   anchor::star_commutator_quadrature, qworst / hbar,
                   quad_tol, "integral-form product on the same pair");
  }

  if (check != "calibration") {
    const SymbolField ga = sample_symbol(g, [](Cx x, Cx p) {
      return std::exp(-(x - 0.8) * (x - 0.8) / 2.0 -
                      (p + 0.3) * (p + 0.3) / 2.0);
    });
    const SymbolField gb = sample_symbol(g, [](Cx x, Cx p) {
      return std::exp(-(x + 0.5) * (x + 0.5) / 2.0 -
                      (p - 0.6) * (p - 0.6) / 2.0);
    });
    const ScalingFit fit = semiclassical_scaling(g, ga, gb, hbars,
                                                 static_cast<int>(order));
    r.add_residual("remainder-slope", anchor::star_remainder_slope,
                   std::abs(fit.slope - 2.0), slope_tol,
                   "fitted slope " + format_double(fit.slope));
    int excluded = 0;
    for (char e : fit.excluded) excluded += e ? 1 : 0;
    r.add_exact("remainder-floor", anchor::star_remainder_floor,
                excluded == 0,
                std::to_string(excluded) +
                    " points sat at the floating-point floor");
    if (!common.out_dir.empty()) {
      nlohmann::ordered_json j;
      j["slope"] = fit.slope;
      j["intercept"] = fit.intercept;
      j["hbars"] = fit.hbars;
      j["remainders"] = fit.remainders;
      j["fit_residuals"] = fit.fit_residuals;
      std::vector<bool> ex(fit.excluded.begin(), fit.excluded.end());
      j["excluded"] = ex;
      write_text_file(common.out_dir + "/scaling.json", j.dump(2) + "\n");
    }
  }
  return r;
}

PhaseDensity gaussian_blob(double x0, double p0, double sx, double sp) {
  const double norm = 1.0 / (2.0 * PhaseGrid::pi() * sx * sp);
  return [=](double x, double p) {
    const double u = (x - x0) / sx, v = (p - p0) / sp;
    return norm * std::exp(-0.5 * (u * u + v * v));
  };
}

double l1_gap_of(const PhaseGrid& g, const Eigen::MatrixXd& a,
                 const Eigen::MatrixXd& b) {
  return (a - b).cwiseAbs().sum() * g.dx() * g.dp();
}

VerificationReport run_classical_limit(const Scenario& sc) {
  ParamReader pr(sc);
  const std::string potential = pr.str("potential", "harmonic");
  VerificationReport r;
  r.suite = "classical-limit";
  r.config["potential"] = potential;

  if (potential == "harmonic" || potential == "free") {
    const long long n = pr.integer("n", 128);
    const double box = pr.real("box", potential == "free" ? 16.0 : 14.0);
    const double grid_hbar = pr.real("grid_hbar", 0.7);
    const double hbar = pr.real("hbar", 0.7);
    const double mass = pr.real("mass", 1.0);
    const double omega = pr.real("omega", 1.0);
    const double x0 = pr.real("x0", 1.2);
    const double p0 = pr.real("p0", 0.8);
    const double sx = pr.real("sigma_x", 0.75);
    const double sp = pr.real("sigma_p", 0.75);
    const long long steps = pr.integer("steps", 0);
    const double energy_tol = pr.real("energy_tol", 1e-8);
    const double l1_tol = pr.real("l1_tol", 1e-6);
    const double moment_tol = pr.real("moment_tol", 1e-6);
    const double mass_tol = pr.real("mass_tol", 1e-11);
    double t = pr.real("time", potential == "free" ? 1.0 : 0.0);
    common_params(pr);
    pr.finish();
    if (mass <= 0 || omega <= 0 || sx <= 0 || sp <= 0 || hbar < 0)
      throw ConfigError("mass, omega, and widths must be positive");
    if (steps < 0 || steps > 2000000)
      throw ConfigError("steps must be between 0 and 2000000");
    r.config["n"] = std::to_string(n);
    r.config["hbar"] = format_double(hbar);

    const PhaseGrid g = make_grid(box, n, grid_hbar);
    const PotentialModel pot = potential == "free"
                                   ? free_particle(mass)
                                   : harmonic_well(mass, omega);
    const bool full_period = potential == "harmonic" && t == 0.0;
    if (full_period) t = 2.0 * PhaseGrid::pi() / omega;
    r.config["time"] = format_double(t);

    const PhaseDensity rho0 = gaussian_blob(x0, p0, sx, sp);
    const CorrespondenceReport rep = classical_limit_compare(
        g, rho0, pot, hbar, t, static_cast<int>(steps), energy_tol);
    r.add_residual("transport-gap", anchor::climit_transport_gap, rep.l1_gap,
                   l1_tol, "deformed against characteristic transport");
    r.add_residual("moment-gap", anchor::climit_moment_gap,
                   std::max({rep.gap_x, rep.gap_p, rep.gap_xx}), moment_tol);
    r.add_residual("mass", anchor::climit_mass, rep.mass_error, mass_tol);
    r.add_residual("energy-drift", anchor::climit_energy_drift,
                   rep.energy_drift, energy_tol,
                   "after " + std::to_string(rep.moyal_steps) + " steps");

    if (full_period) {
      const Eigen::MatrixXd w0 = sample_density(g, rho0);
      const MoyalEvolution ev = moyal_evolve(g, w0, pot, hbar, t,
                                             static_cast<int>(steps),
                                             energy_tol);
      r.add_residual("period-return", anchor::climit_period_return,
                     l1_gap_of(g, ev.w, w0), l1_tol,
                     "one full period closes the orbit");
    }
    return r;
  }

  if (potential != "quartic")
    throw ConfigError("unknown potential '" + potential +
                      "' (expected free, harmonic, or quartic)");

  const long long n = pr.integer("n", 128);
  const double box = pr.real("box", 12.0);
  const double grid_hbar = pr.real("grid_hbar", 0.35);
  const double mass = pr.real("mass", 1.0);
  const double c2 = pr.real("c2", 0.5);
  const double c4 = pr.real("c4", 0.05);
  const double x0 = pr.real("x0", 1.0);
  const double p0 = pr.real("p0", 0.5);
  const double sx = pr.real("sigma_x", 0.55);
  const double sp = pr.real("sigma_p", 0.55);
  const double t = pr.real("time", 1.5);
  const long long steps = pr.integer("steps", 512);
  const double energy_tol = pr.real("energy_tol", 1e-6);
  const double classical_tol = pr.real("classical_tol", 1e-8);
  const double mass_tol = pr.real("mass_tol", 1e-11);
  const double slope_tol = pr.real("slope_tol", 0.1);
  const std::vector<double> hbars =
      pr.real_list("hbars", "0.1,0.05,0.025,0.0125");
  const Common common = common_params(pr);
  pr.finish();
  if (mass <= 0 || sx <= 0 || sp <= 0)
    throw ConfigError("mass and widths must be positive");
  if (hbars.size() < 2)
    throw ConfigError("the deformation sweep needs at least two hbars");
  for (double h : hbars)
    if (h <= 0) throw ConfigError("hbars must be positive");
  r.config["n"] = std::to_string(n);
  r.config["time"] = format_double(t);
  r.config["c4"] = format_double(c4);

  const PhaseGrid g = make_grid(box, n, grid_hbar);
  const PotentialModel pot = quartic_well(mass, c2, c4);
  const PhaseDensity rho0 = gaussian_blob(x0, p0, sx, sp);

  // Spectral transport at hbar = 0 must agree with the characteristic
  // back-trace before the sweep means anything.
  const CorrespondenceReport zero = classical_limit_compare(
      g, rho0, pot, 0.0, t, static_cast<int>(steps), energy_tol);
  r.add_residual("classical-gap", anchor::climit_transport_gap, zero.l1_gap,
                 classical_tol, "deformation switched off entirely");

  std::vector<CorrespondenceReport> sweep(hbars.size());
  run_units(common.jobs, static_cast<int>(hbars.size()), [&](int i) {
    sweep[i] = classical_limit_compare(g, rho0, pot, hbars[i], t,
                                       static_cast<int>(steps), energy_tol);
  });

  std::vector<double> gaps;
  bool monotone = true;
  for (std::size_t i = 0; i < hbars.size(); ++i) {
    gaps.push_back(sweep[i].l1_gap);
    r.add_residual("mass-" + format_double(hbars[i]), anchor::climit_mass,
                   sweep[i].mass_error, mass_tol);
    if (i > 0 && !(gaps[i] < gaps[i - 1])) monotone = false;
  }
  r.add_exact("hbar-monotone", anchor::climit_hbar_monotone, monotone,
              monotone ? "transport gap shrinks with the deformation"
                       : "transport gap failed to shrink monotonically");
  const double slope = slope_of_loglog(hbars, gaps);
  r.add_residual("hbar-slope", anchor::climit_hbar_slope,
                 std::abs(slope - 2.0), slope_tol,
                 "fitted slope " + format_double(slope));

  if (!common.out_dir.empty()) {
    nlohmann::ordered_json j;
    j["slope"] = slope;
    j["hbars"] = hbars;
    j["gaps"] = gaps;
    write_text_file(common.out_dir + "/scaling.json", j.dump(2) + "\n");
  }
  return r;
}

}  // namespace

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> registry = {
      {"verify-algebra", "exact bracket and identity tables",
       run_verify_algebra},
      {"gns", "state representations, compressions, and sectors", run_gns},
      {"grassmann-cc", "fermionic state family and separation witness",
       run_grassmann_cc},
      {"noether", "free-motion invariants under symbolic evolution",
       run_noether},
      {"evolve", "wave evolution laws on the grid", run_evolve},
      {"localize", "cell probabilities: additivity, covariance, half-line",
       run_localize},
      {"weyl-check", "discrete translation and boost relations",
       run_weyl_check},
      {"wigner", "phase-space transform checks and operator pairings",
       run_wigner},
      {"star", "deformed product calibration and remainder scaling",
       run_star},
      {"classical-limit", "phase-space transport against the classical flow",
       run_classical_limit},
  };
  return registry;
}

VerificationReport run_suite(const Scenario& sc) {
  if (sc.suite.empty()) throw ConfigError("no suite selected");
  const SuiteInfo* info = nullptr;
  for (const SuiteInfo& s : suite_registry())
    if (s.name == sc.suite) info = &s;
  if (!info) throw ConfigError("unknown suite '" + sc.suite + "'");

  // A section named after the suite is the suite's own parameter block.
  Scenario flat;
  flat.suite = sc.suite;
  const std::string prefix = sc.suite + ".";
  for (const auto& [key, value] : sc.params) {
    const std::string bare =
        key.rfind(prefix, 0) == 0 ? key.substr(prefix.size()) : key;
    if (!flat.params.emplace(bare, value).second)
      throw ConfigError("parameter '" + bare +
                        "' given both bare and in the suite section");
  }

  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  try {
    r = info->run(flat);
  } catch (const ConfigError&) {
    throw;
  } catch (const IoError&) {
    throw;
  } catch (const Error& e) {
    r.suite = sc.suite;
    r.entries.push_back(CheckEntry{"unhandled-error",
                                   std::string(anchor::suite_error), false,
                                   1.0, 0.0, e.what()});
  }
  r.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return r;
}

}  // namespace supmech
