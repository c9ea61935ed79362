#pragma once

// Command implementations behind the `reciprocity` executable. Each command
// returns a RunReport; the executable only parses flags and prints.
// Requires linking OpenSSL's libcrypto for the input digest.

#include "reciprocity/arrangement.hpp"
#include "reciprocity/ehrhart.hpp"
#include "reciprocity/face_lattice.hpp"
#include "reciprocity/generators.hpp"
#include "reciprocity/graph_coloring.hpp"
#include "reciprocity/io.hpp"
#include "reciprocity/ppartition.hpp"
#include "reciprocity/triangulation.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace reciprocity::cli {

using nlohmann::json;

struct CheckRecord {
  std::string name;
  bool passed = true;
  std::string witness;  // empty on success
  std::size_t instances = 1;
};

struct RunReport {
  std::string command;
  json inputs = json::object();  // what the digest covers: a file path or run parameters
  std::string inputs_digest;
  json outputs = json::object();
  std::vector<CheckRecord> checks;
  std::vector<std::pair<std::string, std::string>> summary;  // text-mode lines, not serialized

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  void check(const std::string& name, const CheckResult& r, std::size_t instances = 1) {
    checks.push_back({name, r.passed, r.witness, instances});
  }

  void show(const std::string& key, const std::string& value) { summary.emplace_back(key, value); }

  json to_json() const {
    json cs = json::array();
    for (const auto& c : checks) {
      json j{{"name", c.name}, {"passed", c.passed}, {"instances", c.instances}};
      if (!c.passed) j["witness"] = c.witness;
      cs.push_back(std::move(j));
    }
    return {{"command", command}, {"inputs", inputs}, {"inputs_digest", inputs_digest}, {"outputs", outputs},
            {"checks", cs}};
  }

  static RunReport from_json(const json& j) {
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.inputs_digest = j.at("inputs_digest").get<std::string>();
    r.outputs = j.at("outputs");
    for (const auto& c : j.at("checks"))
      r.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(),
                          c.value("witness", std::string{}), c.at("instances").get<std::size_t>()});
    return r;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "command: " << command << "\n";
    os << "inputs sha256: " << inputs_digest << "\n";
    for (const auto& [k, v] : summary) os << k << ": " << v << "\n";
    for (const auto& c : checks) {
      os << (c.passed ? "[pass] " : "[FAIL] ") << c.name;
      if (c.instances > 1) os << " (" << c.instances << " instances)";
      if (!c.passed) os << ": " << c.witness;
      os << "\n";
    }
    os << (passed() ? "all checks passed" : "some checks FAILED") << "\n";
    return os.str();
  }
};

inline std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

/// SHA-256 of the input file's bytes, or of the parameter object's compact
/// dump when there is no file.
inline std::string compute_digest(const json& inputs) {
  if (inputs.contains("file")) return sha256_hex(read_file(inputs.at("file").get<std::string>()));
  return sha256_hex(inputs.dump());
}

namespace detail {

inline RunReport start(const std::string& command, json inputs) {
  RunReport r;
  r.command = command;
  r.inputs = std::move(inputs);
  r.inputs_digest = compute_digest(r.inputs);
  return r;
}

inline std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += ' ';
    s += p;
  }
  return s;
}

inline std::string ints(const std::vector<Integer>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + "]";
}

inline json int_array(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

}  // namespace detail

// ---- arrangement ---------------------------------------------------------

inline RunReport cmd_arrangement(const std::string& file) {
  RunReport r = detail::start("arrangement " + file, {{"file", file}});
  const Arrangement a = parse_arrangement(read_file(file));
  const Polynomial h = characteristic_polynomial(a);
  const Integer zas = regions_zaslavsky(a);
  const Integer dr = regions_deletion_restriction(a);
  r.outputs["dimension"] = a.dimension();
  r.outputs["hyperplanes"] = a.size();
  r.outputs["characteristic_polynomial"] = to_json(h);
  r.outputs["regions_zaslavsky"] = zas.str();
  r.outputs["regions_deletion_restriction"] = dr.str();
  r.show("dimension", std::to_string(a.dimension()));
  r.show("hyperplanes", std::to_string(a.size()));
  r.show("characteristic polynomial", h.to_string());
  r.show("regions (Moebius)", zas.str());
  r.show("regions (deletion-restriction)", dr.str());
  r.check("region counts agree",
          zas == dr ? CheckResult::ok() : CheckResult::fail(zas.str() + " vs " + dr.str()));
  return r;
}

// ---- ehrhart ---------------------------------------------------------------

struct EhrhartOptions {
  bool series = false;
  bool reciprocity = false;
  bool triangulate = false;
  std::uint64_t seed = 0;
  unsigned horizon = 8;
};

inline RunReport cmd_ehrhart(const std::string& file, const EhrhartOptions& opt) {
  std::vector<std::string> cmd{"ehrhart", file};
  if (opt.series) cmd.push_back("--series");
  if (opt.reciprocity) cmd.push_back("--reciprocity");
  if (opt.triangulate) cmd.push_back("--triangulate");
  cmd.push_back("--seed " + std::to_string(opt.seed));
  cmd.push_back("--horizon " + std::to_string(opt.horizon));
  RunReport r = detail::start(detail::join(cmd), {{"file", file}});

  const Polytope p = parse_polytope(read_file(file));
  const Quasipolynomial ehr = ehrhart(p);
  const Quasipolynomial ehr_open = ehrhart(p, true);
  r.outputs["ambient_dimension"] = p.ambient_dimension();
  r.outputs["dimension"] = p.dim();
  r.outputs["vertices"] = p.vertices().size();
  r.outputs["facets"] = p.facets().size();
  r.outputs["ehrhart"] = to_json(ehr);
  r.outputs["ehrhart_interior"] = to_json(ehr_open);
  r.show("dimension", std::to_string(p.dim()) + " in R^" + std::to_string(p.ambient_dimension()));
  r.show("vertices", std::to_string(p.vertices().size()));
  r.show("ehrhart", ehr.to_string());
  r.show("ehrhart (interior)", ehr_open.to_string());
  if (p.dim() <= kMaxFaceLatticeDim && p.vertices().size() <= 64) {
    const FaceLattice fl = face_lattice(p);
    const Polynomial f = fl.f_polynomial();
    const Integer chi = numerator_of(f(Rational(-1)));
    r.outputs["f_polynomial"] = to_json(f);
    r.show("face numbers f(t)", f.to_string());
    r.check("euler characteristic f(-1) = 1",
            chi == 1 ? CheckResult::ok() : CheckResult::fail("f(-1) = " + chi.str()));
    r.check("face lattice moebius", face_lattice_mobius_check(fl));
  }
  if (opt.reciprocity)
    r.check("ehrhart reciprocity, t <= " + std::to_string(opt.horizon), ehrhart_reciprocity_check(p, opt.horizon));
  if (opt.series) {
    if (!p.is_lattice()) throw std::invalid_argument("--series needs a lattice polytope");
    const RationalGF s = ehrhart_series(p, opt.seed);
    r.outputs["ehrhart_series"] = to_json(s);
    r.show("ehrhart series", s.to_string());
    if (p.is_simplex()) {
      const HVectors hv = simplex_h_vectors(p);
      r.outputs["h"] = to_json(hv.h);
      r.outputs["h_tilde"] = to_json(hv.h_tilde);
      r.show("h(z)", hv.h.to_string("z"));
      r.show("h~(z)", hv.h_tilde.to_string("z"));
      const Polynomial mirrored = [&] {
        const std::size_t top = p.dim() + 1;
        Polynomial m;
        for (long k = 0; k <= hv.h.degree(); ++k)
          m += Polynomial::monomial(top - static_cast<std::size_t>(k), hv.h[static_cast<std::size_t>(k)]);
        return m;
      }();
      r.check("h~(z) = z^{d+1} h(1/z)", mirrored == hv.h_tilde
                                            ? CheckResult::ok()
                                            : CheckResult::fail(mirrored.to_string("z") + " vs " +
                                                                hv.h_tilde.to_string("z")));
    }
    const auto prefix = gf_series_prefix(s, 8);
    std::string mismatch;
    for (unsigned t = 1; t <= 8 && mismatch.empty(); ++t)
      if (prefix[t] != lattice_count(p, t)) mismatch = "t = " + std::to_string(t);
    r.check("series prefix matches lattice counts, t <= 8",
            mismatch.empty() ? CheckResult::ok() : CheckResult::fail(mismatch));
  }
  if (opt.triangulate) {
    const Triangulation tri = regular_triangulation(p, opt.seed);
    json simplices = json::array();
    std::string listing;
    for (const auto& s : tri.simplices) {
      json ids = json::array();
      listing += listing.empty() ? "{" : " {";
      for (std::size_t i = 0; i < s.size(); ++i) {
        ids.push_back(s[i] + 1);
        listing += (i ? "," : "") + std::to_string(s[i] + 1);
      }
      listing += "}";
      simplices.push_back(std::move(ids));
    }
    r.outputs["triangulation"] = {{"simplices", simplices},
                                  {"lifting", detail::int_array(tri.lifting)},
                                  {"attempts", tri.attempts}};
    r.show("triangulation (vertex numbers)", listing);
    r.show("lifting attempts", std::to_string(tri.attempts));
    r.check("triangulation moebius", triangulation_mobius_check(tri));
    r.check("triangulation covers, volumes and inclusion-exclusion", triangulation_partition_check(tri, 4));
  }
  return r;
}

// ---- chromatic -------------------------------------------------------------

struct ChromaticOptions {
  std::vector<unsigned> pairs;
  bool iop = false;
};

inline RunReport cmd_chromatic(const std::string& file, const ChromaticOptions& opt) {
  std::vector<std::string> cmd{"chromatic", file};
  for (auto t : opt.pairs) cmd.push_back("--pairs " + std::to_string(t));
  if (opt.iop) cmd.push_back("--iop");
  RunReport r = detail::start(detail::join(cmd), {{"file", file}});

  const Graph g = parse_graph(read_file(file));
  const Polynomial c = chromatic_polynomial(g);
  const auto acyclic = acyclic_orientations(g);
  const int s = sign_power(static_cast<long>(g.size()));
  r.outputs["nodes"] = g.size();
  r.outputs["edges"] = g.edges().size();
  r.outputs["loop"] = g.has_loop();
  r.outputs["chromatic_polynomial"] = to_json(c);
  r.outputs["acyclic_orientations"] = acyclic.size();
  r.show("nodes", std::to_string(g.size()));
  r.show("edges", std::to_string(g.edges().size()) + (g.has_loop() ? " (plus a loop)" : ""));
  r.show("chromatic polynomial", c.is_zero() ? "0" : c.to_string());
  r.show("acyclic orientations", std::to_string(acyclic.size()));
  const Rational at_minus_one = Rational(s) * c(Rational(-1));
  r.check("(-1)^n c(-1) counts acyclic orientations",
          at_minus_one == Rational(acyclic.size())
              ? CheckResult::ok()
              : CheckResult::fail(to_string(at_minus_one) + " vs " + std::to_string(acyclic.size())));
  if (g.size() <= 6) {
    std::string bad;
    for (unsigned t = 1; t <= 5 && bad.empty(); ++t)
      if (c(Rational(t)) != Rational(proper_colorings_brute(g, t))) bad = "t = " + std::to_string(t);
    r.check("c(t) matches brute-force colorings, t <= 5", bad.empty() ? CheckResult::ok() : CheckResult::fail(bad));
  }
  if (!opt.pairs.empty()) {
    json pj = json::array();
    for (auto t : opt.pairs) {
      if (t < 1) throw std::invalid_argument("--pairs needs t >= 1");
      const Integer pairs = compatible_pairs(g, t);
      const Rational reflected = Rational(s) * c(Rational(-static_cast<long>(t)));
      pj.push_back({{"t", t}, {"compatible_pairs", pairs.str()}, {"reflected_chromatic", to_string(reflected)}});
      r.show("compatible pairs at t = " + std::to_string(t), pairs.str());
      r.check("(-1)^n c(-" + std::to_string(t) + ") = compatible pairs",
              reflected == Rational(pairs) ? CheckResult::ok()
                                           : CheckResult::fail(to_string(reflected) + " vs " + pairs.str()));
    }
    r.outputs["pairs"] = pj;
  }
  if (opt.iop) {
    if (g.has_loop()) throw std::invalid_argument("--iop needs a loopless graph");
    const Arrangement ha = graphical_arrangement(g);
    const Integer zas = regions_zaslavsky(ha);
    r.outputs["graphical_regions"] = zas.str();
    r.show("graphical arrangement regions", zas.str());
    r.check("graphical regions = acyclic orientations",
            zas == Integer(acyclic.size()) ? CheckResult::ok()
                                           : CheckResult::fail(zas.str() + " vs " + std::to_string(acyclic.size())));
    r.check("region / acyclic orientation bijection", region_orientation_bijection_check(g));
    const unsigned horizon = kMaxReciprocityHorizon;
    r.check("coloring reciprocity via the unit cube, t <= " + std::to_string(horizon),
            coloring_reciprocity_check(g, horizon));
    std::vector<Integer> colorings_iop;
    const InsideOutPolytope iop = coloring_inside_out(g);
    const auto regions = realized_regions(iop);
    for (unsigned t = 1; t <= horizon; ++t) colorings_iop.push_back(inside_out_counts(iop, t + 1, regions).open_off);
    r.outputs["colorings_from_open_cube"] = detail::int_array(colorings_iop);
    r.show("lattice points of (t+1)(0,1)^V off H, t = 1.." + std::to_string(horizon), detail::ints(colorings_iop));
  }
  return r;
}

// ---- ppartition ------------------------------------------------------------

struct PPartitionOptions {
  bool strict = false;
  bool reciprocity = false;
  std::size_t terms = 12;
};

inline RunReport cmd_ppartition(const std::string& file, const PPartitionOptions& opt) {
  std::vector<std::string> cmd{"ppartition", file};
  if (opt.strict) cmd.push_back("--strict");
  if (opt.reciprocity) cmd.push_back("--reciprocity");
  RunReport r = detail::start(detail::join(cmd), {{"file", file}});

  const Poset p = parse_poset(read_file(file));
  const PPartitionSpec weak(p, false), strict(p, true);
  const PPartitionSpec& chosen = opt.strict ? strict : weak;
  const RationalGF wg = ppartition_gf(weak), sg = ppartition_gf(strict);
  r.outputs["elements"] = p.size();
  r.outputs["weak_gf"] = to_json(wg);
  r.outputs["strict_gf"] = to_json(sg);
  r.show("elements", std::to_string(p.size()));
  if (weak.relabeled()) {
    json m = json::array();
    std::string shown;
    for (std::size_t i = 0; i < weak.original().size(); ++i) {
      m.push_back(weak.original()[i] + 1);
      shown += (i ? " " : "") + std::to_string(weak.original()[i] + 1);
    }
    r.outputs["relabeling"] = m;
    r.show("natural relabeling (new label i holds input element)", shown);
  }
  r.show("weak generating function", wg.to_string());
  r.show("strict generating function", sg.to_string());

  json table = json::array();
  for (const auto& sigma : linear_extensions(chosen.poset())) {
    const DescentStats st = descent_stats(sigma);
    table.push_back({{"sigma", sigma.one_line()}, {"des", st.des}, {"maj", st.maj}, {"asc", st.asc}, {"amaj", st.amaj}});
    std::string des;
    for (auto j : st.des) des += (des.empty() ? "" : ",") + std::to_string(j);
    r.show("extension " + sigma.to_string(),
           "Des {" + des + "}, maj " + std::to_string(st.maj) + ", amaj " + std::to_string(st.amaj));
  }
  r.outputs["linear_extensions"] = table;

  const auto series = gf_series_prefix(opt.strict ? sg : wg, opt.terms);
  r.outputs[opt.strict ? "strict_counts" : "weak_counts"] = detail::int_array(series);
  r.show(std::string(opt.strict ? "strict" : "weak") + " counts t = 0.." + std::to_string(opt.terms),
         detail::ints(series));
  r.check("series agrees with enumeration, t <= " + std::to_string(opt.terms),
          series_agreement_check(chosen, opt.terms));
  r.check("half-open cells partition the P-partitions, t <= 6", cell_decomposition_check(chosen, 6));
  if (opt.reciprocity) r.check("P(1/z) = (-z)^d P°(z)", stanley_reciprocity_check(p));
  return r;
}

// ---- verify ----------------------------------------------------------------

enum class SuiteSize { tiny, small, medium };

inline SuiteSize parse_size(const std::string& s) {
  if (s == "tiny") return SuiteSize::tiny;
  if (s == "small") return SuiteSize::small;
  if (s == "medium") return SuiteSize::medium;
  throw std::invalid_argument("size must be tiny, small or medium, got '" + s + "'");
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"zaslavsky", "ehrhart", "chromatic", "ppartition", "euler"};
  return names;
}

namespace detail {

/// Accumulates one property over many instances; keeps the first witness.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}
  void add(const std::string& instance, const CheckResult& r) {
    ++count_;
    if (!r.passed && first_.empty()) first_ = instance + ": " + r.witness;
  }
  void add(const std::string& instance, bool ok, const std::string& why) {
    add(instance, ok ? CheckResult::ok() : CheckResult::fail(why));
  }
  void flush(RunReport& r) const {
    r.check(name_, first_.empty() ? CheckResult::ok() : CheckResult::fail(first_), count_);
  }

 private:
  std::string name_;
  std::size_t count_ = 0;
  std::string first_;
};

inline std::size_t scale(SuiteSize s, std::size_t tiny, std::size_t small, std::size_t medium) {
  return s == SuiteSize::tiny ? tiny : s == SuiteSize::small ? small : medium;
}

inline void verify_zaslavsky(RunReport& r, Rng& rng, SuiteSize size) {
  Tally braid("braid: h = t(t-1)...(t-d+1), d! regions"), boolean("boolean: h = (t-1)^d, 2^d regions"),
      generic("generic arrangements: Moebius and deletion-restriction agree");
  for (std::size_t d = 2; d <= scale(size, 3, 4, 5); ++d) {
    Polynomial falling = Polynomial::constant(1);
    for (std::size_t k = 0; k < d; ++k) falling = falling * Polynomial::linear_root(Rational(k));
    const Arrangement b = Arrangement::braid(d);
    const Polynomial h = characteristic_polynomial(b);
    const Integer want = factorial(static_cast<long>(d));
    braid.add("d = " + std::to_string(d),
              h == falling && regions_zaslavsky(b) == want && regions_deletion_restriction(b) == want,
              "h = " + h.to_string());
    Polynomial pw = Polynomial::constant(1);
    for (std::size_t k = 0; k < d; ++k) pw = pw * Polynomial::linear_root(1);
    const Arrangement bo = Arrangement::boolean(d);
    const Integer two_d = pow(Integer(2), static_cast<unsigned>(d));
    const Polynomial hb = characteristic_polynomial(bo);
    boolean.add("d = " + std::to_string(d),
                hb == pw && regions_zaslavsky(bo) == two_d && regions_deletion_restriction(bo) == two_d,
                "h = " + hb.to_string());
  }
  for (std::size_t i = 0; i < scale(size, 4, 12, 30); ++i) {
    const std::size_t d = 1 + rng() % 3;
    const std::size_t n = 1 + rng() % 6;
    const Arrangement a = generic_arrangement(n, d, rng);
    const Integer z = regions_zaslavsky(a), dr = regions_deletion_restriction(a);
    // General position: sum_{k<=d} C(n,k) regions.
    Integer closed = 0;
    for (std::size_t k = 0; k <= d; ++k) closed += binomial(static_cast<long>(n), static_cast<long>(k));
    generic.add("n = " + std::to_string(n) + ", d = " + std::to_string(d), z == dr && z == closed,
                z.str() + " / " + dr.str() + " / " + closed.str());
  }
  braid.flush(r);
  boolean.flush(r);
  generic.flush(r);
}

inline void verify_ehrhart(RunReport& r, Rng& rng, SuiteSize size) {
  Tally recip("random lattice polytopes: ehrhart reciprocity, t <= 8"),
      series("random lattice polytopes: series by triangulation = by interpolation"),
      tri("random lattice polytopes: triangulation moebius, volumes, coverage"),
      hsym("random lattice simplices: h~(z) = z^{d+1} h(1/z)");
  for (std::size_t i = 0; i < scale(size, 3, 10, 30); ++i) {
    const std::size_t d = 1 + rng() % 3;
    const Polytope p = random_lattice_polytope(rng, d);
    const std::string id = "polytope #" + std::to_string(i) + " (dim " + std::to_string(d) + ")";
    recip.add(id, ehrhart_reciprocity_check(p, 8));
    const RationalGF by_interp = ehrhart_series_by_interpolation(p);
    const Triangulation t = regular_triangulation(p, rng());
    series.add(id, gf_equal(by_interp, ehrhart_series_by_triangulation(t)), "series differ");
    const CheckResult mu = triangulation_mobius_check(t);
    tri.add(id, mu.passed ? triangulation_partition_check(t, 3) : mu);
  }
  for (std::size_t i = 0; i < scale(size, 3, 10, 30); ++i) {
    const std::size_t d = 1 + rng() % 4;
    const Polytope s = random_lattice_simplex(rng, d);
    const HVectors hv = simplex_h_vectors(s);
    Polynomial mirrored;
    for (long k = 0; k <= hv.h.degree(); ++k)
      mirrored += Polynomial::monomial(d + 1 - static_cast<std::size_t>(k), hv.h[static_cast<std::size_t>(k)]);
    hsym.add("simplex #" + std::to_string(i), mirrored == hv.h_tilde,
             hv.h.to_string("z") + " vs " + hv.h_tilde.to_string("z"));
  }
  recip.flush(r);
  series.flush(r);
  tri.flush(r);
  hsym.flush(r);
}

inline void verify_chromatic(RunReport& r, Rng& rng, SuiteSize size) {
  Tally brute("c(t) = brute-force colorings, t <= 5"), acyc("(-1)^n c(-1) = acyclic orientations"),
      regions("graphical regions (both routes) = acyclic orientations"),
      recip("coloring reciprocity via the unit cube, t <= 4"), bij("region / orientation bijection");
  for (std::size_t i = 0; i < scale(size, 4, 12, 30); ++i) {
    const std::size_t n = 1 + rng() % 5;
    const Graph g = random_graph(rng, n);
    const std::string id = "graph #" + std::to_string(i) + " (n " + std::to_string(n) + ", m " +
                           std::to_string(g.edges().size()) + ")";
    const Polynomial c = chromatic_polynomial(g);
    bool ok = true;
    for (unsigned t = 1; t <= 5; ++t) ok = ok && c(Rational(t)) == Rational(proper_colorings_brute(g, t));
    brute.add(id, ok, c.to_string());
    const auto ao = acyclic_orientations(g).size();
    const Rational v = Rational(sign_power(static_cast<long>(n))) * c(Rational(-1));
    acyc.add(id, v == Rational(ao), to_string(v) + " vs " + std::to_string(ao));
    const Arrangement ha = graphical_arrangement(g);
    const Integer z = regions_zaslavsky(ha), dr = regions_deletion_restriction(ha);
    regions.add(id, z == ao && dr == ao, z.str() + " / " + dr.str() + " / " + std::to_string(ao));
    recip.add(id, coloring_reciprocity_check(g, scale(size, 3, 4, 4)));
    bij.add(id, region_orientation_bijection_check(g));
  }
  brute.flush(r);
  acyc.flush(r);
  regions.flush(r);
  recip.flush(r);
  bij.flush(r);
}

inline void verify_ppartition(RunReport& r, Rng& rng, SuiteSize size) {
  Tally recip("P(1/z) = (-z)^d P°(z)"), cells("half-open cells partition P-partitions"),
      series("series prefix = enumeration, t <= 12"), ext("numerator at z = 1 counts linear extensions");
  for (std::size_t i = 0; i < scale(size, 4, 12, 30); ++i) {
    const std::size_t d = 1 + rng() % 6;
    const Poset p = random_natural_poset(rng, d);
    const std::string id = "poset #" + std::to_string(i) + " (d " + std::to_string(d) + ")";
    recip.add(id, stanley_reciprocity_check(p));
    for (bool strict : {false, true}) {
      const PPartitionSpec spec(p, strict);
      cells.add(id, cell_decomposition_check(spec, scale(size, 4, 5, 6)));
      series.add(id, series_agreement_check(spec, 12));
      const Rational at_one = ppartition_gf(spec).numerator()(Rational(1));
      const auto e = linear_extensions(p).size();
      ext.add(id, at_one == Rational(e), to_string(at_one) + " vs " + std::to_string(e));
    }
  }
  recip.flush(r);
  cells.flush(r);
  series.flush(r);
  ext.flush(r);
}

inline void verify_euler(RunReport& r, Rng& rng, SuiteSize size) {
  Tally chi("f(-1) = 1"), mu("face lattice moebius = (-1)^{dim F - dim G}");
  for (std::size_t i = 0; i < scale(size, 4, 12, 30); ++i) {
    const std::size_t d = 1 + rng() % 3;
    const Polytope p = random_lattice_polytope(rng, d);
    const std::string id = "polytope #" + std::to_string(i) + " (dim " + std::to_string(d) + ")";
    const FaceLattice fl = face_lattice(p);
    const Rational e = fl.f_polynomial()(Rational(-1));
    chi.add(id, e == 1, "f(-1) = " + to_string(e));
    mu.add(id, face_lattice_mobius_check(fl));
  }
  chi.flush(r);
  mu.flush(r);
}

}  // namespace detail

inline RunReport cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& size_name) {
  const SuiteSize size = parse_size(size_name);
  const bool all = suite == "all";
  if (!all && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw std::invalid_argument("unknown suite '" + suite + "'");
  RunReport r = detail::start("verify " + suite + " --seed " + std::to_string(seed) + " --size " + size_name,
                              {{"suite", suite}, {"seed", seed}, {"size", size_name}});
  for (std::size_t i = 0; i < suite_names().size(); ++i) {
    const std::string& name = suite_names()[i];
    if (!all && name != suite) continue;
    Rng rng(seed + 0x9e3779b97f4a7c15ull * (i + 1));  // one stream per suite
    if (name == "zaslavsky") detail::verify_zaslavsky(r, rng, size);
    if (name == "ehrhart") detail::verify_ehrhart(r, rng, size);
    if (name == "chromatic") detail::verify_chromatic(r, rng, size);
    if (name == "ppartition") detail::verify_ppartition(r, rng, size);
    if (name == "euler") detail::verify_euler(r, rng, size);
  }
  std::size_t total = 0;
  for (const auto& c : r.checks) total += c.instances;
  r.outputs["properties"] = r.checks.size();
  r.outputs["instances"] = total;
  r.show("properties checked", std::to_string(r.checks.size()));
  return r;
}

}  // namespace reciprocity::cli
