#include "hilb/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "hilb/betti.hpp"
#include "hilb/cones.hpp"
#include "hilb/io.hpp"
#include "hilb/modules.hpp"
#include "hilb/realize.hpp"
#include "hilb/rng.hpp"

namespace hilb {

namespace {

struct OutOpts {
  std::string format = "text";
  std::string path;
};

void add_out_opts(CLI::App* cmd, OutOpts& o) {
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--output", o.path, "write to this file instead of stdout");
}

void emit(const std::string& text, const OutOpts& o, std::ostream& out) {
  if (o.path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write " + o.path);
  f << text;
}

struct SeriesInput {
  std::string path;
  std::string inline_json;
  std::string poly_csv;
  long start = 0;
};

void add_series_input(CLI::App* cmd, SeriesInput& in) {
  auto* p = cmd->add_option("--input", in.path, "path to a series JSON file");
  auto* g = cmd->add_option("--genfun", in.inline_json, "inline series JSON");
  auto* h = cmd->add_option("--hilb-poly", in.poly_csv,
                            "coefficients c0,c1,... of a polynomial P with h(j) = P(j)");
  cmd->add_option("--start", in.start, "first index where --hilb-poly applies")->needs(h);
  p->excludes(g)->excludes(h);
  g->excludes(h);
}

Series load_series(const SeriesInput& in) {
  int given = (!in.path.empty() ? 1 : 0) + (!in.inline_json.empty() ? 1 : 0) +
              (!in.poly_csv.empty() ? 1 : 0);
  if (given != 1)
    throw std::invalid_argument("give exactly one of --input, --genfun, --hilb-poly");
  if (!in.path.empty()) {
    std::ifstream f(in.path);
    if (!f) throw std::invalid_argument("cannot open " + in.path);
    return series_from_json(nlohmann::json::parse(f));
  }
  if (!in.inline_json.empty())
    return series_from_json(nlohmann::json::parse(in.inline_json));
  if (in.start < 0) throw std::invalid_argument("--start must be non-negative");
  return poly_tail_to_series(Poly(rats_from_csv(in.poly_csv)), static_cast<int>(in.start));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

ConeId make_cone(const std::string& letter, int n, long a, bool has_a, long m, bool has_m) {
  if (letter == "P" || letter == "Q") {
    if (!has_a) throw std::invalid_argument("--a is required for cones P and Q");
    return ConeId(letter == "P" ? ConeKind::Positive : ConeKind::AInvariant, n, a);
  }
  if (!has_m) throw std::invalid_argument("--m is required for cone R");
  return ConeId(ConeKind::Regularity, n, m);
}

std::string violation_text(const Certificate& c) {
  switch (c.kind) {
    case Certificate::Kind::Coefficient:
      return "coefficient " + std::to_string(c.index);
    case Certificate::Kind::Facet:
      return "facet " + std::to_string(c.index);
    case Certificate::Kind::Infinity:
      return "infinity";
    case Certificate::Kind::None:
      break;
  }
  return "";
}

int cmd_member(const ConeId& cone, const Series& g, const OutOpts& o, std::ostream& out) {
  Certificate c = membership(cone, g);
  std::string text;
  if (o.format == "json") {
    text = dump(certificate_to_json(c));
  } else if (o.format == "csv") {
    std::ostringstream os;
    os << "member,kind,index\n";
    os << (c.member ? "true" : "false") << ",";
    if (!c.member) {
      os << (c.kind == Certificate::Kind::Coefficient ? "coefficient"
             : c.kind == Certificate::Kind::Facet     ? "facet"
                                                      : "infinity");
      os << ",";
      if (c.kind != Certificate::Kind::Infinity) os << c.index;
    } else {
      os << ",";
    }
    os << "\n";
    text = os.str();
  } else {
    text = c.member ? "member\n" : "not member: " + violation_text(c) + "\n";
  }
  emit(text, o, out);
  return c.member ? 0 : 1;
}

int cmd_rays(const std::vector<std::pair<RayLabel, Series>>& rays, bool normalize,
             const OutOpts& o, std::ostream& out) {
  std::vector<std::pair<RayLabel, Series>> list = rays;
  if (normalize)
    for (auto& [label, g] : list) {
      Rat c0 = g.coeff(0);
      if (c0.sign() > 0) g = g * (Rat(1) / c0);
    }
  std::string text;
  if (o.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [label, g] : list)
      arr.push_back({{"label", label.str()}, {"series", series_to_json(g)}});
    text = dump(arr);
  } else if (o.format == "csv") {
    std::ostringstream os;
    os << "label,series\n";
    for (const auto& [label, g] : list)
      os << csv_field(label.str()) << "," << csv_field(series_to_text(g)) << "\n";
    text = os.str();
  } else {
    std::ostringstream os;
    size_t w = 0;
    for (const auto& [label, g] : list) w = std::max(w, label.str().size());
    for (const auto& [label, g] : list)
      os << std::left << std::setw(static_cast<int>(w)) << label.str() << "  "
         << series_to_text(g) << "\n";
    text = os.str();
  }
  emit(text, o, out);
  return 0;
}

int cmd_decompose(const Series& g, int n, long m, const OutOpts& o, std::ostream& out) {
  std::vector<Rat> alpha = regularity_decompose(g, n, static_cast<int>(m));
  auto rays = regularity_rays(n, static_cast<int>(m));
  std::string text;
  if (o.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (size_t k = 0; k < alpha.size(); ++k)
      arr.push_back({{"ray", rays[k].first.str()}, {"alpha", alpha[k].str()}});
    text = dump(arr);
  } else if (o.format == "csv") {
    std::ostringstream os;
    os << "ray,alpha\n";
    for (size_t k = 0; k < alpha.size(); ++k)
      os << csv_field(rays[k].first.str()) << "," << alpha[k].str() << "\n";
    text = os.str();
  } else {
    std::ostringstream os;
    size_t w = 0;
    for (const auto& [label, ray] : rays) w = std::max(w, label.str().size());
    for (size_t k = 0; k < alpha.size(); ++k)
      os << std::left << std::setw(static_cast<int>(w)) << rays[k].first.str() << "  "
         << alpha[k].str() << "\n";
    text = os.str();
  }
  emit(text, o, out);
  return 0;
}

int cmd_simplicial(const std::vector<Rat>& h, int n, const OutOpts& o, std::ostream& out) {
  std::vector<Rat> d = artinian_expansion(h, n);
  bool nonneg = true;
  for (const auto& v : d)
    if (v.sign() < 0) nonneg = false;
  std::string text;
  if (o.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : d) arr.push_back(v.str());
    text = dump(nlohmann::json{{"d", arr}, {"all_nonneg", nonneg}});
  } else if (o.format == "csv") {
    std::ostringstream os;
    os << "i,d\n";
    for (size_t i = 0; i < d.size(); ++i) os << (i + 1) << "," << d[i].str() << "\n";
    text = os.str();
  } else {
    std::ostringstream os;
    for (size_t i = 0; i < d.size(); ++i) os << "d_" << (i + 1) << " = " << d[i].str() << "\n";
    os << (nonneg ? "all coefficients non-negative\n" : "negative coefficient present\n");
    text = os.str();
  }
  emit(text, o, out);
  return 0;
}

int cmd_betti_bounds(const Series& g, int n, long m, const OutOpts& o, std::ostream& out) {
  BettiTable b = betti_bounds(g, n, static_cast<int>(m));
  std::string text;
  if (o.format == "json") {
    text = dump(betti_to_json(b));
  } else if (o.format == "csv") {
    std::ostringstream os;
    os << "i,j,value\n";
    for (const auto& [k, v] : b.entries())
      os << k.first << "," << k.second << "," << v.str() << "\n";
    text = os.str();
  } else {
    text = betti_to_text(b);
  }
  emit(text, o, out);
  return 0;
}

int cmd_realize(const RayLabel& label, int n, long a, bool clear, const OutOpts& o,
                std::ostream& out) {
  Realization r = realize_positive_ray(label, n, a, clear);
  std::string text;
  if (o.format == "json") {
    text = dump(realization_to_json(r));
  } else if (o.format == "csv") {
    std::ostringstream os;
    os << "ell,power,mult\n";
    for (const auto& [m, mult] : r.modules.summands)
      os << m.ell << "," << m.power << "," << mult.str() << "\n";
    text = os.str();
  } else {
    std::ostringstream os;
    os << "scalar: " << r.scalar.str() << "\n";
    os << "working_a: " << r.working_a << "\n";
    for (const auto& [m, mult] : r.modules.summands)
      os << "summand: ell=" << m.ell << " power=" << m.power << " mult=" << mult.str() << "\n";
    text = os.str();
  }
  emit(text, o, out);
  return 0;
}

int cmd_cross_section(int i_max, int verify_up_to, const OutOpts& o, std::ostream& out) {
  auto points = q31_cross_section(i_max, verify_up_to);
  std::string text;
  if (o.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : points)
      arr.push_back({{"i", p.name}, {"c2", p.c2.str()}, {"c1", p.c1.str()}});
    text = dump(arr);
  } else if (o.format == "csv") {
    std::ostringstream os;
    os << "i,c2,c1\n";
    for (const auto& p : points)
      os << p.name << "," << p.c2.str() << "," << p.c1.str() << "\n";
    text = os.str();
  } else {
    std::ostringstream os;
    for (const auto& p : points)
      os << std::left << std::setw(6) << p.name << "  (" << p.c2.str() << ", " << p.c1.str()
         << ")\n";
    text = os.str();
  }
  emit(text, o, out);
  return 0;
}

int cmd_oracle(int vars, int maxdeg, int gens, int trials, std::uint64_t seed, int degree_cap,
               const OutOpts& o, std::ostream& out) {
  if (vars < 1 || trials < 0 || degree_cap < 0)
    throw std::invalid_argument("oracle: bad parameters");
  int passes = 0;
  nlohmann::json failures = nlohmann::json::array();
  for (int t = 0; t < trials; ++t) {
    std::uint64_t s = seed + static_cast<std::uint64_t>(t);
    MonomialIdeal I = random_monomial_ideal(vars, maxdeg, gens, s);
    std::vector<Rat> h;
    h.reserve(degree_cap + 1);
    for (int j = 0; j <= degree_cap; ++j) h.push_back(Rat(standard_monomial_count(I, j)));
    Certificate c = macaulay_check(h, vars - 1);
    if (c.member) {
      ++passes;
    } else {
      failures.push_back(
          {{"seed", s}, {"ideal", ideal_to_json(I)}, {"facet", c.index}});
    }
  }
  std::string text;
  if (o.format == "json") {
    text = dump(nlohmann::json{{"trials", trials},
                               {"passes", passes},
                               {"rng", SplitMix64::id()},
                               {"seed", seed},
                               {"failures", failures}});
  } else if (o.format == "csv") {
    std::ostringstream os;
    os << "trials,passes,rng,seed\n"
       << trials << "," << passes << "," << SplitMix64::id() << "," << seed << "\n";
    text = os.str();
  } else {
    std::ostringstream os;
    os << passes << "/" << trials << " pass\n";
    os << "rng: " << SplitMix64::id() << " seed: " << seed << "\n";
    if (!failures.empty()) os << failures.dump(2) << "\n";
    text = os.str();
  }
  emit(text, o, out);
  return passes == trials ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computations with cones of Hilbert functions"};
  app.require_subcommand(1);

  // member
  auto* member = app.add_subcommand("member", "test cone membership and print a certificate");
  std::string mem_cone;
  int mem_n = 0;
  long mem_a = 0, mem_m = 0;
  SeriesInput mem_in;
  OutOpts mem_out;
  member->add_option("--cone", mem_cone, "P (positivity), Q (a-invariant), R (regularity)")
      ->required()
      ->check(CLI::IsMember({"P", "Q", "R"}));
  member->add_option("--n", mem_n, "ambient dimension parameter")->required();
  auto* mem_a_opt = member->add_option("--a", mem_a, "a-invariant bound (cones P, Q)");
  auto* mem_m_opt = member->add_option("--m", mem_m, "regularity bound (cone R)");
  add_series_input(member, mem_in);
  add_out_opts(member, mem_out);

  // rays
  auto* rays = app.add_subcommand("rays", "enumerate extreme rays");
  std::string rays_cone;
  int rays_n = 0;
  long rays_a = 0, rays_m = 0, rays_max_part = 4;
  bool rays_normalize = false;
  OutOpts rays_out;
  rays->add_option("--cone", rays_cone, "P, Q, or R")
      ->required()
      ->check(CLI::IsMember({"P", "Q", "R"}));
  rays->add_option("--n", rays_n, "ambient dimension parameter")->required();
  auto* rays_a_opt = rays->add_option("--a", rays_a, "a-invariant bound (cones P, Q)");
  auto* rays_m_opt = rays->add_option("--m", rays_m, "regularity bound (cone R)");
  rays->add_option("--max-part", rays_max_part,
                   "largest partition entry for the ray families (default 4)");
  rays->add_flag("--normalize", rays_normalize, "scale each ray so h(0) = 1 when possible");
  add_out_opts(rays, rays_out);

  // decompose
  auto* decompose = app.add_subcommand("decompose", "coordinates in the regularity-ray basis");
  int dec_n = 0;
  long dec_m = 0;
  SeriesInput dec_in;
  OutOpts dec_out;
  decompose->add_option("--n", dec_n, "ambient dimension parameter")->required();
  decompose->add_option("--m", dec_m, "regularity bound")->required();
  add_series_input(decompose, dec_in);
  add_out_opts(decompose, dec_out);

  // simplicial
  auto* simplicial =
      app.add_subcommand("simplicial", "countable simplicial coordinates of a Hilbert function");
  int simp_n = 0;
  std::string simp_h;
  OutOpts simp_out;
  simplicial->add_option("--n", simp_n, "ambient dimension parameter")->required();
  simplicial->add_option("--h-values", simp_h, "comma-separated values h(0),h(1),...")->required();
  add_out_opts(simplicial, simp_out);

  // betti-bounds
  auto* betti = app.add_subcommand("betti-bounds", "sharp upper bounds for graded Betti numbers");
  int bet_n = 0;
  long bet_m = 0;
  SeriesInput bet_in;
  OutOpts bet_out;
  betti->add_option("--n", bet_n, "ambient dimension parameter")->required();
  betti->add_option("--m", bet_m, "regularity bound")->required();
  add_series_input(betti, bet_in);
  add_out_opts(betti, bet_out);

  // realize
  auto* realize = app.add_subcommand("realize", "module combination mapping onto a ray");
  int real_n = 0;
  long real_a = 0;
  std::string real_label;
  bool real_clear = false;
  OutOpts real_out;
  realize->add_option("--n", real_n, "ambient dimension parameter")->required();
  realize->add_option("--a", real_a, "a-invariant bound")->required();
  realize->add_option("--label", real_label, "ray label like pure:0, lambda:2,1, mu:")
      ->required();
  realize->add_flag("--clear", real_clear, "clear denominators to integer multiplicities");
  add_out_opts(realize, real_out);

  // cross-section
  auto* cross = app.add_subcommand("cross-section",
                                   "extreme points of the plane cross-section (n = 3, a = -1)");
  int cross_i_max = 30, cross_verify = 200;
  OutOpts cross_out;
  cross->add_option("--i-max", cross_i_max, "last vertex index (default 30)");
  cross->add_option("--verify-up-to", cross_verify,
                    "check the supporting lines up to this index (default 200)");
  add_out_opts(cross, cross_out);

  // oracle
  auto* oracle = app.add_subcommand(
      "oracle", "brute-force consecutive-degree inequality campaign on random monomial ideals");
  int or_vars = 4, or_maxdeg = 8, or_gens = 6, or_trials = 100, or_cap = 12;
  std::uint64_t or_seed = 0;
  OutOpts or_out;
  oracle->add_option("--vars", or_vars, "number of variables (default 4)");
  oracle->add_option("--maxdeg", or_maxdeg, "largest generator degree (default 8)");
  oracle->add_option("--gens", or_gens, "generators drawn per ideal (default 6)");
  oracle->add_option("--trials", or_trials, "number of seeded trials (default 100)");
  oracle->add_option("--seed", or_seed, "base seed; trial t uses seed + t")->required();
  oracle->add_option("--degree-cap", or_cap, "check degrees 0..cap (default 12)");
  add_out_opts(oracle, or_out);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("hilbcone");
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(member)) {
      ConeId cone = make_cone(mem_cone, mem_n, mem_a, mem_a_opt->count() > 0, mem_m,
                              mem_m_opt->count() > 0);
      return cmd_member(cone, load_series(mem_in), mem_out, out);
    }
    if (app.got_subcommand(rays)) {
      std::vector<std::pair<RayLabel, Series>> list;
      if (rays_cone == "R") {
        if (rays_m_opt->count() == 0)
          throw std::invalid_argument("--m is required for cone R");
        list = regularity_rays(rays_n, static_cast<int>(rays_m));
      } else {
        if (rays_a_opt->count() == 0)
          throw std::invalid_argument("--a is required for cones P and Q");
        list = rays_cone == "P" ? enumerate_positive_rays(rays_n, rays_a, rays_max_part)
                                : enumerate_a_invariant_rays(rays_n, rays_a, rays_max_part);
      }
      return cmd_rays(list, rays_normalize, rays_out, out);
    }
    if (app.got_subcommand(decompose))
      return cmd_decompose(load_series(dec_in), dec_n, dec_m, dec_out, out);
    if (app.got_subcommand(simplicial))
      return cmd_simplicial(rats_from_csv(simp_h), simp_n, simp_out, out);
    if (app.got_subcommand(betti))
      return cmd_betti_bounds(load_series(bet_in), bet_n, bet_m, bet_out, out);
    if (app.got_subcommand(realize))
      return cmd_realize(RayLabel::parse(real_label), real_n, real_a, real_clear, real_out, out);
    if (app.got_subcommand(cross))
      return cmd_cross_section(cross_i_max, cross_verify, cross_out, out);
    if (app.got_subcommand(oracle))
      return cmd_oracle(or_vars, or_maxdeg, or_gens, or_trials, or_seed, or_cap, or_out, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace hilb
