// Command-line front end.  Exit codes: 0 pass, 1 verification failure or refusal of a
// required check, 2 usage or parse error.

#include "qmlab/certificate.hpp"
#include "qmlab/counting.hpp"
#include "qmlab/finite_group.hpp"
#include "qmlab/norms.hpp"
#include "qmlab/suite.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace qmlab;

namespace {

struct Config {
  std::string group;
  std::string qm;
  std::string word;
  std::string braid;
  std::string element;
  std::string target;
  std::string finite;
  std::string subgroup;
  std::string defect_const;
  std::string out;
  std::string format = "human";
  std::string path;
  std::vector<std::string> only;
  int radius = -1;
  long long cap = 0;
  long long n_max = 0;
  long long samples = 200;
  std::uint64_t seed = 20240601;
  bool all = false;
};

class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::filesystem::path target(cfg.out);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw InputError("cannot write " + tmp.string());
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
    if (!f.flush()) throw InputError("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

void emit_json(const Config& cfg, const Json& j) { emit(cfg, j.dump(2)); }

std::string element_text(const Config& cfg) {
  int given = !cfg.word.empty() + !cfg.braid.empty() + !cfg.element.empty();
  if (given > 1) throw InputError("give only one of --word, --braid, --element");
  if (!cfg.braid.empty()) return cfg.braid;
  if (!cfg.word.empty()) return cfg.word;
  return cfg.element;
}

GroupPair pair_for(const Config& cfg) {
  if (!cfg.group.empty()) return parse_group_pair(cfg.group);
  if (!cfg.braid.empty()) return parse_group_pair("braid:3");
  return parse_group_pair("free:2");
}

int cmd_eval(const Config& cfg) {
  if (cfg.qm.empty()) throw InputError("eval needs --qm");
  auto pair = pair_for(cfg);
  auto text = element_text(cfg);
  Json j = visit_context(pair, [&](const auto& ctx) {
    auto g = ctx.parse(text);
    auto phi = ctx.qm(cfg.qm);
    Json r;
    r["qm"] = phi.spec;
    r["group"] = pair.text();
    r["element"] = ctx.format(g);
    r["value"] = to_string(phi(g));
    if (cfg.n_max > 0) {
      auto iv = homogenize(ctx.group, phi, g, cfg.n_max);
      r["homogenized"] = {{"center", to_string(iv.center)},
                          {"radius", iv.radius ? Json(to_string(*iv.radius)) : Json(nullptr)},
                          {"n_max", cfg.n_max}};
    }
    return r;
  });
  if (cfg.format == "json") {
    emit_json(cfg, j);
  } else if (cfg.format == "csv") {
    emit(cfg, "qm,element,value\n\"" + j["qm"].get<std::string>() + "\",\"" + j["element"].get<std::string>() + "\"," +
                  j["value"].get<std::string>());
  } else {
    std::string s = j["value"].get<std::string>();
    if (j.contains("homogenized")) {
      s += "\nhomogenized: " + j["homogenized"]["center"].get<std::string>();
      if (!j["homogenized"]["radius"].is_null()) s += " +- " + j["homogenized"]["radius"].get<std::string>();
    }
    emit(cfg, s);
  }
  return 0;
}

int cmd_defect(const Config& cfg) {
  if (cfg.qm.empty()) throw InputError("defect needs --qm");
  int radius = cfg.radius < 0 ? 4 : cfg.radius;
  auto pair = pair_for(cfg);
  Json j = visit_context(pair, [&](const auto& ctx) {
    auto phi = ctx.qm(cfg.qm);
    auto s = defect_search(ctx.group, phi, radius);
    Json r;
    r["qm"] = phi.spec;
    r["group"] = pair.ambient_text();
    r["radius"] = radius;
    r["pairs"] = s.pairs;
    r["lower"] = to_string(s.lower);
    r["lower_witness"] = s.witness ? Json{ctx.format(s.witness->first), ctx.format(s.witness->second)} : Json(nullptr);
    r["upper"] = phi.defect_upper ? Json(to_string(phi.defect_upper->value)) : Json(nullptr);
    r["upper_provenance"] = phi.defect_upper ? Json(phi.defect_upper->provenance) : Json("unknown");
    if (phi.defect_upper && s.lower > phi.defect_upper->value)
      throw VerificationFailure("searched defect " + to_string(s.lower) + " exceeds the certified bound");
    return r;
  });
  if (cfg.format == "json") {
    emit_json(cfg, j);
  } else {
    emit(cfg, "defect of " + j["qm"].get<std::string>() + ": searched lower " + j["lower"].get<std::string>() +
                  " (radius " + std::to_string(radius) + ", " + std::to_string(j["pairs"].get<std::size_t>()) +
                  " pairs), certified upper " + (j["upper"].is_null() ? "unknown" : j["upper"].get<std::string>()));
  }
  return 0;
}

int cmd_normal_form(const Config& cfg) {
  auto pair = pair_for(cfg);
  if (pair.kind != AmbientKind::braid) throw InputError("normal-form needs a braid group");
  auto b = parse_braid(element_text(cfg), pair.param);
  auto nf = normal_form(b);
  if (cfg.format == "json") {
    Json factors = Json::array();
    for (const auto& p : nf.factors) factors.push_back(format_permutation(p));
    emit_json(cfg, {{"braid", format_braid(b)}, {"strands", nf.strands}, {"infimum", nf.infimum}, {"factors", factors},
                    {"text", format_normal_form(nf)}});
  } else {
    emit(cfg, format_normal_form(nf));
  }
  return 0;
}

int cmd_p3(const Config& cfg) {
  auto b = parse_braid(element_text(cfg), 3);
  auto c = p3_coordinates(b);
  FreeGroup f2(2);
  if (cfg.format == "json")
    emit_json(cfg, {{"braid", format_braid(b)}, {"f2_part", f2.format(c.f2_part)}, {"center_exponent", c.center_exponent}});
  else
    emit(cfg, "(" + f2.format(c.f2_part) + ", " + std::to_string(c.center_exponent) + ")");
  return 0;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int finite_element(const FiniteGroup& g, const std::string& text) {
  if (g.has_permutations()) return g.index_of(parse_permutation(text));
  int v = std::stoi(text);
  if (v < 0 || v >= g.order()) throw InputError("element index out of range: " + text);
  return v;
}

int cmd_norm(const Config& cfg) {
  if (cfg.finite.empty()) throw InputError("norm needs --finite <group file>");
  auto group = parse_finite_group(read_file(cfg.finite));
  std::vector<int> gens;
  for (const auto& t : split(cfg.subgroup, ';')) gens.push_back(finite_element(group, t));
  auto h = group.subgroup(gens);
  std::vector<int> all(static_cast<std::size_t>(group.order()));
  for (int i = 0; i < group.order(); ++i) all[static_cast<std::size_t>(i)] = i;
  FragmentationSearch search(group, all, h, true);
  long long cap = cfg.cap > 0 ? cfg.cap : group.order();
  std::vector<int> targets;
  if (cfg.all)
    targets = all;
  else
    targets.push_back(finite_element(group, element_text(cfg)));
  Json rows = Json::array();
  std::string human;
  for (int g : targets) {
    auto r = search.query(g, cap);
    if (r.verdict == FragmentationVerdict::exact && reassemble_fragmentation(group, r.witness) != g)
      throw VerificationFailure("witness does not reassemble for " + group.format(g));
    Json w = Json::array();
    for (const auto& [c, e] : r.witness) w.push_back({{"conjugator", group.format(c)}, {"element", group.format(e)}});
    const char* verdict = r.verdict == FragmentationVerdict::exact      ? "exact"
                          : r.verdict == FragmentationVerdict::at_least ? "at_least"
                                                                        : "infinite";
    rows.push_back({{"element", group.format(g)}, {"norm", r.norm().str()}, {"verdict", verdict}, {"witness", w}});
    human += group.format(g) + "  " + (r.verdict == FragmentationVerdict::at_least ? ">= " : "") + r.norm().str() + "\n";
  }
  Json j{{"group_order", group.order()}, {"subgroup_order", h.size()}, {"cap", cap}, {"results", rows}};
  if (cfg.format == "json")
    emit_json(cfg, j);
  else
    emit(cfg, human);
  return 0;
}

int cmd_extend(const Config& cfg) {
  if (cfg.qm.empty()) throw InputError("extend needs --qm");
  auto pair = pair_for(cfg);
  int radius = cfg.radius < 0 ? 4 : cfg.radius;
  long long n_max = cfg.n_max > 0 ? cfg.n_max : 16;
  Json j = visit_context(pair, [&](const auto& ctx) {
    if (!ctx.section) throw InputError(pair.text() + " has no section; use product:free:N,int/left or braid:N/commutator");
    auto phi = ctx.qm(cfg.qm);
    auto sc = check_section(ctx.group, *ctx.section, 6);
    if (!sc.ok) throw VerificationFailure("section check failed: " + sc.failures.front());
    auto ext = extend_via_section(ctx.group, phi, *ctx.section, ctx.in_sub, n_max);
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> len(0, 10);
    std::vector<ElementOf<std::decay_t<decltype(ctx.group)>>> samples;
    for (long long i = 0; i < cfg.samples; ++i) samples.push_back(random_product(ctx.group, ctx.sub_generators, rng, len(rng)));
    auto rc = restriction_check(ext.phi_hat, phi, samples);
    auto dc = defect_chain_check(ctx.group, ext, radius);
    Json r;
    r["qm"] = phi.spec;
    r["section"] = ctx.section->spec;
    r["group_pair"] = pair.text();
    r["n_max"] = n_max;
    r["defect_chain"] = {{"phi", to_string(ext.chain.phi)},
                         {"phi_prime", to_string(ext.chain.phi_prime)},
                         {"phi_hat", to_string(ext.chain.phi_hat)}};
    r["restriction"] = {{"checked", rc.checked}, {"mismatches", rc.mismatches.size()},
                        {"insufficient_evidence", rc.insufficient_evidence}};
    r["defect_search"] = {{"radius", radius},
                          {"phi_prime_lower", to_string(dc.phi_prime_search.lower)},
                          {"phi_hat_lower", to_string(dc.phi_hat_search.lower)},
                          {"violations", dc.violations}};
    r["pass"] = rc.ok && dc.ok && !rc.insufficient_evidence;
    if (!cfg.element.empty() || !cfg.word.empty() || !cfg.braid.empty()) {
      auto g = ctx.parse(element_text(cfg));
      auto iv = ext.phi_hat(g);
      r["value"] = {{"element", ctx.format(g)},
                    {"center", to_string(iv.center)},
                    {"radius", iv.radius ? Json(to_string(*iv.radius)) : Json(nullptr)}};
    }
    return r;
  });
  if (cfg.format == "json")
    emit_json(cfg, j);
  else
    emit(cfg, std::string(j["pass"].get<bool>() ? "pass" : "FAIL") + ": restriction " +
                  std::to_string(j["restriction"]["checked"].get<std::size_t>()) + " samples, searched D(phi_hat) " +
                  j["defect_search"]["phi_hat_lower"].get<std::string>() + " <= " +
                  j["defect_chain"]["phi_hat"].get<std::string>());
  return j["pass"].get<bool>() ? 0 : 1;
}

int cmd_scl_bounds(const Config& cfg) {
  auto pair = pair_for(cfg);
  auto text = cfg.target.empty() ? element_text(cfg) : cfg.target;
  long long n_max = cfg.n_max > 0 ? cfg.n_max : 32;
  int radius = cfg.radius < 0 ? 3 : cfg.radius;
  int max_factors = cfg.cap > 0 ? static_cast<int>(cfg.cap) : 2;
  LowerOptions lower_options;
  if (!cfg.defect_const.empty()) lower_options.defect_override = parse_rational(cfg.defect_const);

  Json j = visit_context(pair, [&](const auto& ctx) {
    const auto& group = ctx.group;
    auto target = ctx.parse(text);
    if (pair.mixed() && !ctx.in_sub(target))
      throw DomainError("target " + ctx.format(target) + " is not in the normal subgroup of " + pair.text());
    Json certs = Json::array(), refusals = Json::array();
    std::optional<Rational> upper, lower;
    auto note_upper = [&](const Json& c) {
      Rational b = parse_rational(c["bound"].template get<std::string>());
      if (!upper || b < *upper) upper = b;
      certs.push_back(c);
    };
    using E = ElementOf<std::decay_t<decltype(group)>>;
    if (is_identity(group, target)) {
      note_upper(upper_certificate(ctx, 1, MixedCommutatorDecomposition<E>{{}, target}, target));
    } else {
      // A conjugator inverting the target gives target^(2n) = [c, target^-n].
      std::optional<E> flipper;
      for (const auto& e : ball(group, radius))
        if (group.equal(conjugate(group, target, e.element), group.invert(target))) {
          flipper = e.element;
          break;
        }
      if (flipper) {
        for (long long n = 1; n <= n_max; ++n)
          note_upper(upper_certificate(ctx, 2 * n, flip_decomposition(group, target, *flipper, n), target));
      } else {
        // Otherwise a bounded exhaustive search over small balls and small powers.
        const int search_radius = std::min(radius, 2);
        std::vector<E> amb, sub;
        for (const auto& e : ball(group, search_radius)) amb.push_back(e.element);
        for (const auto& e : ball(group, search_radius, ctx.sub_generators)) sub.push_back(e.element);
        for (long long n = 1; n <= std::min<long long>(n_max, 3); ++n) {
          auto r = mixed_cl_search(group, power(group, target, n), amb, sub, max_factors, 50'000);
          if (r.factors) note_upper(upper_certificate(ctx, n, r.witness, target));
        }
      }
    }
    std::string qm = cfg.qm.empty() && is_identity(group, target) ? "zero" : cfg.qm;
    bool infinite = false;
    if (!qm.empty()) {
      try {
        auto c = lower_certificate(ctx, target, qm, lower_options);
        if (c["verdict"] == "bound") lower = parse_rational(c["bound"].template get<std::string>());
        infinite = c["verdict"] == "not_in_commutator_group";
        certs.push_back(c);
      } catch (const RefusalError& e) {
        refusals.push_back(e.what());
        std::cerr << "lower bound refused: " << e.what() << "\n";
      }
    }
    for (const auto& c : certs) {
      auto check = verify_certificate(c);
      if (!check.ok) throw VerificationFailure("emitted certificate fails at " + check.step + ": " + check.detail);
    }
    if ((lower && upper && *lower > *upper) || (infinite && upper))
      throw VerificationFailure("lower bound exceeds upper bound");
    Json r;
    r["target"] = ctx.format(target);
    r["group_pair"] = pair.text();
    r["mode"] = pair.mixed() ? "mixed" : "ordinary";
    r["interval"] = {{"lower", infinite ? Json("inf") : lower ? Json(to_string(*lower)) : Json(nullptr)},
                     {"upper", infinite ? Json("inf") : upper ? Json(to_string(*upper)) : Json(nullptr)}};
    if (lower_options.defect_override) r["defect_override"] = cfg.defect_const;
    r["refusals"] = refusals;
    r["certificates"] = certs;
    return r;
  });
  if (cfg.format == "human") {
    auto side = [](const Json& v) { return v.is_null() ? std::string("?") : v.get<std::string>(); };
    emit(cfg, "scl in [" + side(j["interval"]["lower"]) + ", " + side(j["interval"]["upper"]) + "] (" +
                  std::to_string(j["certificates"].size()) + " certificates)");
  } else {
    emit_json(cfg, j);
  }
  return 0;
}

int cmd_verify(const Config& cfg) {
  std::string text = read_file(cfg.path);
  std::vector<Json> certs;
  CertificateCheck parse_failure;
  try {
    Json j = Json::parse(text);
    if (j.is_array())
      for (auto& c : j) certs.push_back(c);
    else if (j.is_object() && j.contains("certificates") && j["certificates"].is_array())
      for (auto& c : j["certificates"]) certs.push_back(c);
    else
      certs.push_back(j);
  } catch (const Json::parse_error& e) {
    parse_failure = {false, "schema", std::string("not valid JSON: ") + e.what()};
  }
  Json results = Json::array();
  bool ok = parse_failure.step.empty() && !certs.empty();
  if (!parse_failure.step.empty()) results.push_back({{"ok", false}, {"step", "schema"}, {"detail", parse_failure.detail}});
  if (parse_failure.step.empty() && certs.empty())
    results.push_back({{"ok", false}, {"step", "schema"}, {"detail", "no certificates"}});
  for (std::size_t i = 0; i < certs.size(); ++i) {
    auto r = verify_certificate(certs[i]);
    ok = ok && r.ok;
    results.push_back({{"index", i}, {"ok", r.ok}, {"step", r.step}, {"detail", r.detail}});
  }
  if (cfg.format == "json") {
    emit_json(cfg, {{"pass", ok}, {"results", results}});
  } else {
    std::string s;
    for (const auto& r : results)
      s += r["ok"].get<bool>() ? "pass\n" : "FAIL at " + r["step"].get<std::string>() + ": " + r["detail"].get<std::string>() + "\n";
    s += ok ? "all certificates verified" : "verification failed";
    emit(cfg, s);
  }
  return ok ? 0 : 1;
}

int cmd_reproduce(const Config& cfg) {
  SuiteOptions options;
  options.seed = cfg.seed;
  for (const auto& o : cfg.only)
    for (const auto& id : split(o, ',')) options.only.push_back(id);
  auto report = run_suite(options);
  if (cfg.format == "json") {
    emit_json(cfg, report.to_json(cfg.seed));
  } else if (cfg.format == "csv") {
    std::string s = "id,pass,seconds,limit_seconds\n";
    for (const auto& i : report.items)
      s += i.id + "," + (i.pass() ? "true" : "false") + "," + std::to_string(i.seconds) + "," +
           std::to_string(i.limit_seconds) + "\n";
    emit(cfg, s);
  } else {
    std::string s;
    char buf[64];
    for (const auto& i : report.items) {
      std::snprintf(buf, sizeof buf, " (%.2fs / %.0fs): ", i.seconds, i.limit_seconds);
      s += std::string(i.pass() ? "pass " : "FAIL ") + i.id + buf + i.detail + "\n";
    }
    emit(cfg, s);
  }
  if (!cfg.path.empty()) {
    Config c2 = cfg;
    c2.out = cfg.path;
    emit_json(c2, Json{{"certificates", report.certificates}});
  }
  return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasimorphisms, braid normal forms and commutator-length certificates"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&cfg](CLI::App* s) {
    s->add_option("--group", cfg.group, "group pair, e.g. free:2, braid:3/pure, product:free:2,int/left");
    s->add_option("--format", cfg.format, "human | json | csv")->check(CLI::IsMember({"human", "json", "csv"}));
    s->add_option("--out", cfg.out, "output path (written atomically)");
    s->add_option("--seed", cfg.seed, "seed for sampled checks");
  };
  auto add_element = [&cfg](CLI::App* s) {
    s->add_option("--word", cfg.word, "free-group word");
    s->add_option("--braid", cfg.braid, "braid word");
    s->add_option("--element", cfg.element, "element in the group's own syntax");
  };

  auto* eval = app.add_subcommand("eval", "evaluate a quasimorphism");
  add_common(eval);
  add_element(eval);
  eval->add_option("--qm", cfg.qm, "quasimorphism spec")->required();
  eval->add_option("--n-max", cfg.n_max, "also report the homogenization interval at this power");

  auto* defect = app.add_subcommand("defect", "search for a defect lower bound");
  add_common(defect);
  defect->add_option("--qm", cfg.qm, "quasimorphism spec")->required();
  defect->add_option("--radius", cfg.radius, "pairs with |g| + |h| <= radius");

  auto* nf = app.add_subcommand("normal-form", "Garside normal form of a braid");
  add_common(nf);
  add_element(nf);

  auto* p3 = app.add_subcommand("p3", "P3 = F2 x Z coordinates of a pure 3-braid");
  add_common(p3);
  add_element(p3);

  auto* norm = app.add_subcommand("norm", "fragmentation norm in a finite group");
  add_common(norm);
  add_element(norm);
  norm->add_option("--finite", cfg.finite, "finite group file")->required();
  norm->add_option("--subgroup", cfg.subgroup, "subgroup generators separated by ';'")->required();
  norm->add_option("--cap", cfg.cap, "search depth");
  norm->add_flag("--all", cfg.all, "tabulate every element");

  auto* extend = app.add_subcommand("extend", "extend a quasimorphism via a section");
  add_common(extend);
  add_element(extend);
  extend->add_option("--qm", cfg.qm, "quasimorphism spec on the ambient group")->required();
  extend->add_option("--radius", cfg.radius, "defect search radius");
  extend->add_option("--n-max", cfg.n_max, "homogenization power");
  extend->add_option("--samples", cfg.samples, "restriction samples");

  auto* scl = app.add_subcommand("scl-bounds", "certified scl interval for a target");
  add_common(scl);
  add_element(scl);
  scl->add_option("--target", cfg.target, "target element");
  scl->add_option("--qm", cfg.qm, "quasimorphism for the lower bound");
  scl->add_option("--radius", cfg.radius, "ball radius for constructive searches");
  scl->add_option("--cap", cfg.cap, "maximal number of commutators in searches");
  scl->add_option("--n-max", cfg.n_max, "largest power in the upper family");
  scl->add_option("--defect-const", cfg.defect_const, "override the defect constant (recorded)");

  auto* verify = app.add_subcommand("verify", "re-verify certificates");
  add_common(verify);
  verify->add_option("path", cfg.path, "certificate JSON file")->required();

  auto* reproduce = app.add_subcommand("reproduce", "run the reproduction suite");
  add_common(reproduce);
  reproduce->add_option("--only", cfg.only, "item ids (comma separated)");
  reproduce->add_option("--certificates", cfg.path, "write emitted certificates here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval) return cmd_eval(cfg);
    if (*defect) return cmd_defect(cfg);
    if (*nf) return cmd_normal_form(cfg);
    if (*p3) return cmd_p3(cfg);
    if (*norm) return cmd_norm(cfg);
    if (*extend) return cmd_extend(cfg);
    if (*scl) return cmd_scl_bounds(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*reproduce) return cmd_reproduce(cfg);
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const RefusalError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
