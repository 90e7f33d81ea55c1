#pragma once

#include "tcalab/hilbert.hpp"
#include "tcalab/homalg.hpp"
#include "tcalab/io.hpp"
#include "tcalab/ktheory.hpp"
#include "tcalab/quiver.hpp"
#include "tcalab/selftest.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace tcalab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInvariant = 3;

inline int exit_code_for(Errc c) {
  switch (c) {
    case Errc::InvariantViolation:
    case Errc::NotAComplex:
      return kExitInvariant;
    default:
      return kExitInput;
  }
}

inline int default_truncation() {
  const char* env = std::getenv("TCALAB_TRUNC");
  if (!env || !*env) return 12;
  const int b = parse_int(env, "TCALAB_TRUNC");
  if (b < 0) throw Error(Errc::InvalidInput, "TCALAB_TRUNC must be nonnegative");
  return b;
}

struct Result {
  json body;
  std::string text;
  int exit_code = kExitOk;
};

inline json with_schema(const std::string& name, json body) {
  body["schema"] = "tcalab." + name + "/1";
  return body;
}

inline std::string class_text(const ParsedClass& c) {
  if (const auto* a = std::get_if<AClass>(&c)) {
    std::string t = a->torsion.str("S"), p = a->projective.str("P");
    if (a->torsion.is_zero()) return p;
    if (a->projective.is_zero()) return t;
    return t + " + " + p;
  }
  const auto& k = std::get<KClassK>(c);
  return k.coeffs.str(basis_name(k.basis));
}

// Direct sum of simples L[..] and injectives Q[..], e.g. "Q[2]+Q[1]" or "L[1]+Q[]".
inline QuiverRep parse_rep_spec(const std::string& spec, const VertexSet& S) {
  std::vector<QuiverRep> parts;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t next = spec.find('+', pos);
    const std::string term = spec.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    const ParsedClass c = parse_class_spec(term);
    const auto* k = std::get_if<KClassK>(&c);
    if (!k || k->coeffs.support_size() != 1 || k->coeffs.terms().begin()->second < 1)
      throw Error(Errc::InvalidInput, "representation terms are n*L[..] or n*Q[..] with n >= 1: '" + term + "'");
    const auto& [p, n] = *k->coeffs.terms().begin();
    for (Coeff i = 0; i < n; ++i) parts.push_back(k->basis == Basis::L ? build_simple(p, S) : build_injective(p, S));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (parts.empty()) throw Error(Errc::InvalidInput, "empty representation spec");
  return direct_sum(parts, S);
}

inline int rep_spec_size(const std::string& spec) {
  int n = 0;
  std::size_t pos = 0;
  while ((pos = spec.find('[', pos)) != std::string::npos) {
    const std::size_t close = spec.find(']', pos);
    if (close == std::string::npos) break;
    n = std::max(n, parse_partition(spec.substr(pos + 1, close - pos - 1)).size());
    pos = close;
  }
  return n;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"tcalab: invariants of GL-equivariant modules over the infinite polynomial ring"};
  app.set_help_all_flag("--help-all");
  std::string format = "json";
  app.add_option("--format", format, "output mode")->check(CLI::IsMember({"json", "table"}));
  app.require_subcommand(1);
  app.fallthrough();
  std::function<Result()> action;

  // charpoly
  std::string a_part, a_spec, b_spec, a_int, b_int;
  auto* charpoly = app.add_subcommand("charpoly", "character polynomial X^lam");
  charpoly->add_option("partition", a_part)->required();
  charpoly->callback([&] {
    action = [&] {
      const Partition lam = parse_partition(a_part);
      const CharPoly X = char_poly_simple(lam);
      return Result{with_schema("charpoly", {{"partition", to_json(lam)}, {"poly", to_json(X.poly)}, {"text", X.poly.str()}}),
                    X.poly.str()};
    };
  });

  // hilbert
  auto* hilbert = app.add_subcommand("hilbert", "enhanced Hilbert series of a class");
  hilbert->add_option("class", a_spec)->required();
  hilbert->callback([&] {
    action = [&] {
      const ParsedClass c = parse_class_spec(a_spec);
      if (const auto* a = std::get_if<AClass>(&c)) {
        const EnhancedSeries s = enhanced_of_class(*a);
        const auto [p0, q0] = plain_hilbert(s);
        const CharPoly X = char_poly_of_class(*a);
        json body = {{"class", class_text(c)}, {"series", to_json(s)}, {"plain", {{"p", to_json(p0)}, {"q", to_json(q0)}}},
                     {"charpoly", to_json(X.poly)}, {"stability_bound", stability_bound(*a)}};
        std::string text = "p = " + s.p.str() + "\nq = " + s.q.str() + "\nX = " + X.poly.str();
        return Result{with_schema("hilbert", body), text};
      }
      const auto& k = std::get<KClassK>(c);
      const MPoly p = p_of_kclass(k);
      const CharPoly X = char_poly_of_class(k);
      json body = {{"class", class_text(c)}, {"p", to_json(p)}, {"charpoly", to_json(X.poly)}};
      return Result{with_schema("hilbert", body), "p = " + p.str() + "\nX = " + X.poly.str()};
    };
  });

  // modify
  auto* modify = app.add_subcommand("modify", "modification rule for X^lam at size N");
  modify->add_option("partition", a_part)->required();
  modify->add_option("N", a_int)->required();
  modify->callback([&] {
    action = [&] {
      const Partition lam = parse_partition(a_part);
      const int N = parse_int(a_int, "N");
      const Modification m = modification(lam, N);
      const std::string text = m.zero ? "zero" : (m.sign > 0 ? "+" : "-") + m.target.str();
      return Result{with_schema("modify", to_json(m)), text};
    };
  });

  // localcoh
  auto* localcoh = app.add_subcommand("localcoh", "local cohomology of L_lam^{>=D}");
  localcoh->add_option("partition", a_part)->required();
  localcoh->add_option("D", a_int)->required();
  localcoh->callback([&] {
    action = [&] {
      const Partition lam = parse_partition(a_part);
      const int D = parse_int(a_int, "D");
      const LocalCohomologyTable t = local_cohomology(lam, D);
      const MPoly q = q_from_local_cohomology(lam, D);
      std::string text;
      for (const auto& [i, row] : t.rows) {
        text += "H^" + std::to_string(i) + ":";
        for (const Partition& p : row) text += " " + p.str();
        text += "\n";
      }
      text += "depth " + std::to_string(depth(lam, D));
      return Result{with_schema("localcoh", {{"partition", to_json(lam)}, {"D", D}, {"table", to_json(t)},
                                             {"depth", depth(lam, D)}, {"q", to_json(q)}}),
                    text};
    };
  });

  // depth
  auto* depth_cmd = app.add_subcommand("depth", "depth of L_lam^{>=D}");
  depth_cmd->add_option("partition", a_part)->required();
  depth_cmd->add_option("D", a_int)->required();
  depth_cmd->callback([&] {
    action = [&] {
      const Partition lam = parse_partition(a_part);
      const int D = parse_int(a_int, "D");
      const int d = depth(lam, D);
      return Result{with_schema("depth", {{"partition", to_json(lam)}, {"D", D}, {"depth", d}}), std::to_string(d)};
    };
  });

  // bgg
  auto* bgg = app.add_subcommand("bgg", "injective resolution of L_lam");
  bgg->add_option("partition", a_part)->required();
  bgg->callback([&] {
    action = [&] {
      const Partition lam = parse_partition(a_part);
      const InjResolution r = bgg_resolution(lam);
      std::string text;
      for (std::size_t j = 0; j < r.terms.size(); ++j) {
        text += "I^" + std::to_string(j) + ":";
        for (const Partition& p : r.terms[j]) text += " Q" + p.str();
        text += "\n";
      }
      return Result{with_schema("bgg", {{"partition", to_json(lam)}, {"resolution", to_json(r)}}), text};
    };
  });

  // ktheory
  auto* kt = app.add_subcommand("ktheory", "K(Mod_K) computations");
  kt->require_subcommand(1);
  kt->fallthrough();
  std::string to_basis_opt;
  auto* conv = kt->add_subcommand("conv", "change of basis");
  conv->add_option("class", a_spec)->required();
  conv->add_option("--to", to_basis_opt, "target basis (default: the other one)")->check(CLI::IsMember({"L", "Q"}));
  auto require_k = [](const std::string& spec) {
    const ParsedClass c = parse_class_spec(spec);
    if (!std::holds_alternative<KClassK>(c)) throw Error(Errc::InvalidInput, "expected an L[..] or Q[..] class: '" + spec + "'");
    return std::get<KClassK>(c);
  };
  conv->callback([&] {
    action = [&] {
      const KClassK x = require_k(a_spec);
      Basis target = x.basis == Basis::L ? Basis::Q : Basis::L;
      if (!to_basis_opt.empty()) target = to_basis_opt == "L" ? Basis::L : Basis::Q;
      const KClassK y = to_basis(x, target);
      return Result{with_schema("ktheory.conv", {{"input", to_json(x)}, {"result", to_json(y)}}),
                    y.coeffs.str(basis_name(y.basis))};
    };
  });
  auto* mult = kt->add_subcommand("mult", "product of two classes in a common basis");
  mult->add_option("x", a_spec)->required();
  mult->add_option("y", b_spec)->required();
  mult->callback([&] {
    action = [&] {
      const KClassK z = k_product(require_k(a_spec), require_k(b_spec));
      return Result{with_schema("ktheory.mult", {{"result", to_json(z)}}), z.coeffs.str(basis_name(z.basis))};
    };
  });
  auto* pair = kt->add_subcommand("pair", "Euler pairing <x, y>");
  pair->add_option("x", a_spec)->required();
  pair->add_option("y", b_spec)->required();
  pair->callback([&] {
    action = [&] {
      const Coeff v = pairing(require_k(a_spec), require_k(b_spec));
      return Result{with_schema("ktheory.pair", {{"result", v}}), std::to_string(v)};
    };
  });

  // fourier
  auto* fourier = app.add_subcommand("fourier", "Fourier transform of a class");
  fourier->add_option("class", a_spec)->required();
  fourier->callback([&] {
    action = [&] {
      const ParsedClass c = parse_class_spec(a_spec);
      if (const auto* k = std::get_if<KClassK>(&c)) {
        const KClassK y = fourier_K(*k);
        return Result{with_schema("fourier", {{"kind", "K"}, {"result", to_json(y)}}), y.coeffs.str(basis_name(y.basis))};
      }
      const AClass& a = std::get<AClass>(c);
      const GradedAClass g = fourier_module({{0, a}});
      json graded = json::object();
      std::string text;
      for (const auto& [k, x] : g) {
        graded[std::to_string(k)] = to_json(x);
        text += "[" + std::to_string(k) + "] " + class_text(x) + "\n";
      }
      const bool ok = fourier_hilbert_check(a, default_truncation());
      text += std::string("hilbert check ") + (ok ? "ok" : "FAILED");
      json body = {{"kind", "A"}, {"graded", graded}, {"euler", to_json(euler_class(g))}, {"hilbert_check", ok}};
      return Result{with_schema("fourier", body), text, ok ? kExitOk : kExitInvariant};
    };
  });

  // efw
  int bound_h = -1;
  auto* efw = app.add_subcommand("efw", "EFW resolution of M(alpha, e)");
  efw->add_option("alpha", a_part)->required();
  efw->add_option("e", a_int)->required();
  efw->add_option("--bound", bound_h, "explicit homological range");
  efw->callback([&] {
    action = [&] {
      const Partition alpha = parse_partition(a_part);
      const int e = parse_int(a_int, "e");
      const int H = bound_h >= 0 ? bound_h : alpha.length() + 2;
      const FreeResShape s = efw_resolution(alpha, e, H);
      const int reg = regularity(s);
      const int dep = depth_from_resolution(s);
      std::string text;
      for (const auto& [i, g] : s.explicit_terms) text += "F_" + std::to_string(i) + ": " + g.front().str() + "\n";
      text += "regularity " + std::to_string(reg) + "\ndepth " + std::to_string(dep);
      return Result{with_schema("efw", {{"alpha", to_json(alpha)}, {"e", e}, {"shape", to_json(s)}, {"regularity", reg},
                                        {"depth", dep}}),
                    text};
    };
  });

  // poincare
  int trunc_b = -1;
  auto* poincare = app.add_subcommand("poincare", "truncated Poincare series of M(alpha, e)");
  poincare->add_option("alpha", a_part)->required();
  poincare->add_option("e", a_int)->required();
  poincare->add_option("--trunc", trunc_b, "t-degree bound");
  poincare->callback([&] {
    action = [&] {
      const Partition alpha = parse_partition(a_part);
      const int e = parse_int(a_int, "e");
      const int B = trunc_b >= 0 ? trunc_b : default_truncation();
      const PoincareTruncation P = poincare_truncated(efw_resolution(alpha, e, B), B);
      json body = {{"alpha", to_json(alpha)}, {"e", e}, {"series", to_json(P)}};
      if (alpha.empty()) {
        const ClosedFormM0e cf = closed_form_m0e(e, B);
        body["closed_form_matches"] = cf.total == P;
        body["laurent_part"] = to_json(cf.laurent);
      }
      std::string text;
      for (const auto& [k, c] : P.coeffs)
        text += "t^" + std::to_string(k.first) + " q^" + std::to_string(k.second) + ": " + to_string(c) + "\n";
      return Result{with_schema("poincare", body), text};
    };
  });

  // quiver
  auto* quiver = app.add_subcommand("quiver", "quiver model of Mod_K");
  quiver->require_subcommand(1);
  quiver->fallthrough();
  int vsize = -1;
  auto vertex_set_for = [&](std::initializer_list<std::string> specs) {
    int n = 0;
    for (const auto& s : specs) n = std::max(n, rep_spec_size(s));
    return VertexSet::up_to_size(vsize >= 0 ? vsize : n);
  };
  auto* qhom = quiver->add_subcommand("hom", "dimension of Hom(R1, R2)");
  qhom->add_option("R1", a_spec)->required();
  qhom->add_option("R2", b_spec)->required();
  qhom->add_option("--size", vsize, "vertex set: partitions of size <= N");
  qhom->callback([&] {
    action = [&] {
      const VertexSet S = vertex_set_for({a_spec, b_spec});
      const QuiverRep R1 = parse_rep_spec(a_spec, S), R2 = parse_rep_spec(b_spec, S);
      const HomSpace h = hom_space(R1, R2);
      return Result{with_schema("quiver.hom", {{"dimension", h.dimension}, {"vertices", S.size()}}),
                    std::to_string(h.dimension)};
    };
  });
  auto* qsoc = quiver->add_subcommand("socle", "socle of a representation");
  qsoc->add_option("R", a_spec)->required();
  qsoc->add_option("--size", vsize, "vertex set: partitions of size <= N");
  qsoc->callback([&] {
    action = [&] {
      const VertexSet S = vertex_set_for({a_spec});
      const auto soc = socle(parse_rep_spec(a_spec, S));
      std::string text;
      for (const auto& [p, m] : soc) text += p.str() + ": " + std::to_string(m) + "\n";
      return Result{with_schema("quiver.socle", {{"socle", to_json(soc)}}), text};
    };
  });
  auto* qbgg = quiver->add_subcommand("verify-bgg", "machine-check the injective resolution of L_lam");
  qbgg->add_option("partition", a_part)->required();
  qbgg->callback([&] {
    action = [&] {
      const Partition lam = parse_partition(a_part);
      const RepComplex C = realize_bgg(lam);
      bool relations = true;
      for (const QuiverRep& T : C.terms) relations = relations && T.satisfies_relations();
      const bool morphisms = maps_are_morphisms(C);
      const auto H = complex_cohomology(C);
      json coh = json::array();
      for (const auto& h : H) coh.push_back(to_json(h));
      const bool exact = H[0] == std::map<Partition, int>{{lam, 1}} &&
                         std::all_of(H.begin() + 1, H.end(), [](const auto& h) { return h.empty(); });
      const bool ok = relations && morphisms && exact;
      json body = {{"partition", to_json(lam)}, {"relations", relations}, {"morphisms", morphisms}, {"d_squared_zero", true},
                   {"cohomology", coh}, {"resolution", exact}};
      return Result{with_schema("quiver.verify-bgg", body), ok ? "ok" : "FAILED", ok ? kExitOk : kExitInvariant};
    };
  });

  // selftest
  int st_size = 5;
  auto* selftest = app.add_subcommand("selftest", "cross-module invariant suite");
  selftest->add_option("--size", st_size, "partition size bound");
  selftest->callback([&] {
    action = [&] {
      if (st_size < 0 || st_size > 8) throw Error(Errc::InvalidInput, "selftest --size must be in [0, 8]");
      const auto checks = run_selftest(st_size);
      json arr = json::array();
      std::string text;
      bool ok = true;
      for (const auto& c : checks) {
        arr.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        text += (c.ok ? "PASS " : "FAIL ") + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")") + "\n";
        ok = ok && c.ok;
      }
      return Result{with_schema("selftest", {{"size", st_size}, {"checks", arr}, {"ok", ok}}), text,
                    ok ? kExitOk : kExitInvariant};
    };
  });

  auto diagnose = [&](const std::string& kind, const std::string& msg, int code) {
    err << with_schema("error", {{"error", kind}, {"message", msg}}).dump() << "\n";
    return code;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return diagnose("UsageError", e.what(), kExitInput);
  }

  try {
    const Result r = action();
    if (format == "json")
      out << r.body.dump() << "\n";
    else
      out << r.text << (r.text.empty() || r.text.back() == '\n' ? "" : "\n");
    return r.exit_code;
  } catch (const Error& e) {
    return diagnose(errc_name(e.code()), e.what(), exit_code_for(e.code()));
  } catch (const std::exception& e) {
    return diagnose("InternalError", e.what(), kExitInvariant);
  }
}

}  // namespace tcalab::cli
