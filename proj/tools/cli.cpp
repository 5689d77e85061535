#include "cli.hpp"

#include <memory>

#include "CLI11.hpp"
#include "json.hpp"

#include "skewres/expr.hpp"
#include "skewres/json_io.hpp"
#include "skewres/selftest.hpp"

namespace skewres::cli {

namespace {

using json = nlohmann::ordered_json;

json k_vec(const KElement& a) { return json(a.coords()); }

json quotient_matrix(const QuotientElement& q) {
  json rows = json::array();
  const FieldTower& tw = q.tower();
  for (std::uint32_t j = 0; j < tw.r(); ++j)
    rows.push_back(k_vec(q.rep().coeff(long(j))));
  return rows;
}

json series_json(const TaylorSeries& s) {
  json j;
  j["valuation"] = s.is_zero_to_precision() ? json(nullptr)
                                            : json(s.valuation());
  j["prec"] = s.prec();
  j["series"] = series_to_string(s);
  json coeffs = json::array();
  for (long n = s.valuation(); n < s.prec(); ++n) {
    json entry;
    entry["power"] = n;
    entry["matrix"] = quotient_matrix(s.coeff(n));
    coeffs.push_back(entry);
  }
  j["coefficients"] = coeffs;
  return j;
}

json xseries_json(const XSeries& s) {
  json j;
  j["valuation"] = s.is_zero_to_precision() ? json(nullptr)
                                            : json(s.valuation());
  j["prec"] = s.prec();
  j["series"] = series_to_string(s);
  json coeffs = json::array();
  for (long i = s.valuation(); i < s.prec(); ++i) {
    json entry;
    entry["power"] = i;
    entry["vector"] = k_vec(s.coeff(i));
    coeffs.push_back(entry);
  }
  j["coefficients"] = coeffs;
  return j;
}

struct PointArg {
  bool is_zero = false, is_inf = false;
  std::uint32_t z = 0;
};

PointArg parse_point(const std::string& text, const FieldTower& tw) {
  PointArg p;
  if (text == "0") {
    p.is_zero = true;
    return p;
  }
  if (text == "inf" || text == "infinity") {
    p.is_inf = true;
    return p;
  }
  char* end = nullptr;
  long v = std::strtol(text.c_str(), &end, 10);
  if (end == nullptr || *end != '\0')
    fail(errc::syntax_error, "bad point '" + text + "'");
  std::uint32_t z = tw.fp().from_int(v);
  if (z == 0) fail(errc::zero_point, "point reduces to 0 in F");
  return PointArg{false, false, z};
}

long pole_order_at(const SkewFraction& f, std::uint32_t z) {
  auto ord = order_at(f, z);
  return (ord && *ord < 0) ? -*ord : 0;
}

int exit_code_for(const error& e) {
  switch (e.code()) {
    case errc::syntax_error:
    case errc::unknown_symbol:
    case errc::non_central_denominator:
      return 2;
    default:
      return 3;
  }
}

json residue_record_json(const ResidueRecord& rec) {
  json j;
  switch (rec.point.kind) {
    case Point::Kind::finite: j["point"] = std::to_string(rec.point.z); break;
    case Point::Kind::zero: j["point"] = "0"; break;
    case Point::Kind::infinity: j["point"] = "inf"; break;
  }
  j["full"] = rec.full ? quotient_matrix(*rec.full) : json(nullptr);
  json partial = json::array();
  for (const auto& v : rec.partial) partial.push_back(k_to_string(v));
  j["partial"] = partial;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"exact skew-polynomial calculator"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::uint64_t seed = 1;
  long extra_prec = 0;
  bool force_json = false;
  app.add_option("--config", config_path, "field config JSON path");
  app.add_option("--seed", seed, "seed for randomized suites");
  app.add_option("--prec", extra_prec,
                 "extra series terms beyond pole order + 2");
  app.add_flag("--json", force_json, "machine output (always on)");

  auto* cmd_info = app.add_subcommand("field-info", "describe the tower");

  std::string div_mode = "right";
  std::vector<std::string> div_args;
  auto* cmd_div = app.add_subcommand("div", "Euclidean division");
  cmd_div->add_option("--mode", div_mode, "right|left");
  cmd_div->add_option("exprs", div_args, "A B")->expected(2);

  std::string gcd_kind = "rgcd";
  std::vector<std::string> gcd_args;
  auto* cmd_gcd = app.add_subcommand("gcd", "gcd/lcm in K[X;theta]");
  cmd_gcd->add_option("--kind", gcd_kind, "rgcd|lgcd|llcm|rlcm");
  cmd_gcd->add_option("exprs", gcd_args, "F G")->expected(2);

  std::string bound_arg;
  auto* cmd_bound = app.add_subcommand("bound", "minimal central bound");
  cmd_bound->add_option("expr", bound_arg, "F")->required();

  std::string taylor_point = "1", taylor_method = "canonical", taylor_arg;
  auto* cmd_taylor = app.add_subcommand("taylor", "Taylor expansion");
  cmd_taylor->add_option("--point", taylor_point, "z | 0 | inf");
  cmd_taylor->add_option("--method", taylor_method, "canonical|hensel");
  cmd_taylor->add_option("expr", taylor_arg, "EXPR")->required();

  std::string sres_point = "1", sres_method = "canonical", sres_arg;
  long sres_j = -1;
  auto* cmd_sres = app.add_subcommand("sres", "skew residue");
  cmd_sres->add_option("--point", sres_point, "z | 0 | inf");
  cmd_sres->add_option("--j", sres_j, "partial index (default: all)");
  cmd_sres->add_option("--method", sres_method, "canonical|hensel");
  cmd_sres->add_option("expr", sres_arg, "EXPR")->required();

  std::string cres_point = "1", cres_arg;
  auto* cmd_cres = app.add_subcommand("cres", "classical residue (debug)");
  cmd_cres->add_option("--point", cres_point, "z | 0 | inf");
  cmd_cres->add_option("expr", cres_arg, "EXPR")->required();

  long crf_j = 0;
  std::string crf_arg;
  auto* cmd_crf =
      app.add_subcommand("check-residue-formula", "residue theorem check");
  cmd_crf->add_option("--j", crf_j, "partial index");
  cmd_crf->add_option("expr", crf_arg, "EXPR")->required();

  std::string chvar_c, chvar_point = "1", chvar_method = "canonical",
              chvar_arg;
  auto* cmd_chvar =
      app.add_subcommand("chvar", "change-of-variables identity");
  cmd_chvar->add_option("--C", chvar_c, "central multiplier expression")
      ->required();
  cmd_chvar->add_option("--point", chvar_point, "z");
  cmd_chvar->add_option("--method", chvar_method, "canonical|hensel");
  cmd_chvar->add_option("expr", chvar_arg, "EXPR")->required();

  int selftest_scale = 1;
  auto* cmd_selftest = app.add_subcommand("selftest", "invariant battery");
  cmd_selftest->add_option("--scale", selftest_scale, "trial multiplier");

  std::vector<const char*> argv;
  argv.push_back("skewres");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    json j;
    j["error"] = "UsageError";
    j["detail"] = e.what();
    out << j.dump() << "\n";
    return 2;
  }
  (void)force_json;

  try {
    FieldConfig cfg =
        config_path.empty() ? desk_config_gf25() : load_field_config(config_path);
    FieldTower tw(cfg);

    if (*cmd_info) {
      json j;
      j["p"] = tw.p();
      j["s"] = cfg.s;
      j["r"] = tw.r();
      j["q"] = tw.q();
      j["cardinality"] = tw.cardinality();
      j["modulus"] = cfg.modulus;
      j["trace_one"] = k_to_string(tw.trace_one_element());
      out << j.dump() << "\n";
      return 0;
    }

    if (*cmd_div) {
      SkewFraction a = parse_value(div_args[0], tw);
      SkewFraction b = parse_value(div_args[1], tw);
      if (!a.is_polynomial() || !b.is_polynomial())
        fail(errc::internal, "division expects polynomial operands");
      auto [q, r] = div_mode == "left" ? left_divide(a.num(), b.num())
                                       : right_divide(a.num(), b.num());
      json j;
      j["Q"] = skew_to_compact(q);
      j["R"] = skew_to_compact(r);
      out << j.dump() << "\n";
      return 0;
    }

    if (*cmd_gcd) {
      SkewPoly f = parse_value(gcd_args[0], tw).num();
      SkewPoly g = parse_value(gcd_args[1], tw).num();
      json j;
      if (gcd_kind == "rgcd" || gcd_kind == "lgcd") {
        GcdResult res = gcd_kind == "rgcd" ? rgcd(f, g) : lgcd(f, g);
        j["gcd"] = skew_to_compact(res.d);
        j["u"] = skew_to_compact(res.u);
        j["v"] = skew_to_compact(res.v);
      } else if (gcd_kind == "llcm") {
        j["lcm"] = skew_to_compact(llcm(f, g));
      } else if (gcd_kind == "rlcm") {
        j["lcm"] = skew_to_compact(rlcm(f, g));
      } else {
        fail(errc::syntax_error, "unknown gcd kind '" + gcd_kind + "'");
      }
      out << j.dump() << "\n";
      return 0;
    }

    if (*cmd_bound) {
      SkewPoly f = parse_value(bound_arg, tw).num();
      auto [g, n] = central_right_multiple(f);
      json j;
      j["cofactor"] = skew_to_compact(g);
      j["bound"] = center_to_compact(n);
      out << j.dump() << "\n";
      return 0;
    }

    if (*cmd_taylor) {
      SkewFraction f = parse_value(taylor_arg, tw);
      PointArg pt = parse_point(taylor_point, tw);
      json j;
      if (pt.is_zero || pt.is_inf) {
        long base = pt.is_zero ? std::min(f.num().valuation(), 0L)
                               : std::min(f.degree() == kNegInfDeg
                                              ? 0L
                                              : -f.degree(),
                                          0L);
        long prec = base + long(tw.r()) + 2 + extra_prec;
        XSeries s = pt.is_zero ? expand_at_zero(f, prec)
                               : expand_at_infinity(f, prec);
        j["point"] = pt.is_zero ? "0" : "inf";
        j.update(xseries_json(s));
      } else {
        long prec = pole_order_at(f, pt.z) + 2 + extra_prec;
        TaylorSeries s;
        if (taylor_method == "hensel") {
          FpPoly d = f.den();
          std::uint32_t m =
              std::uint32_t(std::max<long>(prec + long(d.deflate_root(pt.z)), 1));
          s = expand_admissible(f, hensel_lift(tw, pt.z, m), prec);
        } else if (taylor_method == "canonical") {
          s = expand_canonical(f, pt.z, prec);
        } else {
          fail(errc::syntax_error, "unknown method '" + taylor_method + "'");
        }
        j["point"] = std::to_string(pt.z);
        j["method"] = taylor_method;
        j.update(series_json(s));
      }
      out << j.dump() << "\n";
      return 0;
    }

    if (*cmd_sres) {
      SkewFraction f = parse_value(sres_arg, tw);
      PointArg pt = parse_point(sres_point, tw);
      ResidueRecord rec;
      if (pt.is_zero)
        rec = sres_special(f, Point::origin());
      else if (pt.is_inf)
        rec = sres_special(f, Point::infinity());
      else
        rec = sres(f, pt.z,
                   sres_method == "hensel" ? Method::hensel
                                           : Method::canonical);
      json j = residue_record_json(rec);
      if (sres_j >= 0) j["j"] = sres_j;
      if (sres_j >= long(tw.r()))
        fail(errc::internal, "j out of range");
      if (sres_j >= 0) j["value"] = k_to_string(rec.partial[std::size_t(sres_j)]);
      out << j.dump() << "\n";
      return 0;
    }

    if (*cmd_cres) {
      KRat c = parse_commutative(cres_arg, tw);
      PointArg pt = parse_point(cres_point, tw);
      Point p = pt.is_zero ? Point::origin()
                           : pt.is_inf ? Point::infinity()
                                       : Point::finite(pt.z);
      json j;
      j["point"] = pt.is_zero ? "0" : pt.is_inf ? "inf" : std::to_string(pt.z);
      j["residue"] = k_to_string(residue_at(c, p, tw));
      out << j.dump() << "\n";
      return 0;
    }

    if (*cmd_crf) {
      SkewFraction f = parse_value(crf_arg, tw);
      ResidueSum rs = residue_sum(f, std::uint32_t(crf_j));
      json j;
      j["sum"] = k_to_string(rs.sum);
      json bd = json::object();
      for (const auto& [key, val] : rs.breakdown) bd[key] = k_to_string(val);
      j["breakdown"] = bd;
      out << j.dump() << "\n";
      return rs.sum.is_zero() ? 0 : 4;
    }

    if (*cmd_chvar) {
      SkewFraction f = parse_value(chvar_arg, tw);
      KRat craw = parse_commutative(chvar_c, tw);
      FpRat c = to_central(craw, tw);
      PointArg pt = parse_point(chvar_point, tw);
      if (pt.is_zero || pt.is_inf)
        fail(errc::zero_point, "chvar needs a point in F\\{0}");
      ChvarResult res =
          chvar_check(c, pt.z, f,
                      chvar_method == "hensel" ? Method::hensel
                                               : Method::canonical);
      json j;
      j["point"] = std::to_string(pt.z);
      j["gamma_star"] = std::to_string(gamma_star(c, pt.z, tw));
      j["lhs"] = residue_record_json(res.lhs);
      j["rhs"] = residue_record_json(res.rhs);
      j["equal"] = res.equal;
      out << j.dump() << "\n";
      return res.equal ? 0 : 4;
    }

    if (*cmd_selftest) {
      SelftestReport rep = run_selftest(seed, selftest_scale);
      json j;
      j["seed"] = seed;
      json suites = json::array();
      for (const auto& s : rep.suites) {
        json e;
        e["name"] = s.name;
        e["trials"] = s.trials;
        e["failures"] = s.failures;
        suites.push_back(e);
      }
      j["suites"] = suites;
      j["ok"] = rep.ok();
      out << j.dump() << "\n";
      return rep.ok() ? 0 : 4;
    }
  } catch (const error& e) {
    json j;
    j["error"] = errc_name(e.code());
    j["detail"] = e.what();
    out << j.dump() << "\n";
    return exit_code_for(e);
  }
  return 0;
}

}  // namespace skewres::cli
