#include "penta/cli.hpp"

#include "penta/chain_levels.hpp"
#include "penta/errors.hpp"
#include "penta/geometry.hpp"
#include "penta/geometry_json.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

namespace penta::cli {

using Json = nlohmann::ordered_json;

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json ordered(const nlohmann::json& j) { return Json::parse(j.dump()); }

std::string str(const Integer& z) { return z.get_str(); }
std::string str(const Rational& q) { return to_string(q); }

Json integers(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(z.get_str());
  return out;
}

std::string join(const std::vector<std::string>& cells, char sep) {
  std::string s;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (k) s += sep;
    s += cells[k];
  }
  return s;
}

bool numeric(const std::string& s) {
  const std::size_t k = !s.empty() && s[0] == '-' ? 1 : 0;
  return s.size() > k && std::all_of(s.begin() + k, s.end(), [](char c) { return (c >= '0' && c <= '9') || c == '/'; });
}

// Columns holding only numbers (below the header) are right-aligned.
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  std::vector<bool> right;
  for (const auto& row : rows) {
    if (width.size() < row.size()) {
      width.resize(row.size(), 0);
      right.resize(row.size(), true);
    }
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (std::size_t r = 1; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) right[c] = right[c] && numeric(rows[r][c]);
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      const std::string pad(width[c] - row[c].size(), ' ');
      line += right[c] ? pad + row[c] : row[c] + pad;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::string render(const BoundReport& r, Format format) {
  const std::string n0 = r.n0_at_r ? str(*r.n0_at_r) : "";
  switch (format) {
    case Format::json: {
      Json j;
      j["multidegree"] = r.multidegree.to_string();
      j["r"] = str(r.r_value);
      j["n"] = str(r.n_value_integer);
      j["n_exact"] = str(r.n_value_exact);
      j["n0_at_r"] = r.n0_at_r ? Json(n0) : Json(nullptr);
      j["chain_length"] = str(r.chain_length);
      return dump(j);
    }
    case Format::csv:
      return "multidegree,r,n,n_exact,n0_at_r,chain_length\n" +
             join({csv_field(r.multidegree.to_string()), str(r.r_value), str(r.n_value_integer), str(r.n_value_exact),
                   n0, str(r.chain_length)},
                  ',') +
             "\n";
    case Format::plain:
      break;
  }
  return table({{"multidegree", r.multidegree.to_string()},
                {"r", str(r.r_value)},
                {"n", str(r.n_value_integer)},
                {"n exact", str(r.n_value_exact)},
                {"n0 at r", r.n0_at_r ? n0 : "-"},
                {"chain length", str(r.chain_length)}});
}

std::string render(const MTable& t, Format format, unsigned i_min) {
  const unsigned j_max = t.j_max();
  if (format == Format::json) {
    Json j;
    j["i_min"] = i_min;
    j["i_max"] = t.i_max();
    j["j_max"] = j_max;
    j["source"] = t.source == MTable::Source::series ? "series" : "recursion";
    j["rows"] = Json::array();
    for (unsigned i = i_min; i <= t.i_max(); ++i) j["rows"].push_back({{"i", i}, {"m", integers(t.rows[i])}});
    return dump(j);
  }
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"i"};
  for (unsigned c = 0; c <= j_max; ++c) header.push_back(format == Format::csv ? std::to_string(c) : "j=" + std::to_string(c));
  rows.push_back(header);
  for (unsigned i = i_min; i <= t.i_max(); ++i) {
    std::vector<std::string> row{std::to_string(i)};
    for (unsigned c = 0; c <= j_max; ++c) row.push_back(str(t.at(i, c)));
    rows.push_back(row);
  }
  if (format == Format::plain) return table(rows);
  std::string s;
  for (const auto& row : rows) s += join(row, ',') + "\n";
  return s;
}

std::string render(const std::vector<SeriesLevel>& levels, Format format) {
  if (format == Format::json) {
    Json j;
    j["order"] = levels.empty() ? 0 : levels.front().f.order();
    j["levels"] = Json::array();
    for (const auto& level : levels) {
      j["levels"].push_back({{"i", level.i}, {"m", str(level.f[level.i])}, {"coefficients", Json::array()}});
      for (const auto& c : level.f.coefficients()) j["levels"].back()["coefficients"].push_back(str(c));
    }
    return dump(j);
  }
  std::vector<std::vector<std::string>> rows;
  const std::size_t order = levels.empty() ? 0 : levels.front().f.order();
  std::vector<std::string> header{"i", "m_i"};
  for (std::size_t k = 0; k <= order; ++k) header.push_back(format == Format::csv ? std::to_string(k) : "x^" + std::to_string(k));
  rows.push_back(header);
  for (const auto& level : levels) {
    std::vector<std::string> row{std::to_string(level.i), str(level.f[level.i])};
    for (const auto& c : level.f.coefficients()) row.push_back(str(c));
    rows.push_back(row);
  }
  if (format == Format::plain) return table(rows);
  std::string s;
  for (const auto& row : rows) s += join(row, ',') + "\n";
  return s;
}

std::string render(const BasisDecomposition& d, Format format) {
  switch (format) {
    case Format::json: {
      Json j;
      j["i"] = d.i;
      j["terms"] = d.a.size();
      j["sum"] = str(d.sum());
      j["constant_term"] = str(d.constant_term);
      j["a"] = integers(d.a);
      return dump(j);
    }
    case Format::csv: {
      std::string s = "k,a_k\n";
      for (std::size_t k = 0; k < d.a.size(); ++k) s += std::to_string(k + 1) + "," + str(d.a[k]) + "\n";
      return s;
    }
    case Format::plain:
      break;
  }
  std::vector<std::string> a;
  for (const auto& z : d.a) a.push_back(str(z));
  return table({{"i", std::to_string(d.i)},
                {"terms", std::to_string(d.a.size())},
                {"constant", str(d.constant_term)},
                {"sum of a", str(d.sum())}}) +
         "a: " + join(a, ' ') + "\n";
}

std::string render(const std::vector<CheckReport>& reports, Format format, bool verbose) {
  auto margin = [](const CheckReport& r) { return r.witnesses.empty() ? std::string("-") : r.witnesses.front(); };
  switch (format) {
    case Format::json: {
      Json j;
      std::size_t failed = 0, inconclusive = 0;
      j["checks"] = Json::array();
      for (const auto& r : reports) {
        failed += r.status == Verdict::refuted;
        inconclusive += r.status == Verdict::inconclusive;
        j["checks"].push_back({{"check_id", r.check_id},
                               {"scope", r.scope},
                               {"status", to_string(r.status)},
                               {"witnesses", r.witnesses},
                               {"precision_used", r.precision_used},
                               {"comparisons", r.comparisons}});
      }
      j["total"] = reports.size();
      j["failed"] = failed;
      j["inconclusive"] = inconclusive;
      return dump(j);
    }
    case Format::csv: {
      std::string s = "check_id,scope,status,margin,precision_used,comparisons\n";
      for (const auto& r : reports) {
        s += join({r.check_id, csv_field(r.scope), to_string(r.status), csv_field(margin(r)),
                   std::to_string(r.precision_used), std::to_string(r.comparisons)},
                  ',') +
             "\n";
      }
      return s;
    }
    case Format::plain:
      break;
  }
  std::vector<std::vector<std::string>> rows{{"check_id", "status", "comparisons", "scope"}};
  for (const auto& r : reports) rows.push_back({r.check_id, to_string(r.status), std::to_string(r.comparisons), r.scope});
  std::string s = table(rows);
  for (const auto& r : reports) {
    if (!verbose && r.status == Verdict::verified) {
      if (!r.witnesses.empty()) s += r.check_id + ": " + margin(r) + "\n";
      continue;
    }
    s += r.check_id + ":\n";
    for (const auto& w : r.witnesses) s += "  " + w + "\n";
  }
  return s;
}

namespace {

struct Common {
  bool json = false;
  bool csv = false;
  long precision = kDefaultPrecision;
  std::uint64_t max_chain = ChainLimits{}.max_elements;

  Format format() const { return json ? Format::json : csv ? Format::csv : Format::plain; }
};

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const unsigned long long x = std::strtoull(v, &end, 10);
  if (*end != '\0' || x == 0) throw ParseError(std::string(name) + " must be a positive integer, got '" + v + "'");
  return x;
}

template <typename Field>
int resmap(const Field& field, const std::string& poly_file, const std::string& point_text,
           const std::vector<std::string>& directions, std::size_t samples, std::uint64_t seed, std::size_t budget,
           Format format, std::ostream& out) {
  using namespace geometry;
  std::ifstream in(poly_file);
  if (!in) throw ParseError("cannot open polynomial file '" + poly_file + "'");
  nlohmann::json pj;
  try {
    pj = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("polynomial file is not valid JSON: ") + e.what());
  }
  const HomogeneousPolynomial<Field> f = polynomial_from_json(field, pj);
  const ProjectivePoint<Field> z(field, point_from_text(field, point_text));
  const GradedExpansion<Field> exp = expand_at_point(f, z);
  const unsigned d = exp.degree;

  std::vector<Vector<Field>> ys;
  for (const auto& text : directions) ys.push_back(point_from_text(field, text));
  std::size_t lines_scanned = 0;
  if constexpr (std::is_same_v<Field, PrimeField>) {
    if (directions.empty() && samples > 0) {
      std::mt19937_64 rng(seed);
      for (const auto& y : sample_penta_points(exp, budget, rng, samples, &lines_scanned)) ys.push_back(y.coordinates());
    }
  }

  bool all_ok = true;
  Json results = Json::array();
  std::vector<std::vector<std::string>> rows{{"direction", "residual point", "f = 0", "order at z"}};
  bool interpolate = true;
  for (unsigned k = 1; k <= d; ++k) interpolate = interpolate && !field.is_zero(field.from_integer(k));
  for (const auto& y : ys) {
    Json r;
    r["direction"] = ordered(point_to_json(y, field));
    const std::string ytext = ProjectivePoint<Field>(field, y).to_string();
    try {
      const ProjectivePoint<Field> w = residual_point(exp, y);
      const Vector<Field> original = exp.to_original(w.coordinates());
      const bool on = field.is_zero(f(original));
      Vector<Field> dir = y;
      dir.push_back(field.zero());
      std::optional<unsigned> order;
      if (interpolate) order = vanishing_order(f, z.coordinates(), exp.to_original(dir));
      const bool order_ok = !interpolate || !order || *order + 1 >= d;
      all_ok = all_ok && on && order_ok;
      r["residual_point"] = ordered(point_to_json(original, field));
      r["on_hypersurface"] = on;
      r["order_at_point"] = !interpolate ? Json("not computed") : order ? Json(*order) : Json("line in hypersurface");
      rows.push_back({ytext, ProjectivePoint<Field>(field, original).to_string(), on ? "yes" : "NO",
                      !interpolate ? "-" : order ? std::to_string(*order) : "inf"});
    } catch (const IndeterminacyError&) {
      r["residual_point"] = nullptr;
      r["indeterminate"] = true;
      rows.push_back({ytext, "indeterminate (line in X)", "-", "inf"});
    }
    results.push_back(r);
  }

  std::vector<unsigned> eq_degrees;
  for (const auto& e : tangency_locus_equations(exp, d - 1)) eq_degrees.push_back(e.degree());
  if (format == Format::json) {
    Json j;
    j["field"] = field.name();
    j["degree"] = d;
    j["variables"] = f.num_variables();
    j["point"] = ordered(point_to_json(z.coordinates(), field));
    Json change = Json::array();
    for (const auto& row : exp.change) change.push_back(ordered(point_to_json(row, field)));
    j["change_of_coordinates"] = change;
    Json comps = Json::array();
    for (const auto& c : exp.components) comps.push_back(ordered(polynomial_to_json(c)));
    j["components"] = comps;
    j["tangent_equation_degrees"] = eq_degrees;
    if (lines_scanned) j["lines_scanned"] = lines_scanned;
    j["directions"] = results;
    out << dump(j);
  } else {
    out << "field " << field.name() << ", degree " << d << ", " << f.num_variables() << " variables\n";
    out << "point " << z.to_string() << "\n";
    for (unsigned i = 1; i <= d; ++i) out << "f_" << i << " = " << exp.component(i).to_string() << "\n";
    std::vector<std::string> degs;
    for (unsigned e : eq_degrees) degs.push_back(std::to_string(e));
    out << "penultimate tangent equations of degrees [" << join(degs, ',') << "]\n";
    if (lines_scanned) {
      out << "sampled " << ys.size() << " penultimate tangent directions from " << lines_scanned << " random lines\n";
    }
    if (!ys.empty()) out << table(rows);
  }
  return all_ok ? kSuccess : kVerificationFailed;
}

int chain(const MultiDegree& d, bool levels, std::uint64_t max_chain, Format format, std::ostream& out) {
  const MultiplicitySequence mu = d.multiplicities();
  if (levels) {
    const ChainStructure s = chain_structure(mu);
    std::vector<std::vector<std::string>> rows{{"top degree", "offset", "length", "first element"}};
    Json j;
    j["multidegree"] = d.to_string();
    j["length"] = str(s.length);
    j["levels"] = Json::array();
    for (const auto& level : s.levels) {
      const std::string first = MultiDegree::from_multiplicities(level.start).to_string();
      rows.push_back({std::to_string(level.top_degree), str(level.offset), str(level.length), first});
      j["levels"].push_back(
          {{"top_degree", level.top_degree}, {"offset", str(level.offset)}, {"length", str(level.length)}, {"first", first}});
    }
    if (s.ones) rows.push_back({"1", str(s.ones_offset), "1", MultiDegree::from_multiplicities(MultiplicitySequence(std::vector<Integer>{*s.ones})).to_string()});
    if (format == Format::json) {
      if (s.ones) j["ones"] = {{"offset", str(s.ones_offset)}, {"count", str(*s.ones)}};
      out << dump(j);
    } else {
      out << table(rows) << "chain length " << str(s.length) << "\n";
    }
    return kSuccess;
  }
  const Integer length = chain_length(mu);
  if (length > Integer(static_cast<unsigned long>(max_chain))) {
    throw ResourceError("chain of " + d.to_string() + " has " + str(length) + " elements, above the cap of " +
                        std::to_string(max_chain) + "; use --levels or raise --max-chain");
  }
  ChainLimits limits;
  limits.max_elements = max_chain;
  std::vector<std::vector<std::string>> rows{{"k", "element", "r0 + k"}};
  Json list = Json::array();
  walk_chain(mu, limits, [&](std::uint64_t k, const MultiplicitySequence& e) {
    const std::string text = MultiDegree::from_multiplicities(e).to_string();
    const Integer index = integer_from_ull(k);
    const Integer value = e.empty() ? Integer(index - 2) : Integer(r0(e) + index);
    rows.push_back({std::to_string(k), text, str(value)});
    list.push_back({{"k", k}, {"element", text}, {"r0_plus_k", str(value)}});
    return true;
  });
  if (format == Format::json) {
    out << dump(Json{{"multidegree", d.to_string()}, {"elements", list}});
  } else if (format == Format::csv) {
    for (const auto& row : rows) out << join({row[0], csv_field(row[1]), row[2]}, ',') << "\n";
  } else {
    out << table(rows);
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact dimension bounds, m-tables, certified checks and residual-point maps", "penta"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  common.max_chain = env_or("PENTA_MAX_CHAIN", common.max_chain);
  const long precision_cap = static_cast<long>(env_or("PENTA_MAX_PRECISION", kDefaultPrecisionCap));
  auto* json_flag = app.add_flag("--json", common.json, "JSON output");
  app.add_flag("--csv", common.csv, "CSV output")->excludes(json_flag);
  app.add_option("--precision", common.precision, "Starting precision in bits for certified comparisons")
      ->check(CLI::Range(16L, 1L << 20));
  app.add_option("--max-chain", common.max_chain, "Cap on chain elements walked one by one (env PENTA_MAX_CHAIN)")
      ->check(CLI::PositiveNumber);

  unsigned degree = 0;
  auto* nd = app.add_subcommand("nd", "n(d) for a hypersurface of degree d");
  nd->add_option("d", degree, "degree")->required()->check(CLI::Range(3U, 64U));
  bool closed_form = false;
  nd->add_flag("--closed-form", closed_form, "Use n0(d, r(d)) directly instead of the recursion");

  auto* r_cmd = app.add_subcommand("r", "r(d) = m_0 + ... + m_{d-2}");
  r_cmd->add_option("d", degree, "degree")->required()->check(CLI::Range(3U, 64U));

  std::string md_text;
  auto* bound = app.add_subcommand("bound", "r(d) and n(d) for a multi-degree such as \"[2,3]\" or \"[3^4]\"");
  bound->add_option("multidegree", md_text)->required();

  unsigned i_max = 8, j_max = 3, i_min = 0;
  std::string source = "recursion";
  auto* mtable = app.add_subcommand("mtable", "Table of m_{i,j}");
  mtable->add_option("--imax", i_max)->check(CLI::Range(0U, 40U));
  mtable->add_option("--jmax", j_max)->check(CLI::Range(0U, 200U));
  mtable->add_option("--imin", i_min);
  mtable->add_option("--source", source)->check(CLI::IsMember({"recursion", "series"}));

  std::size_t order = 12;
  auto* series = app.add_subcommand("series", "Truncated series F_0, ..., F_imax");
  series->add_option("--imax", i_max)->check(CLI::Range(0U, 20U));
  series->add_option("--order", order)->check(CLI::Range(std::size_t{0}, std::size_t{2000}));

  unsigned level = 5;
  auto* decompose = app.add_subcommand("decompose", "Coefficients a_k of F_i in the basis x^i (1-x)^{-k}");
  decompose->add_option("--i", level)->required()->check(CLI::Range(3U, 9U));

  bool all = false, serial = false, verbose = false, list = false;
  std::vector<std::string> check_names;
  std::string scope_text;
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  auto* all_flag = verify->add_flag("--all", all, "Run every check");
  verify->add_option("--check", check_names, "Run one check (repeatable)")->excludes(all_flag);
  verify->add_option("--scope", scope_text, "Comma separated key=value overrides");
  verify->add_flag("--serial", serial, "Run checks one after another");
  verify->add_flag("--verbose", verbose, "Print every witness");
  verify->add_flag("--list", list, "List check ids and scope keys");

  std::string poly_file, point_text;
  std::uint64_t field_p = 0, seed = 1;
  std::size_t samples = 5, budget = 200000;
  std::vector<std::string> directions;
  auto* res = app.add_subcommand("resmap", "Expansion at a point and the residual point map");
  res->add_option("--poly", poly_file, "JSON polynomial file")->required();
  res->add_option("--point", point_text, "Point on the hypersurface, e.g. 0:0:1")->required();
  res->add_option("--field", field_p, "Prime p for F_p; rationals when omitted");
  res->add_option("--direction", directions, "Penultimate tangent direction y (repeatable)");
  res->add_option("--samples", samples, "Directions to sample over F_p when none are given");
  res->add_option("--seed", seed);
  res->add_option("--budget", budget, "Random lines scanned while sampling");

  bool levels = false;
  auto* chain_cmd = app.add_subcommand("chain", "The chain d, d', d'', ..., empty");
  chain_cmd->add_option("multidegree", md_text)->required();
  chain_cmd->add_flag("--levels", levels, "Print the compressed level structure instead of every element");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, x;
    const int code = app.exit(e, o, x);
    out << o.str();
    err << x.str();
    return code == 0 ? kSuccess : kUsageError;
  }

  const Format format = common.format();
  try {
    if (common.precision > precision_cap) {
      throw ParseError("--precision " + std::to_string(common.precision) + " exceeds the cap " +
                       std::to_string(precision_cap) + " (env PENTA_MAX_PRECISION)");
    }
    ChainOptions options;
    options.limits.max_elements = common.max_chain;

    if (*nd) {
      BoundReport report;
      if (closed_form) {
        report = n_of_degree(degree);
      } else {
        report = n_of_multidegree(MultiDegree{degree}, options);
        if (report.r_value != r_of_degree(degree)) {
          throw VerificationFailure("chain and m-sum disagree on r(" + std::to_string(degree) + ")");
        }
      }
      if (format == Format::plain) {
        out << str(report.n_value_integer) << "\n";
      } else {
        out << render(report, format);
      }
      return kSuccess;
    }
    if (*r_cmd) {
      const Integer r = r_of_degree(degree);
      if (format == Format::json) {
        out << dump(Json{{"d", degree}, {"r", str(r)}});
      } else if (format == Format::csv) {
        out << "d,r\n" << degree << "," << str(r) << "\n";
      } else {
        out << str(r) << "\n";
      }
      return kSuccess;
    }
    if (*bound) {
      out << render(n_of_multidegree(MultiDegree::parse(md_text), options), format);
      return kSuccess;
    }
    if (*mtable) {
      if (i_min > i_max) throw ParseError("--imin must not exceed --imax");
      const MTable t = source == "series" ? series_table(i_max, j_max) : m_table(i_max, j_max);
      out << render(t, format, i_min);
      return kSuccess;
    }
    if (*series) {
      if (order < i_max + 1) throw ParseError("--order must be at least --imax + 1");
      out << render(generate(i_max, order), format);
      return kSuccess;
    }
    if (*decompose) {
      out << render(basis_decomposition(level), format);
      return kSuccess;
    }
    if (*verify) {
      if (list) {
        out << "checks:\n";
        for (const auto& id : check_ids()) out << "  " << id << "\n";
        out << "scope keys:\n";
        for (const auto& key : VerifyScope::keys()) out << "  " << key << "\n";
        return kSuccess;
      }
      if (!all && check_names.empty()) throw ParseError("verify needs --all or --check ID");
      VerifyScope scope;
      scope.apply(scope_text);
      scope.precision.start = common.precision;
      scope.precision.cap = precision_cap;
      scope.limits.max_elements = common.max_chain;
      std::vector<CheckReport> reports;
      if (all) {
        reports = run_all(scope, serial ? Exec::serial : Exec::parallel);
      } else {
        for (const auto& id : check_names) reports.push_back(run_check(id, scope));
      }
      out << render(reports, format, verbose);
      if (any_failed(reports)) return kVerificationFailed;
      for (const auto& r : reports) {
        if (r.status == Verdict::inconclusive) return kResourceExhausted;
      }
      return kSuccess;
    }
    if (*res) {
      if (field_p == 0) {
        return resmap(geometry::RationalField{}, poly_file, point_text, directions, 0, seed, budget, format, out);
      }
      return resmap(geometry::PrimeField(field_p), poly_file, point_text, directions, samples, seed, budget, format, out);
    }
    if (*chain_cmd) return chain(MultiDegree::parse(md_text), levels, common.max_chain, format, out);
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceExhausted;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const TruncationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace penta::cli
