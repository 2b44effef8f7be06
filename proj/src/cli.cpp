#include "predeg/cli.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "predeg/predegree.hpp"
#include "predeg/quadric.hpp"
#include "predeg/segre.hpp"
#include "predeg/verification.hpp"

namespace predeg::cli {

using nlohmann::json;
using quadric::ProjMatrix;

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  const auto valid_int = [](const std::string& t) {
    std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    return t.size() > start &&
           std::all_of(t.begin() + static_cast<std::ptrdiff_t>(start), t.end(),
                       [](unsigned char c) { return std::isdigit(c); });
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  }
  Integer n(num[0] == '+' ? num.substr(1) : num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string rational_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

json integer_json(const Integer& n) {
  if (mpz_fits_slong_p(n.get_mpz_t())) return json(static_cast<std::int64_t>(n.get_si()));
  return json(n.get_str());
}

json to_json(const ChowClass& c) {
  json terms = json::array();
  for (const auto& [e, v] : c.terms()) {
    terms.push_back({{"coeff", rational_string(v)}, {"exponents", e}});
  }
  return terms;
}

namespace {

json envelope(const std::string& command, json inputs, json result) {
  return {{"command", command}, {"inputs", std::move(inputs)}, {"result", std::move(result)}};
}

void emit(std::ostream& out, const json& doc) { out << doc.dump() << '\n'; }

json coefficients_json(const std::vector<std::optional<Integer>>& coeffs) {
  json arr = json::array();
  for (const auto& c : coeffs) arr.push_back(c ? integer_json(*c) : json(nullptr));
  return arr;
}

json table1_json(const quadric::Table1Row& row) {
  return {{"n", row.n},
          {"sym_dim", row.sym_dim},
          {"max_component_dim", row.max_component_dim},
          {"coefficients", coefficients_json(row.coefficients)},
          {"polynomial", row.polynomial_string()}};
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

struct Options {
  bool json = false;
  int n = 0;
  int m = 0;
  int which = 0;
  std::vector<int> factors;
  std::uint64_t seed = 1;
  int samples = 20;
  std::string matrix;
  int index = 0;
  long d = 2;
  std::vector<int> segre_factors{1, 7};
  bool doubled = false;
  bool zero_segre = false;
  std::string scale = "1";
};

int cmd_predegree_quadric(const Options& o, std::ostream& out) {
  const auto row = quadric::table1_row(o.n);
  if (o.json) {
    emit(out, envelope("predegree quadric", {{"n", o.n}}, table1_json(row)));
  } else {
    out << row.polynomial_string() << '\n';
  }
  return kOk;
}

int cmd_segre_class(const Options& o, std::ostream& out) {
  const ProductSpace p(o.factors);
  const ChowClass s = segre::segre_class_pushforward(p);
  if (o.json) {
    emit(out, envelope("segre-class", {{"factors", o.factors}},
                       {{"ambient_dim", segre::ambient_dim(p)}, {"terms", to_json(s)}}));
  } else {
    out << s.to_string() << '\n';
  }
  return kOk;
}

int cmd_group_degree(const std::string& name, const Options& o, std::ostream& out) {
  const Integer deg = name == "deg-so" ? deg_so(o.m) : deg_po(o.m);
  if (o.json) {
    emit(out, envelope(name, {{"m", o.m}}, {{"degree", integer_json(deg)}}));
  } else {
    out << deg.get_str() << '\n';
  }
  return kOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  if (o.which == 1) {
    std::vector<quadric::Table1Row> rows;
    for (int n = 1; n <= 4; ++n) rows.push_back(quadric::table1_row(n));
    if (o.json) {
      json arr = json::array();
      for (const auto& r : rows) arr.push_back(table1_json(r));
      emit(out, envelope("table", {{"which", 1}}, {{"rows", arr}}));
    } else {
      out << "n\tdim_sym\tdim_F\tpredegree\n";
      for (const auto& r : rows) {
        out << r.n << '\t' << r.sym_dim << '\t' << r.max_component_dim << '\t'
            << r.polynomial_string() << '\n';
      }
    }
    return kOk;
  }
  const auto rows = quadric::table2();
  if (o.json) {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back({{"dim_L", r.dim_l}, {"count", integer_json(r.count)}});
    emit(out, envelope("table", {{"which", 2}}, {{"rows", arr}}));
  } else {
    out << "dim_L\tcount\n";
    for (const auto& r : rows) out << r.dim_l << '\t' << r.count.get_str() << '\n';
  }
  return kOk;
}

int cmd_verify_tangents(const Options& o, std::ostream& out) {
  if (o.samples < 0) throw std::invalid_argument("--samples must be non-negative");
  const auto report = verification::verify_tangents(o.seed, o.samples);
  if (o.json) {
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back(
          {{"name", c.name}, {"passed", c.passed}, {"points", c.points}, {"detail", c.detail}});
    }
    emit(out, envelope("verify tangents",
                       {{"seed", integer_json(Integer(std::to_string(o.seed)))},
                        {"samples", o.samples}},
                       {{"all_passed", report.all_passed()}, {"checks", checks}}));
  } else {
    for (const auto& c : report.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name << " points=" << c.points;
      if (!c.detail.empty()) out << " detail=\"" << c.detail << '"';
      out << '\n';
    }
    out << "summary checks=" << report.checks.size() << " failed=" << report.failures()
        << " seed=" << o.seed << " samples=" << o.samples << '\n';
  }
  return report.all_passed() ? kOk : kVerificationFailed;
}

int cmd_member(const Options& o, std::ostream& out) {
  const auto entries = parse_rational_list(o.matrix);
  if (entries.size() != 16) {
    throw std::invalid_argument("--matrix needs 16 comma-separated entries, got " +
                                std::to_string(entries.size()));
  }
  const bool member = quadric::base_scheme_member(ProjMatrix(Matrix4::from_flat(entries)));
  if (o.json) {
    json in = json::array();
    for (const auto& e : entries) in.push_back(rational_string(e));
    emit(out, envelope("member", {{"matrix", in}}, {{"member", member}}));
  } else {
    out << (member ? "true" : "false") << '\n';
  }
  return kOk;
}

int cmd_coeff(const Options& o, std::ostream& out) {
  const ProductSpace factors(o.segre_factors);
  const int space_dim = segre::ambient_dim(factors);
  Rational scale = parse_rational(o.scale);
  if (o.doubled) scale *= 2;
  const ChowClass s = o.zero_segre
                          ? ChowClass::zero(ProductSpace::projective(space_dim))
                          : segre::segre_class_pushforward(factors).scaled(scale);
  const Integer value = predegree_coefficient(space_dim, Integer(o.d), s, o.index);
  if (o.json) {
    emit(out, envelope("coeff",
                       {{"i", o.index},
                        {"d", o.d},
                        {"segre_factors", o.segre_factors},
                        {"scale", rational_string(o.zero_segre ? Rational(0) : scale)}},
                       {{"value", integer_json(value)}}));
  } else {
    out << value.get_str() << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Predegree polynomials of smooth quadrics under the PGL action", "predeg"};
  app.require_subcommand(1);
  Options o;

  auto* predegree = app.add_subcommand("predegree", "Predegree polynomials");
  predegree->require_subcommand(1);
  auto* pq = predegree->add_subcommand("quadric", "Predegree polynomial of a smooth quadric in P^n");
  pq->add_option("--n", o.n, "Dimension of the ambient P^n")->required()->check(CLI::Range(1, 4));
  pq->add_flag("--json", o.json);

  auto* segre_cmd = app.add_subcommand("segre-class", "Pushed-forward Segre class of a Segre variety");
  segre_cmd->add_option("--factors", o.factors, "Factor dimensions n1,n2,...")
      ->required()
      ->delimiter(',')
      ->check(CLI::NonNegativeNumber);
  segre_cmd->add_flag("--json", o.json);

  auto* so = app.add_subcommand("deg-so", "Degree of the closure of SO(m)");
  so->add_option("--m", o.m)->required()->check(CLI::Range(2, 1000));
  so->add_flag("--json", o.json);
  auto* po = app.add_subcommand("deg-po", "Degree of the closure of PO(m)");
  po->add_option("--m", o.m)->required()->check(CLI::Range(2, 1000));
  po->add_flag("--json", o.json);

  auto* table = app.add_subcommand("table", "Reproduce the summary tables");
  table->add_option("--which", o.which)->required()->check(CLI::IsMember({1, 2}));
  table->add_flag("--json", o.json);

  auto* verify = app.add_subcommand("verify", "Exact verification suites");
  verify->require_subcommand(1);
  auto* tangents = verify->add_subcommand("tangents", "Tangent-space checks on the base locus");
  tangents->add_option("--seed", o.seed, "Seed for the rational sampler");
  tangents->add_option("--samples", o.samples, "Random points per check");
  tangents->add_flag("--json", o.json);

  auto* member = app.add_subcommand("member", "Base-locus membership of a 4x4 matrix");
  member->add_option("--matrix", o.matrix, "16 rationals, row-major, comma-separated")->required();
  member->add_flag("--json", o.json);

  auto* coeff = app.add_subcommand("coeff", "A single coefficient e_{i,S}");
  coeff->add_option("--i", o.index)->required();
  coeff->add_option("--d", o.d, "Degree of the hypersurface");
  coeff->add_option("--segre-factors", o.segre_factors, "Factors of the Segre variety giving S")
      ->delimiter(',')
      ->check(CLI::NonNegativeNumber);
  coeff->add_flag("--double", o.doubled, "Use twice the Segre class");
  coeff->add_option("--scale", o.scale, "Rational multiple of the Segre class");
  coeff->add_flag("--zero-segre", o.zero_segre, "Use S = 0");
  coeff->add_flag("--json", o.json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*pq) return cmd_predegree_quadric(o, out);
    if (*segre_cmd) return cmd_segre_class(o, out);
    if (*so) return cmd_group_degree("deg-so", o, out);
    if (*po) return cmd_group_degree("deg-po", o, out);
    if (*table) return cmd_table(o, out);
    if (*tangents) return cmd_verify_tangents(o, out);
    if (*member) return cmd_member(o, out);
    if (*coeff) return cmd_coeff(o, out);
  } catch (const IntegralityError& e) {
    err << "integrality failure: " << e.what() << '\n';
    return kIntegrality;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace predeg::cli
