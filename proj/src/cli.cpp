#include "char2forms/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "char2forms/canon.hpp"
#include "char2forms/contact.hpp"
#include "char2forms/io.hpp"
#include "char2forms/oracle.hpp"

namespace char2forms {

namespace {

using nlohmann::json;

Matrix load_matrix(const std::string& path, const FieldCtx* expected_ctx) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  Matrix m = matrix_from_text(ss.str());
  if (expected_ctx && &m.ctx() != expected_ctx)
    throw ParseError("matrix field " + m.ctx().name() + " does not match --field " +
                     expected_ctx->name());
  return m;
}

Matrix matrix_of_json(const json& v);

void emit(const json& j, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << j.dump(2) << "\n";
  } else {
    // Text rendering: flat key/value lines, matrices in the text format.
    std::function<void(const json&, const std::string&)> walk = [&](const json& v,
                                                                    const std::string& prefix) {
      if (v.is_object()) {
        if (v.contains("rows") && v.contains("field")) {
          out << prefix << ":\n" << matrix_to_text(matrix_of_json(v));
          return;
        }
        for (auto it = v.begin(); it != v.end(); ++it)
          walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
      } else {
        out << prefix << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    };
    walk(j, "");
  }
}

struct AlgebraSpec {
  std::string name;  // base family with optional derived level suffix
  int n = 0;
  int sdim0 = -1, sdim1 = -1;
  const FieldCtx* ctx = nullptr;
};

struct NamedAlgebra {
  // Exactly one of the two is populated.
  std::optional<AlgebraBasis> plain;
  std::optional<SuperAlgebraBasis> super;
};

NamedAlgebra build_named_algebra(const AlgebraSpec& spec) {
  std::string base = spec.name;
  int level = 0;
  while (!base.empty() && std::isdigit(static_cast<unsigned char>(base.back()))) {
    base.pop_back();
  }
  if (base.size() < spec.name.size()) level = std::stoi(spec.name.substr(base.size()));
  const FieldCtx& ctx = *spec.ctx;
  NamedAlgebra out;
  if (base == "oI" || base == "oS" || base == "oPi" || base == "gl") {
    if (spec.n <= 0) throw ParseError("--n is required for algebra " + spec.name);
    AlgebraBasis g = base == "oI"   ? o_I(ctx, spec.n)
                     : base == "oS" ? o_S(ctx, spec.n)
                     : base == "oPi" ? o_Pi(ctx, spec.n)
                                     : gl_algebra(ctx, spec.n);
    if (level > 0) {
      DerivedSeries ds = derived_series(g, level);
      g = ds.terms.size() >= static_cast<size_t>(level) ? ds.terms[level - 1] : ds.terms.back();
    }
    out.plain = std::move(g);
    return out;
  }
  if (base == "ooII" || base == "ooIPi" || base == "ooPiPi" || base == "pe") {
    SuperAlgebraBasis g = [&] {
      if (base == "pe") {
        if (spec.n <= 0) throw ParseError("--n is required for algebra pe");
        return pe(ctx, spec.n);
      }
      if (spec.sdim0 < 0 || spec.sdim1 < 0)
        throw ParseError("--sdim is required for algebra " + spec.name);
      if (base == "ooII") return oo_II(ctx, spec.sdim0, spec.sdim1);
      if (base == "ooIPi") return oo_IPi(ctx, spec.sdim0, spec.sdim1);
      return oo_PiPi(ctx, spec.sdim0, spec.sdim1);
    }();
    if (level > 0) {
      SuperDerivedSeries ds = super_derived_series(g, level);
      g = ds.terms.size() >= static_cast<size_t>(level) ? ds.terms[level - 1] : ds.terms.back();
    }
    out.super = std::move(g);
    return out;
  }
  throw ParseError("unknown algebra name: " + spec.name);
}

json sym_result_json(const Matrix& input, const SymCanonResult& r) {
  bool ok = r.verify(input);
  if (!ok) throw DomainError("certificate failed verification");
  return {{"relation", "congruence"},
          {"label", {{"n", r.label.n}, {"rank", r.label.rank}, {"fully_isotropic", r.label.fully_isotropic}}},
          {"canonical", matrix_to_json(r.canonical)},
          {"witness_M", matrix_to_json(r.witness)},
          {"verified", true}};
}

void parse_sdim(const std::string& s, int* n0, int* n1) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw ParseError("--sdim expects n0,n1");
  try {
    *n0 = std::stoi(s.substr(0, comma));
    *n1 = std::stoi(s.substr(comma + 1));
  } catch (const std::exception&) {
    throw ParseError("--sdim expects n0,n1");
  }
}

Matrix matrix_of_json(const json& v) {
  const FieldCtx& ctx = FieldCtx::parse_name(v.at("field").get<std::string>());
  int n = v.at("n").get<int>();
  Matrix m(ctx, n, n);
  const auto& rows = v.at("rows");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.set(i, j, FieldElem::from_hex(ctx, rows[i][j].get<std::string>()).bits());
  return m;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"classification toolkit for bilinear forms in characteristic 2"};
  app.require_subcommand(1);

  std::string field_name = "gf2_1", out_format = "json";
  std::string matrix_path, matrix2_path, algebra_name, predicate_s = "all",
              equivalence_s = "congruence", parity_s, x0_s = "even", sdim_s;
  int n_arg = 0, depth = 8;
  app.add_option("--out", out_format)->check(CLI::IsMember({"json", "text"}));

  auto add_common = [&](CLI::App* cmd, bool with_field = true) {
    if (with_field) cmd->add_option("--field", field_name);
    cmd->add_option("--out", out_format)->check(CLI::IsMember({"json", "text"}));
  };

  auto* canon_cmd = app.add_subcommand("canon", "canonical form of a symmetric bilinear form");
  add_common(canon_cmd);
  canon_cmd->add_option("--matrix", matrix_path)->required();

  auto* equiv_cmd = app.add_subcommand("equiv", "decide congruence of two symmetric forms");
  add_common(equiv_cmd);
  equiv_cmd->add_option("--matrix", matrix_path)->required();
  equiv_cmd->add_option("--matrix2", matrix2_path)->required();

  auto* socio_cmd = app.add_subcommand("socio", "class of a form modulo symmetric forms");
  add_common(socio_cmd);
  socio_cmd->add_option("--matrix", matrix_path)->required();

  auto* albert_cmd = app.add_subcommand("albert", "quadratic-form class modulo alternating forms");
  add_common(albert_cmd);
  albert_cmd->add_option("--matrix", matrix_path)->required();

  bool sociological_flag = false;
  auto* pres_cmd = app.add_subcommand("preserver", "Lie algebra preserving a form");
  add_common(pres_cmd);
  pres_cmd->add_option("--matrix", matrix_path)->required();
  pres_cmd->add_flag("--sociological", sociological_flag);

  auto* derived_cmd = app.add_subcommand("derived", "derived series of an algebra");
  add_common(derived_cmd);
  derived_cmd->add_option("--algebra", algebra_name);
  derived_cmd->add_option("--matrix", matrix_path);
  derived_cmd->add_option("--n", n_arg);
  derived_cmd->add_option("--sdim", sdim_s);
  derived_cmd->add_option("--depth", depth);

  auto* center_cmd = app.add_subcommand("center", "center of an algebra");
  add_common(center_cmd);
  center_cmd->add_option("--algebra", algebra_name);
  center_cmd->add_option("--matrix", matrix_path);
  center_cmd->add_option("--n", n_arg);
  center_cmd->add_option("--sdim", sdim_s);

  auto* simple_cmd = app.add_subcommand("simple", "exhaustive simplicity certificate");
  add_common(simple_cmd);
  simple_cmd->add_option("--algebra", algebra_name);
  simple_cmd->add_option("--matrix", matrix_path);
  simple_cmd->add_option("--n", n_arg);
  simple_cmd->add_option("--sdim", sdim_s);

  auto* fp_cmd = app.add_subcommand("fingerprint", "Lie-equivalence fingerprint");
  add_common(fp_cmd);
  fp_cmd->add_option("--algebra", algebra_name);
  fp_cmd->add_option("--matrix", matrix_path);
  fp_cmd->add_option("--n", n_arg);
  fp_cmd->add_option("--sdim", sdim_s);

  auto* scanon_cmd = app.add_subcommand("super-canon", "canonical form of a super form");
  add_common(scanon_cmd);
  scanon_cmd->add_option("--matrix", matrix_path)->required();
  scanon_cmd->add_option("--sdim", sdim_s)->required();
  scanon_cmd->add_option("--parity", parity_s)->required()->check(CLI::IsMember({"even", "odd"}));

  auto* spres_cmd = app.add_subcommand("super-preserver", "Lie superalgebra preserving a super form");
  add_common(spres_cmd);
  spres_cmd->add_option("--matrix", matrix_path)->required();
  spres_cmd->add_option("--sdim", sdim_s)->required();
  spres_cmd->add_option("--parity", parity_s)->required()->check(CLI::IsMember({"even", "odd"}));

  auto* sder_cmd = app.add_subcommand("super-derived", "derived series of a Lie superalgebra");
  add_common(sder_cmd);
  sder_cmd->add_option("--algebra", algebra_name)->required();
  sder_cmd->add_option("--n", n_arg);
  sder_cmd->add_option("--sdim", sdim_s);
  sder_cmd->add_option("--depth", depth);

  auto* contact_cmd = app.add_subcommand("contact", "contactness of a linear 1-form");
  add_common(contact_cmd);
  contact_cmd->add_option("--matrix", matrix_path)->required();
  contact_cmd->add_option("--parity", parity_s)->check(CLI::IsMember({"even", "odd"}));
  contact_cmd->add_option("--sdim", sdim_s);
  contact_cmd->add_option("--x0", x0_s)->check(CLI::IsMember({"even", "odd"}));

  auto* census_cmd = app.add_subcommand("census", "exhaustive GF(2) class census");
  add_common(census_cmd, false);
  census_cmd->add_option("--n", n_arg)->required();
  census_cmd->add_option("--predicate", predicate_s);
  census_cmd->add_option("--equiv", equivalence_s);

  auto* cluster_cmd = app.add_subcommand("cluster", "Lie-equivalence clusters of census classes");
  add_common(cluster_cmd, false);
  cluster_cmd->add_option("--n", n_arg)->required();
  cluster_cmd->add_option("--predicate", predicate_s);
  cluster_cmd->add_option("--equiv", equivalence_s);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  app.parse(rev);

  const FieldCtx& ctx = FieldCtx::parse_name(field_name);
  json result;

  auto algebra_input = [&]() -> NamedAlgebra {
    if (!algebra_name.empty()) {
      AlgebraSpec spec;
      spec.name = algebra_name;
      spec.n = n_arg;
      spec.ctx = &ctx;
      if (!sdim_s.empty()) parse_sdim(sdim_s, &spec.sdim0, &spec.sdim1);
      return build_named_algebra(spec);
    }
    if (matrix_path.empty()) throw ParseError("provide --algebra or --matrix");
    NamedAlgebra na;
    na.plain = preserver(load_matrix(matrix_path, &ctx));
    return na;
  };

  if (canon_cmd->parsed()) {
    Matrix b = load_matrix(matrix_path, &ctx);
    result = sym_result_json(b, reduce_symmetric(b));
  } else if (equiv_cmd->parsed()) {
    Matrix b = load_matrix(matrix_path, &ctx), c = load_matrix(matrix2_path, &ctx);
    EquivResult r = equiv_symmetric(b, c);
    result["equivalent"] = r.equivalent;
    if (r.witness) {
      bool ok = *r.witness * b * r.witness->transpose() == c;
      if (!ok) throw DomainError("equivalence witness failed verification");
      result["witness"] = matrix_to_json(*r.witness);
      result["verified"] = true;
    }
  } else if (socio_cmd->parsed()) {
    Matrix b = load_matrix(matrix_path, &ctx);
    SocioCanonResult r = sociological_canon(b);
    if (!r.verify(b)) throw DomainError("certificate failed verification");
    result = {{"relation", "sociological"},
              {"label", {{"rank", r.rank}}},
              {"canonical", matrix_to_json(r.canonical)},
              {"witness_M", matrix_to_json(r.witness_m)},
              {"witness_A", matrix_to_json(r.witness_a)},
              {"verified", true}};
  } else if (albert_cmd->parsed()) {
    Matrix b = load_matrix(matrix_path, &ctx);
    AlbertCanonResult r = albert_canon(b);
    if (!r.verify(b)) throw DomainError("certificate failed verification");
    result = {{"relation", "albert"},
              {"label", {{"r", r.r}, {"variant", albert_variant_name(r.variant)}}},
              {"canonical", matrix_to_json(r.canonical)},
              {"witness_M", matrix_to_json(r.witness_m)},
              {"witness_A", matrix_to_json(r.witness_a)},
              {"verified", true}};
  } else if (pres_cmd->parsed()) {
    Matrix b = load_matrix(matrix_path, &ctx);
    AlgebraBasis g = sociological_flag ? sociological_preserver(b) : preserver(b);
    result = algebra_to_json(g);
  } else if (derived_cmd->parsed() || sder_cmd->parsed()) {
    NamedAlgebra na = algebra_input();
    if (na.plain) {
      DerivedSeries ds = derived_series(*na.plain, depth);
      json dims = json::array();
      dims.push_back(na.plain->dim());
      for (const auto& t : ds.terms) dims.push_back(t.dim());
      result = {{"dims", dims}, {"stabilized_at", ds.stabilized_at}};
    } else {
      SuperDerivedSeries ds = super_derived_series(*na.super, depth);
      json dims = json::array();
      dims.push_back(na.super->dim());
      for (const auto& t : ds.terms) dims.push_back(t.dim());
      result = {{"dims", dims}, {"stabilized_at", ds.stabilized_at}};
    }
  } else if (center_cmd->parsed()) {
    NamedAlgebra na = algebra_input();
    if (na.plain)
      result = algebra_to_json(center(*na.plain));
    else
      result = super_algebra_to_json(super_center(*na.super));
  } else if (simple_cmd->parsed()) {
    NamedAlgebra na = algebra_input();
    if (na.plain) {
      SimplicityResult r = is_simple(*na.plain);
      result["simple"] = r.simple;
      if (r.proper_ideal) result["proper_ideal"] = algebra_to_json(*r.proper_ideal);
    } else {
      SuperSimplicityResult r = super_is_simple(*na.super);
      result["simple"] = r.simple;
      if (r.proper_ideal) {
        json basis = json::array();
        for (const auto& m : *r.proper_ideal) basis.push_back(matrix_to_json(m));
        result["proper_ideal"] = {{"basis", std::move(basis)}};
      }
    }
  } else if (fp_cmd->parsed()) {
    NamedAlgebra na = algebra_input();
    AlgebraBasis g = na.plain ? *na.plain : forgetful(*na.super);
    result["fingerprint"] = fingerprint_to_json(fingerprint(g));
  } else if (scanon_cmd->parsed() || spres_cmd->parsed()) {
    int n0 = 0, n1 = 0;
    parse_sdim(sdim_s, &n0, &n1);
    Matrix m = load_matrix(matrix_path, &ctx);
    SuperMatrix form(SuperDim{n0, n1}, parity_s == "even" ? Parity::even : Parity::odd, m);
    if (spres_cmd->parsed()) {
      result = super_algebra_to_json(super_preserver(form));
    } else if (form.parity() == Parity::even) {
      SuperEvenCanonResult r = super_even_canon(form);
      if (!r.verify(form)) throw DomainError("certificate failed verification");
      result = {{"relation", "super-even"},
                {"label",
                 {{"even", {{"rank", r.label0.rank}, {"fully_isotropic", r.label0.fully_isotropic}}},
                  {"odd", {{"rank", r.label1.rank}, {"fully_isotropic", r.label1.fully_isotropic}}}}},
                {"canonical", supermatrix_to_json(r.canonical)},
                {"witness_M", supermatrix_to_json(r.witness)},
                {"verified", true}};
    } else if (m.is_symmetric()) {
      SuperOddSymCanonResult r = super_odd_sym_canon(form);
      if (!r.verify(form)) throw DomainError("certificate failed verification");
      result = {{"relation", "super-odd-symmetric"},
                {"canonical", supermatrix_to_json(r.canonical)},
                {"witness_M", supermatrix_to_json(r.witness)},
                {"verified", true}};
    } else {
      SuperOddNonsymCanonResult r = super_odd_nonsym_canon(form);
      if (!r.verify(form)) throw DomainError("certificate failed verification");
      json blocks = json::array();
      for (const auto& b : r.blocks)
        blocks.push_back({{"eigenvalue", FieldElem(ctx, b.eigenvalue).to_hex()}, {"size", b.size}});
      result = {{"relation", "super-odd-nonsymmetric"},
                {"label", {{"jordan_blocks", std::move(blocks)}}},
                {"canonical", supermatrix_to_json(r.canonical)},
                {"witness_M", supermatrix_to_json(r.witness)},
                {"verified", true}};
    }
  } else if (contact_cmd->parsed()) {
    Matrix b = load_matrix(matrix_path, &ctx);
    std::vector<Parity> parities;
    if (!sdim_s.empty()) {
      int n0 = 0, n1 = 0;
      parse_sdim(sdim_s, &n0, &n1);
      parities.assign(n0, Parity::even);
      parities.insert(parities.end(), n1, Parity::odd);
    } else {
      parities.assign(b.rows(), parity_s == "odd" ? Parity::odd : Parity::even);
    }
    OneFormSpec spec{x0_s == "odd" ? Parity::odd : Parity::even, std::move(parities), b};
    ContactVerdict v = is_contact(spec);
    result = {{"contact", v.contact}, {"r", v.r}};
    if (v.contact) result["canonical_expression"] = v.canonical_expression;
  } else if (census_cmd->parsed() || cluster_cmd->parsed()) {
    OrbitCensus census =
        enumerate_classes(n_arg, parse_predicate(predicate_s), parse_equivalence(equivalence_s));
    json reps = json::array();
    for (const auto& r : census.representatives) reps.push_back(matrix_to_json(r));
    result = {{"n", census.n},
              {"predicate", predicate_name(census.predicate)},
              {"equivalence", equivalence_name(census.equivalence)},
              {"count", census.class_count()},
              {"orbit_sizes", census.orbit_sizes},
              {"representatives", std::move(reps)}};
    if (cluster_cmd->parsed()) {
      LieClusters cl = lie_equiv_cluster(census.representatives);
      json clusters = json::array();
      for (const auto& c : cl.clusters) clusters.push_back(c);
      json fps = json::array();
      for (const auto& f : cl.fingerprints) fps.push_back(fingerprint_to_json(f));
      result["clusters"] = std::move(clusters);
      result["cluster_count"] = cl.clusters.size();
      result["fingerprints"] = std::move(fps);
    }
  }

  emit(result, out_format, out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out);
  } catch (const CLI::CallForHelp&) {
    out << "see README for usage\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace char2forms
