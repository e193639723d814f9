#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "forca/forca.hpp"

namespace forca::job {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

/// Document validation failure (unknown fields, bad shapes, bad values).
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

/// Command-line overrides applied on top of the document's ring block.
struct EngineConfig {
  std::optional<MonomialOrder> order;
  std::optional<std::uint32_t> characteristic;
  std::optional<std::size_t> max_pairs;
  std::optional<unsigned> emax;
};

inline const std::vector<std::string>& task_names() {
  static const std::vector<std::string> names = {
      "gb",        "member",        "radical",    "eliminate", "fiber",
      "section",   "cocycle-check", "cech-to-forcing", "coboundary",
      "localize",  "jacobian",      "classify",   "locus",     "frobenius",
      "degree",    "derivation"};
  return names;
}

inline MonomialOrder parse_order(const std::string& text) {
  if (text == "degrevlex") return MonomialOrder::degrevlex();
  if (text == "lex") return MonomialOrder::lex();
  if (text.rfind("block:", 0) == 0) {
    std::size_t k = std::stoul(text.substr(6));
    return MonomialOrder::elimination_block(k);
  }
  throw SchemaError("unknown monomial order '" + text + "'");
}

namespace detail {

inline void check_keys(const json& obj, const std::set<std::string>& allowed,
                       const std::string& where) {
  if (!obj.is_object()) throw SchemaError(where + " must be an object");
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      throw SchemaError("unknown field '" + it.key() + "' in " + where);
}

inline const json& require(const json& obj, const std::string& key,
                           const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw SchemaError("missing field '" + key + "' in " + where);
  return *it;
}

inline std::vector<std::string> string_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw SchemaError(where + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw SchemaError(where + " entries must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

inline std::string scalar_text(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw SchemaError(where + " entries must be integers or scalar strings");
}

// Task execution over a fixed coefficient field.
template <CoefficientField F>
class Runner {
 public:
  Runner(F field, const json& doc, const EngineConfig& cfg)
      : field_(std::move(field)), doc_(doc), cfg_(cfg) {
    const json& ring = require(doc_, "ring", "document");
    check_keys(ring, {"vars", "char", "defining", "order"}, "ring block");
    std::vector<std::string> vars =
        string_list(require(ring, "vars", "ring block"), "ring.vars");
    if (vars.empty()) throw SchemaError("ring.vars must not be empty");
    order_ = cfg.order ? *cfg.order
                       : (ring.contains("order")
                              ? parse_order(ring["order"].get<std::string>())
                              : MonomialOrder::degrevlex());
    ring_ = make_ring(field_, vars, order_);
    if (cfg.max_pairs) limits_.max_pairs = *cfg.max_pairs;
    std::vector<Polynomial<F>> defining;
    if (ring.contains("defining"))
      for (const auto& s : string_list(ring["defining"], "ring.defining"))
        defining.push_back(parse(s));
    pres_ = RingPresentation<F>(ring_, std::move(defining), limits_);
  }

  ojson run(const std::string& task) {
    const json& payload = require(doc_, "payload", "document");
    ojson result;
    if (task == "gb") result = gb(payload);
    else if (task == "member") result = member(payload);
    else if (task == "radical") result = radical(payload);
    else if (task == "eliminate") result = eliminate_task(payload);
    else if (task == "fiber") result = fiber(payload);
    else if (task == "section") result = section(payload);
    else if (task == "cocycle-check") result = cocycle_check(payload);
    else if (task == "cech-to-forcing") result = to_forcing(payload);
    else if (task == "coboundary") result = coboundary(payload);
    else if (task == "localize") result = localize(payload);
    else if (task == "jacobian") result = jacobian_task(payload);
    else if (task == "classify") result = classify(payload);
    else if (task == "locus") result = locus(payload);
    else if (task == "frobenius") result = frobenius(payload);
    else if (task == "degree") result = degree(payload);
    else if (task == "derivation") result = derivation(payload);
    else throw SchemaError("unknown task '" + task + "'");
    return result;
  }

  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  Polynomial<F> parse(const std::string& text) const {
    return parse_polynomial(text, ring_);
  }

  std::vector<Polynomial<F>> parse_list(const json& v, const std::string& where) const {
    std::vector<Polynomial<F>> out;
    for (const auto& s : string_list(v, where)) out.push_back(parse(s));
    return out;
  }

  std::vector<typename F::Elem> parse_point(const json& v, const RingPtr<F>& ring,
                                            const std::string& where) const {
    if (!v.is_array()) throw SchemaError(where + " must be an array");
    std::vector<typename F::Elem> out;
    for (const auto& e : v)
      out.push_back(parse_scalar<F>(scalar_text(e, where), ring));
    return out;
  }

  IdealHandle<F> ideal_from(const json& payload) const {
    return IdealHandle<F>(
        pres_, parse_list(require(payload, "generators", "payload"),
                          "payload.generators"));
  }

  ForcingSystem<F> forcing_from(const json& payload) const {
    bool has_matrix = payload.contains("matrix") || payload.contains("rhs");
    bool has_ideal = payload.contains("generators") || payload.contains("element");
    if (has_matrix == has_ideal)
      throw SchemaError(
          "forcing data needs either matrix/rhs or generators/element");
    if (has_matrix) {
      const json& mat = require(payload, "matrix", "payload");
      if (!mat.is_array()) throw SchemaError("payload.matrix must be an array");
      std::vector<std::vector<Polynomial<F>>> rows;
      for (const auto& row : mat)
        rows.push_back(parse_list(row, "payload.matrix row"));
      std::vector<Polynomial<F>> rhs = parse_list(
          require(payload, "rhs", "payload"), "payload.rhs");
      return ForcingSystem<F>::from_matrix(pres_, std::move(rows), std::move(rhs),
                                           tvar_stem(payload));
    }
    std::vector<Polynomial<F>> gens = parse_list(
        require(payload, "generators", "payload"), "payload.generators");
    Polynomial<F> f = parse(
        require(payload, "element", "payload").template get<std::string>());
    return ForcingSystem<F>::ideal_case(pres_, std::move(gens), std::move(f),
                                        tvar_stem(payload));
  }

  std::string tvar_stem(const json& payload) const {
    return payload.contains("tvars")
               ? payload["tvars"].template get<std::string>()
               : std::string("T");
  }

  CechCocycle<F> cocycle_from(const json& payload) const {
    std::vector<Polynomial<F>> gens = parse_list(
        require(payload, "generators", "payload"), "payload.generators");
    unsigned m = require(payload, "exponent", "payload").template get<unsigned>();
    const json& nums = require(payload, "numerators", "payload");
    if (!nums.is_object())
      throw SchemaError("payload.numerators must map \"i,j\" pairs to polynomials");
    std::map<std::pair<std::size_t, std::size_t>, Polynomial<F>> numerators;
    for (auto it = nums.begin(); it != nums.end(); ++it) {
      const std::string& key = it.key();
      auto comma = key.find(',');
      if (comma == std::string::npos)
        throw SchemaError("numerator key '" + key + "' is not of the form i,j");
      std::size_t i = std::stoul(key.substr(0, comma));
      std::size_t j = std::stoul(key.substr(comma + 1));
      if (i < 1 || j < 1 || i >= j)
        throw SchemaError("numerator key '" + key + "' must satisfy 1 <= i < j");
      numerators[{i - 1, j - 1}] =
          parse(it.value().template get<std::string>());
    }
    return make_cocycle(pres_, std::move(gens), m, std::move(numerators));
  }

  Grading grading_from(const json& payload, std::size_t nvars) const {
    const json& g = require(payload, "grading", "payload");
    if (!g.is_array() || g.size() != nvars)
      throw SchemaError("payload.grading needs one degree vector per ring variable");
    Grading grading;
    for (const auto& row : g) {
      if (!row.is_array()) throw SchemaError("grading rows must be arrays");
      std::vector<std::int64_t> d;
      for (const auto& e : row) d.push_back(e.template get<std::int64_t>());
      grading.degrees.push_back(std::move(d));
    }
    grading.validate(nvars);
    return grading;
  }

  static ojson poly_strings(const std::vector<Polynomial<F>>& v) {
    ojson arr = ojson::array();
    for (const auto& p : v) arr.push_back(p.str());
    return arr;
  }

  ojson scalar_strings(const std::vector<typename F::Elem>& v) const {
    ojson arr = ojson::array();
    for (const auto& e : v) arr.push_back(field_.str(e));
    return arr;
  }

  [[noreturn]] static void witness_mismatch(const std::string& what) {
    throw std::logic_error("witness re-verification failed: " + what);
  }

  // --- tasks ---

  ojson gb(const json& payload) {
    check_keys(payload, {"generators"}, "payload");
    IdealHandle<F> ideal = ideal_from(payload);
    ojson out;
    out["basis"] = poly_strings(ideal.groebner_basis());
    out["unit_ideal"] = ideal.is_unit();
    return out;
  }

  ojson member(const json& payload) {
    check_keys(payload, {"generators", "element"}, "payload");
    IdealHandle<F> ideal = ideal_from(payload);
    Polynomial<F> f =
        parse(require(payload, "element", "payload").template get<std::string>());
    auto m = ideal.contains(f);
    ojson out;
    out["member"] = m.member;
    out["normal_form"] = ideal.normal_form(f).str();
    if (m.member) {
      Polynomial<F> acc = Polynomial<F>::zero(ring_);
      for (std::size_t i = 0; i < m.cofactors.size(); ++i)
        acc = acc + m.cofactors[i] * ideal.generators()[i];
      if (!pres_.is_zero_in_quotient(acc - f))
        witness_mismatch("membership cofactors do not recompose the element");
      out["witness"] = poly_strings(m.cofactors);
    }
    return out;
  }

  ojson radical(const json& payload) {
    check_keys(payload, {"generators", "element"}, "payload");
    IdealHandle<F> ideal = ideal_from(payload);
    Polynomial<F> f =
        parse(require(payload, "element", "payload").template get<std::string>());
    ojson out;
    out["member"] = radical_member(f, ideal);
    return out;
  }

  ojson eliminate_task(const json& payload) {
    check_keys(payload, {"generators", "eliminate"}, "payload");
    IdealHandle<F> ideal = ideal_from(payload);
    std::vector<std::size_t> drop;
    for (const auto& name :
         string_list(require(payload, "eliminate", "payload"), "payload.eliminate")) {
      int idx = ring_->var_index(name);
      if (idx < 0) throw SchemaError("eliminate: unknown variable '" + name + "'");
      drop.push_back(static_cast<std::size_t>(idx));
    }
    auto res = eliminate(ideal, drop);
    ojson out;
    out["vars"] = res.ring->vars;
    out["generators"] = poly_strings(res.ideal.generators());
    return out;
  }

  ojson fiber(const json& payload) {
    check_keys(payload, {"matrix", "rhs", "generators", "element", "tvars", "point"},
               "payload");
    ForcingSystem<F> fs = forcing_from(payload);
    auto point =
        parse_point(require(payload, "point", "payload"), ring_, "payload.point");
    auto fc = fiber_at(fs, point);
    ojson out;
    if (fc.empty()) {
      out["fiber"] = "empty";
      return out;
    }
    out["fiber"] = "affine";
    out["dimension"] = fc.dimension;
    out["point"] = scalar_strings(fc.particular);
    ojson dirs = ojson::array();
    for (const auto& d : fc.directions) dirs.push_back(scalar_strings(d));
    out["directions"] = dirs;
    // re-verify: the particular solution satisfies every evaluated row
    const F& k = field_;
    for (std::size_t i = 0; i < fs.rows(); ++i) {
      typename F::Elem lhs = k.zero();
      for (std::size_t j = 0; j < fs.unknowns(); ++j)
        lhs = k.add(lhs, k.mul(fs.matrix()[i][j].evaluate(point), fc.particular[j]));
      if (!k.equal(lhs, fs.rhs()[i].evaluate(point)))
        witness_mismatch("fiber point fails a forcing row");
    }
    return out;
  }

  ojson section(const json& payload) {
    check_keys(payload, {"matrix", "rhs", "generators", "element", "tvars"},
               "payload");
    ForcingSystem<F> fs = forcing_from(payload);
    auto sec = has_section(fs);
    ojson out;
    out["exists"] = sec.exists;
    if (sec.exists) {
      for (std::size_t i = 0; i < fs.rows(); ++i) {
        Polynomial<F> acc = -fs.rhs()[i];
        for (std::size_t j = 0; j < fs.unknowns(); ++j)
          acc = acc + fs.matrix()[i][j] * sec.witness[j];
        if (!pres_.is_zero_in_quotient(acc))
          witness_mismatch("section does not solve the forcing system");
      }
      out["witness"] = poly_strings(sec.witness);
    }
    return out;
  }

  ojson cocycle_check(const json& payload) {
    check_keys(payload, {"generators", "exponent", "numerators"}, "payload");
    auto chk = forca::check_cocycle(cocycle_from(payload));
    ojson out;
    out["cocycle"] = chk.ok;
    if (!chk.ok) {
      auto [i, j, k] = *chk.failing;
      out["failing_triple"] = ojson::array({i + 1, j + 1, k + 1});
      out["residual"] = chk.residual.str();
    }
    return out;
  }

  ojson to_forcing(const json& payload) {
    check_keys(payload, {"generators", "exponent", "numerators", "tvars"},
               "payload");
    auto fs = cech_to_forcing(cocycle_from(payload), tvar_stem(payload));
    ojson out;
    ojson mat = ojson::array();
    for (const auto& row : fs.matrix()) mat.push_back(poly_strings(row));
    out["matrix"] = mat;
    out["rhs"] = poly_strings(fs.rhs());
    std::vector<std::string> tvars(fs.total_ring()->vars.end() -
                                       static_cast<std::ptrdiff_t>(fs.unknowns()),
                                   fs.total_ring()->vars.end());
    out["tvars"] = tvars;
    return out;
  }

  ojson coboundary(const json& payload) {
    check_keys(payload, {"generators", "exponent", "numerators"}, "payload");
    auto c = cocycle_from(payload);
    auto res = is_coboundary(c);
    ojson out;
    out["coboundary"] = res.coboundary;
    if (res.coboundary) {
      for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) {
          Polynomial<F> lhs = c.gens[j].pow(c.exponent) * res.witness[i] -
                              c.gens[i].pow(c.exponent) * res.witness[j] -
                              c.numerator(i, j);
          if (!pres_.is_zero_in_quotient(lhs))
            witness_mismatch("coboundary witness misses a numerator");
        }
      out["witness"] = poly_strings(res.witness);
    }
    return out;
  }

  ojson localize(const json& payload) {
    check_keys(payload, {"generators", "exponent", "numerators", "chart"},
               "payload");
    std::size_t chart = require(payload, "chart", "payload").template get<std::size_t>();
    if (chart < 1) throw SchemaError("chart indices are 1-based");
    auto rep = localize_presentation(cocycle_from(payload), chart - 1);
    ojson out;
    out["polynomial_ring"] = rep.all_rows_vanish;
    out["inverse_var"] = rep.inverse_var;
    ojson elim = ojson::object();
    for (const auto& [idx, expr] : rep.eliminated)
      elim["T" + std::to_string(idx + 1)] = expr.str();
    out["eliminated"] = elim;
    return out;
  }

  ojson jacobian_task(const json& payload) {
    check_keys(payload, {"matrix", "rhs", "generators", "element", "tvars"},
               "payload");
    auto jm = forca::jacobian(forcing_from(payload));
    ojson out;
    out["rows"] = jm.row_count();
    out["cols"] = jm.col_count();
    ojson mat = ojson::array();
    for (const auto& row : jm.rows) mat.push_back(poly_strings(row));
    out["matrix"] = mat;
    return out;
  }

  ojson classify(const json& payload) {
    check_keys(payload,
               {"matrix", "rhs", "generators", "element", "tvars", "points",
                "dim_b"},
               "payload");
    ForcingSystem<F> fs = forcing_from(payload);
    std::size_t dim_b = SIZE_MAX;
    if (payload.contains("dim_b"))
      dim_b = payload["dim_b"].template get<std::size_t>();
    const json& pts = require(payload, "points", "payload");
    if (!pts.is_array()) throw SchemaError("payload.points must be an array");
    ojson arr = ojson::array();
    for (const auto& pj : pts) {
      auto q = parse_point(pj, fs.total_ring(), "payload.points");
      auto c = classify_point(fs, q, dim_b);
      ojson one;
      one["case"] = to_string(c.case_tag);
      one["verdict"] = to_string(c.verdict);
      one["rank"] = c.rank;
      one["expected_codim"] = c.expected_codim;
      arr.push_back(one);
    }
    ojson out;
    out["classifications"] = arr;
    return out;
  }

  ojson locus(const json& payload) {
    check_keys(payload,
               {"matrix", "rhs", "generators", "element", "tvars", "codim"},
               "payload");
    ForcingSystem<F> fs = forcing_from(payload);
    std::size_t codim;
    if (payload.contains("codim")) {
      codim = payload["codim"].template get<std::size_t>();
    } else {
      std::size_t dim_r = base_dimension(fs);
      std::size_t dim_b = fs.relations().front().is_zero()
                              ? dim_r + fs.unknowns()
                              : dim_r + fs.unknowns() - 1;
      codim = fs.base_var_count() + fs.unknowns() - dim_b;
    }
    auto ideal = singular_locus_ideal(fs, codim);
    ojson out;
    out["codim"] = codim;
    out["unit_ideal"] = ideal.is_unit();
    out["basis"] = poly_strings(ideal.groebner_basis());
    return out;
  }

  ojson frobenius(const json& payload) {
    check_keys(payload, {"generators", "element", "emax"}, "payload");
    IdealHandle<F> ideal = ideal_from(payload);
    Polynomial<F> f =
        parse(require(payload, "element", "payload").template get<std::string>());
    unsigned emax = cfg_.emax ? *cfg_.emax
                              : (payload.contains("emax")
                                     ? payload["emax"].template get<unsigned>()
                                     : 5u);
    auto rep = frobenius_member(f, ideal, emax);
    ojson out;
    out["p"] = rep.p;
    ojson levels = ojson::array();
    for (const auto& level : rep.levels) {
      ojson one;
      one["e"] = level.e;
      one["q"] = level.q;
      if (level.capped) {
        one["capped"] = true;
        one["message"] = level.message;
      } else {
        one["member"] = level.member;
        if (level.member) {
          Polynomial<F> acc = Polynomial<F>::zero(ring_);
          for (std::size_t i = 0; i < level.cofactors.size(); ++i)
            acc = acc + level.cofactors[i] * ideal.generators()[i].pow(level.q);
          if (!pres_.is_zero_in_quotient(acc - f.pow(level.q)))
            witness_mismatch("Frobenius witness does not recompose f^q");
          one["witness"] = poly_strings(level.cofactors);
        }
      }
      levels.push_back(one);
    }
    out["levels"] = levels;
    return out;
  }

  ojson degree(const json& payload) {
    check_keys(payload, {"grading", "element", "f1", "f2", "elements"}, "payload");
    Grading grading = grading_from(payload, ring_->nvars());
    ojson out;
    if (payload.contains("elements")) {
      ojson arr = ojson::array();
      for (const auto& p :
           parse_list(payload["elements"], "payload.elements")) {
        auto d = weighted_degree(p, grading);
        if (d) arr.push_back(*d);
        else arr.push_back("inhomogeneous");
      }
      out["degrees"] = arr;
      return out;
    }
    Polynomial<F> f =
        parse(require(payload, "element", "payload").template get<std::string>());
    Polynomial<F> f1 = parse(require(payload, "f1", "payload").template get<std::string>());
    Polynomial<F> f2 = parse(require(payload, "f2", "payload").template get<std::string>());
    out["class_degree"] = class_degree(f, f1, f2, grading);
    return out;
  }

  ojson derivation(const json& payload) {
    check_keys(payload, {"generators", "element", "tvars", "probes", "powers"},
               "payload");
    ForcingSystem<F> fs = forcing_from(payload);
    auto d = build_lnd(fs);
    if (d.characteristic_warning())
      warnings_.push_back(
          "positive characteristic: the kernel description by the base ring "
          "assumes characteristic zero");
    if (!d.regular_pair())
      warnings_.push_back(
          "generators fail the regular-pair test; the kernel claim needs it");
    ojson out;
    out["relation_annihilated"] =
        fs.total().is_zero_in_quotient(d.apply(fs.relations().front()));
    out["regular_pair"] = d.regular_pair();
    out["image_t1"] = d.image_t1().str();
    out["image_t2"] = d.image_t2().str();
    if (payload.contains("probes")) {
      ojson arr = ojson::array();
      for (const auto& s : string_list(payload["probes"], "payload.probes")) {
        auto g = parse_polynomial(s, fs.total_ring());
        arr.push_back(nilpotency_index(d, g));
      }
      out["probe_indices"] = arr;
    }
    if (payload.contains("powers")) {
      ojson arr = ojson::array();
      Polynomial<F> t1 = Polynomial<F>::variable(fs.total_ring(), fs.t_index(0));
      for (const auto& e : payload["powers"]) {
        auto deg = e.template get<unsigned>();
        arr.push_back(nilpotency_index(d, t1.pow(deg)));
      }
      out["power_indices"] = arr;
    }
    return out;
  }

  F field_;
  const json& doc_;
  EngineConfig cfg_;
  MonomialOrder order_;
  RingPtr<F> ring_;
  RingPresentation<F> pres_;
  GbLimits limits_;
  std::vector<std::string> warnings_;
};

}  // namespace detail

/// Execute a validated job document; the returned report is deterministic
/// for fixed input and configuration.
inline ojson run_job(const json& doc, const EngineConfig& cfg = {}) {
  detail::check_keys(doc, {"task", "name", "ring", "payload", "expect"},
                     "document");
  std::string task =
      detail::require(doc, "task", "document").get<std::string>();
  if (std::find(task_names().begin(), task_names().end(), task) ==
      task_names().end())
    throw SchemaError("unknown task '" + task + "'");

  const json& ring = detail::require(doc, "ring", "document");
  std::uint32_t p = cfg.characteristic
                        ? *cfg.characteristic
                        : detail::require(ring, "char", "ring block")
                              .get<std::uint32_t>();

  ojson report;
  report["task"] = task;
  if (doc.contains("name")) report["name"] = doc["name"];
  ojson engine;
  engine["char"] = p;
  std::vector<std::string> warnings;
  ojson result;
  if (p == 0) {
    detail::Runner<Rationals> runner(Rationals{}, doc, cfg);
    result = runner.run(task);
    warnings = runner.warnings();
  } else {
    detail::Runner<PrimeField> runner(PrimeField(p), doc, cfg);
    result = runner.run(task);
    warnings = runner.warnings();
  }
  engine["order"] = cfg.order ? cfg.order->str()
                              : (ring.contains("order")
                                     ? ring["order"].get<std::string>()
                                     : std::string("degrevlex"));
  GbLimits defaults;
  engine["max_pairs"] = cfg.max_pairs ? *cfg.max_pairs : defaults.max_pairs;
  report["engine"] = engine;
  report["result"] = result;
  report["warnings"] = warnings;
  return report;
}

struct CorpusEntry {
  std::string file;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CorpusOutcome {
  std::vector<CorpusEntry> entries;
  std::size_t failures = 0;
};

/// Run every *.json document under `dir` (sorted by filename, executed
/// concurrently) and compare each report's result against the document's
/// "expect" block, key by key.
inline CorpusOutcome run_corpus(const std::filesystem::path& dir,
                                const EngineConfig& cfg = {}) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    throw SchemaError("corpus directory not found: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json")
      files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty())
    throw SchemaError("corpus directory has no job documents: " + dir.string());

  auto run_one = [&cfg](const fs::path& path) {
    CorpusEntry entry;
    entry.file = path.filename().string();
    try {
      std::ifstream in(path);
      json doc = json::parse(in);
      entry.name = doc.contains("name") ? doc["name"].get<std::string>()
                                        : entry.file;
      if (!doc.contains("expect"))
        throw SchemaError("corpus document lacks an expect block");
      ojson report = run_job(doc, cfg);
      const json& expect = doc["expect"];
      for (auto it = expect.begin(); it != expect.end(); ++it) {
        const json got = report["result"].contains(it.key())
                             ? json(report["result"][it.key()])
                             : json();
        if (got != it.value()) {
          entry.passed = false;
          entry.detail = "key '" + it.key() + "': expected " +
                         it.value().dump() + ", got " + got.dump();
          return entry;
        }
      }
      entry.passed = true;
    } catch (const std::exception& e) {
      entry.passed = false;
      entry.detail = e.what();
    }
    return entry;
  };

  std::vector<std::future<CorpusEntry>> futures;
  for (const auto& f : files)
    futures.push_back(std::async(std::launch::async, run_one, f));

  CorpusOutcome out;
  for (auto& fu : futures) {
    out.entries.push_back(fu.get());
    if (!out.entries.back().passed) ++out.failures;
  }
  return out;
}

}  // namespace forca::job
