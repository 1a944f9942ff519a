#pragma once

// Subcommand dispatch for the `fring` tool. dispatch() never prints; it
// returns a Report whose text is byte-stable for identical inputs.

#include <CLI11.hpp>

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fring/catalog.hpp"
#include "fring/error.hpp"
#include "fring/extensions.hpp"
#include "fring/io.hpp"
#include "fring/morita.hpp"
#include "fring/ring.hpp"
#include "fring/subset.hpp"

namespace fring::cli {

enum class Status { kOk, kEvidence, kFail, kFatal };

constexpr std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::kOk: return "OK";
    case Status::kEvidence: return "EVIDENCE";
    case Status::kFail: return "FAIL";
    case Status::kFatal: return "FATAL";
  }
  return "FAIL";
}

struct Report {
  Status status = Status::kOk;
  std::vector<std::pair<std::string, std::string>> lines;
  int exit_code = 0;
  /// Trailing text (ring files, help), printed after the key: value lines.
  std::string payload;
  bool quiet = false;

  void add(std::string key, std::string value) { lines.emplace_back(std::move(key), std::move(value)); }

  std::string text() const {
    std::string s = "status: " + std::string(to_string(status)) + "\n";
    if (quiet) return s;
    for (const auto& [k, v] : lines) s += k + ": " + v + "\n";
    s += payload;
    return s;
  }
};

namespace detail {

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string unit_text(const FiniteRing& r) {
  return r.unit() ? std::to_string(*r.unit()) : "none";
}

inline std::string witness_text(const Violation& v) {
  return std::string(to_string(v.code)) + " (" + std::to_string(v.witness[0]) + "," +
         std::to_string(v.witness[1]) + "," + std::to_string(v.witness[2]) + ")";
}

struct Common {
  bool quiet = false;
  std::size_t canon_bound = kDefaultCanonBound;
  std::size_t hom_bound = kDefaultHomBound;
  std::size_t threads = 1;
};

inline void add_common(CLI::App* sub, Common& c) {
  sub->add_flag("--quiet", c.quiet, "print only the status line");
  sub->add_option("--canon-bound", c.canon_bound, "canonical form bound")->capture_default_str();
  sub->add_option("--hom-bound", c.hom_bound, "homomorphism search bound")->capture_default_str();
  sub->add_option("--threads", c.threads, "worker threads")->capture_default_str();
}

inline SearchOptions search_options(const Common& c, std::size_t max_order) {
  SearchOptions o;
  o.max_order = max_order;
  o.threads = std::max<std::size_t>(1, c.threads);
  o.canon_bound = c.canon_bound;
  o.hom_bound = c.hom_bound;
  return o;
}

inline void emit_ring(Report& rep, const FiniteRing& r, const std::string& out) {
  if (out.empty()) {
    rep.payload += format_ring(r);
  } else {
    write_file(out, format_ring(r));
    rep.add("written", out);
  }
}

inline Report run_validate(const std::string& in) {
  Report rep;
  const auto tables = parse_ring_tables(read_file(in));
  const auto res = validate_ring(tables.add, tables.mul);
  rep.add("order", std::to_string(tables.add.size()));
  if (!res) {
    rep.status = Status::kFail;
    rep.exit_code = 1;
    rep.add("valid", "no");
    for (const auto& v : res.report.violations) rep.add("violation", witness_text(v));
    return rep;
  }
  const auto& r = *res.ring;
  rep.add("valid", "yes");
  rep.add("additive_exponent", std::to_string(r.additive_exponent()));
  rep.add("unit", unit_text(r));
  return rep;
}

inline Report run_analyze(const std::string& in, const Common& c) {
  Report rep;
  const auto r = parse_valid_ring(read_file(in));
  const auto nd = is_non_degenerate(r);
  rep.add("order", std::to_string(r.order()));
  rep.add("additive_exponent", std::to_string(r.additive_exponent()));
  rep.add("unit", unit_text(r));
  rep.add("idempotent", yes_no(is_idempotent(r)));
  std::string nd_text = yes_no(nd.non_degenerate);
  if (!nd.non_degenerate && nd.witness)
    nd_text += " (witness " + std::to_string(*nd.witness) +
               (nd.side == VanishingSide::kLeft ? ", rR = 0)" : ", Rr = 0)");
  rep.add("non_degenerate", nd_text);
  if (r.order() <= c.canon_bound) rep.add("id", ring_id(canonical_form(r, c.canon_bound).ring, true));
  else rep.add("id", ring_id(r, false) + " (not canonical)");
  rep.add("subrings", std::to_string(enumerate_subrings(r).size()));
  const auto ideals = enumerate_ideals(r);
  std::size_t idem = 0;
  for (const auto& s : ideals) idem += is_idempotent(s);
  rep.add("ideals", std::to_string(ideals.size()));
  rep.add("idempotent_ideals", std::to_string(idem));
  return rep;
}

inline Report run_ideals(const std::string& in) {
  Report rep;
  const auto r = parse_valid_ring(read_file(in));
  const auto ideals = enumerate_ideals(r);
  rep.add("count", std::to_string(ideals.size()));
  for (const auto& s : ideals)
    rep.add("ideal", format_subset(s) + (is_idempotent(s) ? " idempotent" : ""));
  return rep;
}

inline Report run_dorroh(const std::string& in, std::optional<std::size_t> modulus,
                         const std::string& out) {
  Report rep;
  const auto r = parse_valid_ring(read_file(in));
  const auto d = dorroh_extension(r, modulus);
  rep.add("order", std::to_string(d.ring.order()));
  rep.add("modulus", std::to_string(d.modulus));
  rep.add("unit", unit_text(d.ring));
  rep.add("iota", format_hom(d.iota));
  emit_ring(rep, d.ring, out);
  return rep;
}

inline Report run_multiplier(const std::string& in, const std::string& out) {
  Report rep;
  const auto r = parse_valid_ring(read_file(in));
  const auto m = multiplier_ring(r);
  rep.add("order", std::to_string(m.ring.order()));
  rep.add("unit", unit_text(m.ring));
  rep.add("iota", format_hom(m.iota));
  emit_ring(rep, m.ring, out);
  return rep;
}

inline Report run_enlargement(const std::string& ambient, const std::string& subset) {
  Report rep;
  const auto t = parse_valid_ring(read_file(ambient));
  const auto s = parse_subset(subset, t);
  const auto w = is_enlargement(t, s);
  rep.add("subset", format_subset(s));
  rep.add("subring", yes_no(w.is_subring));
  rep.add("tst_equals_t", yes_no(w.tst_equals_t));
  rep.add("sts_equals_s", yes_no(w.sts_equals_s));
  rep.add("enlargement", yes_no(w.valid()));
  return rep;
}

inline void describe_search(Report& rep, const SearchResult& res,
                            const std::vector<CatalogEntry>& entries) {
  rep.add("candidates_scanned", std::to_string(res.candidates_scanned));
  for (const auto& s : res.skipped) rep.add("skipped", s);
  if (!res.found) {
    rep.add("joint_enlargement", "none (bound " + std::to_string(res.bound) + ")");
    return;
  }
  const auto& je = *res.found;
  rep.add("joint_enlargement", "found (proof)");
  rep.add("ambient", entries[res.candidate_index].id);
  rep.add("copy_a", format_subset(je.copy_a));
  rep.add("copy_b", format_subset(je.copy_b));
  rep.add("iso_a", format_hom(je.iso_a));
  rep.add("iso_b", format_hom(je.iso_b));
}

inline std::vector<FiniteRing> catalog_rings(const Catalog& cat) {
  std::vector<FiniteRing> out;
  for (const auto& e : cat.entries()) out.push_back(e.ring);
  return out;
}

inline Report run_search(const std::string& a_path, const std::string& b_path,
                         const std::string& dir, std::size_t max_order, const Common& c) {
  Report rep;
  const auto a = parse_valid_ring(read_file(a_path));
  const auto b = parse_valid_ring(read_file(b_path));
  const auto cat = Catalog::load(dir, c.canon_bound, c.hom_bound);
  const auto rings = catalog_rings(cat);
  const auto res = search_joint_enlargement(a, b, std::span<const FiniteRing>(rings),
                                            search_options(c, max_order));
  rep.status = res.found ? Status::kOk : Status::kEvidence;
  describe_search(rep, res, cat.entries());
  return rep;
}

inline Report run_theorem(const std::string& ring_path, const std::string& ideal,
                          const std::string& dir, std::size_t max_order, const Common& c) {
  Report rep;
  const auto r = parse_valid_ring(read_file(ring_path));
  const auto s = parse_subset(ideal, r);
  const auto cat = Catalog::load(dir, c.canon_bound, c.hom_bound);
  const auto rings = catalog_rings(cat);
  const auto t = verify_theorem_instance(r, s, std::span<const FiniteRing>(rings),
                                         search_options(c, max_order));
  rep.add("ideal", format_subset(s));
  rep.add("r_idempotent", yes_no(t.r_idempotent));
  rep.add("s_ideal", yes_no(t.s_ideal));
  rep.add("s_idempotent", yes_no(t.s_idempotent));
  rep.add("s_proper", yes_no(t.s_proper));
  rep.add("s_zero", yes_no(t.s_zero));
  rep.add("preconditions", yes_no(t.preconditions));
  rep.add("verdict", std::string(to_string(t.verdict)));
  switch (t.verdict) {
    case TheoremVerdict::kNotApplicable:
      rep.status = Status::kFail;
      rep.exit_code = 1;
      return rep;
    case TheoremVerdict::kNoneFound: rep.status = Status::kEvidence; break;
    case TheoremVerdict::kFoundConsistent: rep.status = Status::kOk; break;
    case TheoremVerdict::kFatal:
      rep.status = Status::kFatal;
      rep.exit_code = 2;
      break;
  }
  describe_search(rep, t.search, cat.entries());
  return rep;
}

inline Report run_catalog_generate(std::size_t max_order, bool constructions,
                                   const std::string& out, const Common& c) {
  Report rep;
  Catalog::Options opt;
  opt.max_order = max_order;
  opt.with_constructions = constructions;
  opt.threads = std::max<std::size_t>(1, c.threads);
  opt.canon_bound = c.canon_bound;
  opt.hom_bound = c.hom_bound;
  const auto cat = Catalog::generate(opt);
  std::vector<std::size_t> per_order;
  for (const auto& e : cat.entries()) {
    if (per_order.size() < e.ring.order() + 1) per_order.resize(e.ring.order() + 1);
    ++per_order[e.ring.order()];
  }
  rep.add("entries", std::to_string(cat.entries().size()));
  for (std::size_t n = 1; n < per_order.size(); ++n)
    if (per_order[n]) rep.add("order " + std::to_string(n), std::to_string(per_order[n]));
  cat.save(out);
  rep.add("written", out);
  return rep;
}

inline Report run_catalog_add(const std::string& in, const std::string& dir, const Common& c) {
  Report rep;
  const auto r = parse_valid_ring(read_file(in));
  Catalog cat;
  if (std::filesystem::exists(std::filesystem::path(dir) / "index"))
    cat = Catalog::load(dir, c.canon_bound, c.hom_bound);
  const auto [idx, added] = cat.add(r);
  const auto& e = cat.entries()[idx];
  rep.add("id", e.id);
  rep.add("added", yes_no(added));
  rep.add("flags", format_flags(e.props));
  rep.add("entries", std::to_string(cat.entries().size()));
  cat.save(dir);
  return rep;
}

}  // namespace detail

inline Report usage_error(const std::string& msg) {
  Report rep;
  rep.status = Status::kFail;
  rep.exit_code = 3;
  rep.add("error", "usage: " + msg);
  return rep;
}

/// Parses argv (program name first) and runs one subcommand.
inline Report dispatch(const std::vector<std::string>& argv) {
  CLI::App app{"finite ring toolkit", "fring"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  detail::Common common;

  std::string in, out, ambient, subset, a_path, b_path, catalog_dir, ring_path, ideal;
  std::optional<std::size_t> modulus;
  std::size_t max_order = 16;
  std::size_t gen_order = kDefaultGenerationBound;
  bool no_constructions = false;

  auto* validate = app.add_subcommand("validate", "check the ring axioms");
  validate->add_option("--in", in, "ring file")->required();
  auto* analyze = app.add_subcommand("analyze", "ring invariants");
  analyze->add_option("--in", in, "ring file")->required();
  auto* ideals = app.add_subcommand("ideals", "list two-sided ideals");
  ideals->add_option("--in", in, "ring file")->required();
  auto* dorroh = app.add_subcommand("dorroh", "Dorroh extension over Z_m");
  dorroh->add_option("--in", in, "ring file")->required();
  dorroh->add_option("--modulus", modulus, "m, a multiple of the additive exponent");
  dorroh->add_option("--out", out, "output ring file");
  auto* multiplier = app.add_subcommand("multiplier", "multiplier ring");
  multiplier->add_option("--in", in, "ring file")->required();
  multiplier->add_option("--out", out, "output ring file");
  auto* enlargement = app.add_subcommand("enlargement", "test T = TST, S = STS");
  enlargement->add_option("--ambient", ambient, "ring file T")->required();
  enlargement->add_option("--subset", subset, "subset text")->required();
  auto* search = app.add_subcommand("search", "bounded joint enlargement search");
  search->add_option("--a", a_path, "ring file A")->required();
  search->add_option("--b", b_path, "ring file B")->required();
  search->add_option("--catalog", catalog_dir, "catalog directory")->required();
  search->add_option("--max-order", max_order, "largest ambient order")->capture_default_str();
  auto* theorem = app.add_subcommand("theorem-check", "search for an idempotent ideal S of R");
  theorem->add_option("--ring", ring_path, "ring file R")->required();
  theorem->add_option("--ideal", ideal, "subset text")->required();
  theorem->add_option("--catalog", catalog_dir, "catalog directory")->required();
  theorem->add_option("--max-order", max_order, "largest ambient order")->capture_default_str();
  auto* catalog = app.add_subcommand("catalog", "generate or extend a catalog");
  catalog->require_subcommand(1);
  auto* generate = catalog->add_subcommand("generate", "enumerate small rings");
  generate->add_option("--max-order", gen_order, "largest enumerated order")->capture_default_str();
  generate->add_option("--out", out, "catalog directory")->required();
  generate->add_flag("--no-constructions", no_constructions, "skip the order-16 constructions");
  auto* cat_add = catalog->add_subcommand("add", "add one ring");
  cat_add->add_option("--in", in, "ring file")->required();
  cat_add->add_option("--out", out, "catalog directory")->required();

  for (auto* sub : {validate, analyze, ideals, dorroh, multiplier, enlargement, search, theorem,
                    generate, cat_add})
    detail::add_common(sub, common);

  std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    Report rep;
    rep.payload = app.help();
    return rep;
  } catch (const CLI::CallForAllHelp&) {
    Report rep;
    rep.payload = app.help("", CLI::AppFormatMode::All);
    return rep;
  } catch (const CLI::ParseError& e) {
    return usage_error(e.what());
  }

  Report rep;
  try {
    if (validate->parsed()) rep = detail::run_validate(in);
    else if (analyze->parsed()) rep = detail::run_analyze(in, common);
    else if (ideals->parsed()) rep = detail::run_ideals(in);
    else if (dorroh->parsed()) rep = detail::run_dorroh(in, modulus, out);
    else if (multiplier->parsed()) rep = detail::run_multiplier(in, out);
    else if (enlargement->parsed()) rep = detail::run_enlargement(ambient, subset);
    else if (search->parsed()) rep = detail::run_search(a_path, b_path, catalog_dir, max_order, common);
    else if (theorem->parsed()) rep = detail::run_theorem(ring_path, ideal, catalog_dir, max_order, common);
    else if (generate->parsed()) rep = detail::run_catalog_generate(gen_order, !no_constructions, out, common);
    else if (cat_add->parsed()) rep = detail::run_catalog_add(in, out, common);
    else return usage_error("no subcommand");
  } catch (const Error& e) {
    rep = Report{};
    const bool fatal = e.code() == ErrorCode::kFatalInconsistency;
    rep.status = fatal ? Status::kFatal : Status::kFail;
    rep.exit_code = fatal ? 2 : 1;
    rep.add("error", e.what());
  }
  rep.quiet = common.quiet;
  return rep;
}

}  // namespace fring::cli
